#pragma once

// Difference fields over finite towers: automorphism checks, embeddings of
// difference fields, and extension of sigma to a closure automorphism.

#include <memory>
#include <optional>
#include <vector>

#include "dcf/embed.hpp"

namespace dcf {

struct DifferenceField {
  TowerField field;
  // sigma(generator i+1), elements of field.
  std::vector<TowerElement> sigma;

  TowerElement apply(const TowerElement& x) const;
};

// True when the generator images extend to an automorphism of F.
bool check_automorphism(const TowerField& F, const std::vector<TowerElement>& sigma);

struct DifferenceEmbedding {
  // Images of the source generators in the target field.
  std::vector<TowerElement> images;
};

// First field embedding iota of K's tower into E's (generator by generator,
// roots in canonical order) with beta(iota(a)) = iota(alpha(a)) on generators.
std::optional<DifferenceEmbedding> difference_embeds(const DifferenceField& K, const DifferenceField& E);

// Every difference embedding, in search order.
std::vector<DifferenceEmbedding> all_difference_embeddings(const DifferenceField& K, const DifferenceField& E);

// A lazily extended automorphism tau of the closure C agreeing with sigma on
// D's field (which C must contain).
LazyFieldMap dcf_embedding_criterion(const DifferenceField& D, std::shared_ptr<ClosurePresentation> C);

}  // namespace dcf
