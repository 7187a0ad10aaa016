#include "dcf/difference.hpp"

#include "dcf/error.hpp"
#include "dcf/factor.hpp"
#include "dcf/subfield.hpp"

namespace dcf {

namespace {

void check_images(const TowerField& F, const std::vector<TowerElement>& sigma) {
  if (sigma.size() != F.level())
    throw Error(ErrorKind::Domain, "expected " + std::to_string(F.level()) + " generator images, got " +
                                       std::to_string(sigma.size()));
  for (const auto& s : sigma)
    if (!s.field().is_prefix_of(F)) throw Error(ErrorKind::Domain, "image " + s.to_string() + " lies outside the field");
}

std::vector<TowerElement> lifted(const DifferenceField& D) {
  check_images(D.field, D.sigma);
  std::vector<TowerElement> out;
  for (const auto& s : D.sigma) out.push_back(s.lift_to(D.field));
  return out;
}

void search(const DifferenceField& K, const DifferenceField& E, const std::vector<TowerElement>& alpha,
            const std::vector<TowerElement>& beta, std::vector<TowerElement>& images,
            std::vector<DifferenceEmbedding>& found, bool first_only) {
  const std::size_t level = images.size() + 1;
  if (level > K.field.level()) {
    for (std::size_t l = 0; l < alpha.size(); ++l) {
      const TowerElement lhs = substitute_generators(images[l], beta, E.field);
      const TowerElement rhs = substitute_generators(alpha[l], images, E.field);
      if (!(lhs == rhs)) return;
    }
    found.push_back({images});
    return;
  }
  const Polynomial m(K.field.at_level(level - 1), K.field.generator(level).minpoly);
  const Polynomial q = map_coefficients(m, images, E.field);
  for (const auto& [h, mult] : factor(q, E.field).factors) {
    if (*h.degree() != 1) continue;
    images.push_back(-h.coeff(0));
    search(K, E, alpha, beta, images, found, first_only);
    images.pop_back();
    if (first_only && !found.empty()) return;
  }
}

std::vector<DifferenceEmbedding> run_search(const DifferenceField& K, const DifferenceField& E, bool first_only) {
  if (!(K.field.base() == E.field.base())) throw Error(ErrorKind::Domain, "domain mismatch: different base fields");
  if (K.field.degree() > E.field.degree())
    throw Error(ErrorKind::Domain, "the source field has larger degree than the target");
  const auto alpha = lifted(K);
  const auto beta = lifted(E);
  std::vector<TowerElement> images;
  std::vector<DifferenceEmbedding> found;
  search(K, E, alpha, beta, images, found, first_only);
  return found;
}

}  // namespace

TowerElement DifferenceField::apply(const TowerElement& x) const {
  if (!x.field().is_prefix_of(field)) throw Error(ErrorKind::Domain, "element lies outside the difference field");
  return substitute_generators(x.lift_to(field), lifted(*this), field);
}

bool check_automorphism(const TowerField& F, const std::vector<TowerElement>& sigma) {
  check_images(F, sigma);
  std::vector<TowerElement> s;
  for (const auto& x : sigma) s.push_back(x.lift_to(F));
  return is_automorphism(F, s);
}

std::optional<DifferenceEmbedding> difference_embeds(const DifferenceField& K, const DifferenceField& E) {
  auto found = run_search(K, E, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<DifferenceEmbedding> all_difference_embeddings(const DifferenceField& K, const DifferenceField& E) {
  return run_search(K, E, false);
}

LazyFieldMap dcf_embedding_criterion(const DifferenceField& D, std::shared_ptr<ClosurePresentation> C) {
  if (!(D.field.base() == C->base())) throw Error(ErrorKind::Domain, "domain mismatch: different base fields");
  if (!check_automorphism(D.field, D.sigma))
    throw Error(ErrorKind::NotAutomorphism, "sigma is not an automorphism of the field");
  const TowerField F = C->ensure_contains(D.field);
  std::vector<TowerElement> s;
  for (const auto& x : D.sigma) s.emplace_back(F, F.lift(x.value()));
  if (is_normal(F)) return extend_automorphism(F, s, C);
  LazyFieldMap tau(C, C);
  for (const auto& x : s) tau.assign_given(x);
  return tau;
}

}  // namespace dcf
