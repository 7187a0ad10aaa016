#pragma once

// Lazily extended field homomorphisms into a closure presentation.

#include <memory>
#include <string>
#include <vector>

#include "dcf/closure.hpp"

namespace dcf {

struct Assignment {
  std::size_t level;
  std::string generator;
  TowerElement image;
  std::string stage;  // "given", "separable" or "inseparable"
  bool forced;        // true when the image admitted no choice
};

// A homomorphism from the source closure's tower into the target closure,
// fixing the common base. Generators are assigned in tower order on demand
// and assignments are never revised.
class LazyFieldMap {
 public:
  LazyFieldMap(std::shared_ptr<ClosurePresentation> source, std::shared_ptr<ClosurePresentation> target);

  ClosurePresentation& source() { return *source_; }
  ClosurePresentation& target() { return *target_; }
  std::shared_ptr<ClosurePresentation> source_ptr() const { return source_; }
  std::shared_ptr<ClosurePresentation> target_ptr() const { return target_; }
  const std::vector<Assignment>& log() const { return log_; }

  // Records the image of the next unassigned generator after checking it
  // against the transported minimal polynomial.
  void assign_given(const TowerElement& image);
  // Image of x; assigns any generators of x's tower not yet mapped.
  TowerElement image(const TowerElement& x);
  // Image of every coefficient of f.
  Polynomial image(const Polynomial& f);

 private:
  void assign_next();
  Polynomial transported_minpoly(std::size_t level);
  std::vector<TowerElement> images() const;

  std::shared_ptr<ClosurePresentation> source_;
  std::shared_ptr<ClosurePresentation> target_;
  std::vector<Assignment> log_;
};

// Images of F's generators in F itself must define an automorphism: each
// satisfies its transported minimal polynomial and the induced map has full
// rank over the base.
bool is_automorphism(const TowerField& F, const std::vector<TowerElement>& sigma);
// True when every generator's minimal polynomial over the base splits in F.
bool is_normal(const TowerField& F);

// Extends alpha (images of F's generators in K) to a map from a closure of F
// into K.
LazyFieldMap extend_embedding(const TowerField& F, const std::vector<TowerElement>& alpha,
                              std::shared_ptr<ClosurePresentation> K);
// Same, with a caller-supplied source closure whose tower has F as prefix.
LazyFieldMap extend_embedding(std::shared_ptr<ClosurePresentation> source, const TowerField& F,
                              const std::vector<TowerElement>& alpha, std::shared_ptr<ClosurePresentation> K);
// Extends sigma, an automorphism of the normal tower E inside C, to a map C -> C.
LazyFieldMap extend_automorphism(const TowerField& E, const std::vector<TowerElement>& sigma,
                                 std::shared_ptr<ClosurePresentation> C);

}  // namespace dcf
