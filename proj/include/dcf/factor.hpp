#pragma once

// Complete factorization over Q, F_p, F_p(t) and towers over them, with
// reducibility and separability tests.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dcf/polynomial.hpp"

namespace dcf {

struct Factorization {
  TowerElement unit;
  // Monic irreducible factors with multiplicities, in canonical order.
  std::vector<std::pair<Polynomial, unsigned>> factors;

  Polynomial expand() const;
};

// Degree caps. Environment overrides: DCF_MAX_BASE_DEGREE,
// DCF_MAX_TOWER_DEGREE, DCF_MAX_FPT_DEGREE_X, DCF_MAX_FPT_DEGREE_T.
struct FactorLimits {
  std::size_t base_degree = 24;
  std::size_t tower_degree = 8;
  std::size_t fpt_degree_x = 3;
  std::size_t fpt_degree_t = 3;

  static FactorLimits from_environment();
};

// Reads a positive integer from the environment, or returns fallback.
std::size_t env_limit(const char* name, std::size_t fallback);

Factorization factor(const Polynomial& f);
// Factors f (over a prefix of F) over F.
Factorization factor(const Polynomial& f, const TowerField& F);
bool is_reducible(const Polynomial& f, const TowerField& F);

bool is_separable(const Polynomial& f);
bool is_separable_element(const TowerElement& x, const std::vector<TowerElement>& S);
// Is x separable over the prefix tower `base` of its field?
bool sep_closure_member(const TowerElement& x, const TowerField& base);

}  // namespace dcf
