#pragma once

#include <string>
#include <vector>

#include "dcf/factor.hpp"
#include "dcf/text.hpp"

namespace dcf::testing {

inline TowerField Q() { return TowerField(BaseField::rationals()); }
inline TowerField Fp(std::uint64_t p) { return TowerField(BaseField::prime_field(p)); }
inline TowerField FpT(std::uint64_t p) { return TowerField(BaseField::rational_functions(p)); }

inline TowerField ext(const TowerField& t, const std::string& m, const std::string& name) {
  return extend_tower(t, parse_polynomial(m, t), name);
}

inline Polynomial P(const std::string& s, const TowerField& t) { return parse_polynomial(s, t); }
inline TowerElement E(const std::string& s, const TowerField& t) { return parse_element(s, t); }
inline TowerElement gen(const TowerField& t, std::size_t l) { return TowerElement::generator(t, l); }

// Q(sqrt2, sqrt3) with generators a, b.
inline TowerField q23() { return ext(ext(Q(), "x^2-2", "a"), "x^2-3", "b"); }

}  // namespace dcf::testing
