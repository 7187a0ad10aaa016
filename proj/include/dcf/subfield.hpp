#pragma once

// Subfields of a tower given by generating elements: bases, minimal
// polynomials, membership and homomorphic substitution.

#include <optional>
#include <string>
#include <vector>

#include "dcf/polynomial.hpp"

namespace dcf {

// A polynomial expression in a list of subfield generators s_1..s_k:
// sum of coeff * s_1^e_1 * ... * s_k^e_k.
struct SubfieldExpression {
  struct Term {
    Scalar coeff;
    std::vector<unsigned> exps;
  };
  std::vector<Term> terms;

  TowerElement evaluate(const TowerField& field, const std::vector<TowerElement>& gens) const;
  std::string to_string(const BaseField& base, const std::vector<std::string>& names) const;
};

// Basis of the base-field span of F(S) inside the tower, with the monomial
// in S producing each basis vector.
struct SubfieldBasis {
  std::vector<Residue> vectors;
  std::vector<std::vector<unsigned>> monomials;
};

SubfieldBasis subfield_basis(const TowerField& field, const std::vector<TowerElement>& gens);

// Monic minimal polynomial of x over the subfield generated by S; the
// coefficients are elements of x's tower lying in that subfield.
Polynomial minpoly(const TowerElement& x, const std::vector<TowerElement>& S);

// Minimal polynomial of x over the prefix tower of the given level, as a
// polynomial over that prefix.
Polynomial minpoly_over_level(const TowerElement& x, std::size_t level);

// Generators 1..level of the tower as elements of `field`.
std::vector<TowerElement> level_generators(const TowerField& field, std::size_t level);

std::optional<SubfieldExpression> subfield_member(const TowerElement& x, const std::vector<TowerElement>& S);

// Coordinates of x in the base-field basis 1, y, ..., y^(d-1) of F(y), as a
// polynomial over the base; absent if x is not in F(y).
std::optional<Polynomial> express_in_power_basis(const TowerElement& x, const TowerElement& y);

// Image of x under the homomorphism fixing the base that sends generator i
// of x's tower to images[i-1] (elements of towers that lift into target).
TowerElement substitute_generators(const TowerElement& x, const std::vector<TowerElement>& images,
                                   const TowerField& target);

// Applies substitute_generators to every coefficient.
Polynomial map_coefficients(const Polynomial& f, const std::vector<TowerElement>& images, const TowerField& target);

}  // namespace dcf
