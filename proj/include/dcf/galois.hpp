#pragma once

// Galois groups of finite normal separable towers, fixed fields, normal
// chains and incompatible automorphism extensions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dcf/closure.hpp"
#include "dcf/groups.hpp"

namespace dcf {

struct PrimitiveElement {
  TowerElement element;
  // Minimal polynomial over the base prefix.
  Polynomial minpoly;
};

// y = a_1 + c*a_2 + c^2*a_3 + ... over the generators above base_level, for
// c = 1, 2, 3, ... until F(y) = E.
PrimitiveElement primitive_element(const TowerField& E, std::size_t base_level = 0);

// Primitive element of the subfield of E generated over the base prefix by gens.
PrimitiveElement primitive_element_of(const TowerField& E, const std::vector<TowerElement>& gens,
                                      std::size_t base_level = 0);

struct GaloisData {
  TowerField field;
  std::size_t base_level = 0;
  PrimitiveElement primitive;
  // conjugates[j] = sigma_j(y); conjugates[0] = y.
  std::vector<TowerElement> conjugates;
  FiniteGroup group;
  // action[j][i] = sigma_j(generator i+1), one entry per generator of E.
  std::vector<std::vector<TowerElement>> action;

  TowerElement apply(std::size_t j, const TowerElement& x) const;
};

// Throws NotNormal or NotSeparable when E is not Galois over the prefix.
GaloisData galois_group(const TowerField& E, std::size_t base_level = 0);

// True when every generator's minimal polynomial over the prefix splits in E.
bool is_normal_over(const TowerField& E, std::size_t base_level);

// {z in E : sigma(z) = z for sigma in H}, as a short generator list; empty
// for the base. Quadratic fixed fields in odd or zero characteristic are
// returned as a square root.
std::vector<TowerElement> fixed_field(const GaloisData& D, const Subgroup& H);
// Elements of the group fixing every element of gens.
Subgroup fixing_subgroup(const GaloisData& D, const std::vector<TowerElement>& gens);
// Degree over the base prefix of the subfield generated by gens.
std::size_t subfield_degree(const GaloisData& D, const std::vector<TowerElement>& gens);

struct ChainStep {
  Subgroup subgroup;
  std::vector<TowerElement> generators;
  PrimitiveElement primitive;
  std::size_t degree;
};

struct NormalChain {
  TowerField field;
  GaloisData galois;
  std::vector<ChainStep> steps;  // T < K_1 < ... < K_m
};

// Adjoins a root of f (over T) and all of its conjugates over the base to a
// closure of T, then returns the fields of a maximal chain of normal
// subgroups from Gal(E/T) down to the trivial group.
NormalChain normal_chain(const TowerField& T, const Polynomial& f, ClosurePresentation* closure = nullptr);

struct IncompatibleOptions {
  // Try h = g1 before the general search.
  bool try_g1_first = false;
};

struct IncompatibleResult {
  bool found = false;
  std::size_t h = 0;
  std::vector<TowerElement> alpha;  // images of E's generators
  Subgroup M;                       // fixer of K2
  Subgroup N;                       // fixer of K1
  std::size_t g1 = 0;
  std::size_t g2 = 0;
};

// An automorphism of E extending sigma on K1 and incompatible with tau on K2.
// K1, K2 are given by generators; sigma, tau by the images of those generators.
IncompatibleResult incompatible_extension(const GaloisData& D, const std::vector<TowerElement>& K1,
                                          const std::vector<TowerElement>& sigma, const std::vector<TowerElement>& K2,
                                          const std::vector<TowerElement>& tau, IncompatibleOptions opts = {});

}  // namespace dcf
