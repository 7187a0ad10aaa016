#pragma once

// Finite towers of simple algebraic extensions over Q, F_p or F_p(t).
//
// An element of a tower with generators a_1..a_n (degrees d_1..d_n) is stored
// as a flat vector of base scalars indexed in mixed radix: index
// e_1 + d_1*(e_2 + d_2*(e_3 + ...)) holds the coefficient of a_1^e_1 ... a_n^e_n
// with every e_i < d_i. This residue form is canonical, so equality is a
// componentwise comparison, and an element of a sub-tower is the same vector
// padded with zeros.

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dcf/scalar.hpp"

namespace dcf {

using Residue = std::vector<Scalar>;

struct Generator {
  std::string name;
  // Monic minimal polynomial over the level below, constant term first.
  std::vector<Residue> minpoly;
  // k > 0 when the minimal polynomial is X^(p^k) - a (purely inseparable).
  unsigned insep_exp = 0;

  std::size_t degree() const { return minpoly.size() - 1; }
};

struct TowerNode {
  BaseField base;
  std::shared_ptr<const TowerNode> parent;
  std::size_t level = 0;
  std::size_t degree = 1;
  Generator gen;
};

class TowerField {
 public:
  using Elem = Residue;

  explicit TowerField(BaseField base);

  const BaseField& base() const { return node_->base; }
  std::size_t level() const { return node_->level; }
  // [this : base]
  std::size_t degree() const { return node_->degree; }
  std::size_t degree_at(std::size_t level) const;

  TowerField parent() const;
  TowerField at_level(std::size_t level) const;
  // Generator of the given level (1-based).
  const Generator& generator(std::size_t level) const;
  std::vector<std::string> generator_names() const;
  // Level of a generator by name, or 0 when absent.
  std::size_t find_generator(const std::string& name) const;

  // True if `this` is `other` or one of its ancestors.
  bool is_prefix_of(const TowerField& other) const;
  bool same_as(const TowerField& other) const { return node_ == other.node_; }
  // Same base and the same generator records, level by level.
  bool same_structure(const TowerField& other) const;

  // Field context.
  Residue zero() const;
  Residue one() const;
  Residue from_int(long n) const;
  Residue from_scalar(const Scalar& s) const;
  Residue add(const Residue& a, const Residue& b) const;
  Residue sub(const Residue& a, const Residue& b) const;
  Residue neg(const Residue& a) const;
  Residue mul(const Residue& a, const Residue& b) const;
  Residue inv(const Residue& a) const;
  Residue pow(const Residue& a, const mpz_class& e) const;
  bool is_zero(const Residue& a) const;
  bool equal(const Residue& a, const Residue& b) const { return a == b; }

  // Generator of `level` as an element of this tower.
  Residue generator_element(std::size_t level) const;
  // Pads an element of a prefix tower (given by its residue length).
  Residue lift(const Residue& r) const;
  // Smallest level whose tower contains the element.
  std::size_t level_of(const Residue& r) const;
  // Exponent vector (one entry per level 1..n) of a flat index.
  std::vector<unsigned> exponents(std::size_t flat_index) const;

  // Finite-field context extras (only meaningful over F_p).
  unsigned long characteristic() const { return base().characteristic(); }
  bool is_finite() const { return base().is_finite(); }
  mpz_class order() const;
  Residue random(std::mt19937_64& rng) const;

  // The unique p-th root inside this tower, when it exists.
  std::optional<Residue> pth_root(const Residue& a) const;

  // Canonical total order on residues and printing with generator names.
  bool less(const Residue& a, const Residue& b) const;
  std::string to_string(const Residue& a) const;
  bool is_compound(const Residue& a) const;

  // Appends a generator without any verification (see extend_tower for the
  // certified version).
  TowerField adjoin_unchecked(Generator gen) const;

 private:
  explicit TowerField(std::shared_ptr<const TowerNode> node) : node_(std::move(node)) {}
  const TowerNode& node_at(std::size_t level) const;

  std::shared_ptr<const TowerNode> node_;
};

// An element together with the tower it lives in.
class TowerElement {
 public:
  TowerElement(TowerField field, Residue value);

  static TowerElement from_int(const TowerField& f, long n) { return {f, f.from_int(n)}; }
  static TowerElement generator(const TowerField& f, std::size_t level) { return {f, f.generator_element(level)}; }

  const TowerField& field() const { return field_; }
  const Residue& value() const { return value_; }

  // Re-expresses this element in a tower that has field() as a prefix.
  TowerElement lift_to(const TowerField& target) const;
  bool is_zero() const { return field_.is_zero(value_); }
  TowerElement inv() const { return {field_, field_.inv(value_)}; }
  TowerElement pow(unsigned long e) const { return {field_, field_.pow(value_, mpz_class(e))}; }
  std::string to_string() const { return field_.to_string(value_); }

  friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator/(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator-(const TowerElement& a) { return {a.field_, a.field_.neg(a.value_)}; }
  friend bool operator==(const TowerElement& a, const TowerElement& b);

 private:
  TowerField field_;
  Residue value_;
};

// The larger of two chain-related towers; throws when neither is a prefix of
// the other.
TowerField common_tower(const TowerField& a, const TowerField& b);

}  // namespace dcf
