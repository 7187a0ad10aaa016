#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcf/tower.hpp"
#include "dcf/upoly.hpp"

namespace dcf {

// Dense univariate polynomial over a tower field (the base field is the tower
// with no generators). Coefficients are constant term first; the zero
// polynomial has no coefficients and no degree.
class Polynomial {
 public:
  explicit Polynomial(TowerField field, std::vector<Residue> coeffs = {});

  static Polynomial x(const TowerField& field);
  static Polynomial constant(const TowerElement& c);
  static Polynomial from_elements(const TowerField& field, const std::vector<TowerElement>& coeffs);

  const TowerField& field() const { return field_; }
  const std::vector<Residue>& coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  TowerElement coeff(std::size_t i) const;
  TowerElement leading() const;

  Polynomial lift_to(const TowerField& target) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  TowerElement eval(const TowerElement& a) const;
  // Canonical text: descending powers, no zero terms.
  std::string to_string(const std::string& var = "x") const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  TowerField field_;
  std::vector<Residue> coeffs_;
};

enum class PolyOp { Add, Sub, Mul, Divrem, Gcd };

struct PolyArithResult {
  Polynomial value;
  std::optional<Polynomial> remainder;  // set for Divrem only
};

PolyArithResult poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);
std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g);
Polynomial gcd(const Polynomial& f, const Polynomial& g);
TowerElement poly_eval(const Polynomial& f, const TowerElement& a);

// Canonical order on polynomials of one field: degree, then coefficients
// compared lexicographically from the constant term upward.
bool canonical_less(const Polynomial& f, const Polynomial& g);

// Adjoins a root of the monic irreducible polynomial m (over a prefix of t,
// lifted to t). Irreducibility is certified by factorization. insep_exp, when
// given, must match the shape X^(p^k) - a; it is detected automatically
// otherwise.
TowerField extend_tower(const TowerField& t, const Polynomial& m, const std::string& name,
                        std::optional<unsigned> insep_exp = std::nullopt);

// When f = X^(p^k) - a over a field of characteristic p, returns k.
std::optional<unsigned> purely_inseparable_exponent(const Polynomial& f);

}  // namespace dcf
