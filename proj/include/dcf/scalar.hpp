#pragma once

// Base scalars: exact rationals, prime-field residues and rational functions
// over F_p, all behind one runtime descriptor (BaseField).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "dcf/finite_field.hpp"

namespace dcf {

// Element of F_p(t): reduced fraction with monic denominator.
struct RatFunc {
  std::vector<std::uint64_t> num;
  std::vector<std::uint64_t> den{1};

  bool operator==(const RatFunc&) const = default;
};

using Scalar = std::variant<mpq_class, std::uint64_t, RatFunc>;

class BaseField {
 public:
  enum class Kind { Rationals, PrimeField, RationalFunctions };
  using Elem = Scalar;

  static BaseField rationals();
  static BaseField prime_field(std::uint64_t p);
  static BaseField rational_functions(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t p() const { return p_; }
  unsigned long characteristic() const { return static_cast<unsigned long>(p_); }
  bool is_finite() const { return kind_ == Kind::PrimeField; }
  SmallFp prime_subfield() const { return SmallFp(p_); }
  // "Q", "F_5", "F_2(t)"
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;
  Scalar from_mpz(const mpz_class& n) const;
  Scalar from_mpq(const mpq_class& q) const;
  // The transcendental t of F_p(t).
  Scalar t() const;
  Scalar ratfunc(std::vector<std::uint64_t> num, std::vector<std::uint64_t> den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }

  // Total order used for canonical sorting.
  bool less(const Scalar& a, const Scalar& b) const;
  std::string to_string(const Scalar& a) const;
  // True when the printed form may need parentheses as a factor.
  bool is_compound(const Scalar& a) const;

  // Unique p-th root when it exists (characteristic p only).
  std::optional<Scalar> pth_root(const Scalar& a) const;

  bool operator==(const BaseField&) const = default;

 private:
  BaseField(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  RatFunc normalize(std::vector<std::uint64_t> num, std::vector<std::uint64_t> den) const;

  Kind kind_;
  std::uint64_t p_;
};

// Printing helper for polynomials over F_p in the variable `var`.
std::string fp_poly_to_string(const std::vector<std::uint64_t>& f, const std::string& var);

}  // namespace dcf
