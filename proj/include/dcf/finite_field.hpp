#pragma once

// Prime field contexts and generic finite-field polynomial factorization
// (distinct-degree then equal-degree splitting).

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dcf/upoly.hpp"

namespace dcf {

// F_p with p < 2^32 so that products fit in 64 bits.
class SmallFp {
 public:
  using Elem = std::uint64_t;

  explicit SmallFp(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long n) const {
    long r = n % static_cast<long>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::ZeroDivision, "inversion of zero in F_p");
    return pow(a, p_ - 2);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  unsigned long characteristic() const { return static_cast<unsigned long>(p_); }
  mpz_class order() const { return mpz_class(static_cast<unsigned long>(p_)); }
  Elem random(std::mt19937_64& rng) const { return rng() % p_; }
  std::optional<Elem> pth_root(Elem a) const { return a; }

 private:
  std::uint64_t p_;
};

// F_P for an arbitrary-precision prime P (used for modular images of
// integer polynomials).
class BigFp {
 public:
  using Elem = mpz_class;

  explicit BigFp(mpz_class p) : p_(std::move(p)) {}

  const mpz_class& modulus() const { return p_; }
  Elem reduce(const mpz_class& a) const {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
    return r;
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long n) const { return reduce(mpz_class(n)); }
  Elem add(const Elem& a, const Elem& b) const {
    mpz_class r = a + b;
    if (r >= p_) r -= p_;
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    mpz_class r = a - b;
    if (r < 0) r += p_;
    return r;
  }
  Elem neg(const Elem& a) const { return a == 0 ? mpz_class(0) : mpz_class(p_ - a); }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  Elem inv(const Elem& a) const {
    mpz_class r;
    if (a == 0 || !mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()))
      throw Error(ErrorKind::ZeroDivision, "inversion of zero modulo P");
    return r;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  mpz_class order() const { return p_; }
  Elem random(std::mt19937_64& rng) const {
    mpz_class r = 0;
    const std::size_t words = mpz_sizeinbase(p_.get_mpz_t(), 2) / 64 + 2;
    for (std::size_t i = 0; i < words; ++i) {
      r <<= 64;
      const auto w = rng();
      r += mpz_class(static_cast<unsigned long>(w >> 32)) * mpz_class(4294967296UL) +
           mpz_class(static_cast<unsigned long>(w & 0xffffffffUL));
    }
    return reduce(r);
  }

 private:
  mpz_class p_;
};

template <class K>
concept FiniteFieldContext = FieldContext<K> && requires(const K& k, std::mt19937_64& g) {
  { k.order() } -> std::convertible_to<mpz_class>;
  { k.random(g) } -> std::convertible_to<typename K::Elem>;
};

namespace ff {

template <FiniteFieldContext K>
Poly<K> random_poly(const K& k, std::size_t below_degree, std::mt19937_64& rng) {
  Poly<K> a;
  a.reserve(below_degree);
  for (std::size_t i = 0; i < below_degree; ++i) a.push_back(k.random(rng));
  upoly::trim(k, a);
  return a;
}

// Distinct-degree factorization of a monic squarefree f: returns pairs
// (product of all irreducible factors of degree d, d).
template <FiniteFieldContext K>
std::vector<std::pair<Poly<K>, std::size_t>> distinct_degree(const K& k, const Poly<K>& f) {
  std::vector<std::pair<Poly<K>, std::size_t>> out;
  const mpz_class q = k.order();
  const Poly<K> x = upoly::monomial(k, 1, k.one());
  Poly<K> rest = f;
  Poly<K> h = upoly::rem(k, x, rest);
  std::size_t d = 0;
  while (rest.size() - 1 >= 2 * (d + 1)) {
    ++d;
    h = upoly::pow_mod(k, h, q, rest);
    Poly<K> g = upoly::gcd(k, rest, upoly::sub(k, h, x));
    if (g.size() > 1) {
      out.emplace_back(g, d);
      rest = upoly::div_exact(k, rest, g);
      h = upoly::rem(k, h, rest);
    }
  }
  if (rest.size() > 1) out.emplace_back(rest, rest.size() - 1);
  return out;
}

// Splits a monic product of distinct irreducibles all of degree d.
template <FiniteFieldContext K>
void equal_degree(const K& k, const Poly<K>& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly<K>>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  const mpz_class q = k.order();
  const bool even = mpz_even_p(q.get_mpz_t());
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
  const mpz_class half = (qd - 1) / 2;
  const std::size_t trace_terms = even ? (mpz_sizeinbase(q.get_mpz_t(), 2) - 1) * d : 0;
  for (;;) {
    Poly<K> a = random_poly(k, n, rng);
    if (a.size() <= 1) continue;
    Poly<K> b;
    if (even) {
      Poly<K> t = a;
      b = a;
      for (std::size_t i = 1; i < trace_terms; ++i) {
        t = upoly::mul_mod(k, t, t, g);
        b = upoly::add(k, b, t);
      }
    } else {
      b = upoly::sub(k, upoly::pow_mod(k, a, half, g), Poly<K>{k.one()});
    }
    Poly<K> u = upoly::gcd(k, g, b);
    if (u.size() > 1 && u.size() < g.size()) {
      equal_degree(k, u, d, rng, out);
      equal_degree(k, upoly::div_exact(k, g, u), d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial.
template <FiniteFieldContext K>
std::vector<Poly<K>> split_squarefree(const K& k, const Poly<K>& f, std::mt19937_64& rng) {
  std::vector<Poly<K>> out;
  if (f.size() <= 1) return out;
  for (const auto& [g, d] : distinct_degree(k, f)) equal_degree(k, g, d, rng, out);
  return out;
}

template <FieldContext K>
void merge_factor(const K& k, std::vector<std::pair<Poly<K>, unsigned>>& acc, const Poly<K>& g, unsigned m) {
  for (auto& [h, e] : acc) {
    if (upoly::equal(k, h, g)) {
      e += m;
      return;
    }
  }
  acc.emplace_back(g, m);
}

// Complete factorization of a monic polynomial over a finite field context
// that also provides characteristic() and pth_root().
template <FiniteFieldContext K>
std::vector<std::pair<Poly<K>, unsigned>> factor_monic(const K& k, const Poly<K>& f, std::mt19937_64& rng) {
  std::vector<std::pair<Poly<K>, unsigned>> acc;
  if (f.size() <= 1) return acc;
  if (f.size() == 2) {
    acc.emplace_back(f, 1);
    return acc;
  }
  const Poly<K> df = upoly::derivative(k, f);
  if (df.empty()) {
    const unsigned long p = k.characteristic();
    Poly<K> h;
    for (std::size_t i = 0; i < f.size(); i += p) h.push_back(*k.pth_root(f[i]));
    for (const auto& [g, m] : factor_monic(k, h, rng)) merge_factor(k, acc, g, m * static_cast<unsigned>(p));
    return acc;
  }
  const Poly<K> c = upoly::gcd(k, f, df);
  if (c.size() == 1) {
    for (auto& g : split_squarefree(k, f, rng)) merge_factor(k, acc, g, 1);
    return acc;
  }
  for (const auto& [g, m] : factor_monic(k, c, rng)) merge_factor(k, acc, g, m);
  for (const auto& [g, m] : factor_monic(k, upoly::div_exact(k, f, c), rng)) merge_factor(k, acc, g, m);
  return acc;
}

}  // namespace ff
}  // namespace dcf
