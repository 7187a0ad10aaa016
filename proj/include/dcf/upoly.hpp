#pragma once

// Dense univariate polynomial algorithms, generic over a field context.
//
// A field context K is a small value object that knows how to do arithmetic
// on K::Elem (prime fields, big prime fields, tower levels). Polynomials are
// plain coefficient vectors, constant term first, with no trailing zeros; the
// empty vector is the zero polynomial.

#include <concepts>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dcf/error.hpp"

namespace dcf {

template <class K>
concept FieldContext = requires(const K& k, const typename K::Elem& a, const typename K::Elem& b, long n) {
  typename K::Elem;
  { k.zero() } -> std::convertible_to<typename K::Elem>;
  { k.one() } -> std::convertible_to<typename K::Elem>;
  { k.from_int(n) } -> std::convertible_to<typename K::Elem>;
  { k.add(a, b) } -> std::convertible_to<typename K::Elem>;
  { k.sub(a, b) } -> std::convertible_to<typename K::Elem>;
  { k.neg(a) } -> std::convertible_to<typename K::Elem>;
  { k.mul(a, b) } -> std::convertible_to<typename K::Elem>;
  { k.inv(a) } -> std::convertible_to<typename K::Elem>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.equal(a, b) } -> std::convertible_to<bool>;
};

template <class K>
using Poly = std::vector<typename K::Elem>;

namespace upoly {

template <FieldContext K>
void trim(const K& k, Poly<K>& f) {
  while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

template <FieldContext K>
bool equal(const K& k, const Poly<K>& f, const Poly<K>& g) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!k.equal(f[i], g[i])) return false;
  return true;
}

template <FieldContext K>
Poly<K> constant(const K& k, const typename K::Elem& c) {
  if (k.is_zero(c)) return {};
  return {c};
}

// x^n
template <FieldContext K>
Poly<K> monomial(const K& k, std::size_t n, const typename K::Elem& c) {
  if (k.is_zero(c)) return {};
  Poly<K> f(n + 1, k.zero());
  f[n] = c;
  return f;
}

template <FieldContext K>
Poly<K> x_minus(const K& k, const typename K::Elem& c) {
  return {k.neg(c), k.one()};
}

template <FieldContext K>
bool is_one(const K& k, const Poly<K>& f) {
  return f.size() == 1 && k.equal(f[0], k.one());
}

template <FieldContext K>
Poly<K> add(const K& k, const Poly<K>& f, const Poly<K>& g) {
  Poly<K> r = f.size() >= g.size() ? f : g;
  const Poly<K>& s = f.size() >= g.size() ? g : f;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = k.add(r[i], s[i]);
  trim(k, r);
  return r;
}

template <FieldContext K>
Poly<K> neg(const K& k, Poly<K> f) {
  for (auto& c : f) c = k.neg(c);
  return f;
}

template <FieldContext K>
Poly<K> sub(const K& k, const Poly<K>& f, const Poly<K>& g) {
  Poly<K> r = f;
  if (r.size() < g.size()) r.resize(g.size(), k.zero());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = k.sub(r[i], g[i]);
  trim(k, r);
  return r;
}

template <FieldContext K>
Poly<K> scale(const K& k, const Poly<K>& f, const typename K::Elem& c) {
  if (k.is_zero(c)) return {};
  Poly<K> r;
  r.reserve(f.size());
  for (const auto& a : f) r.push_back(k.mul(a, c));
  trim(k, r);
  return r;
}

template <FieldContext K>
Poly<K> mul(const K& k, const Poly<K>& f, const Poly<K>& g) {
  if (f.empty() || g.empty()) return {};
  Poly<K> r(f.size() + g.size() - 1, k.zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (k.is_zero(f[i])) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (k.is_zero(g[j])) continue;
      r[i + j] = k.add(r[i + j], k.mul(f[i], g[j]));
    }
  }
  trim(k, r);
  return r;
}

template <FieldContext K>
std::pair<Poly<K>, Poly<K>> divrem(const K& k, Poly<K> f, const Poly<K>& g) {
  if (g.empty()) throw Error(ErrorKind::ZeroDivision, "division by zero polynomial");
  if (f.size() < g.size()) return {Poly<K>{}, std::move(f)};
  const auto inv_lc = k.inv(g.back());
  Poly<K> q(f.size() - g.size() + 1, k.zero());
  for (std::size_t top = f.size(); top >= g.size(); --top) {
    const auto c = k.mul(f[top - 1], inv_lc);
    const std::size_t shift = top - g.size();
    q[shift] = c;
    if (k.is_zero(c)) continue;
    for (std::size_t j = 0; j < g.size(); ++j) f[shift + j] = k.sub(f[shift + j], k.mul(c, g[j]));
  }
  f.resize(g.size() - 1);
  trim(k, f);
  trim(k, q);
  return {std::move(q), std::move(f)};
}

template <FieldContext K>
Poly<K> rem(const K& k, const Poly<K>& f, const Poly<K>& g) {
  return divrem(k, f, g).second;
}

template <FieldContext K>
Poly<K> div_exact(const K& k, const Poly<K>& f, const Poly<K>& g) {
  auto [q, r] = divrem(k, f, g);
  if (!r.empty()) throw Error(ErrorKind::Internal, "inexact polynomial division");
  return q;
}

template <FieldContext K>
Poly<K> monic(const K& k, const Poly<K>& f) {
  if (f.empty()) return f;
  return scale(k, f, k.inv(f.back()));
}

template <FieldContext K>
Poly<K> gcd(const K& k, Poly<K> a, Poly<K> b) {
  while (!b.empty()) {
    Poly<K> r = rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

// Returns (g, s, t) with s*a + t*b = g and g monic (or zero when a = b = 0).
template <FieldContext K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> xgcd(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0 = {k.one()}, s1 = {};
  Poly<K> t0 = {}, t1 = {k.one()};
  while (!r1.empty()) {
    auto [q, r] = divrem(k, r0, r1);
    Poly<K> s2 = sub(k, s0, mul(k, q, s1));
    Poly<K> t2 = sub(k, t0, mul(k, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const auto inv = k.inv(r0.back());
  return {scale(k, r0, inv), scale(k, s0, inv), scale(k, t0, inv)};
}

template <FieldContext K>
Poly<K> derivative(const K& k, const Poly<K>& f) {
  if (f.size() <= 1) return {};
  Poly<K> d(f.size() - 1, k.zero());
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = k.mul(k.from_int(static_cast<long>(i)), f[i]);
  trim(k, d);
  return d;
}

template <FieldContext K>
typename K::Elem eval(const K& k, const Poly<K>& f, const typename K::Elem& a) {
  auto acc = k.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = k.add(k.mul(acc, a), f[i]);
  return acc;
}

// f(x + c)
template <FieldContext K>
Poly<K> taylor_shift(const K& k, const Poly<K>& f, const typename K::Elem& c) {
  Poly<K> acc;
  const Poly<K> lin = {c, k.one()};
  for (std::size_t i = f.size(); i-- > 0;) acc = add(k, mul(k, acc, lin), constant(k, f[i]));
  return acc;
}

// f(g(x))
template <FieldContext K>
Poly<K> compose(const K& k, const Poly<K>& f, const Poly<K>& g) {
  Poly<K> acc;
  for (std::size_t i = f.size(); i-- > 0;) acc = add(k, mul(k, acc, g), constant(k, f[i]));
  return acc;
}

template <FieldContext K>
Poly<K> mul_mod(const K& k, const Poly<K>& a, const Poly<K>& b, const Poly<K>& m) {
  return rem(k, mul(k, a, b), m);
}

template <FieldContext K>
Poly<K> pow_mod(const K& k, Poly<K> base, const mpz_class& e, const Poly<K>& m) {
  Poly<K> result = rem(k, Poly<K>{k.one()}, m);
  base = rem(k, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mul_mod(k, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul_mod(k, result, base, m);
  }
  return result;
}

template <FieldContext K>
typename K::Elem pow(const K& k, typename K::Elem a, mpz_class e) {
  auto r = k.one();
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = k.mul(r, a);
    a = k.mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace upoly
}  // namespace dcf
