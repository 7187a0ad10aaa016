#include "dcf/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace dcf {
namespace {

using FpPoly = std::vector<std::uint64_t>;

bool fp_less(const FpPoly& a, const FpPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

bool is_prime(std::uint64_t p) {
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace

std::string fp_poly_to_string(const FpPoly& f, const std::string& var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << f[i];
      continue;
    }
    if (f[i] != 1) os << f[i] << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

BaseField BaseField::rationals() { return BaseField(Kind::Rationals, 0); }

BaseField BaseField::prime_field(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31) || !is_prime(p))
    throw Error(ErrorKind::Domain, "prime field modulus must be a prime below 2^31, got " + std::to_string(p));
  return BaseField(Kind::PrimeField, p);
}

BaseField BaseField::rational_functions(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31) || !is_prime(p))
    throw Error(ErrorKind::Domain, "F_p(t) requires a prime p below 2^31, got " + std::to_string(p));
  return BaseField(Kind::RationalFunctions, p);
}

std::string BaseField::name() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "F_" + std::to_string(p_);
    case Kind::RationalFunctions:
      return "F_" + std::to_string(p_) + "(t)";
  }
  return "?";
}

RatFunc BaseField::normalize(FpPoly num, FpPoly den) const {
  const SmallFp k(p_);
  upoly::trim(k, num);
  upoly::trim(k, den);
  if (den.empty()) throw Error(ErrorKind::ZeroDivision, "rational function with zero denominator");
  if (num.empty()) return RatFunc{{}, {1}};
  const FpPoly g = upoly::gcd(k, num, den);
  if (g.size() > 1) {
    num = upoly::div_exact(k, num, g);
    den = upoly::div_exact(k, den, g);
  }
  const auto c = k.inv(den.back());
  return RatFunc{upoly::scale(k, num, c), upoly::scale(k, den, c)};
}

Scalar BaseField::zero() const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(0);
    case Kind::PrimeField:
      return std::uint64_t{0};
    case Kind::RationalFunctions:
      return RatFunc{};
  }
  return mpq_class(0);
}

Scalar BaseField::one() const { return from_int(1); }

Scalar BaseField::from_int(long n) const { return from_mpz(mpz_class(n)); }

Scalar BaseField::from_mpz(const mpz_class& n) const {
  if (kind_ == Kind::Rationals) return mpq_class(n);
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p_));
  const auto v = static_cast<std::uint64_t>(r.get_ui());
  if (kind_ == Kind::PrimeField) return v;
  if (v == 0) return RatFunc{};
  return RatFunc{{v}, {1}};
}

Scalar BaseField::from_mpq(const mpq_class& q) const {
  if (kind_ == Kind::Rationals) {
    mpq_class c(q);
    c.canonicalize();
    return c;
  }
  const Scalar d = from_mpz(q.get_den());
  if (is_zero(d)) throw Error(ErrorKind::ZeroDivision, "denominator divisible by the characteristic");
  return mul(from_mpz(q.get_num()), inv(d));
}

Scalar BaseField::t() const {
  if (kind_ != Kind::RationalFunctions) throw Error(ErrorKind::Domain, "the variable t only exists in F_p(t)");
  return RatFunc{{0, 1}, {1}};
}

Scalar BaseField::ratfunc(FpPoly num, FpPoly den) const {
  if (kind_ != Kind::RationalFunctions) throw Error(ErrorKind::Domain, "not a rational function field");
  return normalize(std::move(num), std::move(den));
}

Scalar BaseField::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
    case Kind::PrimeField:
      return (std::get<std::uint64_t>(a) + std::get<std::uint64_t>(b)) % p_;
    case Kind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(a);
      const auto& y = std::get<RatFunc>(b);
      if (x.num.empty()) return y;
      if (y.num.empty()) return x;
      const SmallFp k(p_);
      if (x.den == y.den) return normalize(upoly::add(k, x.num, y.num), x.den);
      return normalize(upoly::add(k, upoly::mul(k, x.num, y.den), upoly::mul(k, y.num, x.den)),
                       upoly::mul(k, x.den, y.den));
    }
  }
  return a;
}

Scalar BaseField::neg(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(-std::get<mpq_class>(a));
    case Kind::PrimeField: {
      const auto v = std::get<std::uint64_t>(a);
      return v == 0 ? v : p_ - v;
    }
    case Kind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(a);
      return RatFunc{upoly::neg(SmallFp(p_), x.num), x.den};
    }
  }
  return a;
}

Scalar BaseField::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar BaseField::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
    case Kind::PrimeField:
      return (std::get<std::uint64_t>(a) * std::get<std::uint64_t>(b)) % p_;
    case Kind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(a);
      const auto& y = std::get<RatFunc>(b);
      if (x.num.empty() || y.num.empty()) return RatFunc{};
      const SmallFp k(p_);
      return normalize(upoly::mul(k, x.num, y.num), upoly::mul(k, x.den, y.den));
    }
  }
  return a;
}

Scalar BaseField::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error(ErrorKind::ZeroDivision, "inversion of zero");
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(1 / std::get<mpq_class>(a));
    case Kind::PrimeField:
      return SmallFp(p_).inv(std::get<std::uint64_t>(a));
    case Kind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(a);
      return normalize(x.den, x.num);
    }
  }
  return a;
}

bool BaseField::is_zero(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return std::get<mpq_class>(a) == 0;
    case Kind::PrimeField:
      return std::get<std::uint64_t>(a) == 0;
    case Kind::RationalFunctions:
      return std::get<RatFunc>(a).num.empty();
  }
  return false;
}

bool BaseField::less(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return std::get<mpq_class>(a) < std::get<mpq_class>(b);
    case Kind::PrimeField:
      return std::get<std::uint64_t>(a) < std::get<std::uint64_t>(b);
    case Kind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(a);
      const auto& y = std::get<RatFunc>(b);
      if (x.den != y.den) return fp_less(x.den, y.den);
      return fp_less(x.num, y.num);
    }
  }
  return false;
}

std::string BaseField::to_string(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return std::get<mpq_class>(a).get_str();
    case Kind::PrimeField:
      return std::to_string(std::get<std::uint64_t>(a));
    case Kind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(a);
      std::string n = fp_poly_to_string(x.num, "t");
      if (x.den.size() == 1) return n;
      auto count_terms = [](const FpPoly& f) { return std::count_if(f.begin(), f.end(), [](auto c) { return c != 0; }); };
      if (count_terms(x.num) > 1) n = "(" + n + ")";
      return n + "/(" + fp_poly_to_string(x.den, "t") + ")";
    }
  }
  return "?";
}

bool BaseField::is_compound(const Scalar& a) const {
  const std::string s = to_string(a);
  return s.find('+', 1) != std::string::npos || s.find('-', 1) != std::string::npos ||
         (kind_ == Kind::RationalFunctions && s.find('/') != std::string::npos);
}

std::optional<Scalar> BaseField::pth_root(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals:
      throw Error(ErrorKind::Domain, "p-th roots require positive characteristic");
    case Kind::PrimeField:
      return a;
    case Kind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(a);
      auto compress = [this](const FpPoly& f) -> std::optional<FpPoly> {
        FpPoly r;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (f[i] == 0) continue;
          if (i % p_ != 0) return std::nullopt;
          r.resize(i / p_ + 1, 0);
          r[i / p_] = f[i];
        }
        return r;
      };
      auto n = compress(x.num);
      auto d = compress(x.den);
      if (!n || !d) return std::nullopt;
      return normalize(*n, *d);
    }
  }
  return std::nullopt;
}

}  // namespace dcf
