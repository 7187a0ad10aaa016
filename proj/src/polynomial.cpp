#include "dcf/polynomial.hpp"

#include <sstream>

namespace dcf {

Polynomial::Polynomial(TowerField field, std::vector<Residue> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    if (c.size() > field_.degree()) throw Error(ErrorKind::Domain, "coefficient outside the polynomial's field");
    if (c.size() < field_.degree()) c = field_.lift(c);
  }
  upoly::trim(field_, coeffs_);
}

Polynomial Polynomial::x(const TowerField& field) { return Polynomial(field, {field.zero(), field.one()}); }

Polynomial Polynomial::constant(const TowerElement& c) { return Polynomial(c.field(), {c.value()}); }

Polynomial Polynomial::from_elements(const TowerField& field, const std::vector<TowerElement>& coeffs) {
  std::vector<Residue> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.push_back(c.lift_to(field).value());
  return Polynomial(field, std::move(cs));
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_.one(); }

TowerElement Polynomial::coeff(std::size_t i) const {
  return {field_, i < coeffs_.size() ? coeffs_[i] : field_.zero()};
}

TowerElement Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return {field_, coeffs_.back()};
}

Polynomial Polynomial::lift_to(const TowerField& target) const {
  if (!field_.is_prefix_of(target)) throw Error(ErrorKind::Domain, "incompatible domains: cannot lift polynomial");
  std::vector<Residue> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(target.lift(c));
  return Polynomial(target, std::move(cs));
}

Polynomial Polynomial::monic() const { return Polynomial(field_, upoly::monic(field_, coeffs_)); }

Polynomial Polynomial::derivative() const { return Polynomial(field_, upoly::derivative(field_, coeffs_)); }

TowerElement Polynomial::eval(const TowerElement& a) const {
  const TowerField f = common_tower(field_, a.field());
  const Polynomial lifted = lift_to(f);
  return {f, upoly::eval(f, lifted.coeffs_, f.lift(a.value()))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const Residue one = field_.one();
  const Residue minus_one = field_.neg(one);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Residue& c = coeffs_[i];
    if (field_.is_zero(c)) continue;
    std::string term;
    if (i == 0) {
      term = field_.to_string(c);
    } else {
      std::string mono = var;
      if (i > 1) mono += "^" + std::to_string(i);
      if (c == one) {
        term = mono;
      } else if (c == minus_one && field_.to_string(c) == "-1") {
        term = "-" + mono;
      } else if (field_.is_compound(c)) {
        term = "(" + field_.to_string(c) + ")*" + mono;
      } else {
        term = field_.to_string(c) + "*" + mono;
      }
    }
    if (!first && term[0] != '-') os << '+';
    os << term;
    first = false;
  }
  return os.str();
}

namespace {

TowerField common(const Polynomial& f, const Polynomial& g) {
  try {
    return common_tower(f.field(), g.field());
  } catch (const Error&) {
    throw Error(ErrorKind::Domain, "domain mismatch: polynomials over unrelated fields");
  }
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  const TowerField k = common(f, g);
  return Polynomial(k, upoly::add(k, f.lift_to(k).coeffs_, g.lift_to(k).coeffs_));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  const TowerField k = common(f, g);
  return Polynomial(k, upoly::sub(k, f.lift_to(k).coeffs_, g.lift_to(k).coeffs_));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  const TowerField k = common(f, g);
  return Polynomial(k, upoly::mul(k, f.lift_to(k).coeffs_, g.lift_to(k).coeffs_));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  const TowerField k = common(f, g);
  return f.lift_to(k).coeffs_ == g.lift_to(k).coeffs_;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g) {
  const TowerField k = common(f, g);
  auto [q, r] = upoly::divrem(k, f.lift_to(k).coeffs(), g.lift_to(k).coeffs());
  return {Polynomial(k, std::move(q)), Polynomial(k, std::move(r))};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  const TowerField k = common(f, g);
  return Polynomial(k, upoly::gcd(k, f.lift_to(k).coeffs(), g.lift_to(k).coeffs()));
}

PolyArithResult poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
  switch (op) {
    case PolyOp::Add:
      return {f + g, std::nullopt};
    case PolyOp::Sub:
      return {f - g, std::nullopt};
    case PolyOp::Mul:
      return {f * g, std::nullopt};
    case PolyOp::Divrem: {
      auto [q, r] = divrem(f, g);
      return {q, r};
    }
    case PolyOp::Gcd:
      return {gcd(f, g), std::nullopt};
  }
  throw Error(ErrorKind::Internal, "unknown polynomial operation");
}

TowerElement poly_eval(const Polynomial& f, const TowerElement& a) {
  try {
    return f.eval(a);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Domain) throw Error(ErrorKind::Domain, "incompatible domains for evaluation");
    throw;
  }
}

bool canonical_less(const Polynomial& f, const Polynomial& g) {
  const TowerField k = common(f, g);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Residue x = k.lift(a[i]);
    const Residue y = k.lift(b[i]);
    if (x == y) continue;
    return k.less(x, y);
  }
  return false;
}

std::optional<unsigned> purely_inseparable_exponent(const Polynomial& f) {
  const TowerField& k = f.field();
  const unsigned long p = k.characteristic();
  if (p == 0 || f.coeffs().size() < 3 || !f.is_monic()) return std::nullopt;
  const std::size_t n = f.coeffs().size() - 1;
  for (std::size_t i = 1; i < n; ++i)
    if (!k.is_zero(f.coeffs()[i])) return std::nullopt;
  unsigned e = 0;
  std::size_t m = n;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return e;
}

}  // namespace dcf
