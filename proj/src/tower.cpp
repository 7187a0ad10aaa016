#include "dcf/tower.hpp"

#include <algorithm>
#include <sstream>

#include "dcf/linalg.hpp"
#include "dcf/upoly.hpp"

namespace dcf {

TowerField::TowerField(BaseField base) {
  node_ = std::make_shared<TowerNode>(TowerNode{std::move(base), nullptr, 0, 1, {}});
}

const TowerNode& TowerField::node_at(std::size_t level) const {
  if (level > node_->level) throw Error(ErrorKind::Domain, "level beyond the top of the tower");
  const TowerNode* n = node_.get();
  while (n->level > level) n = n->parent.get();
  return *n;
}

std::size_t TowerField::degree_at(std::size_t level) const { return node_at(level).degree; }

TowerField TowerField::parent() const {
  if (!node_->parent) throw Error(ErrorKind::Domain, "the base field has no parent");
  return TowerField(node_->parent);
}

TowerField TowerField::at_level(std::size_t level) const {
  std::shared_ptr<const TowerNode> n = node_;
  if (level > n->level) throw Error(ErrorKind::Domain, "level beyond the top of the tower");
  while (n->level > level) n = n->parent;
  return TowerField(n);
}

const Generator& TowerField::generator(std::size_t level) const {
  if (level == 0) throw Error(ErrorKind::Domain, "the base level has no generator");
  return node_at(level).gen;
}

std::vector<std::string> TowerField::generator_names() const {
  std::vector<std::string> names(level());
  for (const TowerNode* n = node_.get(); n->level > 0; n = n->parent.get()) names[n->level - 1] = n->gen.name;
  return names;
}

std::size_t TowerField::find_generator(const std::string& name) const {
  for (const TowerNode* n = node_.get(); n->level > 0; n = n->parent.get())
    if (n->gen.name == name) return n->level;
  return 0;
}

bool TowerField::is_prefix_of(const TowerField& other) const {
  if (level() == 0) return base() == other.base();
  for (const TowerNode* n = other.node_.get(); n; n = n->parent.get())
    if (n == node_.get()) return true;
  return false;
}

bool TowerField::same_structure(const TowerField& other) const {
  if (level() != other.level() || !(base() == other.base())) return false;
  const TowerNode* a = node_.get();
  const TowerNode* b = other.node_.get();
  for (; a->level > 0; a = a->parent.get(), b = b->parent.get()) {
    if (a == b) return true;
    if (a->gen.name != b->gen.name || a->gen.minpoly != b->gen.minpoly || a->gen.insep_exp != b->gen.insep_exp) return false;
  }
  return true;
}

TowerField TowerField::adjoin_unchecked(Generator gen) const {
  if (gen.minpoly.size() < 3) throw Error(ErrorKind::Domain, "a generator needs a minimal polynomial of degree >= 2");
  for (const auto& c : gen.minpoly)
    if (c.size() != degree()) throw Error(ErrorKind::Domain, "minimal polynomial coefficients must live in the tower below");
  const std::size_t deg = degree() * gen.degree();
  return TowerField(std::make_shared<TowerNode>(TowerNode{base(), node_, level() + 1, deg, std::move(gen)}));
}

Residue TowerField::zero() const { return Residue(degree(), base().zero()); }

Residue TowerField::one() const { return from_int(1); }

Residue TowerField::from_int(long n) const { return from_scalar(base().from_int(n)); }

Residue TowerField::from_scalar(const Scalar& s) const {
  Residue r = zero();
  r[0] = s;
  return r;
}

Residue TowerField::add(const Residue& a, const Residue& b) const {
  Residue r(a.size(), base().zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base().add(a[i], b[i]);
  return r;
}

Residue TowerField::sub(const Residue& a, const Residue& b) const {
  Residue r(a.size(), base().zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base().sub(a[i], b[i]);
  return r;
}

Residue TowerField::neg(const Residue& a) const {
  Residue r(a.size(), base().zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base().neg(a[i]);
  return r;
}

bool TowerField::is_zero(const Residue& a) const {
  return std::all_of(a.begin(), a.end(), [this](const Scalar& s) { return base().is_zero(s); });
}

Residue TowerField::mul(const Residue& a, const Residue& b) const {
  const TowerNode& n = *node_;
  if (n.level == 0) return {n.base.mul(a[0], b[0])};
  const TowerField par(n.parent);
  const std::size_t m = n.parent->degree;
  const std::size_t d = n.gen.degree();
  auto chunk = [m](const Residue& r, std::size_t i) {
    return Residue(r.begin() + static_cast<std::ptrdiff_t>(i * m), r.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
  };
  std::vector<Residue> ca(d), cb(d);
  std::vector<bool> za(d), zb(d);
  for (std::size_t i = 0; i < d; ++i) {
    ca[i] = chunk(a, i);
    cb[i] = chunk(b, i);
    za[i] = par.is_zero(ca[i]);
    zb[i] = par.is_zero(cb[i]);
  }
  std::vector<Residue> prod(2 * d - 1, par.zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (za[i]) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (zb[j]) continue;
      prod[i + j] = par.add(prod[i + j], par.mul(ca[i], cb[j]));
    }
  }
  const auto& mp = n.gen.minpoly;
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    if (par.is_zero(prod[k])) continue;
    const Residue c = prod[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (par.is_zero(mp[j])) continue;
      prod[k - d + j] = par.sub(prod[k - d + j], par.mul(c, mp[j]));
    }
  }
  Residue r;
  r.reserve(n.degree);
  for (std::size_t i = 0; i < d; ++i) r.insert(r.end(), prod[i].begin(), prod[i].end());
  return r;
}

Residue TowerField::inv(const Residue& a) const {
  if (is_zero(a)) throw Error(ErrorKind::ZeroDivision, "inversion of zero");
  const TowerNode& n = *node_;
  if (n.level == 0) return {n.base.inv(a[0])};
  const TowerField par(n.parent);
  const std::size_t m = n.parent->degree;
  const std::size_t d = n.gen.degree();
  Poly<TowerField> ap;
  for (std::size_t i = 0; i < d; ++i)
    ap.emplace_back(a.begin() + static_cast<std::ptrdiff_t>(i * m), a.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
  upoly::trim(par, ap);
  auto [g, s, t] = upoly::xgcd(par, ap, n.gen.minpoly);
  if (g.size() != 1) throw Error(ErrorKind::Internal, "generator minimal polynomial is not irreducible");
  Residue r;
  r.reserve(n.degree);
  for (std::size_t i = 0; i < d; ++i) {
    const Residue c = i < s.size() ? s[i] : par.zero();
    r.insert(r.end(), c.begin(), c.end());
  }
  return r;
}

Residue TowerField::pow(const Residue& a, const mpz_class& e) const {
  Residue r = one();
  Residue b = a;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
  }
  return r;
}

Residue TowerField::generator_element(std::size_t level) const {
  if (level == 0 || level > this->level()) throw Error(ErrorKind::Domain, "no generator at that level");
  Residue r = zero();
  r[degree_at(level - 1)] = base().one();
  return r;
}

Residue TowerField::lift(const Residue& r) const {
  if (r.size() > degree()) throw Error(ErrorKind::Domain, "element does not live in a prefix of this tower");
  Residue out = r;
  out.resize(degree(), base().zero());
  return out;
}

std::size_t TowerField::level_of(const Residue& r) const {
  std::size_t last = 0;
  for (std::size_t i = r.size(); i-- > 0;) {
    if (!base().is_zero(r[i])) {
      last = i;
      break;
    }
  }
  for (std::size_t l = 0; l <= level(); ++l)
    if (degree_at(l) > last) return l;
  return level();
}

std::vector<unsigned> TowerField::exponents(std::size_t flat_index) const {
  std::vector<unsigned> e(level());
  for (const TowerNode* n = node_.get(); n->level > 0; n = n->parent.get())
    e[n->level - 1] = static_cast<unsigned>((flat_index / n->parent->degree) % n->gen.degree());
  return e;
}

mpz_class TowerField::order() const {
  if (!is_finite()) throw Error(ErrorKind::Domain, "order of an infinite field");
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), characteristic(), degree());
  return q;
}

Residue TowerField::random(std::mt19937_64& rng) const {
  if (!is_finite()) throw Error(ErrorKind::Domain, "random elements only exist for finite towers");
  Residue r = zero();
  for (auto& s : r) s = base().from_mpz(mpz_class(static_cast<unsigned long>(rng() % base().p())));
  return r;
}

namespace {

using FpPoly = std::vector<std::uint64_t>;

// Splits mu in F_p(t) as sum_{j<p} nu_j t^j with every nu_j in F_p(t^p).
std::vector<Scalar> frobenius_components(const BaseField& base, const Scalar& mu) {
  const std::uint64_t p = base.p();
  const SmallFp k(p);
  const auto& r = std::get<RatFunc>(mu);
  std::vector<Scalar> out(p, base.zero());
  if (r.num.empty()) return out;
  FpPoly num = r.num;
  FpPoly den_p = {1};
  for (std::uint64_t i = 0; i + 1 < p; ++i) num = upoly::mul(k, num, r.den);
  for (std::uint64_t i = 0; i < p; ++i) den_p = upoly::mul(k, den_p, r.den);
  std::vector<FpPoly> parts(p);
  for (std::size_t e = 0; e < num.size(); ++e) {
    if (num[e] == 0) continue;
    auto& part = parts[e % p];
    part.resize(e - e % p + 1, 0);
    part[e - e % p] = num[e];
  }
  for (std::uint64_t j = 0; j < p; ++j)
    if (!parts[j].empty()) out[j] = base.ratfunc(parts[j], den_p);
  return out;
}

}  // namespace

std::optional<Residue> TowerField::pth_root(const Residue& a) const {
  const BaseField& b = base();
  if (b.kind() == BaseField::Kind::Rationals) throw Error(ErrorKind::Domain, "p-th roots require positive characteristic");
  if (b.kind() == BaseField::Kind::PrimeField) {
    // Inverse Frobenius on F_q is x -> x^(q/p).
    return pow(a, order() / mpz_class(characteristic()));
  }
  if (level() == 0) {
    auto r = b.pth_root(a[0]);
    if (!r) return std::nullopt;
    return Residue{*r};
  }
  // Over F_p(t): a = sum_i lambda_i^p b_i^p with b_i the monomial basis.
  // Solve for mu_i = lambda_i^p in K^p = F_p(t^p), coordinates taken in the
  // K^p-basis {t^j * b_i}.
  const std::size_t n = degree();
  const std::uint64_t p = b.p();
  std::vector<ScalarVec> rows(n * p, ScalarVec(n, b.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    Residue e = zero();
    e[i] = b.one();
    const Residue ep = pow(e, mpz_class(static_cast<unsigned long>(p)));
    for (std::size_t c = 0; c < n; ++c) {
      const auto comps = frobenius_components(b, ep[c]);
      for (std::uint64_t j = 0; j < p; ++j) rows[c * p + j][i] = comps[j];
    }
  }
  ScalarVec rhs(n * p, b.zero());
  for (std::size_t c = 0; c < n; ++c) {
    const auto comps = frobenius_components(b, a[c]);
    for (std::uint64_t j = 0; j < p; ++j) rhs[c * p + j] = comps[j];
  }
  auto sol = solve_linear(b, std::move(rows), std::move(rhs));
  if (!sol) return std::nullopt;
  Residue r = zero();
  for (std::size_t i = 0; i < n; ++i) {
    auto root = b.pth_root((*sol)[i]);
    if (!root) return std::nullopt;
    r[i] = *root;
  }
  return r;
}

bool TowerField::less(const Residue& a, const Residue& b) const {
  for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
    const Scalar& x = i < a.size() ? a[i] : base().zero();
    const Scalar& y = i < b.size() ? b[i] : base().zero();
    if (x == y) continue;
    return base().less(x, y);
  }
  return false;
}

std::string TowerField::to_string(const Residue& a) const {
  const auto names = generator_names();
  std::ostringstream os;
  bool first = true;
  const Scalar one = base().one();
  const Scalar minus_one = base().neg(one);
  for (std::size_t i = a.size(); i-- > 0;) {
    if (base().is_zero(a[i])) continue;
    std::string mono;
    if (i > 0) {
      const auto e = exponents(i);
      for (std::size_t l = 0; l < e.size(); ++l) {
        if (e[l] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += names[l];
        if (e[l] > 1) mono += "^" + std::to_string(e[l]);
      }
    }
    std::string term;
    if (mono.empty()) {
      term = base().to_string(a[i]);
    } else if (a[i] == one) {
      term = mono;
    } else if (a[i] == minus_one && base().kind() == BaseField::Kind::Rationals) {
      term = "-" + mono;
    } else {
      std::string c = base().to_string(a[i]);
      if (base().is_compound(a[i])) c = "(" + c + ")";
      term = c + "*" + mono;
    }
    if (!first && term[0] != '-') os << '+';
    os << term;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

bool TowerField::is_compound(const Residue& a) const {
  const std::string s = to_string(a);
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i > 0 && (s[i] == '+' || s[i] == '-')) return true;
  }
  return false;
}

TowerElement::TowerElement(TowerField field, Residue value) : field_(std::move(field)), value_(std::move(value)) {
  if (value_.size() != field_.degree()) throw Error(ErrorKind::Domain, "residue length does not match the tower degree");
}

TowerElement TowerElement::lift_to(const TowerField& target) const {
  if (!field_.is_prefix_of(target)) throw Error(ErrorKind::Domain, "incompatible towers: cannot lift element");
  return {target, target.lift(value_)};
}

TowerField common_tower(const TowerField& a, const TowerField& b) {
  if (a.is_prefix_of(b)) return b;
  if (b.is_prefix_of(a)) return a;
  throw Error(ErrorKind::Domain, "incompatible towers");
}

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
  const TowerField f = common_tower(a.field_, b.field_);
  return {f, f.add(f.lift(a.value_), f.lift(b.value_))};
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) {
  const TowerField f = common_tower(a.field_, b.field_);
  return {f, f.sub(f.lift(a.value_), f.lift(b.value_))};
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  const TowerField f = common_tower(a.field_, b.field_);
  return {f, f.mul(f.lift(a.value_), f.lift(b.value_))};
}

TowerElement operator/(const TowerElement& a, const TowerElement& b) {
  const TowerField f = common_tower(a.field_, b.field_);
  return {f, f.mul(f.lift(a.value_), f.inv(f.lift(b.value_)))};
}

bool operator==(const TowerElement& a, const TowerElement& b) {
  const TowerField f = common_tower(a.field_, b.field_);
  return f.lift(a.value_) == f.lift(b.value_);
}

}  // namespace dcf
