#include "dcf/closure.hpp"

#include <algorithm>

#include "dcf/factor.hpp"
#include "dcf/subfield.hpp"
#include "dcf/text.hpp"

namespace dcf {

namespace {

std::string roots_text(const std::vector<std::pair<TowerElement, unsigned>>& rs) {
  std::string out;
  for (const auto& [r, m] : rs) {
    if (!out.empty()) out += ", ";
    out += r.to_string() + ":" + std::to_string(m);
  }
  return out;
}

std::string elements_text(const std::vector<TowerElement>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ", ";
    out += x.to_string();
  }
  return out;
}

// Splits on ", " at parenthesis depth zero.
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      if (i + 1 < s.size() && s[i + 1] == ' ') ++i;
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

ClosurePresentation::ClosurePresentation(BaseField base) : field_(std::move(base)) {}

ClosurePresentation::ClosurePresentation(TowerField initial) : field_(std::move(initial)) {
  initial_level_ = field_.level();
  for (std::size_t l = 1; l <= field_.level(); ++l) {
    const Polynomial m(field_.at_level(l - 1), field_.generator(l).minpoly);
    register_root(key_of(m), field_.generator_element(l));
  }
}

ClosurePresentation ClosurePresentation::restore(TowerField field, std::size_t initial_level,
                                                 std::vector<std::pair<std::string, std::vector<Residue>>> registry,
                                                 std::vector<ClosureLogEntry> log) {
  ClosurePresentation c(field.base());
  c.field_ = std::move(field);
  c.initial_level_ = initial_level;
  for (auto& [key, roots] : registry)
    for (const auto& r : roots) c.register_root(key, r);
  c.log_ = std::move(log);
  return c;
}

std::string ClosurePresentation::key_of(const Polynomial& monic) const { return monic.to_string(); }

void ClosurePresentation::register_root(const std::string& key, const Residue& r) {
  auto [it, inserted] = registry_.try_emplace(key);
  if (inserted) keys_.push_back(key);
  const Residue lifted = field_.lift(r);
  for (const auto& known : it->second)
    if (field_.lift(known) == lifted) return;
  it->second.push_back(r);
}

std::vector<TowerElement> ClosurePresentation::registered_roots(const std::string& key) const {
  std::vector<TowerElement> out;
  const auto it = registry_.find(key);
  if (it == registry_.end()) return out;
  for (const auto& r : it->second) out.emplace_back(field_, field_.lift(r));
  return out;
}

Polynomial ClosurePresentation::prepare(const Polynomial& f, const char* op) const {
  if (!f.field().is_prefix_of(field_))
    throw Error(ErrorKind::Domain, std::string(op) + ": polynomial is not over the closure");
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  if (*f.degree() < 1) throw Error(ErrorKind::Domain, std::string(op) + ": constant polynomial has no roots");
  return f.monic().lift_to(field_);
}

std::string ClosurePresentation::fresh_name() const {
  for (std::size_t i = 1;; ++i) {
    const std::string name = "r" + std::to_string(i);
    if (field_.find_generator(name) == 0) return name;
  }
}

TowerElement ClosurePresentation::adjoin_irreducible(const Polynomial& h) {
  const auto k = purely_inseparable_exponent(h);
  if (!k && h.derivative().is_zero()) {
    // h = G(x^(p^e)) with G separable: a root is the p^e-th root of a root of G.
    const unsigned long p = field_.characteristic();
    std::vector<Residue> g = h.coeffs();
    unsigned e = 0;
    while (Polynomial(field_, g).derivative().is_zero()) {
      std::vector<Residue> next;
      for (std::size_t i = 0; i < g.size(); i += p) next.push_back(g[i]);
      g = std::move(next);
      ++e;
    }
    const Polynomial G(field_, g);
    const TowerElement beta = adjoin_irreducible(G);
    const TowerElement root = pk_root_impl(beta, e);
    register_root(key_of(h), root.value());
    return root.lift_to(field_);
  }
  field_ = field_.adjoin_unchecked(Generator{fresh_name(), h.lift_to(field_).coeffs(), k.value_or(0)});
  const TowerElement root = TowerElement::generator(field_, field_.level());
  register_root(key_of(h), root.value());
  return root;
}

TowerElement ClosurePresentation::adjoin_root_impl(const Polynomial& f) {
  const Polynomial g = prepare(f, "adjoin_root");
  const std::string key = key_of(g);
  const auto known = registered_roots(key);
  if (!known.empty()) return known.front();
  const Factorization fac = factor(g);
  for (const auto& [h, m] : fac.factors) {
    if (*h.degree() != 1) continue;
    const TowerElement root = -h.coeff(0);
    register_root(key, root.value());
    return root;
  }
  const TowerElement root = adjoin_irreducible(fac.factors.front().first);
  register_root(key, root.value());
  return root;
}

std::vector<std::pair<TowerElement, unsigned>> ClosurePresentation::roots_impl(const Polynomial& f) {
  const Polynomial g0 = prepare(f, "roots");
  const std::string key = key_of(g0);
  Factorization fac = factor(g0.lift_to(field_));
  for (;;) {
    const auto it = std::find_if(fac.factors.begin(), fac.factors.end(), [](const auto& e) { return *e.first.degree() > 1; });
    if (it == fac.factors.end()) break;
    adjoin_irreducible(it->first);
    fac = factor(g0.lift_to(field_));
  }
  std::vector<std::pair<TowerElement, unsigned>> found;
  for (const auto& [h, m] : fac.factors) found.emplace_back(-h.coeff(0), m);
  std::vector<std::pair<TowerElement, unsigned>> out;
  for (const auto& r : registered_roots(key))
    for (const auto& e : found)
      if (e.first == r) out.push_back(e);
  for (const auto& e : found) {
    const bool seen = std::any_of(out.begin(), out.end(), [&e](const auto& o) { return o.first == e.first; });
    if (!seen) out.push_back(e);
  }
  for (const auto& [r, m] : out) register_root(key, r.value());
  return out;
}

TowerElement ClosurePresentation::pk_root_impl(const TowerElement& a, unsigned k) {
  const unsigned long p = field_.characteristic();
  if (p == 0) throw Error(ErrorKind::Domain, "p^k-th roots need positive characteristic (characteristic 0 given)");
  if (!a.field().is_prefix_of(field_)) throw Error(ErrorKind::Domain, "pk_root: element is not in the closure");
  const TowerField start = a.field();
  TowerElement c = a.lift_to(field_);
  for (unsigned i = 0; i < k; ++i) {
    if (auto r = field_.pth_root(c.value())) {
      c = TowerElement(field_, *r);
      continue;
    }
    // X^p - c is irreducible when c is not a p-th power.
    std::vector<Residue> coeffs(p + 1, field_.zero());
    coeffs[0] = field_.neg(c.value());
    coeffs[p] = field_.one();
    c = adjoin_irreducible(Polynomial(field_, std::move(coeffs)));
  }
  std::vector<Residue> coeffs;
  unsigned long n = 1;
  for (unsigned i = 0; i < k; ++i) n *= p;
  coeffs.assign(n + 1, start.zero());
  coeffs[0] = start.neg(a.value());
  coeffs[n] = start.one();
  register_root(key_of(Polynomial(start, std::move(coeffs))), c.value());
  return c.lift_to(field_);
}

TowerElement ClosurePresentation::adjoin_root(const Polynomial& f) {
  const TowerElement r = adjoin_root_impl(f);
  log_.push_back({"adjoin_root", {{"poly", f.to_string()}}, r.to_string()});
  return r;
}

std::vector<std::pair<TowerElement, unsigned>> ClosurePresentation::roots(const Polynomial& f) {
  auto rs = roots_impl(f);
  log_.push_back({"roots", {{"poly", f.to_string()}}, roots_text(rs)});
  return rs;
}

TowerElement ClosurePresentation::pk_root(const TowerElement& a, unsigned k) {
  if (k == 0) throw Error(ErrorKind::Domain, "pk_root: k must be positive");
  const TowerElement r = pk_root_impl(a, k);
  log_.push_back({"pk_root", {{"a", a.to_string()}, {"k", std::to_string(k)}}, r.to_string()});
  return r;
}

std::vector<TowerElement> ClosurePresentation::conjugates(const TowerElement& x, const std::vector<TowerElement>& S) {
  if (!x.field().is_prefix_of(field_)) throw Error(ErrorKind::Domain, "conjugates: element is not in the closure");
  const TowerElement xl = x.lift_to(field_);
  const Polynomial p = minpoly(xl, S);
  std::vector<TowerElement> out{xl};
  for (const auto& [r, m] : roots_impl(p))
    if (!(r == xl)) out.push_back(r);
  log_.push_back({"conjugates", {{"x", x.to_string()}, {"S", elements_text(S)}}, elements_text(out)});
  return out;
}

TowerField ClosurePresentation::ensure_contains(const TowerField& F) {
  if (F.is_prefix_of(field_)) return F;
  if (F.level() <= field_.level()) {
    const TowerField prefix = field_.at_level(F.level());
    if (prefix.same_structure(F)) return prefix;
  }
  if (field_.level() == 0 && F.base() == base() && keys_.empty()) {
    *this = ClosurePresentation(F);
    return field_;
  }
  throw Error(ErrorKind::Domain, "the closure does not contain the given field");
}

ClosurePresentation replay_closure(const TowerField& initial, const std::vector<ClosureLogEntry>& log) {
  ClosurePresentation c(initial);
  for (const auto& e : log) {
    auto arg = [&e](const std::string& name) {
      for (const auto& [k, v] : e.args)
        if (k == name) return v;
      throw Error(ErrorKind::Parse, "log entry '" + e.op + "' lacks argument '" + name + "'");
    };
    if (e.op == "adjoin_root") {
      c.adjoin_root(parse_polynomial(arg("poly"), c.field()));
    } else if (e.op == "roots") {
      c.roots(parse_polynomial(arg("poly"), c.field()));
    } else if (e.op == "pk_root") {
      c.pk_root(parse_element(arg("a"), c.field()), static_cast<unsigned>(std::stoul(arg("k"))));
    } else if (e.op == "conjugates") {
      std::vector<TowerElement> S;
      for (const auto& s : split_list(arg("S"))) S.push_back(parse_element(s, c.field()));
      c.conjugates(parse_element(arg("x"), c.field()), S);
    } else {
      c.append_log(e);
    }
  }
  return c;
}

}  // namespace dcf
