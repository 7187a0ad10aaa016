#include "dcf/subfield.hpp"

#include <sstream>

#include "dcf/linalg.hpp"

namespace dcf {

TowerElement SubfieldExpression::evaluate(const TowerField& field, const std::vector<TowerElement>& gens) const {
  Residue acc = field.zero();
  for (const auto& t : terms) {
    Residue m = field.from_scalar(t.coeff);
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i] > 0) m = field.mul(m, field.pow(field.lift(gens[i].value()), mpz_class(t.exps[i])));
    acc = field.add(acc, m);
  }
  return {field, acc};
}

std::string SubfieldExpression::to_string(const BaseField& base, const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    std::string mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    std::string term;
    std::string c = base.to_string(t.coeff);
    if (mono.empty()) {
      term = c;
    } else if (t.coeff == base.one()) {
      term = mono;
    } else {
      if (base.is_compound(t.coeff)) c = "(" + c + ")";
      term = c + "*" + mono;
    }
    if (!first && term[0] != '-') os << '+';
    os << term;
    first = false;
  }
  return os.str();
}

SubfieldBasis subfield_basis(const TowerField& field, const std::vector<TowerElement>& gens) {
  std::vector<Residue> g;
  g.reserve(gens.size());
  for (const auto& s : gens) g.push_back(s.lift_to(field).value());
  SubfieldBasis out;
  SpanBasis span(field.base(), field.degree());
  out.vectors.push_back(field.one());
  out.monomials.emplace_back(gens.size(), 0u);
  span.insert(field.one());
  for (std::size_t idx = 0; idx < out.vectors.size(); ++idx) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      Residue w = field.mul(out.vectors[idx], g[j]);
      if (!span.insert(w)) continue;
      std::vector<unsigned> mono = out.monomials[idx];
      ++mono[j];
      out.vectors.push_back(std::move(w));
      out.monomials.push_back(std::move(mono));
    }
  }
  return out;
}

Polynomial minpoly(const TowerElement& x, const std::vector<TowerElement>& S) {
  const TowerField& field = x.field();
  const SubfieldBasis basis = subfield_basis(field, S);
  SpanBasis span(field.base(), field.degree());
  std::vector<std::pair<std::size_t, std::size_t>> tags;
  Residue xp = field.one();
  for (std::size_t d = 0; d <= field.degree(); ++d) {
    if (d > 0) {
      if (auto c = span.express(xp)) {
        std::vector<Residue> coeffs(d + 1, field.zero());
        for (std::size_t k = 0; k < tags.size(); ++k) {
          const auto [i, j] = tags[k];
          coeffs[i] = field.sub(coeffs[i], field.mul(field.from_scalar((*c)[k]), basis.vectors[j]));
        }
        coeffs[d] = field.one();
        return Polynomial(field, std::move(coeffs));
      }
    }
    for (std::size_t j = 0; j < basis.vectors.size(); ++j)
      if (span.insert(field.mul(basis.vectors[j], xp))) tags.emplace_back(d, j);
    xp = field.mul(xp, x.value());
  }
  throw Error(ErrorKind::Internal, "minimal polynomial search exceeded the tower degree");
}

std::vector<TowerElement> level_generators(const TowerField& field, std::size_t level) {
  std::vector<TowerElement> out;
  for (std::size_t l = 1; l <= level; ++l) out.push_back(TowerElement::generator(field, l));
  return out;
}

Polynomial minpoly_over_level(const TowerElement& x, std::size_t level) {
  const TowerField& field = x.field();
  const Polynomial p = minpoly(x, level_generators(field, level));
  const TowerField sub = field.at_level(level);
  std::vector<Residue> coeffs;
  for (const auto& c : p.coeffs()) {
    if (field.level_of(c) > level) throw Error(ErrorKind::Internal, "minimal polynomial escaped its subfield");
    coeffs.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(sub.degree()));
  }
  return Polynomial(sub, std::move(coeffs));
}

std::optional<SubfieldExpression> subfield_member(const TowerElement& x, const std::vector<TowerElement>& S) {
  const TowerField& field = x.field();
  const SubfieldBasis basis = subfield_basis(field, S);
  SpanBasis span(field.base(), field.degree());
  for (const auto& v : basis.vectors) span.insert(v);
  const auto c = span.express(x.value());
  if (!c) return std::nullopt;
  SubfieldExpression out;
  for (std::size_t k = 0; k < c->size(); ++k)
    if (!field.base().is_zero((*c)[k])) out.terms.push_back({(*c)[k], basis.monomials[k]});
  return out;
}

std::optional<Polynomial> express_in_power_basis(const TowerElement& x, const TowerElement& y) {
  const TowerField field = common_tower(x.field(), y.field());
  const Residue yv = field.lift(y.value());
  SpanBasis span(field.base(), field.degree());
  Residue p = field.one();
  while (span.insert(p)) p = field.mul(p, yv);
  const auto c = span.express(field.lift(x.value()));
  if (!c) return std::nullopt;
  const TowerField base = field.at_level(0);
  std::vector<Residue> coeffs;
  for (const auto& s : *c) coeffs.push_back(Residue{s});
  return Polynomial(base, std::move(coeffs));
}

namespace {

Residue substitute(const TowerField& src, const Residue& r, std::size_t level, const std::vector<Residue>& images,
                   const TowerField& target) {
  if (level == 0) return target.from_scalar(r[0]);
  const std::size_t m = src.degree_at(level - 1);
  const std::size_t d = src.generator(level).degree();
  Residue acc = target.zero();
  for (std::size_t k = d; k-- > 0;) {
    const Residue chunk(r.begin() + static_cast<std::ptrdiff_t>(k * m), r.begin() + static_cast<std::ptrdiff_t>((k + 1) * m));
    acc = target.mul(acc, images[level - 1]);
    bool zero = true;
    for (const auto& s : chunk)
      if (!src.base().is_zero(s)) zero = false;
    if (!zero) acc = target.add(acc, substitute(src, chunk, level - 1, images, target));
  }
  return acc;
}

}  // namespace

TowerElement substitute_generators(const TowerElement& x, const std::vector<TowerElement>& images,
                                   const TowerField& target) {
  const TowerField& src = x.field();
  if (images.size() < src.level()) throw Error(ErrorKind::Domain, "missing generator images");
  if (!(src.base() == target.base())) throw Error(ErrorKind::Domain, "domain mismatch: different base fields");
  std::vector<Residue> imgs;
  for (std::size_t l = 0; l < src.level(); ++l) imgs.push_back(images[l].lift_to(target).value());
  return {target, substitute(src, x.value(), src.level(), imgs, target)};
}

Polynomial map_coefficients(const Polynomial& f, const std::vector<TowerElement>& images, const TowerField& target) {
  std::vector<Residue> coeffs;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    coeffs.push_back(substitute_generators(f.coeff(i), images, target).value());
  return Polynomial(target, std::move(coeffs));
}

}  // namespace dcf
