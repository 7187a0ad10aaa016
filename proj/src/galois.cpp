#include "dcf/galois.hpp"

#include <algorithm>

#include "dcf/error.hpp"
#include "dcf/factor.hpp"
#include "dcf/linalg.hpp"
#include "dcf/subfield.hpp"

namespace dcf {

namespace {

std::vector<TowerElement> lifted(const std::vector<TowerElement>& xs, const TowerField& E) {
  std::vector<TowerElement> out;
  for (const auto& x : xs) {
    if (!x.field().is_prefix_of(E)) throw Error(ErrorKind::Domain, "element " + x.to_string() + " lies outside the field");
    out.push_back(x.lift_to(E));
  }
  return out;
}

std::vector<TowerElement> with_base(const TowerField& E, std::size_t base_level, const std::vector<TowerElement>& gens) {
  std::vector<TowerElement> S = level_generators(E, base_level);
  S.insert(S.end(), gens.begin(), gens.end());
  return S;
}

std::size_t span_degree(const TowerField& E, const std::vector<TowerElement>& S) {
  return subfield_basis(E, S).vectors.size();
}

TowerElement combination(const TowerField& E, const std::vector<TowerElement>& gens, const TowerElement& c) {
  TowerElement y = TowerElement::from_int(E, 0);
  TowerElement power = TowerElement::from_int(E, 1);
  for (const auto& g : gens) {
    y = y + power * g;
    power = power * c;
  }
  return y;
}

// Element of the base-field span given by coordinates in base-p digits of k.
TowerElement enumerated_element(const TowerField& E, const SubfieldBasis& basis, unsigned long k) {
  const unsigned long p = E.characteristic();
  Residue v = E.zero();
  for (const auto& vec : basis.vectors) {
    const long digit = static_cast<long>(k % p);
    k /= p;
    const Scalar s = E.base().from_int(digit);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = E.base().add(v[i], E.base().mul(s, vec[i]));
  }
  return TowerElement(E, v);
}

}  // namespace

PrimitiveElement primitive_element_of(const TowerField& E, const std::vector<TowerElement>& gens0,
                                      std::size_t base_level) {
  if (base_level > E.level()) throw Error(ErrorKind::Domain, "base level exceeds the tower");
  const std::vector<TowerElement> gens = lifted(gens0, E);
  const std::size_t tdeg = E.degree_at(base_level);
  const std::size_t target = span_degree(E, with_base(E, base_level, gens)) / tdeg;
  for (const auto& g : gens)
    if (!sep_closure_member(g, E.at_level(base_level)))
      throw Error(ErrorKind::NotSeparable, "primitive elements need a separable extension; " + g.to_string() +
                                               " is inseparable");
  auto attempt = [&](const TowerElement& y) -> std::optional<PrimitiveElement> {
    Polynomial m = minpoly_over_level(y, base_level);
    if (*m.degree() == target) return PrimitiveElement{y, std::move(m)};
    return std::nullopt;
  };
  if (gens.empty()) return *attempt(TowerElement::from_int(E, 0));
  if (gens.size() == 1)
    if (auto r = attempt(gens[0])) return *r;
  const unsigned long p = E.characteristic();
  const unsigned long int_tries = p == 0 ? 100000 : p;
  for (unsigned long c = 1; c < int_tries; ++c)
    if (auto r = attempt(combination(E, gens, TowerElement::from_int(E, static_cast<long>(c))))) return *r;
  if (E.base().kind() == BaseField::Kind::RationalFunctions) {
    const TowerElement t(E, E.from_scalar(E.base().t()));
    TowerElement c = t;
    for (int k = 0; k < 64; ++k, c = c * t)
      if (auto r = attempt(combination(E, gens, c))) return *r;
  } else if (p != 0) {
    // Finite field: search the subfield's elements in order.
    const SubfieldBasis basis = subfield_basis(E, with_base(E, base_level, gens));
    for (unsigned long k = 1;; ++k) {
      if (auto r = attempt(enumerated_element(E, basis, k))) return *r;
      if (k > 1000000) break;
    }
  }
  throw Error(ErrorKind::Internal, "no primitive element found");
}

PrimitiveElement primitive_element(const TowerField& E, std::size_t base_level) {
  if (base_level > E.level()) throw Error(ErrorKind::Domain, "base level exceeds the tower");
  std::vector<TowerElement> gens;
  for (std::size_t l = base_level + 1; l <= E.level(); ++l) gens.push_back(TowerElement::generator(E, l));
  return primitive_element_of(E, gens, base_level);
}

bool is_normal_over(const TowerField& E, std::size_t base_level) {
  for (std::size_t l = base_level + 1; l <= E.level(); ++l) {
    const Polynomial m = minpoly_over_level(TowerElement::generator(E, l), base_level);
    for (const auto& [g, e] : factor(m, E).factors)
      if (*g.degree() != 1) return false;
  }
  return true;
}

TowerElement GaloisData::apply(std::size_t j, const TowerElement& x) const {
  if (!x.field().is_prefix_of(field)) throw Error(ErrorKind::Domain, "element lies outside the field");
  return substitute_generators(x.lift_to(field), action.at(j), field);
}

GaloisData galois_group(const TowerField& E, std::size_t base_level) {
  if (base_level > E.level()) throw Error(ErrorKind::Domain, "base level exceeds the tower");
  for (std::size_t l = base_level + 1; l <= E.level(); ++l)
    if (E.generator(l).insep_exp > 0 ||
        !is_separable(Polynomial(E.at_level(l - 1), E.generator(l).minpoly)))
      throw Error(ErrorKind::NotSeparable, "the extension is not separable (generator " + E.generator(l).name + ")");
  if (!is_normal_over(E, base_level)) throw Error(ErrorKind::NotNormal, "the field is not normal over its base");

  PrimitiveElement prim = primitive_element(E, base_level);
  const std::size_t d = *prim.minpoly.degree();
  std::vector<TowerElement> conj{prim.element};
  for (const auto& [g, e] : factor(prim.minpoly, E).factors) {
    const TowerElement r = -g.coeff(0);
    if (!(r == prim.element)) conj.push_back(r);
  }
  if (conj.size() != d) throw Error(ErrorKind::Internal, "primitive element does not split in a normal field");

  // Coordinates of each generator above the base in the basis b_m * y^k,
  // with b_m running over the monomial basis of the base prefix.
  const std::size_t tdeg = E.degree_at(base_level);
  SpanBasis span(E.base(), E.degree());
  std::vector<std::pair<std::size_t, std::size_t>> index;  // (k, m)
  {
    TowerElement yk = TowerElement::from_int(E, 1);
    for (std::size_t k = 0; k < d; ++k, yk = yk * prim.element)
      for (std::size_t m = 0; m < tdeg; ++m) {
        Residue b = E.zero();
        b[m] = E.base().one();
        if (!span.insert((TowerElement(E, b) * yk).value()))
          throw Error(ErrorKind::Internal, "power basis is dependent");
        index.emplace_back(k, m);
      }
  }
  std::vector<ScalarVec> coords(E.level() + 1);
  for (std::size_t l = base_level + 1; l <= E.level(); ++l) {
    auto c = span.express(E.generator_element(l));
    if (!c) throw Error(ErrorKind::Internal, "generator outside the span of its primitive element");
    coords[l] = std::move(*c);
  }

  std::vector<std::vector<TowerElement>> action;
  for (const auto& yj : conj) {
    std::vector<TowerElement> powers{TowerElement::from_int(E, 1)};
    for (std::size_t k = 1; k < d; ++k) powers.push_back(powers.back() * yj);
    std::vector<TowerElement> images;
    for (std::size_t l = 1; l <= E.level(); ++l) {
      if (l <= base_level) {
        images.push_back(TowerElement::generator(E, l));
        continue;
      }
      Residue acc = E.zero();
      for (std::size_t i = 0; i < index.size(); ++i) {
        if (E.base().is_zero(coords[l][i])) continue;
        const auto [k, m] = index[i];
        Residue term = powers[k].value();
        // b_m * term, with b_m a monomial of the base prefix.
        Residue b = E.zero();
        b[m] = coords[l][i];
        acc = E.add(acc, E.mul(b, term));
      }
      images.emplace_back(E, std::move(acc));
    }
    action.push_back(std::move(images));
  }

  const std::size_t n = conj.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const TowerElement img = substitute_generators(conj[k], action[j], E);
      const auto it = std::find(conj.begin(), conj.end(), img);
      if (it == conj.end()) throw Error(ErrorKind::Internal, "composition leaves the conjugate set");
      table[j][k] = static_cast<std::size_t>(it - conj.begin());
    }
  std::vector<std::string> labels{"e"};
  for (std::size_t j = 1; j < n; ++j) labels.push_back("s" + std::to_string(j));
  FiniteGroup group(std::move(table), std::move(labels), "Gal");
  return GaloisData{E, base_level, std::move(prim), std::move(conj), std::move(group), std::move(action)};
}

Subgroup fixing_subgroup(const GaloisData& D, const std::vector<TowerElement>& gens0) {
  const auto gens = lifted(gens0, D.field);
  Subgroup out;
  for (std::size_t j = 0; j < D.group.order(); ++j) {
    bool fixes = true;
    for (const auto& z : gens)
      if (!(D.apply(j, z) == z)) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(j);
  }
  return out;
}

std::size_t subfield_degree(const GaloisData& D, const std::vector<TowerElement>& gens) {
  return span_degree(D.field, with_base(D.field, D.base_level, lifted(gens, D.field))) /
         D.field.degree_at(D.base_level);
}

namespace {

// Largest s with s^2 | n, by trial division.
mpz_class square_part(mpz_class n) {
  if (n < 0) n = -n;
  mpz_class s = 1;
  for (mpz_class q = 2; q * q <= n && q < 1000000; ++q)
    while (n % (q * q) == 0) {
      n /= q * q;
      s *= q;
    }
  return s;
}

TowerElement quadratic_normal_form(const TowerElement& z) {
  const TowerField& E = z.field();
  const Polynomial m = minpoly_over_level(z, 0);
  const TowerElement b = m.coeff(1).lift_to(E);
  TowerElement w = z + b / TowerElement::from_int(E, 2);
  if (E.base().kind() != BaseField::Kind::Rationals) return w;
  const Residue sq = (w * w).value();
  const mpq_class delta = std::get<mpq_class>(sq[0]);
  const mpz_class den = delta.get_den();
  const mpz_class s = square_part(delta.get_num() * den);
  const Scalar scale = E.base().from_mpq(mpq_class(den, s));
  return TowerElement(E, E.from_scalar(scale)) * w;
}

}  // namespace

std::vector<TowerElement> fixed_field(const GaloisData& D, const Subgroup& H) {
  if (!is_subgroup(D.group, H)) throw Error(ErrorKind::NotSubgroup, "the given elements do not form a subgroup");
  const TowerField& E = D.field;
  const std::size_t n = E.degree();
  std::vector<ScalarVec> rows;
  for (std::size_t j : H) {
    if (j == D.group.identity()) continue;
    std::vector<Residue> cols;
    for (std::size_t i = 0; i < n; ++i) {
      Residue e = E.zero();
      e[i] = E.base().one();
      cols.push_back(E.sub(D.apply(j, TowerElement(E, e)).value(), e));
    }
    for (std::size_t r = 0; r < n; ++r) {
      ScalarVec row;
      for (std::size_t i = 0; i < n; ++i) row.push_back(cols[i][r]);
      rows.push_back(std::move(row));
    }
  }
  const auto ker = rows.empty() ? std::vector<ScalarVec>{} : kernel(E.base(), rows, n);
  std::vector<TowerElement> gens;
  if (rows.empty()) {
    for (std::size_t l = D.base_level + 1; l <= E.level(); ++l) gens.push_back(TowerElement::generator(E, l));
  } else {
    for (const auto& v : ker) {
      const TowerElement z(E, Residue(v.begin(), v.end()));
      if (!subfield_member(z, with_base(E, D.base_level, gens))) gens.push_back(z);
    }
  }
  if (D.base_level == 0 && E.characteristic() != 2 && gens.size() == 1 && subfield_degree(D, gens) == 2)
    gens[0] = quadratic_normal_form(gens[0]);
  return gens;
}

NormalChain normal_chain(const TowerField& T, const Polynomial& f, ClosurePresentation* closure) {
  if (!is_normal_over(T, 0)) throw Error(ErrorKind::NotNormal, "the starting field is not normal over its base");
  std::optional<ClosurePresentation> local;
  if (!closure) {
    local.emplace(T);
    closure = &*local;
  }
  const TowerField Tc = closure->ensure_contains(T);
  if (!f.field().is_prefix_of(Tc) && !(f.field().level() <= Tc.level() &&
                                       Tc.at_level(f.field().level()).same_structure(f.field())))
    throw Error(ErrorKind::Domain, "the polynomial is not over the starting field");
  const Polynomial fc(Tc.at_level(f.field().level()), f.coeffs());
  const TowerElement x = closure->adjoin_root(fc);
  const Polynomial m = minpoly_over_level(x, 0);
  closure->roots(m);
  const TowerField E = closure->field();
  NormalChain chain{E, galois_group(E, 0), {}};
  const GaloisData& D = chain.galois;
  Subgroup current = fixing_subgroup(D, level_generators(E, Tc.level()));
  const auto normals = normal_subgroups(D.group);
  auto strictly_inside = [](const Subgroup& a, const Subgroup& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  while (current.size() > 1) {
    std::vector<Subgroup> below;
    for (const auto& K : normals)
      if (strictly_inside(K, current)) below.push_back(K);
    const Subgroup* next = nullptr;
    for (const auto& K : below) {
      const bool maximal =
          std::none_of(below.begin(), below.end(), [&](const Subgroup& L) { return strictly_inside(K, L); });
      if (maximal) {
        next = &K;
        break;
      }
    }
    std::vector<TowerElement> gens = fixed_field(D, *next);
    PrimitiveElement prim = primitive_element_of(E, gens, 0);
    const std::size_t degree = subfield_degree(D, gens);
    chain.steps.push_back(ChainStep{*next, std::move(gens), std::move(prim), degree});
    current = *next;
  }
  return chain;
}

IncompatibleResult incompatible_extension(const GaloisData& D, const std::vector<TowerElement>& K1,
                                          const std::vector<TowerElement>& sigma, const std::vector<TowerElement>& K2,
                                          const std::vector<TowerElement>& tau, IncompatibleOptions opts) {
  if (K1.size() != sigma.size()) throw Error(ErrorKind::Domain, "sigma needs one image per generator of K1");
  if (K2.size() != tau.size()) throw Error(ErrorKind::Domain, "tau needs one image per generator of K2");
  const FiniteGroup& G = D.group;
  IncompatibleResult r;
  r.N = fixing_subgroup(D, K1);
  r.M = fixing_subgroup(D, K2);
  if (!is_normal_subgroup(G, r.N)) throw Error(ErrorKind::NotNormal, "K1 is not normal over the base");
  if (!is_normal_subgroup(G, r.M)) throw Error(ErrorKind::NotNormal, "K2 is not normal over the base");
  if (std::includes(r.M.begin(), r.M.end(), r.N.begin(), r.N.end()))
    throw Error(ErrorKind::Domain, "K2 is contained in K1");
  auto extending = [&](const std::vector<TowerElement>& K, const std::vector<TowerElement>& images,
                       const char* what) -> std::size_t {
    const auto Kl = lifted(K, D.field);
    const auto Il = lifted(images, D.field);
    for (std::size_t j = 0; j < G.order(); ++j) {
      bool ok = true;
      for (std::size_t i = 0; i < Kl.size() && ok; ++i) ok = D.apply(j, Kl[i]) == Il[i];
      if (ok) return j;
    }
    throw Error(ErrorKind::NotAutomorphism, std::string(what) + " is not an automorphism of its field fixing the base");
  };
  r.g1 = extending(K1, sigma, "sigma");
  r.g2 = extending(K2, tau, "tau");
  std::vector<bool> in_g2M(G.order());
  for (std::size_t m : r.M) in_g2M[G.mul(r.g2, m)] = true;
  Subgroup candidates = coset(G, r.g1, r.N);
  if (opts.try_g1_first) {
    candidates.erase(std::find(candidates.begin(), candidates.end(), r.g1));
    candidates.insert(candidates.begin(), r.g1);
  }
  for (std::size_t h : candidates) {
    bool avoids = true;
    for (std::size_t x = 0; x < G.order() && avoids; ++x) avoids = !in_g2M[G.conj(h, x)];
    if (avoids) {
      r.found = true;
      r.h = h;
      r.alpha = D.action[h];
      return r;
    }
  }
  return r;
}

}  // namespace dcf
