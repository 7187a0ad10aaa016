#include "dcf/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

#include "dcf/finite_field.hpp"
#include "dcf/subfield.hpp"
#include "dcf/upoly.hpp"

namespace dcf {

std::size_t env_limit(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) return fallback;
  return static_cast<std::size_t>(n);
}

FactorLimits FactorLimits::from_environment() {
  FactorLimits l;
  l.base_degree = env_limit("DCF_MAX_BASE_DEGREE", l.base_degree);
  l.tower_degree = env_limit("DCF_MAX_TOWER_DEGREE", l.tower_degree);
  l.fpt_degree_x = env_limit("DCF_MAX_FPT_DEGREE_X", l.fpt_degree_x);
  l.fpt_degree_t = env_limit("DCF_MAX_FPT_DEGREE_T", l.fpt_degree_t);
  return l;
}

Polynomial Factorization::expand() const {
  Polynomial acc = Polynomial::constant(unit);
  for (const auto& [g, m] : factors)
    for (unsigned i = 0; i < m; ++i) acc = acc * g;
  return acc;
}

namespace {

using TP = Poly<TowerField>;
using FactorList = std::vector<std::pair<TP, unsigned>>;

std::mt19937_64 make_rng() { return std::mt19937_64(0x9e3779b97f4a7c15ULL); }

bool poly_less(const TowerField& k, const TP& a, const TP& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return k.less(a[i], b[i]);
  }
  return false;
}

TP truncate(const TP& f, std::size_t degree) {
  TP out;
  out.reserve(f.size());
  for (const auto& c : f) out.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(degree));
  return out;
}

TP lift(const TowerField& k, const TP& f) {
  TP out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(k.lift(c));
  return out;
}

// ---------------------------------------------------------------------------
// Q: big-prime modular factorization with subset recombination.

using ZPoly = std::vector<mpz_class>;

mpz_class content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly f) {
  mpz_class c = content(f);
  if (f.back() < 0) c = -c;
  if (c != 0 && c != 1)
    for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return f;
}

std::optional<ZPoly> zdiv(const ZPoly& f, const ZPoly& g) {
  if (f.size() < g.size()) return std::nullopt;
  ZPoly r = f;
  const std::size_t m = g.size();
  ZPoly q(f.size() - m + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    const mpz_class& c = r[i + m - 1];
    if (!mpz_divisible_p(c.get_mpz_t(), g.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), c.get_mpz_t(), g.back().get_mpz_t());
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) r[i + j] -= q[i] * g[j];
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  return q;
}

mpz_class zeval(const ZPoly& f, long x) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

bool plausible_divisor(const ZPoly& f, const ZPoly& g) {
  for (long x : {0L, 1L, -1L}) {
    const mpz_class a = zeval(f, x);
    const mpz_class b = zeval(g, x);
    if (b == 0) {
      if (a != 0) return false;
    } else if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
      return false;
    }
  }
  return true;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct ModularImage {
  std::uint64_t p = 0;
  std::vector<Poly<SmallFp>> factors;
  std::vector<bool> allowed;
};

// Tries several small primes; keeps the one with the fewest modular factors
// and intersects the possible factor degrees over all of them.
ModularImage choose_prime(const ZPoly& F) {
  const std::size_t n = F.size() - 1;
  ModularImage best;
  best.allowed.assign(n + 1, true);
  auto rng = make_rng();
  std::size_t good = 0;
  mpz_class p = 2;
  while (good < 7) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    const std::uint64_t q = p.get_ui();
    if (mpz_divisible_ui_p(F.back().get_mpz_t(), q)) continue;
    const SmallFp k(q);
    Poly<SmallFp> fm;
    for (const auto& c : F) fm.push_back(mpz_fdiv_ui(c.get_mpz_t(), q));
    upoly::trim(k, fm);
    if (upoly::gcd(k, fm, upoly::derivative(k, fm)).size() != 1) continue;
    ++good;
    fm = upoly::monic(k, fm);
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    std::size_t count = 0;
    for (const auto& [g, d] : ff::distinct_degree(k, fm))
      for (std::size_t j = 0; j < (g.size() - 1) / d; ++j, ++count)
        for (std::size_t s = n + 1; s-- > d;)
          if (sums[s - d]) sums[s] = true;
    for (std::size_t s = 0; s <= n; ++s) best.allowed[s] = best.allowed[s] && sums[s];
    if (best.p == 0 || count < best.factors.size()) {
      best.p = q;
      best.factors = ff::split_squarefree(k, fm, rng);
    }
  }
  std::size_t possible = 0;
  for (std::size_t s = 1; s < n; ++s) possible += best.allowed[s];
  if (possible == 0) best.factors.resize(1);
  return best;
}

Poly<BigFp> to_big(const Poly<SmallFp>& f) {
  Poly<BigFp> out;
  for (auto c : f) out.push_back(mpz_class(static_cast<unsigned long>(c)));
  return out;
}

// Lifts f = g*h (mod m), all monic, with s*g + t*h = 1 (mod m), to mod m^2.
void hensel_step(const BigFp& k, const Poly<BigFp>& f, Poly<BigFp>& g, Poly<BigFp>& h, Poly<BigFp>& s,
                 Poly<BigFp>& t) {
  const Poly<BigFp> e = upoly::sub(k, f, upoly::mul(k, g, h));
  auto [q, r] = upoly::divrem(k, upoly::mul(k, s, e), h);
  g = upoly::add(k, g, upoly::add(k, upoly::mul(k, t, e), upoly::mul(k, q, g)));
  h = upoly::add(k, h, r);
  const Poly<BigFp> b = upoly::sub(k, upoly::add(k, upoly::mul(k, s, g), upoly::mul(k, t, h)), {k.one()});
  auto [c, d] = upoly::divrem(k, upoly::mul(k, s, b), h);
  s = upoly::sub(k, s, d);
  t = upoly::sub(k, t, upoly::add(k, upoly::mul(k, t, b), upoly::mul(k, c, g)));
}

// Monic f (mod P) whose reduction mod p is the product of fs; returns the
// lifted monic factors mod P.
void lift_tree(const Poly<BigFp>& f, const std::vector<Poly<SmallFp>>& fs, std::uint64_t p, const mpz_class& P,
               std::vector<Poly<BigFp>>& out) {
  if (fs.size() == 1) {
    out.push_back(f);
    return;
  }
  const SmallFp kp(p);
  const std::size_t mid = fs.size() / 2;
  const std::vector<Poly<SmallFp>> left(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(mid));
  const std::vector<Poly<SmallFp>> right(fs.begin() + static_cast<std::ptrdiff_t>(mid), fs.end());
  Poly<SmallFp> g0{kp.one()}, h0{kp.one()};
  for (const auto& u : left) g0 = upoly::mul(kp, g0, u);
  for (const auto& u : right) h0 = upoly::mul(kp, h0, u);
  auto [one, s0, t0] = upoly::xgcd(kp, g0, h0);
  Poly<BigFp> g = to_big(g0), h = to_big(h0), s = to_big(s0), t = to_big(t0);
  mpz_class m = p;
  while (m < P) {
    m = m * m;
    if (m > P) m = P;
    const BigFp k(m);
    Poly<BigFp> fm;
    for (const auto& c : f) fm.push_back(k.reduce(c));
    upoly::trim(k, fm);
    hensel_step(k, fm, g, h, s, t);
  }
  lift_tree(g, left, p, P, out);
  lift_tree(h, right, p, P, out);
}

std::vector<Poly<BigFp>> hensel_lift(const ZPoly& F, const ModularImage& img, const mpz_class& P) {
  const BigFp k(P);
  Poly<BigFp> f;
  for (const auto& c : F) f.push_back(k.reduce(c));
  f = upoly::scale(k, f, k.inv(f.back()));
  std::vector<Poly<BigFp>> out;
  lift_tree(f, img.factors, img.p, P, out);
  return out;
}

// Irreducible factors of a squarefree primitive integer polynomial with
// positive leading coefficient.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& F) {
  const std::size_t n = F.size() - 1;
  if (n <= 1) return {F};
  mpz_class norm2 = 0;
  for (const auto& c : F) norm2 += c * c;
  mpz_sqrt(norm2.get_mpz_t(), norm2.get_mpz_t());
  norm2 += 1;
  mpz_class bound = abs(F.back()) * norm2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
  const ModularImage img = choose_prime(F);
  if (img.factors.size() == 1) return {F};
  mpz_class P = img.p;
  while (P <= bound) P *= img.p;
  const BigFp k(P);
  std::vector<Poly<BigFp>> mods = hensel_lift(F, img, P);
  std::vector<mpz_class> consts;
  for (const auto& m : mods) consts.push_back(m[0]);
  const mpz_class half = P / 2;
  std::vector<ZPoly> out;
  ZPoly G = F;
  std::size_t s = 1;
  while (2 * s <= mods.size()) {
    bool found = false;
    std::vector<std::size_t> comb(s);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      std::size_t deg = 0;
      for (std::size_t i : comb) deg += mods[i].size() - 1;
      if (!img.allowed[deg]) continue;
      if (G[0] != 0) {
        mpz_class c = k.reduce(G.back());
        for (std::size_t i : comb) c = k.reduce(c * consts[i]);
        if (c > half) c -= P;
        const mpz_class target = G.back() * G[0];
        if (c == 0 || !mpz_divisible_p(target.get_mpz_t(), c.get_mpz_t())) continue;
      }
      Poly<BigFp> prod{k.reduce(G.back())};
      for (std::size_t i : comb) prod = upoly::mul(k, prod, mods[i]);
      ZPoly g;
      for (const auto& c : prod) g.push_back(c > half ? c - P : c);
      g = primitive(std::move(g));
      if (!plausible_divisor(G, g)) continue;
      if (auto q = zdiv(G, g)) {
        out.push_back(g);
        G = std::move(*q);
        std::vector<Poly<BigFp>> rest;
        std::vector<mpz_class> rest_consts;
        for (std::size_t i = 0; i < mods.size(); ++i)
          if (std::find(comb.begin(), comb.end(), i) == comb.end()) {
            rest.push_back(std::move(mods[i]));
            rest_consts.push_back(consts[i]);
          }
        mods = std::move(rest);
        consts = std::move(rest_consts);
        found = true;
        break;
      }
    } while (next_combination(comb, mods.size()));
    if (!found) ++s;
  }
  if (G.size() > 1) out.push_back(G);
  return out;
}

std::vector<TP> factor_squarefree_q(const TowerField& K, const TP& f) {
  mpz_class den = 1;
  for (const auto& c : f) {
    const mpq_class& q = std::get<mpq_class>(c[0]);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  ZPoly F;
  for (const auto& c : f) {
    const mpq_class q = std::get<mpq_class>(c[0]) * den;
    F.push_back(q.get_num());
  }
  F = primitive(std::move(F));
  std::vector<TP> out;
  for (const auto& g : factor_squarefree_z(F)) {
    TP h;
    for (const auto& c : g) {
      mpq_class q(c, g.back());
      q.canonicalize();
      h.push_back(Residue{Scalar(q)});
    }
    out.push_back(std::move(h));
  }
  (void)K;
  return out;
}

// ---------------------------------------------------------------------------
// F_p(t): root search on the cleared polynomial in F_p[t][x].

using FpPoly = std::vector<std::uint64_t>;

std::vector<FpPoly> monic_divisors(const SmallFp& k, const FpPoly& a) {
  std::vector<FpPoly> divs{{1}};
  auto rng = make_rng();
  for (const auto& [g, m] : ff::factor_monic(k, upoly::monic(k, a), rng)) {
    std::vector<FpPoly> next;
    for (const auto& d : divs) {
      FpPoly cur = d;
      next.push_back(cur);
      for (unsigned e = 0; e < m; ++e) {
        cur = upoly::mul(k, cur, g);
        next.push_back(cur);
      }
    }
    divs = std::move(next);
  }
  return divs;
}

std::vector<TP> factor_squarefree_fpt(const TowerField& K, const TP& f) {
  const BaseField& B = K.base();
  const SmallFp k(B.p());
  const FactorLimits lim = FactorLimits::from_environment();
  if (f.size() <= 2) return {f};
  FpPoly L{1};
  for (const auto& c : f) {
    const auto& r = std::get<RatFunc>(c[0]);
    L = upoly::div_exact(k, upoly::mul(k, L, r.den), upoly::gcd(k, L, r.den));
  }
  std::vector<FpPoly> F;
  for (const auto& c : f) {
    const auto& r = std::get<RatFunc>(c[0]);
    F.push_back(upoly::mul(k, r.num, upoly::div_exact(k, L, r.den)));
  }
  std::size_t deg_t = 0;
  for (const auto& c : F)
    if (!c.empty()) deg_t = std::max(deg_t, c.size() - 1);
  const std::size_t deg_x = F.size() - 1;
  if (deg_x > lim.fpt_degree_x || deg_t > lim.fpt_degree_t)
    throw Error(ErrorKind::CapExceeded, "degree cap exceeded over " + B.name() + ": separable part has deg_x " +
                                            std::to_string(deg_x) + ", deg_t " + std::to_string(deg_t) +
                                            " (limits " + std::to_string(lim.fpt_degree_x) + ", " +
                                            std::to_string(lim.fpt_degree_t) + ")");
  if (K.is_zero(f[0])) {
    TP rest(f.begin() + 1, f.end());
    std::vector<TP> out{{K.zero(), K.one()}};
    for (auto& g : factor_squarefree_fpt(K, rest)) out.push_back(std::move(g));
    return out;
  }
  const auto us = monic_divisors(k, F.front());
  const auto vs = monic_divisors(k, F.back());
  for (const auto& v : vs) {
    for (const auto& u : us) {
      if (upoly::gcd(k, u, v).size() != 1) continue;
      for (std::uint64_t c = 1; c < B.p(); ++c) {
        const Scalar root = B.ratfunc(upoly::scale(k, u, c), v);
        const Residue r{root};
        if (!K.is_zero(upoly::eval(K, f, r))) continue;
        const TP lin = upoly::x_minus(K, r);
        std::vector<TP> out{lin};
        for (auto& g : factor_squarefree_fpt(K, upoly::div_exact(K, f, lin))) out.push_back(std::move(g));
        return out;
      }
    }
  }
  if (deg_x <= 3) return {f};
  throw Error(ErrorKind::CapExceeded, "degree cap exceeded: factoring over " + B.name() +
                                          " without a linear factor is limited to degree 3");
}

// ---------------------------------------------------------------------------
// Towers.

std::vector<TP> factor_separable(const TowerField& K, const TP& f);

// Norm of g from K = P(a) down to P, as the determinant of multiplication by
// g on the P[x]-basis 1, a, ..., a^(d-1).
TP norm(const TowerField& K, const TP& g) {
  const TowerField P = K.parent();
  const std::size_t m = P.degree();
  const std::size_t d = K.generator(K.level()).degree();
  auto chunk = [m](const Residue& r, std::size_t i) {
    return Residue(r.begin() + static_cast<std::ptrdiff_t>(i * m), r.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
  };
  std::vector<TP> G(d);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) {
      G[j].resize(g.size(), P.zero());
      G[j][i] = chunk(g[i], j);
    }
  for (auto& h : G) upoly::trim(P, h);
  const Residue a = K.generator_element(K.level());
  std::vector<Residue> apow(2 * d - 1);
  apow[0] = K.one();
  for (std::size_t j = 1; j < apow.size(); ++j) apow[j] = K.mul(apow[j - 1], a);
  std::vector<std::vector<TP>> M(d, std::vector<TP>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j < d; ++j) {
      TP acc;
      for (std::size_t k = 0; k < d; ++k) {
        const Residue c = chunk(apow[k + j], r);
        if (P.is_zero(c) || G[k].empty()) continue;
        acc = upoly::add(P, acc, upoly::scale(P, G[k], c));
      }
      M[r][j] = std::move(acc);
    }
  TP prev{P.one()};
  bool negate = false;
  for (std::size_t k = 0; k < d; ++k) {
    if (M[k][k].empty()) {
      std::size_t i = k + 1;
      while (i < d && M[i][k].empty()) ++i;
      if (i == d) return {};
      std::swap(M[i], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        TP num = upoly::sub(P, upoly::mul(P, M[k][k], M[i][j]), upoly::mul(P, M[i][k], M[k][j]));
        M[i][j] = upoly::div_exact(P, num, prev);
      }
    }
    prev = M[k][k];
  }
  TP det = M[d - 1][d - 1];
  if (negate) det = upoly::neg(P, det);
  return upoly::monic(P, det);
}

Residue shift_value(const TowerField& K, std::size_t idx) {
  const BaseField& B = K.base();
  if (B.kind() != BaseField::Kind::RationalFunctions) return K.from_int(static_cast<long>(idx));
  FpPoly digits;
  for (std::size_t n = idx; n > 0; n /= B.p()) digits.push_back(n % B.p());
  return K.from_scalar(B.ratfunc(digits, {1}));
}

// Factors f, squarefree and separable with coefficients using the top
// generator of K.
std::vector<TP> factor_top(const TowerField& K, const TP& f) {
  const Generator& gen = K.generator(K.level());
  const TowerField P = K.parent();
  if (gen.insep_exp > 0) {
    // x -> x^(p^e) maps K isomorphically into P; factor the image there.
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), K.characteristic(), gen.insep_exp);
    TP F;
    for (const auto& c : f) F.push_back(K.pow(c, q));
    std::vector<TP> out;
    for (const auto& g : factor_separable(P, truncate(F, P.degree()))) {
      TP h;
      for (const auto& c : g) {
        Residue r = K.lift(c);
        for (unsigned e = 0; e < gen.insep_exp; ++e) {
          auto root = K.pth_root(r);
          if (!root) throw Error(ErrorKind::Internal, "missing p-th root while pulling back a factor");
          r = std::move(*root);
        }
        h.push_back(std::move(r));
      }
      out.push_back(std::move(h));
    }
    return out;
  }
  const Residue a = K.generator_element(K.level());
  for (std::size_t idx = 0; idx < 4096; ++idx) {
    const Residue sa = K.mul(shift_value(K, idx), a);
    const TP g = idx == 0 ? f : upoly::taylor_shift(K, f, K.neg(sa));
    const TP N = norm(K, g);
    if (upoly::gcd(P, N, upoly::derivative(P, N)).size() != 1) continue;
    const std::vector<TP> parts = factor_separable(P, N);
    if (parts.size() == 1) return {f};
    std::vector<TP> out;
    for (const auto& Ni : parts) {
      const TP h = upoly::gcd(K, g, lift(K, Ni));
      out.push_back(idx == 0 ? h : upoly::taylor_shift(K, h, sa));
    }
    return out;
  }
  throw Error(ErrorKind::Internal, "no squarefree norm found");
}

// Factors h, irreducible over the level below K, over K.
std::vector<TP> refine(const TowerField& K, const TP& h) {
  const Generator& gen = K.generator(K.level());
  if (gen.insep_exp > 0 || std::gcd(h.size() - 1, gen.degree()) == 1) return {h};
  return factor_top(K, h);
}

std::vector<TP> factor_separable(const TowerField& K, const TP& f) {
  if (f.size() <= 2) return {f};
  if (K.is_finite()) {
    auto rng = make_rng();
    return ff::split_squarefree(K, f, rng);
  }
  std::size_t l0 = 0;
  for (const auto& c : f) l0 = std::max(l0, K.level_of(c));
  if (l0 < K.level()) {
    const TowerField sub = K.at_level(l0);
    std::vector<TP> parts = factor_separable(sub, truncate(f, sub.degree()));
    for (std::size_t l = l0 + 1; l <= K.level(); ++l) {
      const TowerField Kl = K.at_level(l);
      std::vector<TP> next;
      for (const auto& h : parts)
        for (auto& g : refine(Kl, lift(Kl, h))) next.push_back(std::move(g));
      parts = std::move(next);
    }
    for (auto& h : parts) h = lift(K, h);
    return parts;
  }
  if (K.level() == 0) {
    if (K.base().kind() == BaseField::Kind::Rationals) return factor_squarefree_q(K, f);
    return factor_squarefree_fpt(K, f);
  }
  return factor_top(K, f);
}

void merge(const TowerField& K, FactorList& acc, const TP& g, unsigned m) { ff::merge_factor(K, acc, g, m); }

FactorList factor_monic(const TowerField& K, const TP& f) {
  FactorList acc;
  if (f.size() <= 1) return acc;
  if (f.size() == 2) {
    acc.emplace_back(f, 1);
    return acc;
  }
  const TP df = upoly::derivative(K, f);
  if (df.empty()) {
    const unsigned long p = K.characteristic();
    TP G;
    for (std::size_t i = 0; i < f.size(); i += p) G.push_back(f[i]);
    for (const auto& [g, m] : factor_monic(K, G)) {
      TP h;
      bool roots = true;
      for (const auto& c : g) {
        auto r = K.pth_root(c);
        if (!r) {
          roots = false;
          break;
        }
        h.push_back(std::move(*r));
      }
      if (roots) {
        merge(K, acc, h, m * static_cast<unsigned>(p));
      } else {
        TP gx((g.size() - 1) * p + 1, K.zero());
        for (std::size_t i = 0; i < g.size(); ++i) gx[i * p] = g[i];
        merge(K, acc, gx, m);
      }
    }
    return acc;
  }
  const TP c = upoly::gcd(K, f, df);
  if (c.size() == 1) {
    for (const auto& g : factor_separable(K, f)) merge(K, acc, upoly::monic(K, g), 1);
    return acc;
  }
  for (const auto& [g, m] : factor_monic(K, c)) merge(K, acc, g, m);
  for (const auto& [g, m] : factor_monic(K, upoly::div_exact(K, f, c))) merge(K, acc, g, m);
  return acc;
}

}  // namespace

Factorization factor(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  const TowerField& K = f.field();
  const FactorLimits lim = FactorLimits::from_environment();
  const std::size_t n = *f.degree();
  if (K.level() == 0 && K.base().kind() != BaseField::Kind::RationalFunctions && n > lim.base_degree)
    throw Error(ErrorKind::CapExceeded, "degree cap exceeded: degree " + std::to_string(n) + " over " + K.base().name() +
                                            " (limit " + std::to_string(lim.base_degree) + ")");
  if (K.level() > 0 && n > lim.tower_degree)
    throw Error(ErrorKind::CapExceeded, "degree cap exceeded: degree " + std::to_string(n) + " over a tower (limit " +
                                            std::to_string(lim.tower_degree) + ")");
  Factorization out{f.leading(), {}};
  FactorList fl = factor_monic(K, upoly::monic(K, f.coeffs()));
  std::sort(fl.begin(), fl.end(), [&K](const auto& a, const auto& b) { return poly_less(K, a.first, b.first); });
  for (auto& [g, m] : fl) out.factors.emplace_back(Polynomial(K, std::move(g)), m);
  return out;
}

Factorization factor(const Polynomial& f, const TowerField& F) {
  if (!f.field().is_prefix_of(F)) throw Error(ErrorKind::Domain, "domain mismatch: polynomial is not over the field");
  return factor(f.lift_to(F));
}

bool is_reducible(const Polynomial& f, const TowerField& F) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  if (*f.degree() < 1) throw Error(ErrorKind::Domain, "reducibility needs a polynomial of degree at least 1");
  const Factorization r = factor(f, F);
  return !(r.factors.size() == 1 && r.factors[0].second == 1);
}

bool is_separable(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  return *gcd(f, f.derivative()).degree() == 0;
}

bool is_separable_element(const TowerElement& x, const std::vector<TowerElement>& S) {
  const Polynomial p = minpoly(x, S);
  return !p.derivative().eval(x).is_zero();
}

bool sep_closure_member(const TowerElement& x, const TowerField& base) {
  if (!base.is_prefix_of(x.field())) throw Error(ErrorKind::Domain, "domain mismatch: element is not over the base");
  return is_separable_element(x, level_generators(x.field(), base.level()));
}

TowerField extend_tower(const TowerField& t, const Polynomial& m, const std::string& name,
                        std::optional<unsigned> insep_exp) {
  if (!m.field().is_prefix_of(t)) throw Error(ErrorKind::Domain, "domain mismatch: minimal polynomial is not over the tower");
  const Polynomial ml = m.lift_to(t);
  if (ml.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  if (!ml.is_monic()) throw Error(ErrorKind::NotMonic, "minimal polynomial " + ml.to_string() + " is not monic");
  if (*ml.degree() < 2) throw Error(ErrorKind::Domain, "minimal polynomial must have degree at least 2");
  if (name.empty() || name == "x" || name == "t" || !std::isalpha(static_cast<unsigned char>(name[0])) ||
      !std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
    throw Error(ErrorKind::Domain, "invalid generator name '" + name + "'");
  if (t.find_generator(name) > 0) throw Error(ErrorKind::Domain, "generator name '" + name + "' already in use");
  if (is_reducible(ml, t)) throw Error(ErrorKind::Reducible, "minimal polynomial " + ml.to_string() + " is reducible");
  const auto k = purely_inseparable_exponent(ml);
  if (!k && ml.derivative().is_zero())
    throw Error(ErrorKind::Unsupported, "inseparable minimal polynomial not of the form X^(p^k) - a");
  if (insep_exp && *insep_exp != k.value_or(0))
    throw Error(ErrorKind::Domain, "declared inseparable exponent does not match the minimal polynomial");
  return t.adjoin_unchecked(Generator{name, ml.coeffs(), k.value_or(0)});
}

}  // namespace dcf
