#include "dcf/groups.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "dcf/error.hpp"
#include "dcf/factor.hpp"
#include "json.hpp"

namespace dcf {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels, std::string name)
    : table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
  const std::size_t n = table_.size();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "a group needs at least one element");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorKind::NotAGroup, "multiplication table is not square");
    for (std::size_t v : row)
      if (v >= n) throw Error(ErrorKind::NotAGroup, "multiplication table entry out of range");
  }
  if (!labels_.empty()) {
    if (labels_.size() != n) throw Error(ErrorKind::NotAGroup, "expected one label per element");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) throw Error(ErrorKind::NotAGroup, "element labels are not distinct");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NotAGroup, "multiplication table has no identity");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    if (inverse_[a] == n) throw Error(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table_[a][b];
      for (std::size_t c = 0; c < n; ++c)
        if (table_[ab][c] != table_[a][table_[b][c]])
          throw Error(ErrorKind::NotAGroup, "multiplication table is not associative");
    }
  class_id_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (class_id_[a] != n) continue;
    for (std::size_t x = 0; x < n; ++x) class_id_[conj(a, x)] = a;
  }
}

std::string FiniteGroup::label(std::size_t a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

std::optional<std::size_t> FiniteGroup::find_label(const std::string& l) const {
  for (std::size_t a = 0; a < order(); ++a)
    if (label(a) == l) return a;
  return std::nullopt;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t p = a; p != identity_; p = mul(p, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Subgroup> FiniteGroup::conjugacy_classes() const {
  std::map<std::size_t, Subgroup> by_id;
  for (std::size_t a = 0; a < order(); ++a) by_id[class_id_[a]].push_back(a);
  std::vector<Subgroup> out;
  for (auto& [id, cls] : by_id) out.push_back(std::move(cls));
  return out;
}

// ---------------------------------------------------------------------------
// Constructors.

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Domain, "cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  return FiniteGroup(std::move(t), std::move(labels), "C" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t order) {
  if (order < 4 || order % 2 != 0) throw Error(ErrorKind::Domain, "dihedral group order must be even and at least 4");
  const std::size_t n = order / 2;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < order; ++u) {
    const std::size_t i = u % n, j = u / n;
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t k = v % n, l = v / n;
      const std::size_t r = j == 0 ? (i + k) % n : (i + n - k) % n;
      t[u][v] = r + n * ((j + l) % 2);
    }
    std::string a = i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
    if (j == 1) a += "x";
    labels.push_back(a.empty() ? "e" : a);
  }
  return FiniteGroup(std::move(t), std::move(labels), "D" + std::to_string(order));
}

namespace {

using Perm = std::vector<std::size_t>;

std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size());
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == s) continue;
    out += "(";
    std::size_t c = s;
    bool first = true;
    while (!seen[c]) {
      seen[c] = true;
      if (!first) out += " ";
      out += std::to_string(c + 1);
      first = false;
      c = p[c];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

bool is_even(const Perm& p) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

FiniteGroup permutation_group(const std::vector<Perm>& perms, std::string name) {
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Perm c(perms[a].size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(c);
    }
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(cycle_label(p));
  return FiniteGroup(std::move(t), std::move(labels), std::move(name));
}

std::vector<Perm> permutations(std::size_t n, bool even_only) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    if (!even_only || is_even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
  if (n < 1 || n > 5) throw Error(ErrorKind::Domain, "symmetric groups are supported for 1 <= n <= 5");
  return permutation_group(permutations(n, false), "S" + std::to_string(n));
}

FiniteGroup alternating_group(std::size_t n) {
  if (n < 1 || n > 5) throw Error(ErrorKind::Domain, "alternating groups are supported for 1 <= n <= 5");
  return permutation_group(permutations(n, true), "A" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // Index 2*u + s for the element (-1)^s * unit_u with units 1, i, j, k.
  static const int unit_mul[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const auto& r = unit_mul[a / 2][b / 2];
      const std::size_t s = (a % 2 + b % 2 + static_cast<std::size_t>(r[1])) % 2;
      t[a][b] = 2 * static_cast<std::size_t>(r[0]) + s;
    }
  return FiniteGroup(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const std::size_t n = G.order(), m = H.order();
  if (n * m > group_budget())
    throw Error(ErrorKind::BudgetExceeded, "group order " + std::to_string(n * m) + " exceeds the budget " +
                                               std::to_string(group_budget()));
  std::vector<std::vector<std::size_t>> t(n * m, std::vector<std::size_t>(n * m));
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < n * m; ++u) {
    for (std::size_t v = 0; v < n * m; ++v) t[u][v] = G.mul(u / m, v / m) * m + H.mul(u % m, v % m);
    labels.push_back("(" + G.label(u / m) + "," + H.label(u % m) + ")");
  }
  return FiniteGroup(std::move(t), std::move(labels), G.name() + "x" + H.name());
}

FiniteGroup group_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open group table file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, "invalid JSON in '" + path + "': " + e.what());
  }
  try {
    auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (table.size() > group_budget())
      throw Error(ErrorKind::BudgetExceeded, "group order exceeds the budget " + std::to_string(group_budget()));
    return FiniteGroup(std::move(table), std::move(labels), j.value("name", std::string("table")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, "malformed group table in '" + path + "': " + e.what());
  }
}

namespace {

FiniteGroup make_factor(const std::string& tok) {
  auto number = [&tok]() -> std::size_t {
    if (tok.size() < 2 || !std::all_of(tok.begin() + 1, tok.end(), ::isdigit))
      throw Error(ErrorKind::Parse, "unknown group '" + tok + "'");
    return std::stoul(tok.substr(1));
  };
  if (tok == "Q8") return quaternion_group();
  if (tok.empty()) throw Error(ErrorKind::Parse, "empty group specification");
  switch (tok[0]) {
    case 'C': return cyclic_group(number());
    case 'D': return dihedral_group(number());
    case 'S': return symmetric_group(number());
    case 'A': return alternating_group(number());
    default: throw Error(ErrorKind::Parse, "unknown group '" + tok + "'");
  }
}

}  // namespace

FiniteGroup make_group(const std::string& spec) {
  if (spec.rfind("table:", 0) == 0) return group_from_json_file(spec.substr(6));
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == 'x' || c == 'X') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  FiniteGroup G = make_factor(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) G = direct_product(G, make_factor(parts[i]));
  if (G.order() > group_budget())
    throw Error(ErrorKind::BudgetExceeded, "group order " + std::to_string(G.order()) + " exceeds the budget " +
                                               std::to_string(group_budget()));
  return G;
}

std::size_t group_budget() { return env_limit("DCF_GROUP_BUDGET", 512); }

// ---------------------------------------------------------------------------
// Subgroups.

bool is_subgroup(const FiniteGroup& G, const Subgroup& H) {
  if (H.empty()) return false;
  std::vector<bool> in(G.order());
  for (std::size_t h : H) {
    if (h >= G.order()) return false;
    in[h] = true;
  }
  if (!in[G.identity()]) return false;
  for (std::size_t a : H)
    for (std::size_t b : H)
      if (!in[G.mul(a, G.inv(b))]) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& G, const Subgroup& H) {
  if (!is_subgroup(G, H)) return false;
  std::vector<bool> in(G.order());
  for (std::size_t h : H) in[h] = true;
  for (std::size_t h : H)
    for (std::size_t x = 0; x < G.order(); ++x)
      if (!in[G.conj(h, x)]) return false;
  return true;
}

Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(G.order());
  Subgroup elems{G.identity()};
  in[G.identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t s : gens) {
      const std::size_t p = G.mul(elems[i], s);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup coset(const FiniteGroup& G, std::size_t g, const Subgroup& H) {
  Subgroup out;
  for (std::size_t h : H) out.push_back(G.mul(g, h));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_budget(const FiniteGroup& G) {
  if (G.order() > group_budget())
    throw Error(ErrorKind::BudgetExceeded, "group order " + std::to_string(G.order()) + " exceeds the budget " +
                                               std::to_string(group_budget()));
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Subgroup join(const FiniteGroup& G, const Subgroup& a, const Subgroup& b) {
  std::vector<std::size_t> gens(a);
  gens.insert(gens.end(), b.begin(), b.end());
  return generated_subgroup(G, gens);
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G) {
  check_budget(G);
  std::set<Subgroup> found;
  found.insert(Subgroup{G.identity()});
  for (const auto& cls : G.conjugacy_classes()) found.insert(generated_subgroup(G, cls));
  std::vector<Subgroup> list(found.begin(), found.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Subgroup s = join(G, list[i], list[j]);
      if (found.insert(s).second) list.push_back(std::move(s));
    }
  std::sort(list.begin(), list.end(), subgroup_less);
  return list;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  check_budget(G);
  std::set<Subgroup> found;
  std::vector<Subgroup> list;
  for (std::size_t a = 0; a < G.order(); ++a) {
    Subgroup s = generated_subgroup(G, {a});
    if (found.insert(s).second) list.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Subgroup s = join(G, list[i], list[j]);
      if (found.insert(s).second) list.push_back(std::move(s));
    }
  std::sort(list.begin(), list.end(), subgroup_less);
  return list;
}

// ---------------------------------------------------------------------------
// Non-covering property.

std::optional<std::size_t> ncp_witness(const FiniteGroup& G, const Subgroup& M, const Subgroup& N, std::size_t g) {
  std::vector<bool> hit(G.order());
  for (std::size_t m : M) hit[G.class_ids()[G.mul(g, m)]] = true;
  for (std::size_t h : coset(G, g, N))
    if (!hit[G.class_ids()[h]]) return h;
  return std::nullopt;
}

NcpVerdict has_ncp(const FiniteGroup& G, NcpOptions opts) {
  const auto normals = normal_subgroups(G);
  for (const auto& M : normals) {
    std::vector<std::size_t> reps;
    if (opts.coset_representatives) {
      std::vector<bool> covered(G.order());
      for (std::size_t g = 0; g < G.order(); ++g) {
        if (covered[g]) continue;
        reps.push_back(g);
        for (std::size_t m : M) covered[G.mul(g, m)] = true;
      }
    } else {
      reps.resize(G.order());
      std::iota(reps.begin(), reps.end(), 0);
    }
    for (const auto& N : normals) {
      if (N.size() <= M.size() || !std::includes(N.begin(), N.end(), M.begin(), M.end())) continue;
      for (std::size_t g : reps)
        if (!ncp_witness(G, M, N, g)) return {false, NcpCounterexample{M, N, g}};
    }
  }
  return {true, std::nullopt};
}

bool verify_counterexample(const FiniteGroup& G, const NcpCounterexample& c) {
  if (!is_normal_subgroup(G, c.M) || !is_normal_subgroup(G, c.N)) return false;
  if (c.N.size() <= c.M.size() || !std::includes(c.N.begin(), c.N.end(), c.M.begin(), c.M.end())) return false;
  std::vector<bool> in_gM(G.order());
  for (std::size_t m : c.M) in_gM[G.mul(c.g, m)] = true;
  for (std::size_t h : coset(G, c.g, c.N)) {
    bool covered = false;
    for (std::size_t x = 0; x < G.order() && !covered; ++x) covered = in_gM[G.conj(h, x)];
    if (!covered) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Goursat.

GoursatResult goursat_check(const FiniteGroup& G1, const FiniteGroup& G2, const Subgroup& H) {
  const std::size_t m = G2.order();
  std::vector<bool> in(G1.order() * m);
  for (std::size_t h : H) {
    if (h >= in.size()) throw Error(ErrorKind::NotSubgroup, "element index outside G1 x G2");
    in[h] = true;
  }
  std::vector<bool> p1(G1.order()), p2(m);
  for (std::size_t h : H) {
    p1[h / m] = true;
    p2[h % m] = true;
  }
  if (std::find(p1.begin(), p1.end(), false) != p1.end() || std::find(p2.begin(), p2.end(), false) != p2.end())
    throw Error(ErrorKind::Domain, "projections of the subgroup are not surjective");
  for (std::size_t a : H)
    for (std::size_t b : H) {
      const std::size_t q = G1.mul(a / m, G1.inv(b / m)) * m + G2.mul(a % m, G2.inv(b % m));
      if (!in[q]) throw Error(ErrorKind::NotSubgroup, "the given elements do not form a subgroup of G1 x G2");
    }
  GoursatResult r;
  for (std::size_t a = 0; a < G1.order(); ++a)
    if (in[a * m + G2.identity()]) r.N1.push_back(a);
  for (std::size_t b = 0; b < m; ++b)
    if (in[G1.identity() * m + b]) r.N2.push_back(b);
  // Pair the coset of N1 containing a with the coset of N2 containing b.
  std::map<Subgroup, std::set<Subgroup>> images, preimages;
  for (std::size_t h : H) {
    const Subgroup c1 = coset(G1, h / m, r.N1);
    const Subgroup c2 = coset(G2, h % m, r.N2);
    images[c1].insert(c2);
    preimages[c2].insert(c1);
  }
  bool ok = true;
  for (const auto& [c1, s] : images) {
    ok = ok && s.size() == 1;
    r.pairing.emplace_back(c1, *s.begin());
  }
  for (const auto& [c2, s] : preimages) ok = ok && s.size() == 1;
  // Homomorphism check on coset representatives.
  std::map<std::size_t, std::size_t> phi;
  for (const auto& [c1, c2] : r.pairing)
    for (std::size_t a : c1) phi[a] = c2.front();
  for (std::size_t a = 0; a < G1.order() && ok; ++a)
    for (std::size_t b = 0; b < G1.order() && ok; ++b) {
      const std::size_t lhs = phi[G1.mul(a, b)];
      const std::size_t rhs = G2.mul(phi[a], phi[b]);
      ok = coset(G2, lhs, r.N2) == coset(G2, rhs, r.N2);
    }
  r.is_isomorphism_graph = ok;
  std::sort(r.pairing.begin(), r.pairing.end());
  return r;
}

ProductReport product_ncp_test(const FiniteGroup& G, const FiniteGroup& H) {
  if (G.order() * H.order() > group_budget())
    throw Error(ErrorKind::BudgetExceeded, "product order " + std::to_string(G.order() * H.order()) +
                                               " exceeds the budget " + std::to_string(group_budget()));
  ProductReport r{has_ncp(G), has_ncp(H), has_ncp(direct_product(G, H)), false};
  r.violation = r.g.holds && r.h.holds && !r.product.holds;
  return r;
}

std::string group_label(const FiniteGroup& G) {
  const std::size_t n = G.order();
  if (n > 8) return "";
  if (n == 1) return "C1";
  for (std::size_t a = 0; a < n; ++a)
    if (G.element_order(a) == n) return "C" + std::to_string(n);
  if (G.is_abelian()) {
    if (n == 4) return "C2xC2";
    if (n == 8) return G.exponent() == 4 ? "C4xC2" : "C2xC2xC2";
    return "";
  }
  if (n == 6) return "S3";
  if (n == 8) {
    std::size_t involutions = 0;
    for (std::size_t a = 0; a < n; ++a) involutions += G.element_order(a) == 2;
    return involutions == 1 ? "Q8" : "D8";
  }
  return "";
}

}  // namespace dcf
