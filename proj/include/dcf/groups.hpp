#pragma once

// Finite groups as multiplication tables, with exhaustive structure queries
// and the non-covering property.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dcf {

// Sorted element indices.
using Subgroup = std::vector<std::size_t>;

class FiniteGroup {
 public:
  // Verifies the group axioms; labels (if given) must be distinct.
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {}, std::string name = "");

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  // x^-1 h x
  std::size_t conj(std::size_t h, std::size_t x) const { return mul(inv(x), mul(h, x)); }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::string& name() const { return name_; }
  std::string label(std::size_t a) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find_label(const std::string& l) const;

  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;
  bool is_abelian() const;
  // Conjugacy class index of each element; classes numbered by first element.
  const std::vector<std::size_t>& class_ids() const { return class_id_; }
  std::vector<Subgroup> conjugacy_classes() const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> labels_;
  std::string name_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> class_id_;
};

FiniteGroup cyclic_group(std::size_t n);
// Dihedral group of the given order 2n; element a^i x^j has index i + n*j.
FiniteGroup dihedral_group(std::size_t order);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
FiniteGroup quaternion_group();
// (a, b) has index a*|H| + b.
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);
// Parses C4, S3, A4, D8, Q8, products such as C2xQ8, or table:<file.json>.
FiniteGroup make_group(const std::string& spec);
FiniteGroup group_from_json_file(const std::string& path);

// Exhaustive-search budget on group orders (DCF_GROUP_BUDGET, default 512).
std::size_t group_budget();

bool is_subgroup(const FiniteGroup& G, const Subgroup& H);
bool is_normal_subgroup(const FiniteGroup& G, const Subgroup& H);
Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<std::size_t>& gens);
// Normal subgroups sorted by size, then lexicographically.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G);
// All subgroups (small groups only), same order.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);
// The set gH as a sorted list.
Subgroup coset(const FiniteGroup& G, std::size_t g, const Subgroup& H);

struct NcpCounterexample {
  Subgroup M;
  Subgroup N;
  std::size_t g;
};

struct NcpVerdict {
  bool holds;
  std::optional<NcpCounterexample> counterexample;
};

struct NcpOptions {
  // Only try one g per coset of M (g and gm give the same condition).
  bool coset_representatives = true;
};

// Is there h in gN whose conjugacy class avoids gM?
std::optional<std::size_t> ncp_witness(const FiniteGroup& G, const Subgroup& M, const Subgroup& N, std::size_t g);
NcpVerdict has_ncp(const FiniteGroup& G, NcpOptions opts = {});
// Every h in gN has a conjugate in gM.
bool verify_counterexample(const FiniteGroup& G, const NcpCounterexample& c);

struct GoursatResult {
  Subgroup N1;
  Subgroup N2;
  // Cosets of N1 in G1 paired with cosets of N2 in G2.
  std::vector<std::pair<Subgroup, Subgroup>> pairing;
  bool is_isomorphism_graph;
};

// H is given by indices in G1 x G2 (a*|G2| + b).
GoursatResult goursat_check(const FiniteGroup& G1, const FiniteGroup& G2, const Subgroup& H);

struct ProductReport {
  NcpVerdict g;
  NcpVerdict h;
  NcpVerdict product;
  bool violation;
};

ProductReport product_ncp_test(const FiniteGroup& G, const FiniteGroup& H);

// Isomorphism type for orders up to 8 (e.g. "C2xC2", "S3", "Q8"); empty
// when unknown.
std::string group_label(const FiniteGroup& G);

}  // namespace dcf
