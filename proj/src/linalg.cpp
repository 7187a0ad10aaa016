#include "dcf/linalg.hpp"

namespace dcf {

void SpanBasis::reduce(ScalarVec& v, ScalarVec& comb) const {
  for (const Row& r : rows_) {
    const Scalar c = v[r.pivot];
    if (base_.is_zero(c)) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!base_.is_zero(r.vec[j])) v[j] = base_.sub(v[j], base_.mul(c, r.vec[j]));
    for (std::size_t j = 0; j < r.comb.size(); ++j)
      if (!base_.is_zero(r.comb[j])) comb[j] = base_.sub(comb[j], base_.mul(c, r.comb[j]));
  }
}

bool SpanBasis::insert(const ScalarVec& v) {
  if (v.size() != dim_) throw Error(ErrorKind::Internal, "span vector has the wrong dimension");
  ScalarVec w = v;
  ScalarVec comb(rows_.size() + 1, base_.zero());
  comb[rows_.size()] = base_.one();
  reduce(w, comb);
  std::size_t pivot = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!base_.is_zero(w[j])) {
      pivot = j;
      break;
    }
  }
  if (pivot == dim_) return false;
  const Scalar inv = base_.inv(w[pivot]);
  for (auto& x : w) x = base_.mul(x, inv);
  for (auto& x : comb) x = base_.mul(x, inv);
  // Keep earlier rows reduced at the new pivot so reduction stays one pass.
  for (Row& r : rows_) {
    const Scalar c = r.vec[pivot];
    if (base_.is_zero(c)) continue;
    for (std::size_t j = 0; j < dim_; ++j) r.vec[j] = base_.sub(r.vec[j], base_.mul(c, w[j]));
    r.comb.resize(comb.size(), base_.zero());
    for (std::size_t j = 0; j < comb.size(); ++j) r.comb[j] = base_.sub(r.comb[j], base_.mul(c, comb[j]));
  }
  rows_.push_back(Row{std::move(w), pivot, std::move(comb)});
  return true;
}

std::optional<ScalarVec> SpanBasis::express(const ScalarVec& v) const {
  if (v.size() != dim_) throw Error(ErrorKind::Internal, "span vector has the wrong dimension");
  ScalarVec w = v;
  ScalarVec comb(rows_.size(), base_.zero());
  reduce(w, comb);
  for (const auto& x : w)
    if (!base_.is_zero(x)) return std::nullopt;
  for (auto& x : comb) x = base_.neg(x);
  return comb;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const BaseField& base, std::vector<ScalarVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && base.is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Scalar inv = base.inv(rows[r][c]);
    for (auto& x : rows[r]) x = base.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || base.is_zero(rows[i][c])) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (!base.is_zero(rows[r][j])) rows[i][j] = base.sub(rows[i][j], base.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<ScalarVec> solve_linear(const BaseField& base, std::vector<ScalarVec> rows, ScalarVec rhs) {
  if (rows.empty()) {
    for (const auto& x : rhs)
      if (!base.is_zero(x)) return std::nullopt;
    return ScalarVec{};
  }
  const std::size_t cols = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
  const auto pivots = rref(base, rows, cols + 1);
  ScalarVec x(cols, base.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x[pivots[i]] = rows[i][cols];
  }
  return x;
}

std::vector<ScalarVec> kernel(const BaseField& base, std::vector<ScalarVec> rows, std::size_t cols) {
  const auto pivots = rref(base, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ScalarVec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ScalarVec v(cols, base.zero());
    v[f] = base.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = base.neg(rows[i][f]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace dcf
