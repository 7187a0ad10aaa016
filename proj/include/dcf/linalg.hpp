#pragma once

// Exact linear algebra over a base field: incremental spans with
// coordinate tracking, and linear system solving.

#include <cstddef>
#include <optional>
#include <vector>

#include "dcf/scalar.hpp"

namespace dcf {

using ScalarVec = std::vector<Scalar>;

// Incrementally row-reduced set of independent vectors. Each accepted vector
// gets the next index; express() writes a vector as a combination of the
// accepted vectors.
class SpanBasis {
 public:
  SpanBasis(BaseField base, std::size_t dim) : base_(std::move(base)), dim_(dim) {}

  // Returns true when v was independent of the span (and is now part of it).
  bool insert(const ScalarVec& v);
  std::optional<ScalarVec> express(const ScalarVec& v) const;
  bool contains(const ScalarVec& v) const { return express(v).has_value(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    ScalarVec vec;
    std::size_t pivot;
    ScalarVec comb;  // vec = sum comb[i] * accepted[i]
  };
  // Reduces v against all rows; returns the residue and -coordinates.
  void reduce(ScalarVec& v, ScalarVec& comb) const;

  BaseField base_;
  std::size_t dim_;
  std::vector<Row> rows_;
};

// Solves A x = b (A given by rows). Free variables are set to zero.
std::optional<ScalarVec> solve_linear(const BaseField& base, std::vector<ScalarVec> rows, ScalarVec rhs);

// Basis of the null space {x : A x = 0}.
std::vector<ScalarVec> kernel(const BaseField& base, std::vector<ScalarVec> rows, std::size_t cols);

}  // namespace dcf
