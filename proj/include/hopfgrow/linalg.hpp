#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hopfgrow/element.hpp"
#include "hopfgrow/scalar.hpp"

namespace hopfgrow {

using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>;  // row-major

// Null space of a dense matrix over the scalar field (fraction-free forward pass).
std::vector<Vec> kernel_basis(Matrix rows, size_t ncols);
// Same kernel for systems with many more rows than columns: rows are chosen
// at a random modular specialization, and the exact result is checked against all rows.
std::vector<Vec> kernel_basis_tall(const Matrix& rows, size_t ncols);
size_t matrix_rank(Matrix rows, size_t ncols);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix identity_matrix(size_t n);

using SparseVec = std::vector<std::pair<size_t, Scalar>>;

// Null space of a sparse matrix given by columns. Rows with a single live
// column are peeled first, then each connected block is solved densely.
std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& columns, size_t nrows);

// Rank over Q of an integer matrix.
int integer_rank(const std::vector<std::vector<long>>& rows);
// Basis of the integer relation lattice {a : sum a_i rows_i = 0}.
std::vector<std::vector<long>> integer_relations(const std::vector<std::vector<long>>& rows);

// Span of algebra elements kept in echelon form on leading words, with the
// change of basis needed to read off coordinates in the inserted vectors.
class SpanBasis {
 public:
  SpanBasis() = default;
  explicit SpanBasis(const std::vector<AlgebraElement>& vs);

  // Adds x if it is independent; returns whether it was added.
  bool add(const AlgebraElement& x);
  size_t dim() const { return basis_.size(); }
  const std::vector<AlgebraElement>& basis() const { return basis_; }
  bool contains(const AlgebraElement& x) const;
  // Coordinates with respect to basis(), or nothing when x is outside the span.
  std::optional<Vec> coordinates(const AlgebraElement& x) const;
  // Basis with distinct leading words and leading coefficient one, sorted by leading word.
  std::vector<AlgebraElement> echelon() const;

 private:
  struct Row {
    AlgebraElement v;
    Vec combo;
  };
  // Reduces x; returns the residual and accumulates the combination used.
  AlgebraElement reduce(AlgebraElement x, Vec& acc) const;

  std::vector<AlgebraElement> basis_;
  std::map<NormalWord, Row, WordOrder> rows_;
};

}  // namespace hopfgrow
