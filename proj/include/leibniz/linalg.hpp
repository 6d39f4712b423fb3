#pragma once

#include "leibniz/parallel.hpp"
#include "leibniz/scalar.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace leibniz {

using Vector = std::vector<Scalar>;
/// Sorted (column, nonzero value) pairs.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  SparseRow sparse_row(std::size_t r) const;
  Matrix transpose() const;
  /// M v
  Vector apply(std::span<const Scalar> v) const;
  bool is_zero() const;
  /// Row-major flattening, used for the d*d matrix space of derivations.
  Vector flatten() const { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Rref {
  Matrix form;  // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Matrices wider than this are reduced through the sparse path.
inline constexpr std::size_t kSparseColumnThreshold = 64;

Rref rref(const Matrix& m);
Rref rref_dense(const Matrix& m);
Rref rref_sparse(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Throws std::domain_error when m is singular or not square.
Matrix inverse(const Matrix& m);

/// Incremental Gauss-Jordan elimination over sparse rows. The stored rows are
/// always the reduced row echelon basis of everything inserted so far.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Remainder of row after eliminating every current pivot column.
  SparseRow reduce(const SparseRow& row) const;
  /// Returns true when row was independent of the stored rows.
  bool insert(const SparseRow& row);
  /// Inserts every row of other.
  void merge(const RowReducer& other);

  std::vector<std::size_t> pivots() const;
  /// RREF rows in increasing pivot order.
  std::vector<SparseRow> rows() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> rows_;  // keyed by pivot column
};

/// Row-reduces a sparse system. The parallel path reduces contiguous chunks
/// per thread and merges; the RREF is unique so the result is the same.
RowReducer sparse_reduce(std::span<const SparseRow> rows, std::size_t cols, Execution exec);

/// Linear subspace of Q(i)^d stored by its RREF basis (no zero rows), so
/// equality is structural.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace full(std::size_t d);
  /// rows must already be the RREF rows of a RowReducer.
  static Subspace from_reducer(const RowReducer& reducer);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t k) const { return basis_.row(k); }

  bool contains(std::span<const Scalar> v) const;
  bool is_zero() const { return dim() == 0; }

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
/// Kernel of a sparse system with the given column count.
Subspace kernel(std::span<const SparseRow> rows, std::size_t cols,
                Execution exec = Execution::serial);
/// Throws std::invalid_argument when a vector's length differs from d.
Subspace span(const std::vector<Vector>& vectors, std::size_t d);

enum class SubspaceRelation { equal, a_in_b, b_in_a, incomparable };

/// Throws std::invalid_argument on ambient dimension mismatch.
SubspaceRelation subspace_rel(const Subspace& a, const Subspace& b);

const char* to_string(SubspaceRelation r);

SparseRow to_sparse(std::span<const Scalar> v);

}  // namespace leibniz
