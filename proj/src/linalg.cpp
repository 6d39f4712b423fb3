#include "leibniz/linalg.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace leibniz {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

SparseRow Matrix::sparse_row(std::size_t r) const {
  SparseRow out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!(*this)(r, c).is_zero()) out.emplace_back(c, (*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

SparseRow to_sparse(std::span<const Scalar> v) {
  SparseRow out;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero()) out.emplace_back(c, v[c]);
  return out;
}

namespace {

// y - s * x over sorted sparse rows.
SparseRow axpy(const SparseRow& y, const Scalar& s, const SparseRow& x) {
  SparseRow out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, -(s * x[j].second));
      ++j;
    } else {
      Scalar v = y[i].second - s * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Scalar* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

SparseRow RowReducer::reduce(const SparseRow& row) const {
  // Pivot rows vanish on every other pivot column, so one pass over the
  // pivot entries of the original row clears all of them.
  SparseRow out = row;
  for (const auto& [col, value] : row) {
    auto it = rows_.find(col);
    if (it == rows_.end()) continue;
    const Scalar* current = find_entry(out, col);
    if (current == nullptr) continue;
    Scalar factor = *current;
    out = axpy(out, factor, it->second);
  }
  return out;
}

bool RowReducer::insert(const SparseRow& row) {
  for (const auto& entry : row)
    if (entry.first >= cols_) throw std::invalid_argument("column index out of range");
  SparseRow r = reduce(row);
  if (r.empty()) return false;
  Scalar lead_inv = r.front().second.inverse();
  for (auto& entry : r) entry.second *= lead_inv;
  std::size_t pivot = r.front().first;
  for (auto& [p, other] : rows_) {
    const Scalar* v = find_entry(other, pivot);
    if (v != nullptr) {
      Scalar factor = *v;
      other = axpy(other, factor, r);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

void RowReducer::merge(const RowReducer& other) {
  for (const auto& [p, row] : other.rows_) insert(row);
}

std::vector<std::size_t> RowReducer::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<SparseRow> RowReducer::rows() const {
  std::vector<SparseRow> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

RowReducer sparse_reduce(std::span<const SparseRow> rows, std::size_t cols, Execution exec) {
  if (exec == Execution::serial || rows.size() < 64) {
    RowReducer reducer(cols);
    for (const auto& row : rows) reducer.insert(row);
    return reducer;
  }
  const int threads = std::max(1, thread_count());
  std::vector<RowReducer> partial(static_cast<std::size_t>(threads), RowReducer(cols));
  const std::size_t n = rows.size();
#pragma omp parallel for num_threads(threads) schedule(static)
  for (int t = 0; t < threads; ++t) {
    std::size_t begin = n * static_cast<std::size_t>(t) / static_cast<std::size_t>(threads);
    std::size_t end = n * static_cast<std::size_t>(t + 1) / static_cast<std::size_t>(threads);
    for (std::size_t k = begin; k < end; ++k) partial[static_cast<std::size_t>(t)].insert(rows[k]);
  }
  for (std::size_t t = 1; t < partial.size(); ++t) partial[0].merge(partial[t]);
  return std::move(partial[0]);
}

Rref rref_dense(const Matrix& m) {
  Rref out{m, 0, {}};
  Matrix& a = out.form;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot_row = lead;
    while (pivot_row < rows && a(pivot_row, c).is_zero()) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot_row, k), a(lead, k));
    Scalar inv = a(lead, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      Scalar factor = a(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a(lead, k).is_zero()) a(r, k) -= factor * a(lead, k);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  return out;
}

Rref rref_sparse(const Matrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.sparse_row(r));
  RowReducer reducer = sparse_reduce(rows, m.cols(), Execution::serial);
  Rref out{Matrix(m.rows(), m.cols()), reducer.rank(), reducer.pivots()};
  std::size_t r = 0;
  for (const auto& row : reducer.rows()) {
    for (const auto& [c, v] : row) out.form(r, c) = v;
    ++r;
  }
  return out;
}

Rref rref(const Matrix& m) {
  return m.cols() > kSparseColumnThreshold ? rref_sparse(m) : rref_dense(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  Rref red = rref_dense(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
    throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.form(r, n + c);
  return inv;
}

Subspace Subspace::full(std::size_t d) {
  RowReducer reducer(d);
  for (std::size_t k = 0; k < d; ++k) reducer.insert({{k, Scalar(1)}});
  return from_reducer(reducer);
}

Subspace Subspace::from_reducer(const RowReducer& reducer) {
  Subspace s(reducer.cols());
  auto rows = reducer.rows();
  s.basis_ = Matrix(rows.size(), reducer.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) s.basis_(r, c) = v;
  s.pivots_ = reducer.pivots();
  return s;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  Vector rest(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar factor = rest[pivots_[r]];
    if (factor.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!basis_(r, c).is_zero()) rest[c] -= factor * basis_(r, c);
  }
  return std::all_of(rest.begin(), rest.end(), [](const Scalar& s) { return s.is_zero(); });
}

Subspace kernel(std::span<const SparseRow> rows, std::size_t cols, Execution exec) {
  RowReducer reduced = sparse_reduce(rows, cols, exec);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : reduced.pivots()) is_pivot[p] = true;
  auto pivot_rows = reduced.rows();
  // Column-wise view: for each free column, the pivot rows touching it.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> touching(cols);
  for (const auto& row : pivot_rows) {
    std::size_t pivot = row.front().first;
    for (std::size_t k = 1; k < row.size(); ++k) touching[row[k].first].emplace_back(pivot, row[k].second);
  }
  RowReducer basis(cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    SparseRow v;
    for (const auto& [pivot, value] : touching[f]) v.emplace_back(pivot, -value);
    v.emplace_back(f, Scalar(1));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    basis.insert(v);
  }
  return Subspace::from_reducer(basis);
}

Subspace kernel(const Matrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.sparse_row(r));
  return kernel(rows, m.cols());
}

Subspace span(const std::vector<Vector>& vectors, std::size_t d) {
  RowReducer reducer(d);
  for (const auto& v : vectors) {
    if (v.size() != d) throw std::invalid_argument("span: vector length mismatch");
    reducer.insert(to_sparse(v));
  }
  return Subspace::from_reducer(reducer);
}

SubspaceRelation subspace_rel(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  if (a == b) return SubspaceRelation::equal;
  auto inside = [](const Subspace& x, const Subspace& y) {
    for (std::size_t k = 0; k < x.dim(); ++k)
      if (!y.contains(x.basis_vector(k))) return false;
    return true;
  };
  if (a.dim() <= b.dim() && inside(a, b)) return SubspaceRelation::a_in_b;
  if (b.dim() <= a.dim() && inside(b, a)) return SubspaceRelation::b_in_a;
  return SubspaceRelation::incomparable;
}

const char* to_string(SubspaceRelation r) {
  switch (r) {
    case SubspaceRelation::equal: return "equal";
    case SubspaceRelation::a_in_b: return "a_in_b";
    case SubspaceRelation::b_in_a: return "b_in_a";
    case SubspaceRelation::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace leibniz
