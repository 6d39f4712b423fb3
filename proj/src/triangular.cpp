#include "leibniz/triangular.hpp"

#include <stdexcept>

namespace leibniz {

PairIndex::PairIndex(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("PairIndex needs n >= 2");
  const auto side = static_cast<std::size_t>(n + 1);
  lookup_.assign(side * side, static_cast<std::size_t>(-1));
  for (int gap = 1; gap < n; ++gap)
    for (int i = 1; i + gap <= n; ++i) {
      lookup_[static_cast<std::size_t>(i) * side + static_cast<std::size_t>(i + gap)] = pairs_.size();
      pairs_.emplace_back(i, i + gap);
    }
}

std::size_t PairIndex::index(int i, int j) const {
  if (i < 1 || j > n_ || i >= j)
    throw std::out_of_range("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside 1 <= i < j <= " + std::to_string(n_));
  return lookup_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j)];
}

std::string PairIndex::token(int i, int j) const {
  if (n_ >= 10) return std::to_string(i) + "_" + std::to_string(j);
  return std::to_string(i) + std::to_string(j);
}

std::string PairIndex::label(int i, int j) const { return "N" + token(i, j); }

std::size_t pair_index(int n, int i, int j) { return PairIndex(n).index(i, j); }

ScalarTable triangular(int n) {
  if (n < 3) throw std::invalid_argument("triangular(n) requires n >= 3");
  PairIndex idx(n);
  std::vector<std::string> labels;
  for (auto [i, j] : idx.pairs()) labels.push_back(idx.label(i, j));
  ScalarTable t(std::move(labels));
  for (auto [i, j] : idx.pairs())
    for (auto [k, l] : idx.pairs()) {
      const std::size_t left = idx.index(i, j);
      const std::size_t right = idx.index(k, l);
      if (j == k) t.add(left, right, idx.index(i, l), Scalar(1));
      if (i == l) t.add(left, right, idx.index(k, j), Scalar(-1));
    }
  return t;
}

StructureMatrices structure_matrices(const ScalarTable& ext, int n, int alpha) {
  PairIndex idx(n);
  const std::size_t nil = idx.size();
  if (alpha < 1 || nil + static_cast<std::size_t>(alpha) > ext.dim())
    throw std::invalid_argument("structure_matrices: generator index out of range");
  const std::size_t x = nil + static_cast<std::size_t>(alpha) - 1;
  StructureMatrices m{Matrix(nil, nil), Matrix(nil, nil)};
  for (std::size_t r = 0; r < nil; ++r) {
    for (const auto& e : ext.product(r, x)) {
      if (e.index >= nil) throw std::invalid_argument("[" + ext.label(r) + "," + ext.label(x) + "] leaves the nilradical");
      m.a(r, e.index) = e.coef;
    }
    for (const auto& e : ext.product(x, r)) {
      if (e.index >= nil) throw std::invalid_argument("[" + ext.label(x) + "," + ext.label(r) + "] leaves the nilradical");
      m.b(r, e.index) = e.coef;
    }
  }
  return m;
}

bool is_allowed_off_diagonal(int n, std::pair<int, int> row, std::pair<int, int> col) {
  if (row == std::pair{1, 2} && col == std::pair{2, n}) return true;
  if (row.second == row.first + 1 && row.first >= 2 && row.first <= n - 2 && col == std::pair{1, n}) return true;
  if (row == std::pair{n - 1, n} && col == std::pair{1, n - 1}) return true;
  return false;
}

ShapeCheck check_structure_matrix(const Matrix& a, int n) {
  PairIndex idx(n);
  ShapeCheck report;
  if (a.rows() != idx.size() || a.cols() != idx.size())
    throw std::invalid_argument("structure matrix size does not match T(n)");
  auto name = [&](std::size_t r, std::size_t c) {
    auto [i, j] = idx.pair(r);
    auto [p, q] = idx.pair(c);
    return "a_{" + idx.token(i, j) + "," + idx.token(p, q) + "}";
  };
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) {
      if (r == c || a(r, c).is_zero()) continue;
      if (c < r) {
        report.upper_triangular = false;
        report.failures.push_back("(i) below-diagonal entry " + name(r, c) + " = " + a(r, c).to_string());
      }
      if (!is_allowed_off_diagonal(n, idx.pair(r), idx.pair(c))) {
        report.off_diagonal_pattern = false;
        report.failures.push_back("(ii) entry " + name(r, c) + " = " + a(r, c).to_string() + " outside the allowed set");
      }
    }
  for (auto [i, k] : idx.pairs()) {
    if (k <= i + 1) continue;
    Scalar expected;
    for (int p = i; p < k; ++p) expected += a(idx.index(p, p + 1), idx.index(p, p + 1));
    const std::size_t r = idx.index(i, k);
    if (!(a(r, r) == expected)) {
      report.diagonal_sums = false;
      report.failures.push_back("(iii) " + name(r, r) + " = " + a(r, r).to_string() + ", expected " + expected.to_string());
    }
  }
  return report;
}

Vector superdiagonal(const Matrix& a, int n) {
  PairIndex idx(n);
  Vector out;
  for (int p = 1; p < n; ++p) out.push_back(a(idx.index(p, p + 1), idx.index(p, p + 1)));
  return out;
}

std::size_t nil_independent_count(const std::vector<Vector>& diagonals) {
  if (diagonals.empty()) return 0;
  return rank(Matrix::from_rows(diagonals, diagonals.front().size()));
}

bool is_nilpotent_triangular(const Matrix& m) {
  for (std::size_t k = 0; k < m.rows() && k < m.cols(); ++k)
    if (!m(k, k).is_zero()) return false;
  return true;
}

bool is_nilpotent_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("nilpotency test needs a square matrix");
  Matrix power = m;
  for (std::size_t k = 1; k < m.rows() && !power.is_zero(); ++k) power = power * m;
  return power.is_zero();
}

}  // namespace leibniz
