#pragma once

#include "leibniz/linalg.hpp"
#include "leibniz/structure_table.hpp"

#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// Bijection between pairs (i, j), 1 <= i < j <= n, and positions in the
/// column (N12, N23, ..., N(n-1)n, N13, N24, ..., N1n): sorted by the
/// superdiagonal j - i, then by i.
class PairIndex {
 public:
  explicit PairIndex(int n);

  int n() const { return n_; }
  std::size_t size() const { return pairs_.size(); }

  /// Throws std::out_of_range unless 1 <= i < j <= n.
  std::size_t index(int i, int j) const;
  std::pair<int, int> pair(std::size_t k) const { return pairs_.at(k); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  /// "N12", or "N1_12" once n >= 10.
  std::string label(int i, int j) const;
  /// Index part of the label without the leading N: "12", "1_12".
  std::string token(int i, int j) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::size_t> lookup_;  // (i, j) -> index, row-major over (n+1)^2
};

std::size_t pair_index(int n, int i, int j);

/// Lie algebra T(n) of strictly upper triangular n x n matrices,
/// [N_ij, N_kl] = delta_jk N_il - delta_il N_kj. Throws std::invalid_argument for n < 3.
ScalarTable triangular(int n);

/// Right (A) and left (B) action of one extension generator on the
/// nilradical, rows/columns in PairIndex order: [N_ij, X] = sum a_{ij,pq} N_pq
/// and [X, N_ij] = sum b_{ij,pq} N_pq, so row r of A lists the image of N_r.
struct StructureMatrices {
  Matrix a;
  Matrix b;
};

/// The table's first n(n-1)/2 basis vectors must be T(n) in PairIndex order,
/// followed by X^1..X^f. alpha is 1-based. Throws std::invalid_argument when
/// an N-X product leaves the nilradical.
StructureMatrices structure_matrices(const ScalarTable& ext, int n, int alpha);

struct ShapeCheck {
  bool upper_triangular = true;
  bool off_diagonal_pattern = true;
  bool diagonal_sums = true;
  std::vector<std::string> failures;

  bool passed() const { return upper_triangular && off_diagonal_pattern && diagonal_sums; }
};

/// Shape of a right structure matrix A in PairIndex order:
/// (i) upper triangular; (ii) the only nonzero off-diagonal entries are
/// a_{12,2n}, a_{i(i+1),1n} (2 <= i <= n-2) and a_{(n-1)n,1(n-1)};
/// (iii) a_{ik,ik} = sum_{p=i}^{k-1} a_{p(p+1),p(p+1)} for k > i+1.
ShapeCheck check_structure_matrix(const Matrix& a, int n);
inline ShapeCheck check_lemma_2_4(const StructureMatrices& m, int n) { return check_structure_matrix(m.a, n); }

/// True when (row, col) is one of the off-diagonal positions allowed in A.
bool is_allowed_off_diagonal(int n, std::pair<int, int> row, std::pair<int, int> col);

/// Superdiagonal part (a_{12,12}, ..., a_{(n-1)n,(n-1)n}) of A.
Vector superdiagonal(const Matrix& a, int n);

/// Rank of the superdiagonal vectors. For matrices that are upper triangular
/// in PairIndex order a combination is nilpotent iff its diagonal vanishes,
/// and the full diagonal is determined by the superdiagonal part, so this is
/// the size of a maximal nil-independent subset.
std::size_t nil_independent_count(const std::vector<Vector>& diagonals);

/// Zero-diagonal criterion, valid for upper triangular matrices.
bool is_nilpotent_triangular(const Matrix& m);
/// General test M^d = 0.
bool is_nilpotent_matrix(const Matrix& m);

}  // namespace leibniz
