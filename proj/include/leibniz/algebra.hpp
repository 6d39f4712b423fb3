#pragma once

#include "leibniz/linalg.hpp"
#include "leibniz/parallel.hpp"
#include "leibniz/structure_table.hpp"

#include <span>
#include <vector>

namespace leibniz {

/// Nonzero value of [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j].
template <class C>
struct Residue {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  SparseVector<C> value;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Leibniz-identity defects over all ordered basis triples, listed in
/// triple-lexicographic order. The parallel path splits over the first index.
template <class C>
std::vector<Residue<C>> leibniz_residues(const StructureTable<C>& table,
                                         Execution exec = Execution::serial);

template <class C>
bool is_leibniz(const StructureTable<C>& table, Execution exec = Execution::serial);

/// Leibniz and skew-symmetric on every basis pair.
template <class C>
bool is_lie(const StructureTable<C>& table, Execution exec = Execution::serial);

/// [e_i, e_j] + [e_j, e_i] for all i <= j, nonzero ones only.
template <class C>
std::vector<Residue<C>> symmetric_parts(const StructureTable<C>& table);

extern template std::vector<Residue<Scalar>> leibniz_residues(const ScalarTable&, Execution);
extern template std::vector<Residue<Poly>> leibniz_residues(const PolyTable&, Execution);
extern template bool is_leibniz(const ScalarTable&, Execution);
extern template bool is_leibniz(const PolyTable&, Execution);
extern template bool is_lie(const ScalarTable&, Execution);
extern template bool is_lie(const PolyTable&, Execution);
extern template std::vector<Residue<Scalar>> symmetric_parts(const ScalarTable&);
extern template std::vector<Residue<Poly>> symmetric_parts(const PolyTable&);

enum class Side { left, right };

/// Matrix of L_x: y -> [x, y] (left) or R_x: y -> [y, x] (right); column l is
/// the image of e_l.
Matrix mult_matrix(const ScalarTable& table, std::span<const Scalar> x, Side side);

/// span{[u, v] : u in a, v in b}.
Subspace bracket_span(const ScalarTable& table, const Subspace& a, const Subspace& b);

/// L^1 = L, L^{k+1} = [L^k, L]. Stops after the first zero term, or before a
/// term that equals its predecessor; a nonzero last term means the series
/// stabilized.
std::vector<Subspace> lower_central_series(const ScalarTable& table);
/// L^[1] = L, L^[s+1] = [L^[s], L^[s]], truncated the same way.
std::vector<Subspace> derived_series(const ScalarTable& table);

bool is_nilpotent(const ScalarTable& table);
bool is_solvable(const ScalarTable& table);

/// {v : [e_i, v] = 0 for all i}.
Subspace right_annihilator(const ScalarTable& table);

/// Two-sided ideal test: [L, s] and [s, L] both inside s.
bool is_ideal(const ScalarTable& table, const Subspace& s);

/// d([x,y]) = [d(x),y] + [x,d(y)] on all basis pairs; column l of dmat is d(e_l).
bool is_derivation(const ScalarTable& table, const Matrix& dmat);

/// Der(L) inside the d*d matrix space, coordinates in row-major order
/// (index m*d + l holds the coefficient of e_m in d(e_l)).
Subspace derivation_algebra(const ScalarTable& table, Execution exec = Execution::serial);

/// Sparse rows of the linear system whose kernel is Der(L).
std::vector<SparseRow> derivation_equations(const ScalarTable& table,
                                            Execution exec = Execution::serial);

/// Invertible change of basis; row i of p holds the new e'_i in old coordinates.
class BasisChange {
 public:
  /// Throws std::invalid_argument when p is singular or not square.
  explicit BasisChange(Matrix p);

  const Matrix& matrix() const { return p_; }
  const Matrix& inverse_matrix() const { return inverse_; }
  std::size_t dim() const { return p_.rows(); }

  BasisChange inverse() const { return BasisChange(inverse_); }
  /// First this, then next (expressed in the basis produced by this).
  BasisChange then(const BasisChange& next) const { return BasisChange(next.p_ * p_); }

 private:
  Matrix p_;
  Matrix inverse_;
};

/// Same product expressed in the basis e'_i = sum_j p_ij e_j. Labels are kept.
ScalarTable change_of_basis(const ScalarTable& table, const BasisChange& p);

struct SeriesSignature {
  std::vector<std::size_t> lower_central;
  std::vector<std::size_t> derived;
  friend bool operator==(const SeriesSignature&, const SeriesSignature&) = default;
};

SeriesSignature series_signature(const ScalarTable& table);

std::vector<std::size_t> dimensions(const std::vector<Subspace>& series);

}  // namespace leibniz
