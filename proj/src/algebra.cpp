#include "leibniz/algebra.hpp"

#include <omp.h>

#include <map>
#include <stdexcept>

namespace leibniz {

namespace {

template <class C>
void accumulate(std::vector<C>& acc, std::vector<char>& touched, const C& scale,
                const SparseVector<C>& v) {
  for (const auto& e : v) {
    acc[e.index] += scale * e.coef;
    touched[e.index] = 1;
  }
}

// Residues of all triples (i, *, *) for a fixed first index.
template <class C>
std::vector<Residue<C>> residues_for(const StructureTable<C>& t, std::size_t i) {
  const std::size_t d = t.dim();
  std::vector<Residue<C>> out;
  std::vector<C> acc(d);
  std::vector<char> touched(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    const auto& ij = t.product(i, j);
    for (std::size_t k = 0; k < d; ++k) {
      // [e_i, [e_j, e_k]]
      for (const auto& m : t.product(j, k)) accumulate(acc, touched, m.coef, t.product(i, m.index));
      // - [[e_i, e_j], e_k]
      for (const auto& m : ij) accumulate(acc, touched, C(-m.coef), t.product(m.index, k));
      // + [[e_i, e_k], e_j]
      for (const auto& m : t.product(i, k)) accumulate(acc, touched, m.coef, t.product(m.index, j));
      SparseVector<C> value;
      for (std::size_t l = 0; l < d; ++l) {
        if (!touched[l]) continue;
        touched[l] = 0;
        if (!is_zero(acc[l])) value.push_back(Entry<C>{l, std::move(acc[l])});
        acc[l] = C{};
      }
      if (!value.empty()) out.push_back(Residue<C>{i, j, k, std::move(value)});
    }
  }
  return out;
}

}  // namespace

template <class C>
std::vector<Residue<C>> leibniz_residues(const StructureTable<C>& table, Execution exec) {
  const std::size_t d = table.dim();
  std::vector<std::vector<Residue<C>>> per_first(d);
  if (exec == Execution::parallel) {
    const long n = static_cast<long>(d);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long i = 0; i < n; ++i) per_first[static_cast<std::size_t>(i)] = residues_for(table, static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < d; ++i) per_first[i] = residues_for(table, i);
  }
  std::vector<Residue<C>> out;
  for (auto& part : per_first)
    for (auto& r : part) out.push_back(std::move(r));
  return out;
}

template <class C>
bool is_leibniz(const StructureTable<C>& table, Execution exec) {
  return leibniz_residues(table, exec).empty();
}

template <class C>
std::vector<Residue<C>> symmetric_parts(const StructureTable<C>& table) {
  std::vector<Residue<C>> out;
  const std::size_t d = table.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      std::map<std::size_t, C> sum;
      for (const auto& e : table.product(i, j)) sum[e.index] += e.coef;
      if (i != j)
        for (const auto& e : table.product(j, i)) sum[e.index] += e.coef;
      SparseVector<C> value;
      for (auto& [k, c] : sum)
        if (!is_zero(c)) value.push_back(Entry<C>{k, std::move(c)});
      if (!value.empty()) out.push_back(Residue<C>{i, j, j, std::move(value)});
    }
  return out;
}

template <class C>
bool is_lie(const StructureTable<C>& table, Execution exec) {
  return symmetric_parts(table).empty() && is_leibniz(table, exec);
}

template std::vector<Residue<Scalar>> leibniz_residues(const ScalarTable&, Execution);
template std::vector<Residue<Poly>> leibniz_residues(const PolyTable&, Execution);
template bool is_leibniz(const ScalarTable&, Execution);
template bool is_leibniz(const PolyTable&, Execution);
template bool is_lie(const ScalarTable&, Execution);
template bool is_lie(const PolyTable&, Execution);
template std::vector<Residue<Scalar>> symmetric_parts(const ScalarTable&);
template std::vector<Residue<Poly>> symmetric_parts(const PolyTable&);

Matrix mult_matrix(const ScalarTable& table, std::span<const Scalar> x, Side side) {
  const std::size_t d = table.dim();
  if (x.size() != d) throw std::invalid_argument("mult_matrix: vector length mismatch");
  Matrix m(d, d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      const auto& p = side == Side::right ? table.product(l, i) : table.product(i, l);
      for (const auto& e : p) m(e.index, l) += x[i] * e.coef;
    }
  return m;
}

namespace {

SparseVector<Scalar> sparse_basis_vector(const Subspace& s, std::size_t k) {
  auto row = s.basis().sparse_row(k);
  SparseVector<Scalar> out;
  out.reserve(row.size());
  for (auto& [c, v] : row) out.push_back(Entry<Scalar>{c, std::move(v)});
  return out;
}

SparseRow as_row(const SparseVector<Scalar>& v) {
  SparseRow out;
  out.reserve(v.size());
  for (const auto& e : v) out.emplace_back(e.index, e.coef);
  return out;
}

template <class Next>
std::vector<Subspace> run_series(const ScalarTable& table, Next next) {
  std::vector<Subspace> series{Subspace::full(table.dim())};
  for (std::size_t step = 0; step <= table.dim(); ++step) {
    const Subspace& last = series.back();
    if (last.is_zero()) break;
    Subspace term = next(last);
    if (term == last) break;
    series.push_back(std::move(term));
  }
  return series;
}

}  // namespace

Subspace bracket_span(const ScalarTable& table, const Subspace& a, const Subspace& b) {
  const std::size_t d = table.dim();
  if (a.ambient_dim() != d || b.ambient_dim() != d)
    throw std::invalid_argument("bracket_span: ambient dimension mismatch");
  std::vector<SparseVector<Scalar>> bv;
  for (std::size_t k = 0; k < b.dim(); ++k) bv.push_back(sparse_basis_vector(b, k));
  RowReducer reducer(d);
  for (std::size_t k = 0; k < a.dim(); ++k) {
    auto u = sparse_basis_vector(a, k);
    for (const auto& v : bv) {
      auto w = table.bracket(u, v);
      if (!w.empty()) reducer.insert(as_row(w));
    }
  }
  return Subspace::from_reducer(reducer);
}

std::vector<Subspace> lower_central_series(const ScalarTable& table) {
  const Subspace whole = Subspace::full(table.dim());
  return run_series(table, [&](const Subspace& s) { return bracket_span(table, s, whole); });
}

std::vector<Subspace> derived_series(const ScalarTable& table) {
  return run_series(table, [&](const Subspace& s) { return bracket_span(table, s, s); });
}

bool is_nilpotent(const ScalarTable& table) { return lower_central_series(table).back().is_zero(); }

bool is_solvable(const ScalarTable& table) { return derived_series(table).back().is_zero(); }

Subspace right_annihilator(const ScalarTable& table) {
  const std::size_t d = table.dim();
  // Row (i, k): sum_v c[i][v][k] x_v = 0.
  std::vector<std::map<std::size_t, Scalar>> eq(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t v = 0; v < d; ++v)
      for (const auto& e : table.product(i, v)) eq[i * d + e.index][v] += e.coef;
  std::vector<SparseRow> rows;
  for (auto& m : eq) {
    SparseRow r;
    for (auto& [c, x] : m)
      if (!x.is_zero()) r.emplace_back(c, std::move(x));
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return kernel(rows, d);
}

bool is_ideal(const ScalarTable& table, const Subspace& s) {
  const std::size_t d = table.dim();
  if (s.ambient_dim() != d) throw std::invalid_argument("is_ideal: ambient dimension mismatch");
  for (std::size_t k = 0; k < s.dim(); ++k) {
    auto v = sparse_basis_vector(s, k);
    for (std::size_t i = 0; i < d; ++i) {
      SparseVector<Scalar> e{Entry<Scalar>{i, Scalar(1)}};
      if (!s.contains(to_dense(table.bracket(e, v), d))) return false;
      if (!s.contains(to_dense(table.bracket(v, e), d))) return false;
    }
  }
  return true;
}

bool is_derivation(const ScalarTable& table, const Matrix& dmat) {
  const std::size_t d = table.dim();
  if (dmat.rows() != d || dmat.cols() != d) throw std::invalid_argument("is_derivation: shape mismatch");
  std::vector<Vector> image(d);
  for (std::size_t l = 0; l < d; ++l) image[l] = dmat.column(l);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector lhs = dmat.apply(to_dense(table.product(i, j), d));
      Vector a = table.bracket(std::span<const Scalar>(image[i]), std::span<const Scalar>(basis_vector<Scalar>(d, j)));
      Vector b = table.bracket(std::span<const Scalar>(basis_vector<Scalar>(d, i)), std::span<const Scalar>(image[j]));
      for (std::size_t k = 0; k < d; ++k)
        if (!(lhs[k] == a[k] + b[k])) return false;
    }
  return true;
}

namespace {

// Equations of the derivation law for pairs (i, *), one per output index k.
std::vector<SparseRow> derivation_rows_for(const ScalarTable& t, std::size_t i) {
  const std::size_t d = t.dim();
  std::vector<SparseRow> out;
  std::vector<std::map<std::size_t, Scalar>> eq(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (auto& m : eq) m.clear();
    // D([e_i,e_j])_k = sum_m c[i][j][m] D[k][m]
    for (const auto& e : t.product(i, j))
      for (std::size_t k = 0; k < d; ++k) eq[k][k * d + e.index] += e.coef;
    // -[D e_i, e_j]_k = -sum_m D[m][i] c[m][j][k]
    for (std::size_t m = 0; m < d; ++m)
      for (const auto& e : t.product(m, j)) eq[e.index][m * d + i] -= e.coef;
    // -[e_i, D e_j]_k = -sum_m D[m][j] c[i][m][k]
    for (std::size_t m = 0; m < d; ++m)
      for (const auto& e : t.product(i, m)) eq[e.index][m * d + j] -= e.coef;
    for (auto& m : eq) {
      SparseRow r;
      for (auto& [c, v] : m)
        if (!v.is_zero()) r.emplace_back(c, std::move(v));
      if (!r.empty()) out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

std::vector<SparseRow> derivation_equations(const ScalarTable& table, Execution exec) {
  const std::size_t d = table.dim();
  std::vector<std::vector<SparseRow>> per_first(d);
  if (exec == Execution::parallel) {
    const long n = static_cast<long>(d);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long i = 0; i < n; ++i)
      per_first[static_cast<std::size_t>(i)] = derivation_rows_for(table, static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < d; ++i) per_first[i] = derivation_rows_for(table, i);
  }
  std::vector<SparseRow> rows;
  for (auto& part : per_first)
    for (auto& r : part) rows.push_back(std::move(r));
  return rows;
}

Subspace derivation_algebra(const ScalarTable& table, Execution exec) {
  const std::size_t d = table.dim();
  return kernel(derivation_equations(table, exec), d * d, exec);
}

BasisChange::BasisChange(Matrix p) : p_(std::move(p)) {
  if (p_.rows() != p_.cols()) throw std::invalid_argument("basis change must be square");
  try {
    inverse_ = leibniz::inverse(p_);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("basis change matrix is singular");
  }
}

ScalarTable change_of_basis(const ScalarTable& table, const BasisChange& change) {
  const std::size_t d = table.dim();
  if (change.dim() != d) throw std::invalid_argument("basis change size does not match dimension");
  const Matrix& p = change.matrix();
  const Matrix& q = change.inverse_matrix();
  std::vector<SparseVector<Scalar>> rows(d);
  for (std::size_t i = 0; i < d; ++i) rows[i] = to_sparse_vector<Scalar>(p.row(i));
  ScalarTable out(table.labels());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto w = table.bracket(rows[i], rows[j]);  // old coordinates
      if (w.empty()) continue;
      // New coordinates: c'_k = sum_m w_m q[m][k].
      Vector c(d);
      for (const auto& e : w)
        for (std::size_t k = 0; k < d; ++k)
          if (!q(e.index, k).is_zero()) c[k] += e.coef * q(e.index, k);
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero()) out.set(i, j, k, std::move(c[k]));
    }
  return out;
}

std::vector<std::size_t> dimensions(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  out.reserve(series.size());
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

SeriesSignature series_signature(const ScalarTable& table) {
  return {dimensions(lower_central_series(table)), dimensions(derived_series(table))};
}

}  // namespace leibniz
