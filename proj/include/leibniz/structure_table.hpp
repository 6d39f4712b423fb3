#pragma once

#include "leibniz/poly.hpp"
#include "leibniz/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz {

/// One nonzero coordinate of a product: coef * e_index.
template <class C>
struct Entry {
  std::size_t index;
  C coef;
  friend bool operator==(const Entry&, const Entry&) = default;
};

template <class C>
using SparseVector = std::vector<Entry<C>>;

/// Bilinear product on a d-dimensional space, [e_i, e_j] = sum_k c[i][j][k] e_k.
///
/// C is the coefficient ring: Scalar for concrete algebras, Poly for tables
/// whose structure constants are symbolic parameters. Each product is kept
/// sorted by basis index with zero coefficients dropped.
template <class C>
class StructureTable {
 public:
  StructureTable() = default;

  explicit StructureTable(std::vector<std::string> labels)
      : labels_(std::move(labels)), products_(labels_.size() * labels_.size()) {}

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t k) const { return labels_.at(k); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  const SparseVector<C>& product(std::size_t i, std::size_t j) const {
    return products_.at(i * dim() + j);
  }

  C coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& e : product(i, j))
      if (e.index == k) return e.coef;
    return C{};
  }

  /// Overwrites c[i][j][k]; a zero value removes the entry.
  void set(std::size_t i, std::size_t j, std::size_t k, C value) {
    check(i, j, k);
    auto& p = products_[i * dim() + j];
    auto it = std::lower_bound(p.begin(), p.end(), k,
                               [](const Entry<C>& e, std::size_t x) { return e.index < x; });
    bool present = it != p.end() && it->index == k;
    if (is_zero(value)) {
      if (present) p.erase(it);
    } else if (present) {
      it->coef = std::move(value);
    } else {
      p.insert(it, Entry<C>{k, std::move(value)});
    }
  }

  void add(std::size_t i, std::size_t j, std::size_t k, const C& value) {
    set(i, j, k, coefficient(i, j, k) + value);
  }

  /// Bilinear expansion of [x, y] for dense coefficient vectors.
  std::vector<C> bracket(std::span<const C> x, std::span<const C> y) const {
    if (x.size() != dim() || y.size() != dim())
      throw std::invalid_argument("bracket: vector length does not match dimension");
    std::vector<C> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(y[j])) continue;
        const auto& p = product(i, j);
        if (p.empty()) continue;
        C xy = x[i] * y[j];
        for (const auto& e : p) out[e.index] += xy * e.coef;
      }
    }
    return out;
  }

  /// [x, y] for sparse operands.
  SparseVector<C> bracket(const SparseVector<C>& x, const SparseVector<C>& y) const {
    std::vector<C> acc(dim());
    std::vector<bool> touched(dim(), false);
    for (const auto& ex : x)
      for (const auto& ey : y) {
        const auto& p = product(ex.index, ey.index);
        if (p.empty()) continue;
        C xy = ex.coef * ey.coef;
        for (const auto& e : p) {
          acc[e.index] += xy * e.coef;
          touched[e.index] = true;
        }
      }
    SparseVector<C> out;
    for (std::size_t k = 0; k < dim(); ++k)
      if (touched[k] && !is_zero(acc[k])) out.push_back(Entry<C>{k, std::move(acc[k])});
    return out;
  }

  /// Applies fn to every coefficient, e.g. to evaluate a symbolic table.
  template <class D, class Fn>
  StructureTable<D> map_coefficients(Fn fn) const {
    StructureTable<D> out(labels_);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& e : product(i, j)) out.set(i, j, e.index, fn(e.coef));
    return out;
  }

  /// Number of stored nonzero structure constants.
  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& p : products_) n += p.size();
    return n;
  }

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  void check(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim() || j >= dim() || k >= dim())
      throw std::out_of_range("structure constant index out of range");
  }

  std::vector<std::string> labels_;
  std::vector<SparseVector<C>> products_;
};

using ScalarTable = StructureTable<Scalar>;
using PolyTable = StructureTable<Poly>;

template <class C>
std::vector<C> basis_vector(std::size_t d, std::size_t k) {
  std::vector<C> v(d);
  v.at(k) = C(1L);
  return v;
}

template <class C>
SparseVector<C> to_sparse_vector(std::span<const C> v) {
  SparseVector<C> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) out.push_back(Entry<C>{k, v[k]});
  return out;
}

template <class C>
std::vector<C> to_dense(const SparseVector<C>& v, std::size_t d) {
  std::vector<C> out(d);
  for (const auto& e : v) out.at(e.index) = e.coef;
  return out;
}

/// Lifts a concrete table to constant polynomial coefficients.
inline PolyTable to_poly_table(const ScalarTable& t) {
  return t.map_coefficients<Poly>([](const Scalar& s) { return Poly(s); });
}

}  // namespace leibniz
