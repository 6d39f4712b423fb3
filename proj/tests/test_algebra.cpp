#include "doctest.h"

#include "leibniz/algebra.hpp"
#include "leibniz/classify.hpp"
#include "leibniz/extensions.hpp"
#include "leibniz/triangular.hpp"
#include "oracle/oracle.hpp"

using namespace leibniz;

namespace {

// Two-dimensional non-Lie Leibniz algebra: [e2, e2] = e1.
ScalarTable cyclic2() {
  ScalarTable t({"e1", "e2"});
  t.set(1, 1, 0, Scalar(1));
  return t;
}

// [e1, e2] = e1 only: not Leibniz.
ScalarTable broken2() {
  ScalarTable t({"e1", "e2"});
  t.set(0, 1, 0, Scalar(1));
  t.set(1, 1, 1, Scalar(1));
  return t;
}

std::vector<ScalarTable> zoo() {
  std::vector<ScalarTable> out{cyclic2(), broken2(), triangular(3), triangular(4)};
  out.push_back(build_canonical({FormId::L1, {{"b1_12_14", Scalar(1)}}}));
  out.push_back(build_canonical({FormId::L2, {{"s11_14", Scalar(2)}}}));
  out.push_back(build_canonical({FormId::L3, {{"a1_23_23", Scalar(3)}}}));
  out.push_back(build_canonical({FormId::L42, {{"s11_14", Scalar(1)}}}));
  return out;
}

}  // namespace

TEST_CASE("Leibniz and Lie tests agree with brute force") {
  for (const auto& t : zoo()) {
    oracle::Tensor o = oracle::to_tensor(t);
    const bool leibniz = oracle::leibniz_defects(o) == 0;
    CHECK(is_leibniz(t) == leibniz);
    CHECK(is_leibniz(t, Execution::parallel) == leibniz);
    CHECK(is_lie(t) == (leibniz && oracle::skew(o)));
    CHECK(leibniz_residues(t).empty() == leibniz);
  }
  CHECK(is_leibniz(cyclic2()));
  CHECK_FALSE(is_lie(cyclic2()));
  CHECK_FALSE(is_leibniz(broken2()));
}

TEST_CASE("serial and parallel residues are identical") {
  for (const auto& t : zoo()) CHECK(leibniz_residues(t, Execution::serial) == leibniz_residues(t, Execution::parallel));
  PolyTable g = generic_extension(4, 1);
  CHECK(leibniz_residues(g, Execution::serial) == leibniz_residues(g, Execution::parallel));
}

TEST_CASE("series, annihilator and derivations match brute force") {
  for (const auto& t : zoo()) {
    oracle::Tensor o = oracle::to_tensor(t);
    if (oracle::leibniz_defects(o) != 0) continue;
    SeriesSignature s = series_signature(t);
    CHECK(s.lower_central == oracle::lower_central_dims(o));
    CHECK(s.derived == oracle::derived_dims(o));
    CHECK(right_annihilator(t).dim() == oracle::right_annihilator_dim(o));
    CHECK(derivation_algebra(t).dim() == oracle::derivation_dim(o));
    CHECK(derivation_algebra(t, Execution::parallel) == derivation_algebra(t));
  }
}

TEST_CASE("derivation equations are identical in serial and parallel") {
  ScalarTable t = triangular(5);
  CHECK(derivation_equations(t, Execution::serial) == derivation_equations(t, Execution::parallel));
}

TEST_CASE("every derivation basis vector is a derivation") {
  ScalarTable t = build_canonical({FormId::L3, {{"a1_23_23", Scalar(2)}}});
  Subspace der = derivation_algebra(t);
  const std::size_t d = t.dim();
  for (std::size_t k = 0; k < der.dim(); ++k) {
    Vector v = der.basis_vector(k);
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = v[r * d + c];
    CHECK(is_derivation(t, m));
  }
  Matrix id = Matrix::identity(d);
  CHECK_FALSE(is_derivation(t, id));
}

TEST_CASE("nilpotent and solvable") {
  CHECK(is_nilpotent(triangular(4)));
  CHECK(is_solvable(triangular(4)));
  ScalarTable l1 = build_canonical({FormId::L1, {{"b1_12_14", Scalar(1)}}});
  CHECK_FALSE(is_nilpotent(l1));
  CHECK(is_solvable(l1));
  CHECK(lower_central_series(l1).back().dim() > 0);
}

TEST_CASE("right annihilator contains all squares and is an ideal") {
  ScalarTable t = build_canonical({FormId::L2, {{"a1_23_14", Scalar(1)}, {"s11_14", Scalar(1)}}});
  Subspace ann = right_annihilator(t);
  CHECK(is_ideal(t, ann));
  for (std::size_t k = 0; k < t.dim(); ++k) {
    auto e = basis_vector<Scalar>(t.dim(), k);
    CHECK(ann.contains(t.bracket(std::span<const Scalar>(e), std::span<const Scalar>(e))));
  }
}

TEST_CASE("multiplication matrices") {
  ScalarTable t = triangular(3);  // N12, N23, N13
  auto x = basis_vector<Scalar>(3, 0);
  Matrix left = mult_matrix(t, x, Side::left);
  Matrix right = mult_matrix(t, x, Side::right);
  CHECK(left(2, 1) == Scalar(1));   // [N12, N23] = N13
  CHECK(right(2, 1) == Scalar(-1)); // [N23, N12] = -N13
}

TEST_CASE("change of basis agrees with the oracle transport") {
  Rng rng(21);
  ScalarTable t = build_canonical({FormId::L1, {{"a1_12_24", Scalar(1)}, {"b1_12_14", Scalar(2)}}});
  for (int k = 0; k < 5; ++k) {
    Matrix p = Matrix::identity(t.dim());
    for (std::size_t r = 0; r < t.dim(); ++r)
      for (std::size_t c = 0; c < t.dim(); ++c)
        if (r != c && rng() % 3 == 0) p(r, c) = random_rational(rng);
    if (rank(p) < t.dim()) continue;
    BasisChange change(p);
    oracle::Rows rows;
    for (std::size_t r = 0; r < p.rows(); ++r) rows.push_back(p.row(r));
    CHECK(oracle::to_tensor(change_of_basis(t, change)) == oracle::transport(oracle::to_tensor(t), rows));
    CHECK(change_of_basis(change_of_basis(t, change), change.inverse()) == t);
  }
  Matrix singular(2, 2);
  CHECK_THROWS_AS(BasisChange{singular}, std::invalid_argument);
}

TEST_CASE("bracket rejects wrong lengths") {
  ScalarTable t = triangular(3);
  std::vector<Scalar> a(2), b(3);
  CHECK_THROWS_AS(t.bracket(std::span<const Scalar>(a), std::span<const Scalar>(b)), std::invalid_argument);
}
