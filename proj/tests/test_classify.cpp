#include "doctest.h"

#include "leibniz/classify.hpp"
#include "leibniz/extensions.hpp"
#include "leibniz/triangular.hpp"
#include "oracle/oracle.hpp"

using namespace leibniz;

namespace {

oracle::Rows rows_of(const Matrix& m) {
  oracle::Rows out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

}  // namespace

TEST_CASE("L41 parameters round trip through the table") {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    L41Params p = sample_non_lie_L41(rng);
    CHECK(is_non_lie(p));
    ScalarTable t = build_L41(p);
    CHECK(is_leibniz(t));
    CHECK_FALSE(is_lie(t));
    CHECK(read_L41(t) == p);
    CHECK(L41Params::from_map(p.to_map()) == p);
  }
  CHECK_THROWS_AS(L41Params::from_map({{"a1_99_12", Scalar(1)}}), InputError);
}

TEST_CASE("L41 builder rejects invalid parameters") {
  L41Params p;
  CHECK_THROWS_WITH_AS(build_L41(p), doctest::Contains("non-nilpotency"), InputError);
  p.a12_12 = 1;
  p.b12_14 = 1;
  CHECK_THROWS_WITH_AS(build_L41(p), doctest::Contains("a1_12_12*b1_12_14"), InputError);
  p.b12_14 = 0;
  p.a23_23 = 1;
  p.a23_14 = 1;
  CHECK_THROWS_WITH_AS(build_L41(p), doctest::Contains("a1_23_23*(a1_23_14+b1_23_14)"), InputError);
  p.a23_14 = 0;
  p.b34_14 = 1;
  CHECK_THROWS_WITH_AS(build_L41(p), doctest::Contains("b1_34_14"), InputError);
}

TEST_CASE("witness carries the input exactly onto the canonical form") {
  Rng rng(4);
  std::set<std::string> routes;
  std::set<FormId> forms;
  for (int k = 0; k < 80; ++k) {
    L41Params p = sample_non_lie_L41(rng);
    Classification c = classify_L41(p);
    ScalarTable canonical = build_canonical(c.form);
    CHECK(change_of_basis(build_L41(p), c.witness) == canonical);
    CHECK(oracle::transport(oracle::to_tensor(build_L41(p)), rows_of(c.witness.matrix())) ==
          oracle::to_tensor(canonical));
    routes.insert(c.route);
    forms.insert(c.form.id);
  }
  CHECK(routes.size() >= 4);
  CHECK(forms.size() == 3);
}

TEST_CASE("classification of a hand-built member") {
  L41Params p;
  p.a23_23 = 2;
  p.a23_14 = 2;
  p.b23_14 = -2;
  p.a34_13 = 4;
  p.b12_14 = 1;
  Classification c = classify_L41(p);
  CHECK(c.form.id == FormId::L1);
  CHECK(c.form.params.at("b1_12_14") == Scalar(1, 2));
}

TEST_CASE("Lie members are out of scope") {
  L41Params p;
  p.a12_12 = 1;
  p.a23_23 = 1;
  CHECK_FALSE(is_non_lie(p));
  CHECK_THROWS_WITH_AS(classify_L41(p), doctest::Contains("Lie"), InputError);
}

TEST_CASE("canonical forms") {
  CHECK(parse_form_id("L42") == FormId::L42);
  CHECK_THROWS_AS(parse_form_id("L5"), InputError);
  CHECK(std::string(to_string(FormId::L2)) == "L2");
  CHECK_THROWS_AS(build_canonical({FormId::L1, {}}), InputError);
  CHECK_THROWS_AS(build_canonical({FormId::L3, {{"a1_23_23", Scalar(-1)}}}), InputError);
  CHECK_THROWS_AS(build_canonical({FormId::L1, {{"zz", Scalar(1)}}}), InputError);
  ScalarTable l42 = build_canonical({FormId::L42, {{"s11_14", Scalar(1)}}});
  CHECK(l42.dim() == 8);
  CHECK(is_leibniz(l42));
  CHECK_FALSE(is_lie(l42));
  CHECK(verify_eq_3(l42, 4, 2));
  CHECK(oracle::leibniz_defects(oracle::to_tensor(l42)) == 0);
}

TEST_CASE("canonical series signatures match the oracle") {
  const std::vector<CanonicalForm> forms{{FormId::L1, {{"b1_12_14", Scalar(1)}}},
                                         {FormId::L2, {{"s11_14", Scalar(1)}}},
                                         {FormId::L3, {{"a1_23_23", Scalar(1)}}}};
  for (const auto& f : forms) {
    ScalarTable t = build_canonical(f);
    oracle::Tensor o = oracle::to_tensor(t);
    SeriesSignature s = series_signature(t);
    CHECK(s.lower_central == oracle::lower_central_dims(o));
    CHECK(s.derived == oracle::derived_dims(o));
  }
  CHECK(series_signature(build_canonical(forms[0])).lower_central == std::vector<std::size_t>{7, 5});
  CHECK(series_signature(build_canonical(forms[2])).derived == std::vector<std::size_t>{7, 6, 3, 0});
}

TEST_CASE("distinguish separates the three forms and never claims isomorphism") {
  ScalarTable l1 = build_canonical({FormId::L1, {{"b1_12_14", Scalar(1)}}});
  ScalarTable l2 = build_canonical({FormId::L2, {{"s11_14", Scalar(1)}}});
  ScalarTable l3 = build_canonical({FormId::L3, {{"a1_23_23", Scalar(1)}}});
  CHECK(distinguish(l1, l2) == Verdict::distinct);
  CHECK(distinguish(l1, l3) == Verdict::distinct);
  CHECK(distinguish(l2, l3) == Verdict::distinct);
  CHECK(distinguish(l1, l1) == Verdict::inconclusive);
  CHECK(distinguish(l1, build_canonical({FormId::L1, {{"s11_14", Scalar(1)}}})) == Verdict::inconclusive);
}

TEST_CASE("two-generator change needs a nonzero determinant") {
  ExtensionSpec spec{4, 2, {{"a1_12_12", Scalar(2)}, {"a1_23_23", Scalar(1)}, {"a2_12_12", Scalar(1)},
                            {"a2_23_23", Scalar(1)}}};
  // a1_34_34 = -3 and a2_34_34 = -2 keep both eigenvalue sums at zero.
  spec.params["a1_34_34"] = Scalar(-3);
  spec.params["a2_34_34"] = Scalar(-2);
  spec.params["s11_14"] = Scalar(1);
  ScalarTable t = master_extension(spec);
  BasisChange g = l42_generator_change(t);
  ScalarTable moved = change_of_basis(t, g);
  for (const auto& m : all_structure_matrices(moved, 4, 2)) CHECK(m.a(0, 0) + m.a(1, 1) + m.a(2, 2) == Scalar(0));
  auto sm = all_structure_matrices(moved, 4, 2);
  CHECK(superdiagonal(sm[0].a, 4) == Vector{1, 0, -1});
  CHECK(superdiagonal(sm[1].a, 4) == Vector{0, 1, -1});

  spec.params["a2_12_12"] = Scalar(2);  // now proportional to X1
  spec.params["a2_34_34"] = Scalar(-3);
  CHECK_THROWS_AS(l42_generator_change(master_extension(spec)), InputError);
}

TEST_CASE("hand-checked members of the one-generator family") {
  L41Params p;
  p.a12_12 = 1;
  p.s14 = 1;
  CHECK(build_L41(p) == build_canonical({FormId::L2, {{"s11_14", Scalar(1)}}}));
  p.a23_23 = 1;
  Classification c = classify_L41(p);
  CHECK(c.form.id == FormId::L3);
  CHECK(c.form.params.at("a1_23_23") == Scalar(1));

  L41Params flip;
  flip.a12_12 = 1;
  flip.a23_23 = -1;
  flip.b34_14 = 1;
  Classification f = classify_L41(flip);
  CHECK(f.route.find("b1_34_14") != std::string::npos);
}

TEST_CASE("classifying a canonical table returns its own form") {
  Rng rng(17);
  for (int k = 0; k < 40; ++k) {
    Classification c = classify_L41(sample_non_lie_L41(rng));
    Classification again = classify_L41(read_L41(build_canonical(c.form)));
    CHECK(again.form.id == c.form.id);
  }
}

TEST_CASE("distinguish is inconclusive under basis change and separates nilpotent tables") {
  Rng rng(18);
  ScalarTable l3 = build_canonical({FormId::L3, {{"a1_23_23", Scalar(4)}}});
  Matrix p = Matrix::identity(7);
  p(0, 3) = Scalar(2);
  p(6, 5) = Scalar(-1);
  p(6, 6) = Scalar(3);
  CHECK(distinguish(l3, change_of_basis(l3, BasisChange(p))) == Verdict::inconclusive);

  ScalarTable l42 = build_canonical({FormId::L42, {{"s11_14", Scalar(1)}}});
  ScalarTable t4 = triangular(4);
  std::vector<std::string> labels = t4.labels();
  labels.push_back("X1");
  labels.push_back("X2");
  ScalarTable sum(labels);  // T(4) plus a two-dimensional abelian summand
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (const auto& e : t4.product(i, j)) sum.set(i, j, e.index, e.coef);
  CHECK(distinguish(l42, sum) == Verdict::distinct);
  CHECK(is_solvable(l42));
  CHECK_FALSE(is_nilpotent(l42));
  CHECK(is_nilpotent(sum));
}
