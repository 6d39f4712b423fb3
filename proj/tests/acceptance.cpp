// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All checks are exact; the only tolerances are the wall-clock limits.

#include "leibniz/algebra.hpp"
#include "leibniz/classify.hpp"
#include "leibniz/extensions.hpp"
#include "leibniz/triangular.hpp"
#include "oracle/oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace leibniz;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      detail << (pass ? "failed: " : "; ") << what << " | ";
      pass = false;
    }
  }
};

std::string dims(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

oracle::Rows rows_of(const Matrix& m) {
  oracle::Rows out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

// Full diagonal of a structure matrix; the oracle for nil-independence of
// upper triangular matrices is the rank of these.
oracle::Vec diagonal(const Matrix& m) {
  oracle::Vec d;
  for (std::size_t k = 0; k < m.rows(); ++k) d.push_back(m(k, k));
  return d;
}

// ---------------------------------------------------------------------------

void c1_triangular(Outcome& o) {
  auto t0 = Clock::now();
  std::vector<ScalarTable> tables;
  bool lie = true;
  for (int n = 3; n <= 6; ++n) {
    tables.push_back(triangular(n));
    lie = lie && is_lie(tables.back());
  }
  SeriesSignature s = series_signature(tables[1]);
  const double elapsed = seconds_since(t0);

  o.require(lie, "is_lie false");
  for (int n = 3; n <= 6; ++n) {
    oracle::Tensor ref = oracle::triangular_by_matrices(n);
    const auto& t = tables[static_cast<std::size_t>(n - 3)];
    o.require(oracle::to_tensor(t) == ref, "T(" + std::to_string(n) + ") differs from matrix commutators");
    o.require(oracle::leibniz_defects(ref) == 0 && oracle::skew(ref), "oracle residue nonzero");
  }
  oracle::Tensor t4 = oracle::triangular_by_matrices(4);
  o.require(s.lower_central == std::vector<std::size_t>{6, 3, 1, 0}, "lower central " + dims(s.lower_central));
  o.require(s.derived == std::vector<std::size_t>{6, 3, 0}, "derived " + dims(s.derived));
  o.require(s.lower_central == oracle::lower_central_dims(t4) && s.derived == oracle::derived_dims(t4),
            "series disagree with brute-force spans");
  o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  o.detail << "n=3..6 Lie, T(4) lc " << dims(s.lower_central) << " derived " << dims(s.derived) << ", "
           << elapsed << " s";
}

void c2_structure_matrices(Outcome& o) {
  auto t0 = Clock::now();
  std::size_t matrices = 0, failures = 0;
  for (int n = 4; n <= 5; ++n) {
    std::vector<ExtensionSampler> samplers;
    for (int f = 1; f <= n - 1; ++f) samplers.emplace_back(n, f);
    Rng rng(200 + static_cast<std::uint64_t>(n));
    for (int k = 0; k < 200; ++k) {
      const int f = 1 + k % (n - 1);
      ScalarTable t = master_extension(samplers[static_cast<std::size_t>(f - 1)].sample(rng));
      for (const auto& m : all_structure_matrices(t, n, f)) {
        ++matrices;
        if (!check_lemma_2_4(m, n).passed()) ++failures;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  o.require(failures == 0, std::to_string(failures) + " matrices off pattern");
  o.require(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
  o.detail << "400 extensions (f = 1..n-1), " << matrices << " matrices, " << failures << " failures, " << elapsed
           << " s";
}

void c3_linear_relations(Outcome& o) {
  double worst_n4 = 0;
  std::size_t total_relations = 0;
  for (int n = 3; n <= 4; ++n)
    for (int f = 1; f <= 2; ++f) {
      auto t0 = Clock::now();
      ResidueReport r = derive_relations(n, f, 0, 0);
      const double elapsed = seconds_since(t0);
      if (n == 4) worst_n4 = std::max(worst_n4, elapsed);
      total_relations += r.linear_relations.size();
      const std::string at = " at (" + std::to_string(n) + "," + std::to_string(f) + ")";
      o.require(r.missing_left_action.empty(), "left-action relations missing" + at);
      o.require(r.missing_generator_products.empty(), "generator-product relations missing" + at);
      o.require(r.unexplained_linear.empty(), "unexplained linear relations" + at);
    }
  o.require(worst_n4 < 60.0, "runtime " + std::to_string(worst_n4) + " s");
  o.detail << "(3,1) (3,2) (4,1) (4,2): " << total_relations << " linear relations, none missing or unexplained, n=4 "
           << worst_n4 << " s";
}

void c4_quadratic_restrictions(Outcome& o) {
  ResidueReport r = derive_relations(4, 1, 4, 500);
  o.require(r.unexplained_quadratic.empty(), std::to_string(r.unexplained_quadratic.size()) + " unexplained");
  o.require(r.specialized_unexplained.empty(),
            std::to_string(r.specialized_unexplained.size()) + " unexplained after the eigenvalue specialization");
  o.require(r.sample_points >= 500, "only " + std::to_string(r.sample_points) + " points");
  o.require(r.sample_failures == 0, std::to_string(r.sample_failures) + " sample failures");
  // Independent check: at each restriction-variety point the evaluated table is Leibniz.
  ExtensionSampler sampler(4, 1, {ExtensionFamily::non_lie, 200});
  Rng rng(44);
  std::size_t bad = 0;
  for (int k = 0; k < 50; ++k)
    if (oracle::leibniz_defects(oracle::to_tensor(master_extension(sampler.sample(rng)))) != 0) ++bad;
  o.require(bad == 0, std::to_string(bad) + " oracle failures");
  o.detail << r.restriction_residuals.size() << " restriction, " << r.eigenvalue_residuals.size()
           << " eigenvalue residuals, 0 unexplained, " << r.sample_points << " points, " << r.sample_failures
           << " failures";
}

void c5_eq3(Outcome& o) {
  std::size_t count = 0, failures = 0;
  for (int n = 4; n <= 5; ++n)
    for (int f = 1; f <= n - 2; ++f) {
      ExtensionSampler sampler(n, f, {ExtensionFamily::non_lie, 400});
      Rng rng(500 + static_cast<std::uint64_t>(10 * n + f));
      const std::size_t n1n = PairIndex(n).index(1, n);
      const std::size_t nil = PairIndex(n).size();
      for (int k = 0; k < 50; ++k) {
        ScalarTable t = master_extension(sampler.sample(rng));
        ++count;
        oracle::Tensor c = oracle::to_tensor(t);
        bool zero = true;
        for (std::size_t g = nil; g < t.dim(); ++g)
          for (std::size_t m = 0; m < t.dim(); ++m)
            zero = zero && c.at(g, n1n, m).is_zero() && c.at(n1n, g, m).is_zero();
        if (!verify_eq_3(t, n, f) || !zero || is_lie(t)) ++failures;
      }
    }
  o.require(failures == 0, std::to_string(failures) + " non-Lie samples with X acting on N1n");
  o.detail << count << " non-Lie extensions at n=4,5, " << failures << " failures";
}

void c6_maximal_extension(Outcome& o) {
  for (int n = 4; n <= 5; ++n) {
    auto t0 = Clock::now();
    MaximalExtensionReport r = verify_maximal_extension(n, 6);
    const double elapsed = seconds_since(t0);
    o.require(r.symbolic_forced_lie, "n=" + std::to_string(n) + " symmetric parts survive");
    o.require(r.samples > 0 && r.lie_samples == r.samples,
              "n=" + std::to_string(n) + " " + std::to_string(r.lie_samples) + "/" + std::to_string(r.samples));
    if (n == 5) o.require(elapsed < 120.0, "runtime " + std::to_string(elapsed) + " s");
    o.detail << "n=" << n << " forced, " << r.lie_samples << "/" << r.samples << " Lie, " << elapsed << " s; ";
  }
  MaximalExtensionReport corrupt = verify_maximal_extension(4, 6, 10, true);
  o.require(!corrupt.passed(), "corrupted normalization also passed");
  o.detail << "corrupted control refuted";
}

void c7_nil_independence(Outcome& o) {
  std::size_t tables = 0;
  for (int n = 4; n <= 5; ++n)
    for (int f = 1; f <= n - 1; ++f) {
      ExtensionSampler sampler(n, f);
      Rng rng(700 + static_cast<std::uint64_t>(10 * n + f));
      for (int k = 0; k < 20; ++k) {
        ScalarTable t = master_extension(sampler.sample(rng));
        ++tables;
        std::vector<Vector> sup;
        oracle::Rows diags;
        for (const auto& m : all_structure_matrices(t, n, f)) {
          sup.push_back(superdiagonal(m.a, n));
          diags.push_back(diagonal(m.a));
        }
        const std::size_t count = nil_independent_count(sup);
        o.require(count <= static_cast<std::size_t>(n - 1), "count above n-1");
        o.require(count == oracle::rank(diags), "count differs from the diagonal rank");
        if (f == n - 1) o.require(count == static_cast<std::size_t>(n - 1), "L(n,n-1) count below n-1");
      }
    }
  o.detail << tables << " extensions, count <= n-1, = n-1 for f = n-1 at n=4,5";
}

void c8_classification(Outcome& o) {
  auto t0 = Clock::now();
  Rng rng(8);
  std::set<std::string> routes;
  std::set<FormId> forms;
  std::size_t trips = 0, exact = 0;
  for (int k = 0; k < 240; ++k) {
    L41Params p = sample_non_lie_L41(rng);
    Classification c = classify_L41(p);
    ++trips;
    routes.insert(c.route);
    forms.insert(c.form.id);
    if (change_of_basis(build_L41(p), c.witness) == build_canonical(c.form)) ++exact;
  }
  ScalarTable l1 = build_canonical({FormId::L1, {{"b1_12_14", Scalar(1)}}});
  ScalarTable l2 = build_canonical({FormId::L2, {{"s11_14", Scalar(1)}}});
  ScalarTable l3 = build_canonical({FormId::L3, {{"a1_23_23", Scalar(1)}}});
  const bool separated = distinguish(l1, l2) == Verdict::distinct && distinguish(l1, l3) == Verdict::distinct &&
                         distinguish(l2, l3) == Verdict::distinct;
  const double elapsed = seconds_since(t0);

  // Oracle transport on a subset.
  Rng again(8);
  std::size_t oracle_bad = 0;
  for (int k = 0; k < 40; ++k) {
    L41Params p = sample_non_lie_L41(again);
    Classification c = classify_L41(p);
    if (oracle::transport(oracle::to_tensor(build_L41(p)), rows_of(c.witness.matrix())) !=
        oracle::to_tensor(build_canonical(c.form)))
      ++oracle_bad;
  }
  o.require(exact == trips, std::to_string(trips - exact) + " inexact round trips");
  o.require(routes.size() == 4, std::to_string(routes.size()) + " subcases reached");
  o.require(forms.size() == 3, "not all forms reached");
  o.require(separated, "distinguish inconclusive on a pair of forms");
  o.require(oracle_bad == 0, std::to_string(oracle_bad) + " oracle transport mismatches");
  o.require(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
  o.detail << exact << "/" << trips << " exact, " << routes.size() << " subcases, forms pairwise distinct, " << elapsed
           << " s";
}

void c9_two_generators(Outcome& o) {
  ScalarTable t = build_canonical({FormId::L42, {{"s11_14", Scalar(1)}}});
  o.require(is_leibniz(t), "not Leibniz");
  o.require(oracle::leibniz_defects(oracle::to_tensor(t)) == 0, "oracle residue nonzero");
  o.require(!is_lie(t), "Lie");
  std::vector<Vector> sup;
  for (const auto& m : all_structure_matrices(t, 4, 2)) sup.push_back(superdiagonal(m.a, 4));
  o.require(sup.size() == 2 && sup[0] == Vector{1, 0, -1} && sup[1] == Vector{0, 1, -1}, "diagonal vectors");
  o.require(nil_independent_count(sup) == 2, "count != 2");
  o.require(verify_eq_3(t, 4, 2), "X acts on N14");
  o.detail << "Leibniz, not Lie, diagonals (1,0,-1) (0,1,-1), count 2, N14 annihilated";
}

void c10_off_diagonal_counts(Outcome& o) {
  std::size_t tables = 0, max_a = 0, max_b = 0;
  for (int n = 4; n <= 5; ++n) {
    ExtensionSampler sampler(n, 1);
    Rng rng(1000 + static_cast<std::uint64_t>(n));
    for (int k = 0; k < 200; ++k) {
      ScalarTable t = master_extension(sampler.sample(rng));
      ++tables;
      StructureMatrices m = structure_matrices(t, n, 1);
      const std::size_t ca = off_diagonal_count(m.a), cb = off_diagonal_count(m.b);
      max_a = std::max(max_a, ca);
      max_b = std::max(max_b, cb);
      o.require(ca <= static_cast<std::size_t>(n - 1), "A count " + std::to_string(ca) + " at n=" + std::to_string(n));
      o.require(cb <= static_cast<std::size_t>(n + 1), "B count " + std::to_string(cb) + " at n=" + std::to_string(n));
    }
  }
  o.detail << tables << " f=1 extensions, largest A/B off-diagonal counts " << max_a << "/" << max_b;
}

void c11_performance(Outcome& o) {
  auto t0 = Clock::now();
  Subspace d6 = derivation_algebra(triangular(6), Execution::parallel);
  const double e6 = seconds_since(t0);
  t0 = Clock::now();
  Subspace d8 = derivation_algebra(triangular(8), Execution::parallel);
  const double e8 = seconds_since(t0);
  const std::size_t ref6 = oracle::derivation_dim(oracle::to_tensor(triangular(6)));
  o.require(d6.dim() == ref6, "dim Der(T(6)) differs from the dense oracle");
  o.require(e6 < 5.0, "T(6) " + std::to_string(e6) + " s");
  o.require(e8 < 60.0, "T(8) " + std::to_string(e8) + " s");
  o.detail << "Der(T(6)) dim " << d6.dim() << " in " << e6 << " s, Der(T(8)) dim " << d8.dim() << " in " << e8 << " s";
}

void c12_transport(Outcome& o) {
  Rng rng(12);
  std::vector<ScalarTable> pool{triangular(4), triangular(5)};
  for (int k = 0; k < 4; ++k) pool.push_back(build_L41(sample_non_lie_L41(rng)));
  pool.push_back(build_canonical({FormId::L42, {{"s12_14", Scalar(1)}, {"s21_14", Scalar(2)}}}));
  ExtensionSampler s5(5, 2);
  pool.push_back(master_extension(s5.sample(rng)));
  ScalarTable broken = triangular(4);  // not Leibniz after one change
  broken.set(0, 0, 5, Scalar(1));
  broken.set(0, 1, 0, Scalar(1));
  pool.push_back(broken);

  std::size_t pairs = 0, preserved = 0;
  std::bernoulli_distribution zero(0.8);
  while (pairs < 100) {
    const ScalarTable& t = pool[pairs % pool.size()];
    Matrix p(t.dim(), t.dim());
    for (std::size_t r = 0; r < t.dim(); ++r)
      for (std::size_t c = 0; c < t.dim(); ++c)
        if (r == c || !zero(rng)) p(r, c) = random_rational(rng);
    if (rank(p) < t.dim()) continue;
    ++pairs;
    ScalarTable u = change_of_basis(t, BasisChange(p));
    if (is_leibniz(u) == is_leibniz(t) && is_lie(u) == is_lie(t) &&
        (!is_leibniz(t) || series_signature(u) == series_signature(t)))
      ++preserved;
  }
  o.require(preserved == pairs, std::to_string(pairs - preserved) + " invariants changed");
  o.detail << preserved << "/" << pairs << " (table, change) pairs preserve Leibniz, Lie and series";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 T(n) construction", c1_triangular},
      {"2 structure matrix shape", c2_structure_matrices},
      {"3 linear relations", c3_linear_relations},
      {"4 quadratic restrictions", c4_quadratic_restrictions},
      {"5 N1n annihilation", c5_eq3},
      {"6 maximal extension is Lie", c6_maximal_extension},
      {"7 nil-independence bound", c7_nil_independence},
      {"8 one-generator classification", c8_classification},
      {"9 two-generator form", c9_two_generators},
      {"10 off-diagonal counts", c10_off_diagonal_counts},
      {"11 derivation performance", c11_performance},
      {"12 transport invariance", c12_transport},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail.str() << " [" << seconds_since(t0)
              << " s with oracles]" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
