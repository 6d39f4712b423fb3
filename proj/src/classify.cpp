#include "leibniz/classify.hpp"

#include "leibniz/triangular.hpp"

#include <algorithm>
#include <stdexcept>

namespace leibniz {

namespace {

// Basis positions.
constexpr std::size_t N12 = 0, N23 = 1, N34 = 2, N13 = 3, N24 = 4, N14 = 5, X = 6;

ScalarTable t4_plus(std::size_t generators) {
  std::vector<std::string> labels{"N12", "N23", "N34", "N13", "N24", "N14"};
  if (generators == 1) {
    labels.push_back("X");
  } else {
    for (std::size_t g = 1; g <= generators; ++g) labels.push_back("X" + std::to_string(g));
  }
  ScalarTable out(labels);
  ScalarTable t = triangular(4);
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (const auto& e : t.product(i, j)) out.set(i, j, e.index, e.coef);
  return out;
}

// [N, x] = v and [x, N] = -v.
void set_skew(ScalarTable& t, std::size_t n, std::size_t x, std::size_t k, const Scalar& v) {
  t.set(n, x, k, v);
  t.set(x, n, k, -v);
}

Scalar get(const std::map<std::string, Scalar>& m, const std::string& name) {
  auto it = m.find(name);
  return it == m.end() ? Scalar(0) : it->second;
}

void check_names(const std::map<std::string, Scalar>& m, const std::vector<std::string>& names) {
  for (const auto& [name, v] : m)
    if (std::find(names.begin(), names.end(), name) == names.end()) throw InputError("unknown parameter " + name);
}

// Applies successive basis changes, each written in the current basis.
struct Normalizer {
  ScalarTable table;
  BasisChange witness;

  void apply(const Matrix& p) {
    BasisChange step(p);
    table = change_of_basis(table, step);
    witness = witness.then(step);
  }
  Scalar c(std::size_t i, std::size_t j, std::size_t k) const { return table.coefficient(i, j, k); }
};

Matrix identity7() { return Matrix::identity(7); }

// Current table has a12_12 = 0 and a23_23 != 0.
void normalize_case_1(Normalizer& s) {
  const Scalar a23 = s.c(N23, X, N23);
  Matrix p = identity7();
  p(X, X) = a23.inverse();
  p(N23, N14) = s.c(N23, X, N14) / a23;
  p(N34, N13) = -s.c(N34, X, N13) / (Scalar(2) * a23);
  s.apply(p);
}

}  // namespace

const std::vector<std::string>& L41Params::names() {
  static const std::vector<std::string> n{"a1_12_12", "a1_12_24", "b1_12_14", "a1_23_23", "a1_23_14",
                                          "b1_23_14", "a1_34_13", "b1_34_14", "s11_14"};
  return n;
}

L41Params L41Params::from_map(const std::map<std::string, Scalar>& v) {
  check_names(v, names());
  return {get(v, "a1_12_12"), get(v, "a1_12_24"), get(v, "b1_12_14"), get(v, "a1_23_23"), get(v, "a1_23_14"),
          get(v, "b1_23_14"), get(v, "a1_34_13"), get(v, "b1_34_14"), get(v, "s11_14")};
}

std::map<std::string, Scalar> L41Params::to_map() const {
  const Scalar values[] = {a12_12, a12_24, b12_14, a23_23, a23_14, b23_14, a34_13, b34_14, s14};
  std::map<std::string, Scalar> out;
  for (std::size_t k = 0; k < names().size(); ++k) out[names()[k]] = values[k];
  return out;
}

ScalarTable build_L41(const L41Params& p) {
  if (p.a12_12.is_zero() && p.a23_23.is_zero())
    throw InputError("non-nilpotency needs (a1_12_12, a1_23_23) != (0, 0)");
  if (!(p.a12_12 * p.b12_14).is_zero()) throw InputError("restriction a1_12_12*b1_12_14 = 0 violated");
  if (!(p.a23_23 * (p.a23_14 + p.b23_14)).is_zero())
    throw InputError("restriction a1_23_23*(a1_23_14+b1_23_14) = 0 violated");
  if (!((p.a12_12 + p.a23_23) * p.b34_14).is_zero())
    throw InputError("restriction (a1_12_12+a1_23_23)*b1_34_14 = 0 violated");

  ScalarTable t = t4_plus(1);
  const Scalar sum = p.a12_12 + p.a23_23;
  set_skew(t, N12, X, N12, p.a12_12);
  set_skew(t, N12, X, N24, p.a12_24);
  t.set(X, N12, N14, p.b12_14);
  t.set(N23, X, N23, p.a23_23);
  t.set(N23, X, N14, p.a23_14);
  t.set(X, N23, N23, -p.a23_23);
  t.set(X, N23, N14, p.b23_14);
  set_skew(t, N34, X, N34, -sum);
  set_skew(t, N34, X, N13, p.a34_13);
  t.set(X, N34, N14, p.b34_14);
  set_skew(t, N13, X, N13, sum);
  set_skew(t, N24, X, N24, -p.a12_12);
  t.set(X, X, N14, p.s14);
  return t;
}

L41Params read_L41(const ScalarTable& t) {
  if (t.dim() != 7) throw InputError("expected a 7-dimensional table");
  L41Params p{t.coefficient(N12, X, N12), t.coefficient(N12, X, N24), t.coefficient(X, N12, N14),
              t.coefficient(N23, X, N23), t.coefficient(N23, X, N14), t.coefficient(X, N23, N14),
              t.coefficient(N34, X, N13), t.coefficient(X, N34, N14), t.coefficient(X, X, N14)};
  ScalarTable rebuilt = build_L41(p);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      if (!(rebuilt.product(i, j) == t.product(i, j)))
        throw InputError("table is not of the one-generator form at [" + t.label(i) + "," + t.label(j) + "]");
  return p;
}

bool is_non_lie(const L41Params& p) {
  return !p.b12_14.is_zero() || !(p.a23_14 + p.b23_14).is_zero() || !p.b34_14.is_zero() || !p.s14.is_zero();
}

L41Params sample_non_lie_L41(Rng& rng) {
  std::uniform_int_distribution<int> branch(0, 3);
  std::bernoulli_distribution zero(0.3);
  auto maybe = [&]() { return zero(rng) ? Scalar(0) : random_rational(rng); };
  while (true) {
    L41Params p{};
    const int b = branch(rng);
    if (b == 0) {
      p.a23_23 = random_rational(rng);
    } else {
      p.a12_12 = random_rational(rng);
      if (b == 2) p.a23_23 = -p.a12_12;
      if (b == 3)
        do p.a23_23 = random_rational(rng);
        while (p.a23_23 == -p.a12_12);
    }
    p.a12_24 = maybe();
    p.a34_13 = maybe();
    p.a23_14 = maybe();
    p.b12_14 = p.a12_12.is_zero() ? maybe() : Scalar(0);
    p.b23_14 = p.a23_23.is_zero() ? maybe() : -p.a23_14;
    p.b34_14 = (p.a12_12 + p.a23_23).is_zero() ? maybe() : Scalar(0);
    p.s14 = maybe();
    if (is_non_lie(p)) return p;
  }
}

const char* to_string(FormId id) {
  switch (id) {
    case FormId::L1: return "L1";
    case FormId::L2: return "L2";
    case FormId::L3: return "L3";
    case FormId::L42: return "L42";
  }
  return "?";
}

FormId parse_form_id(const std::string& text) {
  for (FormId id : {FormId::L1, FormId::L2, FormId::L3, FormId::L42})
    if (text == to_string(id)) return id;
  throw InputError("unknown form " + text + " (expected L1, L2, L3 or L42)");
}

const std::vector<std::string>& form_parameter_names(FormId id) {
  static const std::vector<std::string> l1{"a1_12_24", "b1_12_14", "s11_14"};
  static const std::vector<std::string> l2{"a1_23_14", "b1_23_14", "s11_14"};
  static const std::vector<std::string> l3{"a1_23_23"};
  static const std::vector<std::string> l42{"s11_14", "s12_14", "s21_14", "s22_14"};
  switch (id) {
    case FormId::L1: return l1;
    case FormId::L2: return l2;
    case FormId::L3: return l3;
    case FormId::L42: return l42;
  }
  throw std::invalid_argument("bad form id");
}

ScalarTable build_canonical(const CanonicalForm& form) {
  check_names(form.params, form_parameter_names(form.id));
  auto v = [&](const char* name) { return get(form.params, name); };
  switch (form.id) {
    case FormId::L1: {
      if (v("b1_12_14").is_zero() && v("s11_14").is_zero()) throw InputError("L1 needs (b1_12_14, s11_14) != (0, 0)");
      L41Params p{};
      p.a12_24 = v("a1_12_24");
      p.b12_14 = v("b1_12_14");
      p.a23_23 = Scalar(1);
      p.s14 = v("s11_14");
      return build_L41(p);
    }
    case FormId::L2: {
      if ((v("a1_23_14") + v("b1_23_14")).is_zero() && v("s11_14").is_zero())
        throw InputError("L2 needs (a1_23_14+b1_23_14, s11_14) != (0, 0)");
      L41Params p{};
      p.a12_12 = Scalar(1);
      p.a23_14 = v("a1_23_14");
      p.b23_14 = v("b1_23_14");
      p.s14 = v("s11_14");
      return build_L41(p);
    }
    case FormId::L3: {
      const Scalar a = v("a1_23_23");
      if ((a * (Scalar(1) + a)).is_zero()) throw InputError("L3 needs a1_23_23*(1+a1_23_23) != 0");
      L41Params p{};
      p.a12_12 = Scalar(1);
      p.a23_23 = a;
      p.s14 = Scalar(1);
      return build_L41(p);
    }
    case FormId::L42: {
      const auto& names = form_parameter_names(FormId::L42);
      if (std::all_of(names.begin(), names.end(), [&](const std::string& n) { return get(form.params, n).is_zero(); }))
        throw InputError("L42 needs some s nonzero");
      ScalarTable t = t4_plus(2);
      const std::size_t x1 = 6, x2 = 7;
      set_skew(t, N12, x1, N12, Scalar(1));
      set_skew(t, N34, x1, N34, Scalar(-1));
      set_skew(t, N13, x1, N13, Scalar(1));
      set_skew(t, N24, x1, N24, Scalar(-1));
      set_skew(t, N23, x2, N23, Scalar(1));
      set_skew(t, N34, x2, N34, Scalar(-1));
      set_skew(t, N13, x2, N13, Scalar(1));
      t.set(x1, x1, N14, v("s11_14"));
      t.set(x1, x2, N14, v("s12_14"));
      t.set(x2, x1, N14, v("s21_14"));
      t.set(x2, x2, N14, v("s22_14"));
      return t;
    }
  }
  throw std::invalid_argument("bad form id");
}

Classification classify_L41(const L41Params& p) {
  Normalizer s{build_L41(p), BasisChange(identity7())};
  if (!is_non_lie(p)) throw InputError("Lie member, out of scope");
  std::string route;

  if (p.a12_12.is_zero()) {
    route = "a12_12 = 0";
    normalize_case_1(s);
  } else {
    Matrix scale = identity7();
    scale(X, X) = p.a12_12.inverse();
    s.apply(scale);
    const Scalar a23 = s.c(N23, X, N23);
    if (a23.is_zero()) {
      route = "a12_12 != 0, a23_23 = 0";
      Matrix q = identity7();
      q(N12, N24) = s.c(N12, X, N24) / Scalar(2);
      q(N34, N13) = -s.c(N34, X, N13) / Scalar(2);
      s.apply(q);
    } else if (a23 == Scalar(-1)) {
      route = "a12_12 != 0, a23_23 = -1, index flip; non-Lie condition read as (b1_34_14, s11_14) != 0";
      Matrix q = identity7();
      q(N23, N14) = -s.c(N23, X, N14);
      q(N12, N24) = s.c(N12, X, N24) / Scalar(2);
      s.apply(q);
      // Automorphism of T(4) reversing the index order.
      Matrix flip(7, 7);
      flip(N12, N34) = Scalar(-1);
      flip(N23, N23) = Scalar(-1);
      flip(N34, N12) = Scalar(-1);
      flip(N13, N24) = Scalar(-1);
      flip(N24, N13) = Scalar(-1);
      flip(N14, N14) = Scalar(-1);
      flip(X, X) = Scalar(1);
      s.apply(flip);
      normalize_case_1(s);
    } else {
      route = "a12_12 != 0, a23_23 != 0, -1";
      const Scalar sigma = s.c(X, X, N14);
      if (sigma.is_zero()) throw InputError("Lie member, out of scope");
      Matrix q = identity7();
      q(N12, N24) = s.c(N12, X, N24) / Scalar(2);
      q(N23, N14) = s.c(N23, X, N14) / a23;
      q(N34, N34) = sigma;
      q(N34, N13) = -sigma * s.c(N34, X, N13) / (Scalar(2) * (Scalar(1) + a23));
      q(N24, N24) = sigma;
      q(N14, N14) = sigma;
      s.apply(q);
    }
  }

  CanonicalForm form;
  const L41Params r = read_L41(s.table);
  if (r.a12_12.is_zero()) {
    form.id = FormId::L1;
    form.params = {{"a1_12_24", r.a12_24}, {"b1_12_14", r.b12_14}, {"s11_14", r.s14}};
  } else if (r.a23_23.is_zero()) {
    form.id = FormId::L2;
    form.params = {{"a1_23_14", r.a23_14}, {"b1_23_14", r.b23_14}, {"s11_14", r.s14}};
  } else {
    form.id = FormId::L3;
    form.params = {{"a1_23_23", r.a23_23}};
  }
  std::erase_if(form.params, [](const auto& kv) { return kv.second.is_zero(); });
  if (!(build_canonical(form) == s.table))
    throw std::logic_error("normalization did not reach the canonical table (" + route + ")");
  return {form, s.witness, route};
}

BasisChange l42_generator_change(const ScalarTable& t) {
  if (t.dim() != 8) throw InputError("expected an 8-dimensional table");
  const std::size_t x1 = 6, x2 = 7;
  const Scalar a1 = t.coefficient(N12, x1, N12), b1 = t.coefficient(N23, x1, N23);
  const Scalar a2 = t.coefficient(N12, x2, N12), b2 = t.coefficient(N23, x2, N23);
  const Scalar det = a1 * b2 - a2 * b1;
  if (det.is_zero()) throw InputError("generator change needs a1_12_12*a2_23_23 - a2_12_12*a1_23_23 != 0");
  Matrix p = Matrix::identity(8);
  p(x1, x1) = b2 / det;
  p(x1, x2) = -b1 / det;
  p(x2, x1) = -a2 / det;
  p(x2, x2) = a1 / det;
  return BasisChange(p);
}

const char* to_string(Verdict v) { return v == Verdict::distinct ? "distinct" : "inconclusive"; }

Verdict distinguish(const ScalarTable& a, const ScalarTable& b) {
  if (a.dim() != b.dim()) return Verdict::distinct;
  if (!(series_signature(a) == series_signature(b))) return Verdict::distinct;
  if (is_lie(a) != is_lie(b)) return Verdict::distinct;
  if (right_annihilator(a).dim() != right_annihilator(b).dim()) return Verdict::distinct;
  return Verdict::inconclusive;
}

}  // namespace leibniz
