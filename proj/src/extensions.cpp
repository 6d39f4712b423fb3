#include "leibniz/extensions.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace leibniz {

namespace {

using Pair = std::pair<int, int>;

void check_shape(int n, int f, int max_n) {
  if (n < 3 || n > max_n)
    throw std::invalid_argument("n = " + std::to_string(n) + " outside 3.." + std::to_string(max_n));
  if (f < 1 || f > n - 1)
    throw std::invalid_argument("f = " + std::to_string(f) + " outside 1..n-1");
}

std::vector<std::string> extension_labels(const PairIndex& idx, int f) {
  std::vector<std::string> labels;
  for (auto [i, j] : idx.pairs()) labels.push_back(idx.label(i, j));
  for (int a = 1; a <= f; ++a) labels.push_back("X" + std::to_string(a));
  return labels;
}

// Right action [N_r, X] of one generator: superdiagonal values plus the
// off-diagonal pattern entries.
struct RightAction {
  std::vector<Poly> superdiagonal;  // index p-1 holds the (p, p+1) entry
  std::map<std::pair<std::size_t, std::size_t>, Poly> off;

  Poly entry(const PairIndex& idx, std::size_t r, std::size_t q) const {
    if (r == q) {
      auto [i, j] = idx.pair(r);
      Poly sum;
      for (int p = i; p < j; ++p) sum += superdiagonal[static_cast<std::size_t>(p - 1)];
      return sum;
    }
    auto it = off.find({r, q});
    return it == off.end() ? Poly() : it->second;
  }
};

std::vector<std::pair<Pair, Pair>> off_diagonal_positions(int n) {
  std::vector<std::pair<Pair, Pair>> out{{{1, 2}, {2, n}}};
  for (int i = 2; i <= n - 2; ++i) out.push_back({{i, i + 1}, {1, n}});
  out.push_back({{n - 1, n}, {1, n - 1}});
  return out;
}

RightAction generic_right_action(const PairIndex& idx, int alpha) {
  const int n = idx.n();
  RightAction act;
  for (int p = 1; p < n; ++p) act.superdiagonal.push_back(Poly::var(a_name(idx, alpha, {p, p + 1}, {p, p + 1})));
  for (auto [row, col] : off_diagonal_positions(n))
    act.off[{idx.index(row.first, row.second), idx.index(col.first, col.second)}] =
        Poly::var(a_name(idx, alpha, row, col));
  return act;
}

void fill_right_action(PolyTable& t, const PairIndex& idx, std::size_t x, const RightAction& act) {
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t q = 0; q < idx.size(); ++q) t.set(r, x, q, act.entry(idx, r, q));
}

PolyTable base_table(const PairIndex& idx, int f) {
  PolyTable t(extension_labels(idx, f));
  ScalarTable tn = triangular(idx.n());
  for (std::size_t i = 0; i < tn.dim(); ++i)
    for (std::size_t j = 0; j < tn.dim(); ++j)
      for (const auto& e : tn.product(i, j)) t.set(i, j, e.index, Poly(e.coef));
  return t;
}

bool is_superdiagonal(Pair p) { return p.second == p.first + 1; }

// Master table: stated linear relations applied to the generic extension.
PolyTable build_master(const PairIndex& idx, int f, const std::vector<RightAction>& actions) {
  const int n = idx.n();
  const std::size_t nil = idx.size();
  const std::size_t top = idx.index(1, n);
  PolyTable t = base_table(idx, f);
  for (int a = 1; a <= f; ++a) {
    const std::size_t x = nil + static_cast<std::size_t>(a - 1);
    const RightAction& act = actions[static_cast<std::size_t>(a - 1)];
    fill_right_action(t, idx, x, act);
    for (std::size_t r = 0; r < nil; ++r)
      for (std::size_t q = 0; q < nil; ++q) {
        if (q == top && is_superdiagonal(idx.pair(r)))
          t.set(x, r, q, Poly::var(b_name(idx, a, idx.pair(r), {1, n})));
        else
          t.set(x, r, q, -act.entry(idx, r, q));
      }
    for (int b = 1; b <= f; ++b)
      t.set(x, nil + static_cast<std::size_t>(b - 1), top, Poly::var(s_name(idx, a, b, {1, n})));
  }
  return t;
}

std::string factor_text(const Poly& p) {
  std::string s = p.to_string();
  if (p.terms().size() > 1) return "(" + s + ")";
  return s;
}

bool is_left_or_product_variable(const std::string& name) {
  return !name.empty() && (name[0] == 'b' || name[0] == 's');
}

// Column map over monomials for exact span computations.
class MonomialColumns {
 public:
  void add(const Poly& p) {
    for (const auto& [m, c] : p.terms()) keys_.insert({rank(m), m});
  }
  void add(const std::vector<Poly>& ps) {
    for (const auto& p : ps) add(p);
  }
  void freeze() {
    monomials_.clear();
    index_.clear();
    for (const auto& [r, m] : keys_) {
      index_[m] = monomials_.size();
      monomials_.push_back(m);
    }
  }
  std::size_t size() const { return monomials_.size(); }

  std::optional<SparseRow> encode(const Poly& p) const {
    SparseRow row;
    for (const auto& [m, c] : p.terms()) {
      auto it = index_.find(m);
      if (it == index_.end()) return std::nullopt;
      row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }
  Poly decode(const SparseRow& row) const {
    Poly p;
    for (const auto& [k, c] : row) p += Poly::monomial(monomials_[k], c);
    return p;
  }

 private:
  // b and s indeterminates first so they become pivots.
  static int rank(const Monomial& m) {
    return (m.size() == 1 && m.front().second == 1 && is_left_or_product_variable(m.front().first)) ? 0 : 1;
  }
  std::set<std::pair<int, Monomial>> keys_;
  std::map<Monomial, std::size_t> index_;
  std::vector<Monomial> monomials_;
};

class PolySpan {
 public:
  PolySpan(const MonomialColumns& cols, const std::vector<Poly>& generators) : cols_(&cols), reducer_(cols.size()) {
    for (const auto& g : generators)
      if (auto row = cols.encode(g)) reducer_.insert(*row);
  }
  bool contains(const Poly& p) const {
    auto row = cols_->encode(p);
    return row && reducer_.reduce(*row).empty();
  }
  std::vector<Poly> basis() const {
    std::vector<Poly> out;
    for (const auto& row : reducer_.rows()) out.push_back(cols_->decode(row));
    return out;
  }

 private:
  const MonomialColumns* cols_;
  RowReducer reducer_;
};

std::vector<Poly> symmetric_coordinates(const PolyTable& t) {
  std::vector<Poly> out;
  for (const auto& r : symmetric_parts(t))
    for (const auto& e : r.value) out.push_back(e.coef);
  return distinct_up_to_scale(out);
}

struct EigenvalueProduct {
  std::string text;
  Poly product;
};

std::vector<EigenvalueProduct> eigenvalue_products(const PairIndex& idx, int f, const PolyTable& master) {
  std::vector<EigenvalueProduct> out;
  const auto sym = symmetric_coordinates(master);
  for (int g = 1; g <= f; ++g) {
    Poly sigma = diagonal_sum(idx, g);
    for (const auto& s : sym) out.push_back({factor_text(sigma) + "*" + factor_text(s), sigma * s});
  }
  return out;
}

std::map<std::string, Poly> non_lie_specialization(const PairIndex& idx, int f) {
  const int n = idx.n();
  std::map<std::string, Poly> values;
  for (int a = 1; a <= f; ++a) {
    Poly rest;
    for (int p = 1; p < n - 1; ++p) rest -= Poly::var(a_name(idx, a, {p, p + 1}, {p, p + 1}));
    values[a_name(idx, a, {n - 1, n}, {n - 1, n})] = rest;
  }
  return values;
}

std::set<int> generator_set(const Poly& p) {
  std::set<int> out;
  for (const auto& v : p.variables())
    for (int g : generators_of(v)) out.insert(g);
  return out;
}

std::vector<std::string> sorted_variables(const std::vector<Poly>& polys) {
  std::set<std::string> names;
  for (const auto& p : polys)
    for (const auto& v : p.variables()) names.insert(v);
  return {names.begin(), names.end()};
}

std::vector<std::string> superdiagonal_names(const PairIndex& idx, int f) {
  std::vector<std::string> out;
  for (int a = 1; a <= f; ++a)
    for (int p = 1; p < idx.n(); ++p) out.push_back(a_name(idx, a, {p, p + 1}, {p, p + 1}));
  return out;
}

std::size_t concrete_diagonal_rank(const PairIndex& idx, int f, const std::map<std::string, Scalar>& point) {
  std::vector<Vector> rows;
  for (int a = 1; a <= f; ++a) {
    Vector v;
    for (int p = 1; p < idx.n(); ++p) {
      auto it = point.find(a_name(idx, a, {p, p + 1}, {p, p + 1}));
      v.push_back(it == point.end() ? Scalar(0) : it->second);
    }
    rows.push_back(std::move(v));
  }
  return nil_independent_count(rows);
}

}  // namespace

std::string a_name(const PairIndex& idx, int alpha, Pair row, Pair col) {
  return "a" + std::to_string(alpha) + "_" + idx.token(row.first, row.second) + "_" + idx.token(col.first, col.second);
}

std::string b_name(const PairIndex& idx, int alpha, Pair row, Pair col) {
  return "b" + std::to_string(alpha) + "_" + idx.token(row.first, row.second) + "_" + idx.token(col.first, col.second);
}

std::string s_name(const PairIndex& idx, int alpha, int beta, Pair col) {
  std::string gens = (alpha >= 10 || beta >= 10) ? std::to_string(alpha) + "_" + std::to_string(beta)
                                                  : std::to_string(alpha) + std::to_string(beta);
  return "s" + gens + "_" + idx.token(col.first, col.second);
}

std::vector<int> generators_of(const std::string& name) {
  if (name.size() < 2) return {};
  const auto first = name.find('_');
  const std::string head = name.substr(1, first == std::string::npos ? std::string::npos : first - 1);
  if (head.empty() || !std::all_of(head.begin(), head.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return {};
  if (name[0] == 'a' || name[0] == 'b') return {std::stoi(head)};
  if (name[0] != 's') return {};
  if (head.size() == 2) return {head[0] - '0', head[1] - '0'};
  const auto second = name.find('_', first + 1);
  return {std::stoi(head), std::stoi(name.substr(first + 1, second - first - 1))};
}

Poly diagonal_sum(const PairIndex& idx, int alpha) {
  Poly sum;
  for (int p = 1; p < idx.n(); ++p) sum += Poly::var(a_name(idx, alpha, {p, p + 1}, {p, p + 1}));
  return sum;
}

PolyTable generic_extension(int n, int f) {
  check_shape(n, f, kMaxSymbolicN);
  PairIndex idx(n);
  const std::size_t nil = idx.size();
  PolyTable t = base_table(idx, f);
  for (int a = 1; a <= f; ++a) {
    const std::size_t x = nil + static_cast<std::size_t>(a - 1);
    fill_right_action(t, idx, x, generic_right_action(idx, a));
    for (std::size_t r = 0; r < nil; ++r)
      for (std::size_t q = 0; q < nil; ++q) t.set(x, r, q, Poly::var(b_name(idx, a, idx.pair(r), idx.pair(q))));
    for (int b = 1; b <= f; ++b)
      for (std::size_t q = 0; q < nil; ++q)
        t.set(x, nil + static_cast<std::size_t>(b - 1), q, Poly::var(s_name(idx, a, b, idx.pair(q))));
  }
  return t;
}

std::vector<LinearRelation> stated_linear_relations(int n, int f) {
  check_shape(n, f, kMaxSymbolicN);
  PairIndex idx(n);
  const std::size_t top = idx.index(1, n);
  std::vector<LinearRelation> out;
  for (int a = 1; a <= f; ++a) {
    RightAction act = generic_right_action(idx, a);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (q == top && is_superdiagonal(idx.pair(r))) continue;
        out.push_back({RelationKind::left_action, Poly::var(b_name(idx, a, idx.pair(r), idx.pair(q))) + act.entry(idx, r, q)});
      }
  }
  for (int a = 1; a <= f; ++a)
    for (int b = 1; b <= f; ++b)
      for (std::size_t q = 0; q < idx.size(); ++q)
        if (q != top) out.push_back({RelationKind::generator_products, Poly::var(s_name(idx, a, b, idx.pair(q)))});
  return out;
}

std::vector<Restriction> stated_restrictions(int n, int f) {
  check_shape(n, f, kMaxConcreteN);
  PairIndex idx(n);
  std::vector<Restriction> out;
  auto add = [&](Poly left, Poly right) {
    std::string text = factor_text(left) + "*" + factor_text(right);
    out.push_back({std::move(text), std::move(left), std::move(right)});
  };
  for (int a = 1; a <= f; ++a) {
    auto diag = [&](int p) { return Poly::var(a_name(idx, a, {p, p + 1}, {p, p + 1})); };
    add(diag(1), Poly::var(b_name(idx, a, {1, 2}, {1, n})));
    for (int i = 2; i <= n - 2; ++i)
      add(diag(i), Poly::var(a_name(idx, a, {i, i + 1}, {1, n})) + Poly::var(b_name(idx, a, {i, i + 1}, {1, n})));
    add(diag(n - 1), Poly::var(b_name(idx, a, {n - 1, n}, {1, n})));
  }
  return out;
}

std::map<std::string, Poly> solve_relations(const std::vector<Poly>& relations) {
  MonomialColumns cols;
  cols.add(relations);
  cols.freeze();
  RowReducer reducer(cols.size());
  for (const auto& r : relations) {
    if (r.degree() > 1) throw std::invalid_argument("solve_relations: nonlinear relation " + r.to_string());
    reducer.insert(*cols.encode(r));
  }
  std::map<std::string, Poly> out;
  for (const auto& row : reducer.rows()) {
    Poly lead = cols.decode({row.front()});
    if (lead.is_constant()) throw std::invalid_argument("solve_relations: inconsistent relations");
    const std::string name = *lead.variables().begin();
    out[name] = -cols.decode(SparseRow(row.begin() + 1, row.end()));
  }
  return out;
}

PolyTable substitute_table(const PolyTable& table, const std::map<std::string, Poly>& values) {
  return table.map_coefficients<Poly>([&](const Poly& p) { return p.substitute(values); });
}

ScalarTable evaluate_table(const PolyTable& table, const std::map<std::string, Scalar>& values) {
  return table.map_coefficients<Scalar>([&](const Poly& p) { return p.evaluate(values); });
}

std::vector<Poly> residue_polynomials(const PolyTable& table, Execution exec) {
  std::vector<Poly> out;
  for (const auto& r : leibniz_residues(table, exec))
    for (const auto& e : r.value) out.push_back(e.coef);
  return out;
}

ResidueReport derive_relations(int n, int f, std::uint64_t seed, std::size_t sample_points) {
  check_shape(n, f, 6);
  PairIndex idx(n);
  ResidueReport report;
  report.n = n;
  report.f = f;
  report.seed = seed;

  const PolyTable generic = generic_extension(n, f);
  report.labels = generic.labels();
  report.residues = leibniz_residues(generic, Execution::parallel);
  std::vector<Poly> residues;
  for (const auto& r : report.residues)
    for (const auto& e : r.value) residues.push_back(e.coef);

  // Linear part.
  std::vector<Poly> linear;
  for (const auto& p : residues)
    if (p.is_homogeneous(1)) linear.push_back(p);
  const auto stated = stated_linear_relations(n, f);
  std::vector<Poly> stated_forms;
  for (const auto& s : stated) stated_forms.push_back(s.form);
  {
    MonomialColumns cols;
    cols.add(linear);
    cols.add(stated_forms);
    cols.freeze();
    PolySpan extracted(cols, linear);
    PolySpan expected(cols, stated_forms);
    report.linear_relations = extracted.basis();
    for (const auto& s : stated) {
      if (extracted.contains(s.form)) continue;
      (s.kind == RelationKind::left_action ? report.missing_left_action : report.missing_generator_products)
          .push_back(s.form);
    }
    for (const auto& p : report.linear_relations)
      if (!expected.contains(p)) report.unexplained_linear.push_back(p);
  }

  // Quadratic part.
  const auto solution = solve_relations(stated_forms);
  std::vector<Poly> substituted;
  for (const auto& p : residues) substituted.push_back(p.substitute(solution));
  report.quadratic_residuals = distinct_up_to_scale(substituted);

  const auto restrictions = stated_restrictions(n, f);
  std::vector<Poly> products;
  for (const auto& r : restrictions) products.push_back(r.product());
  std::vector<Poly> with_eigen = products;
  for (const auto& e : eigenvalue_products(idx, f, build_master(idx, f, [&] {
         std::vector<RightAction> acts;
         for (int a = 1; a <= f; ++a) acts.push_back(generic_right_action(idx, a));
         return acts;
       }())))
    with_eigen.push_back(e.product);
  {
    MonomialColumns cols;
    cols.add(report.quadratic_residuals);
    cols.add(with_eigen);
    cols.freeze();
    PolySpan restriction_span(cols, products);
    PolySpan eigen_span(cols, with_eigen);
    for (const auto& p : report.quadratic_residuals) {
      if (restriction_span.contains(p))
        report.restriction_residuals.push_back(p);
      else if (eigen_span.contains(p))
        report.eigenvalue_residuals.push_back(p);
      else if (generator_set(p).size() > 1)
        report.cross_generator_residuals.push_back(p);
      else
        report.unexplained_quadratic.push_back(p);
    }
  }

  // Specialization to vanishing diagonal sums.
  const auto special = non_lie_specialization(idx, f);
  std::vector<Poly> special_products;
  for (const auto& p : products) special_products.push_back(p.substitute(special));
  special_products = distinct_up_to_scale(special_products);
  std::vector<Poly> special_residuals;
  for (const auto& p : report.quadratic_residuals) special_residuals.push_back(p.substitute(special));
  report.specialized_residuals = distinct_up_to_scale(special_residuals);
  {
    MonomialColumns cols;
    cols.add(report.specialized_residuals);
    cols.add(special_products);
    cols.freeze();
    PolySpan span(cols, special_products);
    for (const auto& p : report.specialized_residuals)
      if (!span.contains(p)) report.specialized_unexplained.push_back(p);
  }

  // Seeded points of the specialized restriction variety.
  Rng rng(seed);
  std::vector<Poly> all = report.specialized_residuals;
  all.insert(all.end(), special_products.begin(), special_products.end());
  const auto variables = sorted_variables(all);
  const LinearClosure closure(special_products);
  const std::size_t max_attempts = sample_points * 20 + 100;
  for (std::size_t attempt = 0; attempt < max_attempts && report.sample_points < sample_points; ++attempt) {
    auto point = sample_zero_set(closure, variables, rng);
    if (!point) continue;
    ++report.sample_points;
    for (const auto& p : report.specialized_residuals)
      if (!p.evaluate(*point).is_zero()) {
        ++report.sample_failures;
        break;
      }
  }
  return report;
}

std::vector<std::string> master_parameter_names(int n, int f) {
  check_shape(n, f, kMaxConcreteN);
  PairIndex idx(n);
  std::vector<std::string> out;
  for (int a = 1; a <= f; ++a) {
    for (int p = 1; p < n; ++p) out.push_back(a_name(idx, a, {p, p + 1}, {p, p + 1}));
    for (auto [row, col] : off_diagonal_positions(n)) out.push_back(a_name(idx, a, row, col));
    for (int p = 1; p < n; ++p) out.push_back(b_name(idx, a, {p, p + 1}, {1, n}));
  }
  for (int a = 1; a <= f; ++a)
    for (int b = 1; b <= f; ++b) out.push_back(s_name(idx, a, b, {1, n}));
  return out;
}

PolyTable master_table(int n, int f) {
  check_shape(n, f, kMaxConcreteN);
  PairIndex idx(n);
  std::vector<RightAction> acts;
  for (int a = 1; a <= f; ++a) acts.push_back(generic_right_action(idx, a));
  return build_master(idx, f, acts);
}

ScalarTable master_extension(const ExtensionSpec& spec) {
  if (spec.n < 3 || spec.n > kMaxConcreteN)
    throw InputError("n = " + std::to_string(spec.n) + " outside 3.." + std::to_string(kMaxConcreteN));
  if (spec.f < 1 || spec.f > spec.n - 1)
    throw InputError("f = " + std::to_string(spec.f) + " outside 1..n-1");
  const auto names = master_parameter_names(spec.n, spec.f);
  std::map<std::string, Scalar> values;
  for (const auto& name : names) values[name] = Scalar(0);
  for (const auto& [name, value] : spec.params) {
    if (values.count(name) == 0) throw InputError("unknown parameter " + name);
    values[name] = value;
  }
  for (const auto& r : stated_restrictions(spec.n, spec.f))
    if (!r.product().evaluate(values).is_zero()) throw InputError("restriction " + r.text + " = 0 violated");

  PairIndex idx(spec.n);
  const PolyTable symbolic = master_table(spec.n, spec.f);
  for (const auto& e : eigenvalue_products(idx, spec.f, symbolic))
    if (!e.product.evaluate(values).is_zero()) throw InputError("condition " + e.text + " = 0 violated");

  ScalarTable table = evaluate_table(symbolic, values);
  auto residues = leibniz_residues(table, Execution::parallel);
  if (!residues.empty()) {
    const auto& r = residues.front();
    throw InputError("Leibniz identity fails on (" + table.label(r.i) + ", " + table.label(r.j) + ", " +
                     table.label(r.k) + ")");
  }
  return table;
}

ExtensionSampler::ExtensionSampler(int n, int f, ExtensionSampleOptions options)
    : n_(n), f_(f), options_(options), table_(master_table(n, f)), closure_([&] {
        if (options.family == ExtensionFamily::non_lie && f > n - 2)
          throw std::invalid_argument("non-Lie extensions need f <= n-2");
        PairIndex idx(n);
        std::vector<Poly> constraints = residue_polynomials(table_);
        if (options.family == ExtensionFamily::lie)
          for (const auto& s : symmetric_coordinates(table_)) constraints.push_back(s);
        if (options.family == ExtensionFamily::non_lie)
          for (int a = 1; a <= f; ++a) constraints.push_back(diagonal_sum(idx, a));
        return LinearClosure(constraints);
      }()) {
  variables_ = master_parameter_names(n, f);
  priority_ = superdiagonal_names(PairIndex(n), f);
}

ExtensionSpec ExtensionSampler::sample(Rng& rng) const {
  PairIndex idx(n_);
  SamplerOptions opts;
  opts.priority = priority_;
  for (std::size_t attempt = 0; attempt < options_.max_attempts; ++attempt) {
    auto point = sample_zero_set(closure_, variables_, rng, opts);
    if (!point) continue;
    if (concrete_diagonal_rank(idx, f_, *point) != static_cast<std::size_t>(f_)) continue;
    ScalarTable t = evaluate_table(table_, *point);
    if (!is_leibniz(t)) continue;
    if (options_.family == ExtensionFamily::non_lie && is_lie(t)) continue;
    ExtensionSpec spec{n_, f_, {}};
    for (const auto& name : variables_) {
      auto it = point->find(name);
      if (it != point->end() && !it->second.is_zero()) spec.params[name] = it->second;
    }
    return spec;
  }
  throw std::runtime_error("no valid extension found in " + std::to_string(options_.max_attempts) + " attempts");
}

ExtensionSpec sample_extension(int n, int f, Rng& rng, const ExtensionSampleOptions& options) {
  return ExtensionSampler(n, f, options).sample(rng);
}

bool verify_eq_3(const ScalarTable& table, int n, int f) {
  PairIndex idx(n);
  if (table.dim() != idx.size() + static_cast<std::size_t>(f))
    throw std::invalid_argument("table dimension does not match n and f");
  if (is_lie(table)) return true;
  const std::size_t top = idx.index(1, n);
  for (int g = 1; g <= f; ++g) {
    const std::size_t x = idx.size() + static_cast<std::size_t>(g - 1);
    if (!table.product(x, top).empty() || !table.product(top, x).empty()) return false;
  }
  return true;
}

std::vector<StructureMatrices> all_structure_matrices(const ScalarTable& ext, int n, int f) {
  std::vector<StructureMatrices> out;
  for (int a = 1; a <= f; ++a) out.push_back(structure_matrices(ext, n, a));
  return out;
}

std::size_t off_diagonal_count(const Matrix& m) {
  std::size_t count = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && !m(r, c).is_zero()) ++count;
  return count;
}

MaximalExtensionReport verify_maximal_extension(int n, std::uint64_t seed, std::size_t samples,
                                                bool corrupt_normalization) {
  if (n < 4 || n > 5) throw std::invalid_argument("maximal extension check needs 4 <= n <= 5");
  const int f = n - 1;
  PairIndex idx(n);
  const std::size_t nil = idx.size();
  MaximalExtensionReport report;
  report.n = n;
  report.normalization_corrupted = corrupt_normalization;

  PolyTable t = generic_extension(n, f);
  RightAction first = generic_right_action(idx, 1);
  for (auto& p : first.superdiagonal) p = Poly();
  first.superdiagonal.front() = Poly(1);
  if (corrupt_normalization) first.superdiagonal.back() = Poly(-1);
  fill_right_action(t, idx, nil, first);

  const LinearClosure closure(residue_polynomials(t));
  if (!closure.consistent()) return report;
  const PolyTable reduced = substitute_table(t, closure.solved());
  for (const auto& r : symmetric_parts(reduced))
    for (const auto& e : r.value)
      report.surviving_symmetric_parts.push_back("[" + reduced.label(r.i) + "," + reduced.label(r.j) + "]+[" +
                                                 reduced.label(r.j) + "," + reduced.label(r.i) + "] has " +
                                                 reduced.label(e.index) + " coefficient " + e.coef.to_string());
  report.symbolic_forced_lie = report.surviving_symmetric_parts.empty();

  std::vector<Poly> coefficients;
  for (std::size_t i = 0; i < reduced.dim(); ++i)
    for (std::size_t j = 0; j < reduced.dim(); ++j)
      for (const auto& e : reduced.product(i, j)) coefficients.push_back(e.coef);
  coefficients.insert(coefficients.end(), closure.remaining().begin(), closure.remaining().end());
  const auto variables = sorted_variables(coefficients);
  SamplerOptions opts;
  for (const auto& name : superdiagonal_names(idx, f))
    if (std::find(variables.begin(), variables.end(), name) != variables.end()) opts.priority.push_back(name);

  Rng rng(seed);
  const std::size_t max_attempts = corrupt_normalization ? samples * 5 : samples * 50 + 100;
  for (std::size_t attempt = 0; attempt < max_attempts && report.samples < samples; ++attempt) {
    auto point = sample_zero_set(closure, variables, rng, opts);
    if (!point) {
      ++report.rejected_attempts;
      continue;
    }
    ScalarTable concrete = evaluate_table(reduced, *point);
    std::vector<Vector> diagonals;
    for (int a = 1; a <= f; ++a) diagonals.push_back(superdiagonal(structure_matrices(concrete, n, a).a, n));
    if (nil_independent_count(diagonals) != static_cast<std::size_t>(f)) {
      ++report.rejected_attempts;
      continue;
    }
    ++report.samples;
    if (is_lie(concrete)) ++report.lie_samples;  // is_lie also checks the Leibniz identity
  }
  return report;
}

}  // namespace leibniz
