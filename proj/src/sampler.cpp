#include "leibniz/sampler.hpp"

#include "leibniz/linalg.hpp"

#include <algorithm>
#include <set>

namespace leibniz {

Scalar random_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::bernoulli_distribution negative(0.5);
  long p = num(rng);
  return Scalar(negative(rng) ? -p : p, den(rng));
}

std::vector<Poly> distinct_up_to_scale(const std::vector<Poly>& polys) {
  std::map<std::string, Poly> unique;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    Poly m = p.monic();
    unique.emplace(m.to_string(), std::move(m));
  }
  std::vector<Poly> out;
  out.reserve(unique.size());
  for (auto& [text, p] : unique) out.push_back(std::move(p));
  return out;
}

LinearClosure::LinearClosure(std::vector<Poly> constraints) : remaining_(std::move(constraints)) {
  remaining_ = distinct_up_to_scale(remaining_);
  close();
}

Poly LinearClosure::apply(const Poly& p) const { return p.substitute(solved_); }

void LinearClosure::substitute_all(const std::map<std::string, Poly>& values) {
  for (auto& p : remaining_) p = p.substitute(values);
  for (auto& [name, expr] : solved_) expr = expr.substitute(values);
  for (const auto& [name, expr] : values) solved_[name] = expr;
  remaining_ = distinct_up_to_scale(remaining_);
}

void LinearClosure::close() {
  while (consistent_) {
    if (remaining_.empty()) return;
    // Columns: nonlinear monomials, then indeterminates by name, then the
    // constant. Pivots in the linear block are affine consequences.
    std::set<Monomial> nonlinear;
    std::set<std::string> names;
    for (const auto& p : remaining_)
      for (const auto& [m, c] : p.terms()) {
        if (total_degree(m) > 1)
          nonlinear.insert(m);
        else if (!m.empty())
          names.insert(m.front().first);
      }
    std::map<Monomial, std::size_t> col;
    for (const auto& m : nonlinear) col.emplace(m, col.size());
    const std::size_t first_linear = col.size();
    std::vector<std::string> columns(names.begin(), names.end());
    for (const auto& v : columns) col.emplace(Monomial{{v, 1}}, col.size());
    const std::size_t constant = col.size();
    col.emplace(Monomial{}, constant);

    RowReducer reducer(constant + 1);
    for (const auto& p : remaining_) {
      SparseRow row;
      for (const auto& [m, c] : p.terms()) row.emplace_back(col.at(m), c);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      reducer.insert(row);
    }
    std::map<std::string, Poly> values;
    for (const auto& row : reducer.rows()) {
      const std::size_t pivot = row.front().first;
      if (pivot < first_linear) continue;
      if (pivot == constant) {
        consistent_ = false;
        return;
      }
      Poly expr;
      for (std::size_t k = 1; k < row.size(); ++k) {
        const auto& [c, v] = row[k];
        expr -= (c == constant) ? Poly(v) : Poly::var(columns[c - first_linear]) * v;
      }
      values.emplace(columns[pivot - first_linear], std::move(expr));
    }
    if (values.empty()) return;
    substitute_all(values);
  }
}

void LinearClosure::assign(const std::string& name, const Scalar& value) {
  const bool constrained = std::any_of(remaining_.begin(), remaining_.end(),
                                       [&](const Poly& p) { return p.variables().count(name) != 0; });
  if (!constrained) {
    // Nothing left to close; only the solved expressions change.
    const std::map<std::string, Poly> values{{name, Poly(value)}};
    for (auto& [solved_name, expr] : solved_) expr = expr.substitute(values);
    solved_[name] = Poly(value);
    return;
  }
  substitute_all({{name, Poly(value)}});
  close();
}

void LinearClosure::assign(const std::map<std::string, Scalar>& values) {
  std::map<std::string, Poly> polys;
  for (const auto& [name, value] : values) polys.emplace(name, Poly(value));
  substitute_all(polys);
  close();
}

std::optional<std::map<std::string, Scalar>> sample_zero_set(const LinearClosure& base,
                                                             const std::vector<std::string>& variables,
                                                             Rng& rng, const SamplerOptions& options) {
  if (!base.consistent()) return std::nullopt;
  LinearClosure closure = base;
  std::bernoulli_distribution zero(options.zero_probability);
  auto draw = [&]() { return zero(rng) ? Scalar(0) : random_rational(rng); };

  std::map<std::string, Scalar> fixed;
  for (const auto& name : options.priority)
    if (closure.solved().count(name) == 0) fixed[name] = draw();
  if (!fixed.empty()) {
    closure.assign(fixed);
    if (!closure.consistent()) return std::nullopt;
  }
  for (const auto& name : variables) {
    if (fixed.count(name) != 0) continue;
    if (closure.solved().count(name) != 0) continue;
    Scalar value = draw();
    fixed[name] = value;
    closure.assign(name, value);
    if (!closure.consistent()) return std::nullopt;
  }
  if (!closure.remaining().empty()) return std::nullopt;

  std::map<std::string, Scalar> point = fixed;
  for (const auto& [name, expr] : closure.solved()) {
    Poly value = expr.substitute(fixed);
    if (!value.is_constant()) return std::nullopt;  // depends on a variable outside the list
    point[name] = value.constant_term();
  }
  return point;
}

std::optional<std::map<std::string, Scalar>> sample_zero_set(const std::vector<Poly>& constraints,
                                                             const std::vector<std::string>& variables,
                                                             Rng& rng, const SamplerOptions& options) {
  std::vector<std::string> all = variables;
  for (const auto& p : constraints)
    for (const auto& v : p.variables())
      if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  auto point = sample_zero_set(LinearClosure(constraints), all, rng, options);
  if (!point) return std::nullopt;
  for (const auto& p : constraints)
    if (!p.evaluate(*point).is_zero()) return std::nullopt;
  return point;
}

}  // namespace leibniz
