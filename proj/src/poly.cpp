#include "leibniz/poly.hpp"

#include <algorithm>
#include <ostream>

namespace leibniz {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [name, e] : m) d += e;
  return d;
}

bool GradedLexLess::operator()(const Monomial& x, const Monomial& y) const {
  unsigned dx = total_degree(x);
  unsigned dy = total_degree(y);
  if (dx != dy) return dx < dy;
  std::size_t k = 0;
  for (; k < x.size() && k < y.size(); ++k) {
    if (x[k].first != y[k].first) {
      // The monomial carrying the earlier-ranked indeterminate is larger.
      return x[k].first > y[k].first;
    }
    if (x[k].second != y[k].second) return x[k].second < y[k].second;
  }
  return x.size() < y.size();
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

Poly power(const Poly& base, unsigned e) {
  Poly result(1);
  for (unsigned k = 0; k < e; ++k) result *= base;
  return result;
}

}  // namespace

Poly::Poly(Scalar constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

Poly Poly::var(const std::string& name) { return monomial({{name, 1}}, Scalar(1)); }

Poly Poly::monomial(Monomial m, Scalar coef) {
  Poly p;
  std::sort(m.begin(), m.end());
  p.add_term(m, coef);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

bool Poly::is_homogeneous(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

Scalar Poly::linear_coefficient(const std::string& name) const {
  auto it = terms_.find(Monomial{{name, 1}});
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) out.insert(name);
  return out;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Scalar Poly::evaluate(const std::map<std::string, Scalar>& assignment) const {
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (const auto& [name, e] : m) {
      auto it = assignment.find(name);
      if (it == assignment.end()) throw InputError(name + " unbound");
      for (unsigned k = 0; k < e; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

Poly Poly::substitute(const std::map<std::string, Poly>& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    Poly factor(c);
    for (const auto& [name, e] : m) {
      auto it = values.find(name);
      if (it == values.end()) {
        kept.emplace_back(name, e);
      } else {
        factor *= power(it->second, e);
      }
    }
    if (kept.empty()) {
      out += factor;
    } else {
      out += factor * monomial(std::move(kept), Scalar(1));
    }
  }
  return out;
}

Poly Poly::substitute(const std::map<std::string, Scalar>& values) const {
  std::map<std::string, Poly> lifted;
  for (const auto& [name, v] : values) lifted.emplace(name, Poly(v));
  return substitute(lifted);
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return *this * terms_.rbegin()->second.inverse();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest term first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coef = c.to_string();
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) coef = (-c).to_string();
    if (!c.is_real()) coef = "(" + coef + ")";
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    std::string mono;
    for (const auto& [name, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly poly_arith(PolyOp op, const Poly& p, const Poly& q) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    case PolyOp::neg: return -p;
  }
  throw std::logic_error("unknown poly op");
}

}  // namespace leibniz
