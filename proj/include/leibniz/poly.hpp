#pragma once

#include "leibniz/scalar.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// Power product of named indeterminates, sorted by name, exponents > 0.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order: total degree first, then lexicographic with
/// indeterminates ranked by name ("a" before "b").
struct GradedLexLess {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

/// Sparse multivariate polynomial over Q(i).
///
/// Terms with zero coefficient are never stored, so the zero polynomial has an
/// empty term map and structural equality coincides with equality.
class Poly {
 public:
  using TermMap = std::map<Monomial, Scalar, GradedLexLess>;

  Poly() = default;
  Poly(Scalar constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Scalar(constant)) {}  // NOLINT(google-explicit-constructor)

  static Poly var(const std::string& name);
  static Poly monomial(Monomial m, Scalar coef);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Scalar constant_term() const;
  /// -1 for the zero polynomial.
  int degree() const;
  /// True when every term has total degree exactly d.
  bool is_homogeneous(unsigned d) const;
  /// Coefficient of a single indeterminate (degree-1 monomial).
  Scalar linear_coefficient(const std::string& name) const;
  std::set<std::string> variables() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Exact evaluation; throws InputError naming the first unbound indeterminate.
  Scalar evaluate(const std::map<std::string, Scalar>& assignment) const;
  /// Replaces the listed indeterminates; others are left symbolic.
  Poly substitute(const std::map<std::string, Poly>& values) const;
  Poly substitute(const std::map<std::string, Scalar>& values) const;

  /// Scales so the leading (graded-lex greatest) coefficient is 1.
  Poly monic() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);

  TermMap terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Poly& p);

enum class PolyOp { add, sub, mul, neg };

/// Dispatching form of the ring operations. For neg, q is ignored.
Poly poly_arith(PolyOp op, const Poly& p, const Poly& q);

inline Scalar poly_eval(const Poly& p, const std::map<std::string, Scalar>& assignment) {
  return p.evaluate(assignment);
}

}  // namespace leibniz
