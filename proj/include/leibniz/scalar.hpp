#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

/// Thrown for malformed user input (files, flags, parameter sets).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact element of Q(i). Both parts are GMP rationals kept in lowest terms.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form: "p/q", "p/q+r/s*i", "i", "-3/2*i", ...
  std::string to_string() const;
  /// Parses the text form; throws InputError on malformed text.
  static Scalar parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class ArithOp { add, sub, mul, div, neg };

/// Dispatching form of the field operations. For neg, y is ignored.
Scalar scalar_arith(ArithOp op, const Scalar& x, const Scalar& y);

}  // namespace leibniz
