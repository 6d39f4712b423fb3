#include "leibniz/scalar.hpp"

#include <cctype>
#include <ostream>

namespace leibniz {

namespace {

std::string rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Reads [digits] or [digits/digits] starting at pos; sign handled by caller.
bool read_unsigned_rational(std::string_view s, std::size_t& pos, mpq_class& out) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) return false;
  mpz_class num(std::string(s.substr(start, pos - start)));
  mpz_class den = 1;
  if (pos < s.size() && s[pos] == '/') {
    std::size_t dstart = ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) return false;
    den = mpz_class(std::string(s.substr(dstart, pos - dstart)));
    if (den == 0) return false;
  }
  out = mpq_class(num, den);
  out.canonicalize();
  return true;
}

[[noreturn]] void bad_scalar(std::string_view text) {
  throw InputError("malformed scalar '" + std::string(text) + "'");
}

}  // namespace

Scalar::Scalar(long num, long den) : re_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return rational_text(re_);
  std::string imag;
  mpq_class mag = abs(im_);
  imag = (mag == 1) ? "i" : rational_text(mag) + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return rational_text(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

Scalar Scalar::parse(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) bad_scalar(text);

  std::size_t pos = 0;
  auto read_sign = [&](bool required) -> int {
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) return s[pos++] == '-' ? -1 : 1;
    if (required) bad_scalar(text);
    return 1;
  };
  // One signed term: rational, rational*i, or i.
  auto read_term = [&](bool sign_required, mpq_class& value, bool& imaginary) {
    int sign = read_sign(sign_required);
    imaginary = false;
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      value = sign;
      imaginary = true;
      return;
    }
    if (!read_unsigned_rational(s, pos, value)) bad_scalar(text);
    if (sign < 0) value = -value;
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != 'i') bad_scalar(text);
      ++pos;
      imaginary = true;
    }
  };

  mpq_class first;
  bool first_im = false;
  read_term(false, first, first_im);
  if (pos == s.size()) return first_im ? Scalar(mpq_class(0), first) : Scalar(first);
  if (first_im) bad_scalar(text);
  mpq_class second;
  bool second_im = false;
  read_term(true, second, second_im);
  if (!second_im || pos != s.size()) bad_scalar(text);
  return Scalar(first, second);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar scalar_arith(ArithOp op, const Scalar& x, const Scalar& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
    case ArithOp::neg: return -x;
  }
  throw std::logic_error("unknown arithmetic op");
}

}  // namespace leibniz
