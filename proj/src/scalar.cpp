#include "bigraded/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bigraded {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  Rational n = b.norm();
  // a / b = a * conj(b) / |b|^2
  GaussianRational num = a * b.conj();
  return {num.re() / n, num.im() / n};
}

GaussianRational inverse(const GaussianRational& x) { return GaussianRational(1) / x; }

namespace {

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void skip_spaces() {
    while (!done() && s[pos] == ' ') ++pos;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad scalar \"" + s + "\" at offset " + std::to_string(pos) +
                                ": " + why);
  }
};

// RAT ::= '-'? DIGITS ('/' DIGITS)?
Rational parse_rational(Cursor& c) {
  bool neg = false;
  if (c.peek() == '-') {
    neg = true;
    ++c.pos;
  }
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected digits");
  size_t start = c.pos;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  boost::multiprecision::mpz_int num(c.s.substr(start, c.pos - start));
  boost::multiprecision::mpz_int den(1);
  if (c.peek() == '/') {
    ++c.pos;
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected denominator");
    size_t dstart = c.pos;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    den = boost::multiprecision::mpz_int(c.s.substr(dstart, c.pos - dstart));
    if (den == 0) c.fail("zero denominator");
  }
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

}  // namespace

std::string format_scalar(const GaussianRational& x) {
  if (x.im() == 0) return format_rational(x.re());
  std::string imag = format_rational(x.im()) + "i";
  if (x.re() == 0) return imag;
  if (x.im() > 0) return format_rational(x.re()) + "+" + imag;
  return format_rational(x.re()) + imag;  // imag already carries the '-'
}

GaussianRational parse_scalar(const std::string& text) {
  Cursor c{text};
  c.skip_spaces();
  Rational first = parse_rational(c);
  if (c.peek() == 'i') {
    ++c.pos;
    c.skip_spaces();
    if (!c.done()) c.fail("trailing characters");
    return {Rational(0), first};
  }
  c.skip_spaces();
  if (c.done()) return GaussianRational(first);
  char sign = c.peek();
  if (sign != '+' && sign != '-') c.fail("expected '+', '-' or 'i'");
  ++c.pos;
  c.skip_spaces();
  Rational second = parse_rational(c);
  if (sign == '-') second = -second;
  if (c.peek() != 'i') c.fail("expected 'i' after imaginary part");
  ++c.pos;
  c.skip_spaces();
  if (!c.done()) c.fail("trailing characters");
  return {first, second};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << format_scalar(x);
}

}  // namespace bigraded
