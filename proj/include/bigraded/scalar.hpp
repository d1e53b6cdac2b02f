#ifndef BIGRADED_SCALAR_HPP
#define BIGRADED_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <iosfwd>
#include <string>

namespace bigraded {

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backend.
using Rational = boost::multiprecision::mpq_rational;

/// Element of the field Q(i): re + im*i with exact rational parts.
///
/// The smallest conjugation-closed field containing every constant used by
/// the built-in examples. All operations are exact; there is no rounding
/// anywhere in this library.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(long v) : re_(v), im_(0) {}
  explicit GaussianRational(Rational r) : re_(std::move(r)), im_(0) {}
  GaussianRational(Rational r, Rational i) : re_(std::move(r)), im_(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  /// re^2 + im^2, the norm form of Q(i); zero iff the element is zero.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    *this = *this / o;
    return *this;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

 private:
  Rational re_, im_;
};

GaussianRational inverse(const GaussianRational& x);

/// Renders a scalar in the text grammar shared by every file format:
///   RAT ::= '-'? DIGITS ('/' DIGITS)?
///   SCALAR ::= RAT | RAT 'i' | RAT ('+'|'-') RAT 'i'
/// Examples: "3/2", "-1i", "2+1/3i". The output is canonical (lowest terms,
/// no spaces) so serialized files are byte-stable.
std::string format_scalar(const GaussianRational& x);

/// Parses the grammar above. Throws std::invalid_argument on malformed input.
GaussianRational parse_scalar(const std::string& text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace bigraded

#endif  // BIGRADED_SCALAR_HPP
