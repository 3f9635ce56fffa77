#ifndef POLYZETA_ARITH_HPP
#define POLYZETA_ARITH_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polyzeta {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (wrong dimension, zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Raised when an input does not satisfy the hypotheses of the candidate-pole
// theorem (f(0) != 0, degenerate face).
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, long face_id = -1)
      : Error(what), face_id_(face_id) {}
  long face_id() const { return face_id_; }

 private:
  long face_id_;
};

/// Exact complex number re + im*i with rational parts.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  // |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Integer power; negative exponents invert (throws on zero).
  GaussianRational pow(Int e) const;

  // Rendering accepted back by the polynomial parser: "3/2", "-i", "(1/2+3/4*i)".
  std::string to_string() const;

 private:
  Rational re_, im_;
};

std::string to_string(const Rational& q);
std::string to_string(const IntVector& v);

Int gcd(Int a, Int b);
Int gcd(const IntVector& v);
// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);
// Scales a rational vector to the primitive integer vector on the same ray.
IntVector primitive(const RationalVector& v);
Int dot(const IntVector& a, const IntVector& b);
Rational dot(const RationalVector& a, const IntVector& b);
// Sum of the entries, written ||u|| for normal vectors.
Int l1(const IntVector& v);
RationalVector to_rational(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, Int k);

}  // namespace polyzeta

#endif
