#include "polyzeta/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace polyzeta {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

GaussianRational GaussianRational::pow(Int e) const {
  if (e < 0) return GaussianRational(1) / pow(-e);
  GaussianRational result(1), base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im_part;
  if (im_ == 1)
    im_part = "i";
  else if (im_ == -1)
    im_part = "-i";
  else
    im_part = im_.get_str() + "*i";
  if (sgn(re_) == 0) return im_part;
  std::string sep = sgn(im_) < 0 ? "-" : "+";
  Rational mag = abs(im_);
  std::string mag_part = mag == 1 ? "i" : mag.get_str() + "*i";
  return "(" + re_.get_str() + sep + mag_part + ")";
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int gcd(const IntVector& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

IntVector primitive(IntVector v) {
  Int g = gcd(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

IntVector primitive(const RationalVector& v) {
  mpz_class l = 1;
  for (const Rational& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> scaled;
  mpz_class g = 0;
  for (const Rational& q : v) {
    mpz_class z = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    scaled.push_back(z);
  }
  IntVector out;
  for (mpz_class& z : scaled) {
    if (g != 0) z /= g;
    if (!z.fits_slong_p()) throw DomainError("integer overflow in primitive vector");
    out.push_back(z.get_si());
  }
  return out;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int l1(const IntVector& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (Int x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVector scale(const IntVector& a, Int k) {
  IntVector r(a);
  for (Int& x : r) x *= k;
  return r;
}

}  // namespace polyzeta
