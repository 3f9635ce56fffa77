#ifndef POLYZETA_POLYNOMIAL_HPP
#define POLYZETA_POLYNOMIAL_HPP

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyzeta/arith.hpp"

namespace polyzeta {

using Exponent = IntVector;

/// Sparse multivariate Laurent polynomial in x1..xn with Gaussian-rational
/// coefficients. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, GaussianRational>;

  explicit Polynomial(std::size_t dim = 0) : dim_(dim) {}

  static Polynomial constant(std::size_t dim, const GaussianRational& c);
  static Polynomial monomial(std::size_t dim, const Exponent& e, const GaussianRational& c = 1);
  // x_{index+1}
  static Polynomial variable(std::size_t dim, std::size_t index);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  GaussianRational coefficient(const Exponent& e) const;
  // Coefficient of x^0.
  GaussianRational constant_term() const;
  bool has_negative_exponents() const;

  void add_term(const Exponent& e, const GaussianRational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;
  Polynomial scaled(const GaussianRational& c) const;
  Polynomial pow(unsigned e) const;

  // Formal partial derivative with respect to x_{var+1}.
  Polynomial derivative(std::size_t var) const;

  GaussianRational evaluate(std::span<const GaussianRational> point) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  // Text form accepted by parse_polynomial (for non-negative exponents).
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_;
  TermMap terms_;
};

/// One linear condition normal . x (>= or ==) rhs.
struct LinearConstraint {
  RationalVector normal;
  Rational rhs;
  bool equality = false;
};

/// Rational polyhedral subset of R^n given as an intersection of half-spaces
/// and hyperplanes.
class Region {
 public:
  explicit Region(std::size_t dim) : dim_(dim) {}

  static Region orthant(std::size_t dim);
  // Cone generated by the coordinate vectors e_i, i in indices.
  static Region coordinate_cone(std::size_t dim, const std::vector<std::size_t>& indices);

  Region& add_inequality(RationalVector normal, Rational rhs);
  Region& add_equality(RationalVector normal, Rational rhs);

  std::size_t dim() const { return dim_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  bool contains(const Exponent& point) const;

 private:
  std::size_t dim_;
  std::vector<LinearConstraint> constraints_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Exponents with nonzero coefficient, in lexicographic order.
std::vector<Exponent> support(const Polynomial& f);
// Sum of the terms of f whose exponent lies in the region.
Polynomial restrict_to(const Polynomial& f, const Region& region);
std::vector<Polynomial> gradient(const Polynomial& f);

// Parses text in the variables x1..x<dim>. Accepts sums, products, integer
// powers and parentheses over rational and Gaussian-rational constants.
Polynomial parse_polynomial(std::string_view text, std::size_t dim);

}  // namespace polyzeta

#endif
