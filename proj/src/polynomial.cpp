#include "polyzeta/polynomial.hpp"

#include <sstream>

namespace polyzeta {

Polynomial Polynomial::constant(std::size_t dim, const GaussianRational& c) {
  return monomial(dim, Exponent(dim, 0), c);
}

Polynomial Polynomial::monomial(std::size_t dim, const Exponent& e, const GaussianRational& c) {
  if (e.size() != dim) throw DomainError("exponent length differs from dimension");
  Polynomial p(dim);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DomainError("variable index out of range");
  Exponent e(dim, 0);
  e[index] = 1;
  return monomial(dim, e);
}

GaussianRational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational Polynomial::constant_term() const { return coefficient(Exponent(dim_, 0)); }

bool Polynomial::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (Int x : e)
      if (x < 0) return true;
  return false;
}

void Polynomial::add_term(const Exponent& e, const GaussianRational& c) {
  if (e.size() != dim_) throw DomainError("exponent length differs from dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.dim_ != dim_) throw DomainError("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.dim_ != dim_) throw DomainError("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (o.dim_ != dim_) throw DomainError("polynomial dimension mismatch");
  Polynomial product(dim_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) product.add_term(add(ea, eb), ca * cb);
  *this = std::move(product);
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(GaussianRational(-1)); }

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  Polynomial out(dim_);
  for (const auto& [e, coef] : terms_) out.add_term(e, coef * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(dim_, 1), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= dim_) throw DomainError("derivative: variable index out of range");
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * GaussianRational(static_cast<long>(e[var])));
  }
  return out;
}

GaussianRational Polynomial::evaluate(std::span<const GaussianRational> point) const {
  if (point.size() != dim_) throw DomainError("evaluate: point has wrong length");
  GaussianRational sum;
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (std::size_t i = 0; i < dim_; ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    sum += t;
  }
  return sum;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != dim_) throw DomainError("evaluate: point has wrong length");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (std::size_t i = 0; i < dim_; ++i)
      if (e[i] != 0) t *= std::pow(point[i], static_cast<int>(e[i]));
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(i + 1);
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    GaussianRational coef = c;
    bool negative = coef.is_real() && sgn(coef.re()) < 0;
    if (negative) coef = -coef;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (mono.empty())
      os << coef.to_string();
    else if (coef == GaussianRational(1))
      os << mono;
    else
      os << coef.to_string() << '*' << mono;
  }
  return os.str();
}

Region Region::orthant(std::size_t dim) {
  Region r(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector n(dim, 0);
    n[i] = 1;
    r.add_inequality(std::move(n), 0);
  }
  return r;
}

Region Region::coordinate_cone(std::size_t dim, const std::vector<std::size_t>& indices) {
  Region r(dim);
  std::vector<bool> in(dim, false);
  for (std::size_t i : indices) {
    if (i >= dim) throw DomainError("coordinate_cone: index out of range");
    in[i] = true;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector n(dim, 0);
    n[i] = 1;
    if (in[i])
      r.add_inequality(std::move(n), 0);
    else
      r.add_equality(std::move(n), 0);
  }
  return r;
}

Region& Region::add_inequality(RationalVector normal, Rational rhs) {
  if (normal.size() != dim_) throw DomainError("region constraint has wrong dimension");
  constraints_.push_back({std::move(normal), std::move(rhs), false});
  return *this;
}

Region& Region::add_equality(RationalVector normal, Rational rhs) {
  if (normal.size() != dim_) throw DomainError("region constraint has wrong dimension");
  constraints_.push_back({std::move(normal), std::move(rhs), true});
  return *this;
}

bool Region::contains(const Exponent& point) const {
  if (point.size() != dim_) throw DomainError("region dimension mismatch");
  for (const auto& c : constraints_) {
    Rational v = dot(c.normal, point);
    if (c.equality ? v != c.rhs : v < c.rhs) return false;
  }
  return true;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)), position_(position) {}

std::vector<Exponent> support(const Polynomial& f) {
  std::vector<Exponent> out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) out.push_back(e);
  return out;
}

Polynomial restrict_to(const Polynomial& f, const Region& region) {
  if (region.dim() != f.dim()) throw DomainError("restrict: region dimension mismatch");
  Polynomial out(f.dim());
  for (const auto& [e, c] : f.terms())
    if (region.contains(e)) out.add_term(e, c);
  return out;
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < f.dim(); ++i) g.push_back(f.derivative(i));
  return g;
}

}  // namespace polyzeta
