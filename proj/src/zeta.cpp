#include "polyzeta/zeta.hpp"

#include <cmath>

namespace polyzeta {

namespace {

using Complex = std::complex<double>;

struct Node {
  Complex x;
  double weight;
};

std::vector<Node> nodes(const BumpSpec& bump, int radial, int angular) {
  std::vector<Node> out;
  const double dr = bump.radius / radial, dt = 2 * M_PI / angular;
  for (int a = 0; a < radial; ++a) {
    double r = (a + 0.5) * dr;
    double w = r * dr * dt * bump(r);
    for (int b = 0; b < angular; ++b) out.push_back({std::polar(r, (b + 0.5) * dt), w});
  }
  return out;
}

// table[node][term] = x^{exponent of the term in this variable}
std::vector<std::vector<Complex>> powers(const std::vector<Node>& ns, const std::vector<Int>& exps) {
  std::vector<std::vector<Complex>> table(ns.size(), std::vector<Complex>(exps.size()));
  for (std::size_t k = 0; k < ns.size(); ++k)
    for (std::size_t t = 0; t < exps.size(); ++t) {
      Complex z = 1.0, b = ns[k].x;
      for (Int e = exps[t]; e; e >>= 1, b *= b)
        if (e & 1) z *= b;
      table[k][t] = z;
    }
  return table;
}

Complex modulus_power(Complex f, Complex s) {
  double n2 = std::norm(f);
  if (n2 == 0) return s.real() > 0 ? Complex(0) : Complex(INFINITY);
  if (s.imag() == 0) return std::pow(n2, s.real());
  return std::exp(s * std::log(n2));
}

Complex integrate(const Polynomial& f, const BumpSpec& bump, Complex s, int radial, int angular) {
  const std::size_t n = f.dim();
  std::vector<Complex> coef;
  std::vector<std::vector<Int>> exps(n);
  for (const auto& [e, c] : f.terms()) {
    coef.push_back(c.to_complex());
    for (std::size_t i = 0; i < n; ++i) exps[i].push_back(e[i]);
  }
  const std::size_t terms = coef.size();
  const auto ns = nodes(bump, radial, angular);
  Complex total = 0;
  if (n == 1) {
    auto p = powers(ns, exps[0]);
    for (std::size_t a = 0; a < ns.size(); ++a) {
      Complex v = 0;
      for (std::size_t t = 0; t < terms; ++t) v += coef[t] * p[a][t];
      total += ns[a].weight * modulus_power(v, s);
    }
    return total;
  }
  auto p1 = powers(ns, exps[0]);
  auto p2 = powers(ns, exps[1]);
  std::vector<Complex> partial(terms);
  for (std::size_t a = 0; a < ns.size(); ++a) {
    for (std::size_t t = 0; t < terms; ++t) partial[t] = coef[t] * p1[a][t];
    Complex row = 0;
    for (std::size_t b = 0; b < ns.size(); ++b) {
      Complex v = 0;
      for (std::size_t t = 0; t < terms; ++t) v += partial[t] * p2[b][t];
      row += ns[b].weight * modulus_power(v, s);
    }
    total += ns[a].weight * row;
  }
  return total;
}

void validate(const Polynomial& f, const BumpSpec& bump, const QuadratureGrid& grid) {
  if (f.dim() == 0 || f.dim() > 2) throw DomainError("quadrature supports one or two variables");
  if (f.has_negative_exponents()) throw DomainError("quadrature needs a polynomial");
  if (!(bump.radius > 0) || bump.power < 0) throw DomainError("bump needs R > 0 and p >= 0");
  if (grid.radial < 1 || grid.angular < 1) throw DomainError("grid sizes must be positive");
}

}  // namespace

double BumpSpec::operator()(double modulus) const {
  if (modulus > radius) return 0;
  double t = 1 - (modulus * modulus) / (radius * radius);
  return std::pow(t, power);
}

std::complex<double> monomial_reference(int m, int p, std::complex<double> s) {
  if (m < 1 || p < 0) throw DomainError("monomial_reference needs m >= 1 and p >= 0");
  Complex value = M_PI;
  for (int j = 1; j <= p + 1; ++j) {
    Complex den = static_cast<double>(m) * s + static_cast<double>(j);
    if (den == 0.0) throw DomainError("s = -" + std::to_string(j) + "/" + std::to_string(m) + " is a pole");
    value /= den;
    if (j <= p) value *= j;
  }
  return value;
}

ZetaSample zeta_quadrature(const Polynomial& f, const BumpSpec& bump, std::complex<double> s,
                           const QuadratureGrid& grid) {
  validate(f, bump, grid);
  if (!(s.real() > 0)) throw DomainError("quadrature needs Re(s) > 0");
  ZetaSample out;
  out.s = s;
  out.grid = grid;
  out.value = integrate(f, bump, s, grid.radial, grid.angular);
  Complex coarse = integrate(f, bump, s, std::max(1, grid.radial / 2), std::max(1, grid.angular / 2));
  out.est_error = std::abs(out.value - coarse);
  return out;
}

ProbeReport holomorphy_probe(const Polynomial& f, const BumpSpec& bump, const std::vector<std::complex<double>>& s_line,
                             const QuadratureGrid& grid) {
  validate(f, bump, grid);
  ProbeReport report;
  for (const auto& s : s_line) {
    ProbePoint pt;
    pt.s = s;
    for (int k : {1, 2, 4}) pt.values.push_back(integrate(f, bump, s, grid.radial * k, grid.angular));
    const Complex q = pt.values[2];
    bool finite = true;
    for (const auto& v : pt.values) finite &= std::isfinite(v.real()) && std::isfinite(v.imag());
    const double d1 = std::abs(pt.values[1] - pt.values[0]), d2 = std::abs(pt.values[2] - pt.values[1]);
    const double scale = std::abs(q);
    if (!finite || scale == 0) {
      pt.single_change = pt.extrapolated_change = INFINITY;
      pt.stable = false;
    } else {
      pt.single_change = d1 / std::abs(pt.values[1]);
      double ratio = d1 > 0 ? d2 / d1 : 0;
      pt.extrapolated_change = ratio < 1 ? d2 / (1 - ratio) / scale : INFINITY;
      pt.stable = d2 <= 1e-12 * scale || pt.extrapolated_change <= kProbeThreshold;
    }
    report.all_stable &= pt.stable;
    report.points.push_back(std::move(pt));
  }
  return report;
}

}  // namespace polyzeta
