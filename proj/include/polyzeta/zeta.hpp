#ifndef POLYZETA_ZETA_HPP
#define POLYZETA_ZETA_HPP

#include <complex>
#include <vector>

#include "polyzeta/polynomial.hpp"

namespace polyzeta {

/// phi(x) = prod_i (1 - |x_i|^2 / R^2)^p on the polydisc |x_i| <= R, 0 outside.
struct BumpSpec {
  double radius = 1.0;
  int power = 1;

  double operator()(double modulus) const;
};

/// Midpoint nodes per complex variable: `radial` in |x| and `angular` in arg x.
struct QuadratureGrid {
  int radial = 64;
  int angular = 64;
};

struct ZetaSample {
  std::complex<double> s;
  std::complex<double> value;
  QuadratureGrid grid;
  double est_error = 0;
};

// pi p! / prod_{j=1}^{p+1} (m s + j): the integral of (1 - |x|^2)^p |x|^{2ms}
// over the unit disc.
std::complex<double> monomial_reference(int m, int p, std::complex<double> s);

// Tensor polar midpoint rule for the integral of phi |f|^{2s} over C^n, n <= 2,
// Re(s) > 0. est_error compares with the run on the halved grid.
ZetaSample zeta_quadrature(const Polynomial& f, const BumpSpec& bump, std::complex<double> s,
                           const QuadratureGrid& grid);

struct ProbePoint {
  std::complex<double> s;
  std::vector<std::complex<double>> values;  // radial N, 2N, 4N
  double single_change = 0;                  // |Q(2N) - Q(N)| / |Q(2N)|
  double extrapolated_change = 0;            // geometric tail of the differences, relative
  bool stable = false;
};

struct ProbeReport {
  std::vector<ProbePoint> points;
  bool all_stable = true;
};

// Grid-stability test of the quadrature at points with possibly negative
// real part. A point is unstable when the value is not finite, the
// differences under radial doubling do not shrink, or their geometric tail
// exceeds kProbeThreshold of the value.
ProbeReport holomorphy_probe(const Polynomial& f, const BumpSpec& bump, const std::vector<std::complex<double>>& s_line,
                             const QuadratureGrid& grid = {16, 32});

constexpr double kProbeThreshold = 0.1;

}  // namespace polyzeta

#endif
