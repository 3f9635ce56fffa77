#ifndef POLYZETA_NONDEG_HPP
#define POLYZETA_NONDEG_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyzeta/newton.hpp"
#include "polyzeta/polynomial.hpp"

namespace polyzeta {

enum class FaceStatus { NonDegenerate, Degenerate, Unknown };
enum class CheckMethod { Monomial, EdgeUnivariate, NumericSearch };
enum class OverallStatus { NonDegenerate, Degenerate, Inconclusive };

std::string to_string(FaceStatus s);
std::string to_string(CheckMethod m);
std::string to_string(OverallStatus s);

/// Outcome of the non-degeneracy test on one face. NonDegenerate is always
/// exact (monomial or edge method); the numeric search can only find
/// Degenerate or give up with Unknown.
struct Verdict {
  std::size_t face_id = 0;
  std::size_t face_dim = 0;
  FaceStatus status = FaceStatus::Unknown;
  CheckMethod method = CheckMethod::Monomial;
  std::vector<std::complex<double>> witness;  // Degenerate only
  double residual = 0;                        // Degenerate only
  int attempts = 0;                           // Unknown only
  double tolerance = 0;                       // Unknown only
};

struct NondegReport {
  std::vector<Verdict> faces;
  OverallStatus overall = OverallStatus::NonDegenerate;
  bool compact_only = true;
};

struct NondegConfig {
  std::uint64_t seed = 1;
  int attempts = 64;
  double tol = 1e-9;
};

// Coefficients c_0..c_d of a univariate polynomial.
using Univariate = std::vector<GaussianRational>;

Univariate derivative(const Univariate& p);
// Monic gcd; the zero polynomial is returned as an empty vector.
Univariate gcd(Univariate a, Univariate b);

// p with f_F = x^{mu0} p(x^d), d the primitive direction of the edge F and
// mu0 the endpoint from which every support point is mu0 + j d, j >= 0.
Univariate edge_univariate(const Polynomial& f, const NewtonPolyhedron& np, std::size_t face_id);

// Randomized damped least squares on {g = 0, grad g = 0} over the torus.
std::optional<std::vector<std::complex<double>>> witness_search(const Polynomial& g, const NondegConfig& cfg,
                                                                std::uint64_t stream = 0);

// max(|g|, |dg/dx_i|) at x.
double residual(const Polynomial& g, const std::vector<std::complex<double>>& x);
// Rounds x to a Gaussian-rational point, takes one exact damped Newton step on
// {g, grad g} and returns the exact max-norm residual there.
double refined_residual(const Polynomial& g, const std::vector<std::complex<double>>& x);

Verdict check_face(const Polynomial& f, const NewtonPolyhedron& np, std::size_t face_id, const NondegConfig& cfg);
// Proper faces only: the polyhedron itself is never checked.
NondegReport check_all(const Polynomial& f, bool compact_only, const NondegConfig& cfg);

constexpr double kRefinedResidualBound = 1e-6;

}  // namespace polyzeta

#endif
