#ifndef POLYZETA_MONOMIAL_HPP
#define POLYZETA_MONOMIAL_HPP

#include <complex>
#include <span>
#include <vector>

#include "polyzeta/fan.hpp"
#include "polyzeta/linalg.hpp"
#include "polyzeta/polynomial.hpp"

namespace polyzeta {

/// psi_M: z -> (z^{M e_1}, ..., z^{M e_n}); column k of M is the exponent of
/// the k-th output coordinate. A |det M|-fold covering of the torus.
struct MonomialMap {
  IntMatrix matrix;
  Int covering_degree = 0;

  explicit MonomialMap(IntMatrix m);
};

std::vector<std::complex<double>> apply(const MonomialMap& map, std::span<const std::complex<double>> point);
std::vector<GaussianRational> apply(const MonomialMap& map, std::span<const GaussianRational> point);

// psi_M o psi_N, whose matrix is N M.
MonomialMap compose(const MonomialMap& m, const MonomialMap& n);

struct JacobianMonomial {
  Int det = 0;
  IntVector exponents;  // ||row_i(A)|| - 1
};

// det D(psi_A) = det A * prod x_i^{||u_i|| - 1}, u_i the rows of A.
JacobianMonomial jacobian_exponents(const IntMatrix& a);

// f o psi_M: every exponent mu becomes M mu.
Polynomial transform(const Polynomial& f, const IntMatrix& m);

// x^{-by} * f
Polynomial divide_by_monomial(const Polynomial& f, const Exponent& by);

struct VertexFactorization {
  Exponent vertex;   // the face of NP(f) dual to sigma
  Exponent b_image;  // N^t vertex = (nu_{u_1}(f), ..., nu_{u_n}(f))
  Polynomial h;      // f o psi_{N^t} = x^{b_image} h, h(0) != 0
};

VertexFactorization factor_vertex(const Polynomial& f, const RationalCone& sigma);

// Checks (f o psi_{N^t}) restricted to b_image + <e_i : i not in J> against
// f_{F_tau} o psi_{N^t} for the face tau of sigma spanned by the rays in J,
// and returns h_tau = x^{-b_image} f_{F_tau} o psi_{N^t}.
Polynomial face_transform_check(const Polynomial& f, const RationalCone& sigma, const std::vector<std::size_t>& ray_ids);

}  // namespace polyzeta

#endif
