#include "polyzeta/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyzeta/newton.hpp"

namespace polyzeta {

namespace {

std::complex<double> ipow(std::complex<double> z, Int e) {
  if (e < 0) {
    z = 1.0 / z;
    e = -e;
  }
  std::complex<double> r = 1.0;
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

void check_point(const IntMatrix& m, std::size_t j, bool zero) {
  if (!zero) return;
  for (std::size_t k = 0; k < m.cols(); ++k)
    if (m(j, k) < 0) throw DomainError("monomial map: zero coordinate raised to a negative power");
}

RationalVector sum_of(const std::vector<IntVector>& rays, const std::vector<std::size_t>& ids, std::size_t n) {
  RationalVector w(n, 0);
  for (std::size_t id : ids)
    for (std::size_t i = 0; i < n; ++i) w[i] += rays.at(id)[i];
  return w;
}

IntMatrix transpose_of_rays(const RationalCone& sigma) {
  if (sigma.rays.size() != sigma.ambient_dim() || sigma.dim() != sigma.ambient_dim())
    throw DomainError("cone must be full-dimensional and simplicial");
  return sigma.ray_matrix().transpose();
}

}  // namespace

MonomialMap::MonomialMap(IntMatrix m) : matrix(std::move(m)) {
  if (!matrix.is_square()) throw DomainError("monomial map needs a square matrix");
  Int d = determinant(matrix);
  if (d == 0) throw DomainError("monomial map needs a nonsingular matrix");
  covering_degree = d < 0 ? -d : d;
}

std::vector<std::complex<double>> apply(const MonomialMap& map, std::span<const std::complex<double>> point) {
  const IntMatrix& m = map.matrix;
  if (point.size() != m.rows()) throw DomainError("monomial map: dimension mismatch");
  for (std::size_t j = 0; j < point.size(); ++j) check_point(m, j, point[j] == 0.0);
  std::vector<std::complex<double>> out(m.cols(), 1.0);
  for (std::size_t k = 0; k < m.cols(); ++k)
    for (std::size_t j = 0; j < m.rows(); ++j)
      if (m(j, k) != 0) out[k] *= ipow(point[j], m(j, k));
  return out;
}

std::vector<GaussianRational> apply(const MonomialMap& map, std::span<const GaussianRational> point) {
  const IntMatrix& m = map.matrix;
  if (point.size() != m.rows()) throw DomainError("monomial map: dimension mismatch");
  for (std::size_t j = 0; j < point.size(); ++j) check_point(m, j, point[j].is_zero());
  std::vector<GaussianRational> out(m.cols(), GaussianRational(1));
  for (std::size_t k = 0; k < m.cols(); ++k)
    for (std::size_t j = 0; j < m.rows(); ++j)
      if (m(j, k) != 0) out[k] *= point[j].pow(m(j, k));
  return out;
}

MonomialMap compose(const MonomialMap& m, const MonomialMap& n) { return MonomialMap(n.matrix * m.matrix); }

JacobianMonomial jacobian_exponents(const IntMatrix& a) {
  if (!a.is_square()) throw DomainError("jacobian_exponents needs a square matrix");
  JacobianMonomial j;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    IntVector r = a.row(i);
    if (std::any_of(r.begin(), r.end(), [](Int x) { return x < 0; }))
      throw DomainError("jacobian_exponents needs non-negative entries");
    j.exponents.push_back(l1(r) - 1);
  }
  j.det = determinant(a);
  return j;
}

Polynomial transform(const Polynomial& f, const IntMatrix& m) {
  if (!m.is_square() || m.rows() != f.dim()) throw DomainError("transform: matrix size does not match the polynomial");
  if (determinant(m) == 0) throw DomainError("transform needs a nonsingular matrix");
  Polynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) out.add_term(m * e, c);
  return out;
}

Polynomial divide_by_monomial(const Polynomial& f, const Exponent& by) {
  Polynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) out.add_term(subtract(e, by), c);
  return out;
}

VertexFactorization factor_vertex(const Polynomial& f, const RationalCone& sigma) {
  const IntMatrix nt = transpose_of_rays(sigma);
  NewtonPolyhedron np(f);
  std::vector<std::size_t> all(sigma.rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const Face& face = first_meet_locus(np, sum_of(sigma.rays, all, f.dim()));
  if (face.dimension != 0) throw DomainError("cone is not subordinated to f: its dual face is not a vertex");
  RationalCone dual = cone_of_face(np, face.id);
  for (const auto& r : sigma.rays)
    if (!dual.contains(r)) throw DomainError("cone is not subordinated to f: it leaves the cone of its dual vertex");

  VertexFactorization out;
  out.vertex = np.vertices()[face.vertex_ids[0]];
  out.b_image = nt * out.vertex;
  for (std::size_t i = 0; i < sigma.rays.size(); ++i)
    if (Rational(out.b_image[i]) != omega_order(f, to_rational(sigma.rays[i])))
      throw std::logic_error("factor_vertex: image of the dual vertex differs from the ray orders");
  out.h = divide_by_monomial(transform(f, nt), out.b_image);
  if (out.h.has_negative_exponents()) throw std::logic_error("factor_vertex: x^b does not divide f o psi");
  if (out.h.constant_term().is_zero()) throw std::logic_error("factor_vertex: h(0) = 0");
  return out;
}

Polynomial face_transform_check(const Polynomial& f, const RationalCone& sigma, const std::vector<std::size_t>& ray_ids) {
  const std::size_t n = f.dim();
  const IntMatrix nt = transpose_of_rays(sigma);
  for (std::size_t j : ray_ids)
    if (j >= n) throw DomainError("ray index out of range");
  VertexFactorization fv = factor_vertex(f, sigma);
  NewtonPolyhedron np(f);
  const Face& face = first_meet_locus(np, sum_of(sigma.rays, ray_ids, n));

  Region region(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, 0);
    e[i] = 1;
    bool in_j = std::find(ray_ids.begin(), ray_ids.end(), i) != ray_ids.end();
    if (in_j)
      region.add_equality(e, fv.b_image[i]);
    else
      region.add_inequality(e, fv.b_image[i]);
  }
  Polynomial lhs = restrict_to(transform(f, nt), region);
  Polynomial rhs = transform(face_function(f, np, face.id), nt);
  if (!(lhs == rhs)) throw std::logic_error("face_transform_check: restriction identity fails");

  Polynomial h = divide_by_monomial(rhs, fv.b_image);
  for (const auto& [e, c] : h.terms())
    for (std::size_t j : ray_ids)
      if (e[j] != 0) throw std::logic_error("face_transform_check: h_tau depends on a variable indexed by J");
  if (h.constant_term().is_zero()) throw std::logic_error("face_transform_check: h_tau(0) = 0");
  return h;
}

}  // namespace polyzeta
