#ifndef POLYZETA_FAN_HPP
#define POLYZETA_FAN_HPP

#include <optional>
#include <vector>

#include "polyzeta/linalg.hpp"
#include "polyzeta/newton.hpp"

namespace polyzeta {

/// Rational polyhedral cone given by its primitive extremal rays.
struct RationalCone {
  std::vector<IntVector> rays;

  std::size_t ambient_dim() const { return rays.empty() ? 0 : rays[0].size(); }
  std::size_t dim() const;
  bool is_simplicial() const { return dim() == rays.size(); }
  // Rays as the columns of an n x k matrix.
  IntMatrix ray_matrix() const { return IntMatrix::from_columns(rays); }
  // |det| of the ray matrix for full-dimensional simplicial cones; the gcd of
  // the maximal minors for lower-dimensional simplicial ones.
  Int multiplicity() const;
  bool is_regular() const { return is_simplicial() && multiplicity() == 1; }
  // Exact membership (linear programming for non-simplicial cones).
  bool contains(const IntVector& point) const;
  bool contains(const RationalVector& point) const;
  // True when the point is a strictly positive combination of all rays.
  bool contains_in_relative_interior(const RationalVector& point) const;
};

struct FanCone {
  std::vector<std::size_t> ray_ids;  // sorted
  std::size_t dim = 0;
};

/// Polyhedral fan stored as the complete list of its cones. Rays are sorted
/// lexicographically; ray i has id i.
class Fan {
 public:
  Fan() = default;
  Fan(std::size_t ambient_dim, std::vector<IntVector> rays, std::vector<FanCone> cones);
  // Simplicial fan generated by maximal cones given by their rays; all faces
  // (subsets of rays) are added.
  static Fan from_simplicial_cones(std::size_t ambient_dim, const std::vector<std::vector<IntVector>>& max_cones);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<FanCone>& cones() const { return cones_; }
  // Indices of the full-dimensional cones.
  std::vector<std::size_t> max_cones() const;
  RationalCone cone(std::size_t index) const;
  // Vert(Sigma): the set of rays.
  const std::vector<IntVector>& vertices() const { return rays_; }
  bool is_simplicial() const;
  bool is_regular() const;

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> rays_;
  std::vector<FanCone> cones_;
};

/// Matrices of a full-dimensional simplicial cone Cone(N) and its dual
/// Cone(M) with N^t M = diag(lambda), lambda > 0.
struct DualConePair {
  IntMatrix n;
  IntMatrix m;
  IntVector lambda;
};

/// Generators (v's, e's, w's) of the semigroup sigma^vee cap Z^n, the lattice
/// of relations among them and the exponent matrix (Lambda | N^t | N^t W) of
/// the chart parametrization.
struct ChartData {
  RationalCone sigma;
  std::vector<IntVector> generators;
  std::size_t num_w = 0;
  std::vector<IntVector> relations;
  IntMatrix phi_matrix;
};

// Cone k of the result is the cone of face k of np; its rays are the facet
// normals (ray i == facet i).
Fan dual_fan(const NewtonPolyhedron& np);
const Face& face_of_cone(const NewtonPolyhedron& np, const RationalCone& cone);
RationalCone cone_of_face(const NewtonPolyhedron& np, std::size_t face_id);

// Placing triangulation of a pointed cone, rays inserted in the given order.
// Returns maximal simplicial cones as index lists into `rays`.
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& rays);

Fan simplicialize(const Fan& fan);
DualConePair dual_cone(const RationalCone& sigma);
std::vector<IntVector> hilbert_basis(const RationalCone& cone);
Fan regularize(const Fan& fan);
ChartData chart_data(const RationalCone& sigma);

// Rays of sigma^vee for a full-dimensional simplicial cone, as an explicit cone.
RationalCone dual_of(const RationalCone& sigma);

constexpr Int kMaxHilbertDeterminant = 1000000;

}  // namespace polyzeta

#endif
