#ifndef POLYZETA_NEWTON_HPP
#define POLYZETA_NEWTON_HPP

#include <map>
#include <optional>
#include <vector>

#include "polyzeta/polynomial.hpp"

namespace polyzeta {

/// Supporting half-space normal . x >= offset of a facet. The normal is the
/// primitive inward normal (non-negative entries).
struct Facet {
  IntVector normal;
  Int offset = 0;

  bool has_positive_offset() const { return offset > 0; }
};

struct Face {
  std::size_t id = 0;
  std::size_t dimension = 0;
  std::size_t codimension = 0;
  // Facets containing the face (sorted indices into NewtonPolyhedron::facets()).
  std::vector<std::size_t> tight_facets;
  // Vertices of the face (sorted indices into NewtonPolyhedron::vertices()).
  std::vector<std::size_t> vertex_ids;
  // Coordinates i such that e_i is a recession direction of the face.
  std::vector<std::size_t> directions;
  // Exponents of f lying on the face.
  std::vector<Exponent> support_points;
  bool compact = false;
};

/// Newton polyhedron conv(supp f) + R^n_{>=0} with exact H- and
/// V-representation and its full face lattice.
///
/// Facets are sorted lexicographically by normal, vertices lexicographically.
/// Faces are sorted by dimension, the improper face (the polyhedron itself)
/// comes last.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const Polynomial& f);

  std::size_t dim() const { return dim_; }
  const std::vector<Exponent>& support() const { return support_; }
  const std::vector<Exponent>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t id) const;
  const Face& improper_face() const { return faces_.back(); }

  // Face whose set of containing facets is exactly `tight` (sorted).
  std::optional<std::size_t> find_face(const std::vector<std::size_t>& tight) const;
  // Smallest face containing the given vertices and recession directions.
  const Face& face_spanned_by(const std::vector<std::size_t>& vertex_ids,
                              const std::vector<std::size_t>& directions) const;

  bool contains(const RationalVector& point) const;
  bool on_face(const Exponent& point, const Face& face) const;
  std::optional<std::size_t> facet_index(const IntVector& normal) const;

 private:
  std::vector<std::size_t> closure(const std::vector<std::size_t>& vertex_ids,
                                   const std::vector<std::size_t>& directions) const;

  std::size_t dim_;
  std::vector<Exponent> support_;
  std::vector<Exponent> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::map<std::vector<std::size_t>, std::size_t> face_by_tight_;
};

struct RemotenessReport {
  // Diagonal boundary parameter: t0 * (1,...,1) lies on the boundary.
  Rational t0;
  // min ||u|| / (2 nu_u) over facets with nu_u > 0; equals 1 / (2 t0).
  Rational nu0;
  std::vector<IntVector> attaining_normals;
};

// min over supp(f) of omega . mu
Rational omega_order(const Polynomial& f, const RationalVector& omega);
// Face of NP on which omega . x attains its minimum.
const Face& first_meet_locus(const NewtonPolyhedron& np, const RationalVector& omega);
Polynomial face_function(const Polynomial& f, const NewtonPolyhedron& np, std::size_t face_id);
RemotenessReport remoteness(const NewtonPolyhedron& np);

}  // namespace polyzeta

#endif
