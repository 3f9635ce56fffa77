#include "polyzeta/newton.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "polyzeta/linalg.hpp"

namespace polyzeta {

namespace {

bool dominates(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return a != b;
}

IntVector sign_normalized(IntVector v) {
  for (Int x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  return v;
}

IntVector unit(std::size_t n, std::size_t i) {
  IntVector e(n, 0);
  e[i] = 1;
  return e;
}

// Calls visit on every k-subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(const Polynomial& f) : dim_(f.dim()) {
  if (f.is_zero()) throw DomainError("Newton polyhedron of the zero polynomial is undefined");
  if (f.has_negative_exponents()) throw DomainError("Newton polyhedron needs non-negative exponents");
  support_ = polyzeta::support(f);
  const std::size_t n = dim_;

  std::vector<Exponent> candidates;
  for (const auto& p : support_) {
    bool dominated = std::any_of(support_.begin(), support_.end(), [&](const Exponent& q) { return dominates(p, q); });
    if (!dominated) candidates.push_back(p);
  }

  // Directions spanning candidate facet hyperplanes.
  std::set<IntVector> gens;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      gens.insert(sign_normalized(primitive(subtract(candidates[j], candidates[i]))));
  for (std::size_t i = 0; i < n; ++i) gens.insert(unit(n, i));
  std::vector<IntVector> generators(gens.begin(), gens.end());

  std::set<IntVector> normals;
  for_each_subset(generators.size(), n - 1, [&](const std::vector<std::size_t>& pick) {
    IntMatrix m(pick.size(), n);
    for (std::size_t r = 0; r < pick.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = generators[pick[r]][c];
    auto ns = nullspace(m);
    if (ns.size() != 1) return;
    IntVector u = sign_normalized(ns[0]);
    if (std::any_of(u.begin(), u.end(), [](Int x) { return x < 0; })) return;
    normals.insert(u);
  });

  for (const IntVector& u : normals) {
    Int nu = dot(u, candidates[0]);
    for (const auto& p : candidates) nu = std::min(nu, dot(u, p));
    std::vector<IntVector> span;
    const Exponent* base = nullptr;
    for (const auto& p : candidates) {
      if (dot(u, p) != nu) continue;
      if (!base)
        base = &p;
      else
        span.push_back(subtract(p, *base));
    }
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] == 0) span.push_back(unit(n, i));
    if (rank(span) == n - 1) facets_.push_back({u, nu});
  }
  std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });

  for (const auto& p : candidates) {
    std::vector<IntVector> tight;
    for (const auto& fc : facets_)
      if (dot(fc.normal, p) == fc.offset) tight.push_back(fc.normal);
    if (rank(tight) == n) vertices_.push_back(p);
  }
  std::sort(vertices_.begin(), vertices_.end());

  // Face lattice by closing tight-facet sets, starting from the improper face.
  std::vector<std::vector<std::size_t>> tight_of_vertex(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    for (std::size_t j = 0; j < facets_.size(); ++j)
      if (dot(facets_[j].normal, vertices_[v]) == facets_[j].offset) tight_of_vertex[v].push_back(j);

  auto vertices_of = [&](const std::vector<std::size_t>& tight) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (std::includes(tight_of_vertex[v].begin(), tight_of_vertex[v].end(), tight.begin(), tight.end()))
        out.push_back(v);
    return out;
  };
  auto directions_of = [&](const std::vector<std::size_t>& tight) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (std::all_of(tight.begin(), tight.end(), [&](std::size_t j) { return facets_[j].normal[i] == 0; }))
        out.push_back(i);
    return out;
  };

  std::set<std::vector<std::size_t>> seen;
  std::deque<std::vector<std::size_t>> queue;
  std::vector<std::size_t> all_v(vertices_.size()), all_d(n);
  for (std::size_t i = 0; i < all_v.size(); ++i) all_v[i] = i;
  for (std::size_t i = 0; i < n; ++i) all_d[i] = i;
  auto start = closure(all_v, all_d);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    auto tight = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      if (std::binary_search(tight.begin(), tight.end(), j)) continue;
      auto next = tight;
      next.insert(std::upper_bound(next.begin(), next.end(), j), j);
      auto vs = vertices_of(next);
      if (vs.empty()) continue;
      auto closed = closure(vs, directions_of(next));
      if (seen.insert(closed).second) queue.push_back(closed);
    }
  }

  for (const auto& tight : seen) {
    Face face;
    face.tight_facets = tight;
    face.vertex_ids = vertices_of(tight);
    face.directions = directions_of(tight);
    std::vector<IntVector> span;
    for (std::size_t k = 1; k < face.vertex_ids.size(); ++k)
      span.push_back(subtract(vertices_[face.vertex_ids[k]], vertices_[face.vertex_ids[0]]));
    for (std::size_t i : face.directions) span.push_back(unit(n, i));
    face.dimension = rank(span);
    face.codimension = n - face.dimension;
    face.compact = face.directions.empty();
    for (const auto& p : support_) {
      bool on = std::all_of(tight.begin(), tight.end(),
                            [&](std::size_t j) { return dot(facets_[j].normal, p) == facets_[j].offset; });
      if (on) face.support_points.push_back(p);
    }
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    if (a.vertex_ids != b.vertex_ids) return a.vertex_ids < b.vertex_ids;
    return a.directions < b.directions;
  });
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    faces_[i].id = i;
    face_by_tight_[faces_[i].tight_facets] = i;
  }
}

std::vector<std::size_t> NewtonPolyhedron::closure(const std::vector<std::size_t>& vertex_ids,
                                                   const std::vector<std::size_t>& directions) const {
  std::vector<std::size_t> tight;
  for (std::size_t j = 0; j < facets_.size(); ++j) {
    const Facet& fc = facets_[j];
    bool ok = std::all_of(vertex_ids.begin(), vertex_ids.end(),
                          [&](std::size_t v) { return dot(fc.normal, vertices_[v]) == fc.offset; }) &&
              std::all_of(directions.begin(), directions.end(), [&](std::size_t i) { return fc.normal[i] == 0; });
    if (ok) tight.push_back(j);
  }
  return tight;
}

const Face& NewtonPolyhedron::face(std::size_t id) const {
  if (id >= faces_.size()) throw DomainError("face id " + std::to_string(id) + " does not belong to this polyhedron");
  return faces_[id];
}

std::optional<std::size_t> NewtonPolyhedron::find_face(const std::vector<std::size_t>& tight) const {
  auto it = face_by_tight_.find(tight);
  if (it == face_by_tight_.end()) return std::nullopt;
  return it->second;
}

const Face& NewtonPolyhedron::face_spanned_by(const std::vector<std::size_t>& vertex_ids,
                                              const std::vector<std::size_t>& directions) const {
  auto id = find_face(closure(vertex_ids, directions));
  if (!id) throw DomainError("no face spanned by the given vertices");
  return faces_[*id];
}

bool NewtonPolyhedron::contains(const RationalVector& point) const {
  if (point.size() != dim_) throw DomainError("contains: dimension mismatch");
  for (const auto& fc : facets_)
    if (dot(point, fc.normal) < fc.offset) return false;
  return true;
}

bool NewtonPolyhedron::on_face(const Exponent& point, const Face& face) const {
  return std::all_of(face.tight_facets.begin(), face.tight_facets.end(), [&](std::size_t j) {
    return dot(facets_[j].normal, point) == facets_[j].offset;
  });
}

std::optional<std::size_t> NewtonPolyhedron::facet_index(const IntVector& normal) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), normal,
                             [](const Facet& f, const IntVector& u) { return f.normal < u; });
  if (it == facets_.end() || it->normal != normal) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

Rational omega_order(const Polynomial& f, const RationalVector& omega) {
  if (f.is_zero()) throw DomainError("omega-order of the zero polynomial is undefined");
  if (omega.size() != f.dim()) throw DomainError("omega has wrong length");
  bool first = true;
  Rational best;
  for (const auto& [e, c] : f.terms()) {
    Rational v = dot(omega, e);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

const Face& first_meet_locus(const NewtonPolyhedron& np, const RationalVector& omega) {
  if (omega.size() != np.dim()) throw DomainError("omega has wrong length");
  for (const auto& w : omega)
    if (sgn(w) < 0) throw DomainError("omega must be non-negative");
  const auto& verts = np.vertices();
  Rational best = dot(omega, verts[0]);
  for (const auto& v : verts) {
    Rational d = dot(omega, v);
    if (d < best) best = d;
  }
  std::vector<std::size_t> vs, dirs;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (dot(omega, verts[i]) == best) vs.push_back(i);
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (sgn(omega[i]) == 0) dirs.push_back(i);
  return np.face_spanned_by(vs, dirs);
}

Polynomial face_function(const Polynomial& f, const NewtonPolyhedron& np, std::size_t face_id) {
  const Face& face = np.face(face_id);
  Polynomial out(f.dim());
  for (const auto& [e, c] : f.terms())
    if (np.on_face(e, face)) out.add_term(e, c);
  return out;
}

RemotenessReport remoteness(const NewtonPolyhedron& np) {
  RemotenessReport r;
  bool any = false;
  for (const auto& fc : np.facets()) {
    if (!fc.has_positive_offset()) continue;
    Rational t(mpz_class(fc.offset), mpz_class(l1(fc.normal)));
    t.canonicalize();
    if (!any || t > r.t0) {
      r.t0 = t;
      r.attaining_normals.clear();
    }
    if (t == r.t0) r.attaining_normals.push_back(fc.normal);
    any = true;
  }
  if (!any) throw DomainError("remoteness undefined: every facet passes through a coordinate subspace at offset 0");
  r.nu0 = 1 / (2 * r.t0);
  return r;
}

}  // namespace polyzeta
