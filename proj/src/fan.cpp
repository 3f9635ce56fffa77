#include "polyzeta/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polyzeta {

namespace {

using Wide = __int128;

IntVector unit(std::size_t n, std::size_t i) {
  IntVector e(n, 0);
  e[i] = 1;
  return e;
}

Wide wide_dot(const IntVector& a, const IntVector& b) {
  Wide s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<Wide>(a[i]) * b[i];
  return s;
}

// Full-dimensional simplicial cone prepared for integer membership tests:
// x is in the cone iff sign(det) * adj_i . x >= 0 for every row i.
struct SimplicialPiece {
  IntMatrix rays;
  IntMatrix adj;
  Int det = 0;

  explicit SimplicialPiece(const std::vector<IntVector>& r)
      : rays(IntMatrix::from_columns(r)), adj(adjugate(rays)), det(determinant(rays)) {}

  bool contains(const IntVector& x) const {
    for (std::size_t i = 0; i < adj.rows(); ++i) {
      Wide v = wide_dot(adj.row(i), x);
      if ((det > 0 && v < 0) || (det < 0 && v > 0)) return false;
    }
    return true;
  }
};

// Lattice points of the half-open fundamental parallelepiped of a piece.
std::vector<IntVector> parallelepiped_points(const SimplicialPiece& piece) {
  const std::size_t n = piece.rays.rows();
  const Int d = piece.det < 0 ? -piece.det : piece.det;
  if (d > kMaxHilbertDeterminant)
    throw DomainError("cone multiplicity " + std::to_string(d) + " exceeds the Hilbert basis limit");
  IntMatrix h = column_hermite_form(piece.rays);
  std::vector<IntVector> out;
  IntVector x(n, 0);
  while (true) {
    IntVector k(n);
    for (std::size_t i = 0; i < n; ++i) {
      Wide y = wide_dot(piece.adj.row(i), x);
      if (piece.det < 0) y = -y;
      Wide r = y % d;
      if (r < 0) r += d;
      k[i] = static_cast<Int>(r);
    }
    IntVector point(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Wide s = 0;
      for (std::size_t j = 0; j < n; ++j) s += static_cast<Wide>(piece.rays(i, j)) * k[j];
      point[i] = static_cast<Int>(s / d);
    }
    out.push_back(point);
    std::size_t i = 0;
    while (i < n && ++x[i] == h(i, i)) x[i++] = 0;
    if (i == n) break;
  }
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

bool is_pointed(const std::vector<IntVector>& rays) {
  const std::size_t n = rays[0].size();
  std::vector<RationalVector> a(n + 1, RationalVector(rays.size()));
  for (std::size_t j = 0; j < rays.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = rays[j][i];
    a[n][j] = 1;
  }
  RationalVector b(n + 1, 0);
  b[n] = 1;
  return !nonnegative_solution(a, b).has_value();
}

// Multiplicities > 1, sorted descending; strictly decreases (lexicographically)
// under each stellar subdivision step.
std::vector<Int> multiplicity_measure(const std::vector<std::vector<IntVector>>& cones) {
  std::vector<Int> out;
  for (const auto& c : cones) {
    Int d = RationalCone{c}.multiplicity();
    if (d > 1) out.push_back(d);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

std::size_t RationalCone::dim() const { return rays.empty() ? 0 : rank(rays); }

Int RationalCone::multiplicity() const {
  if (rays.empty()) return 1;
  if (!is_simplicial()) throw DomainError("multiplicity of a non-simplicial cone");
  const std::size_t n = ambient_dim(), k = rays.size();
  IntMatrix m = ray_matrix();
  if (k == n) {
    Int d = determinant(m);
    return d < 0 ? -d : d;
  }
  // gcd of the k x k minors
  Int g = 0;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    IntMatrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = m(pick[r], c);
    g = gcd(g, determinant(minor));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g < 0 ? -g : g;
}

bool RationalCone::contains(const IntVector& point) const { return contains(to_rational(point)); }

bool RationalCone::contains(const RationalVector& point) const {
  if (rays.empty()) return std::all_of(point.begin(), point.end(), [](const Rational& q) { return sgn(q) == 0; });
  if (point.size() != ambient_dim()) throw DomainError("cone membership: dimension mismatch");
  if (is_simplicial()) {
    auto c = solve(ray_matrix(), point);
    return c && std::all_of(c->begin(), c->end(), [](const Rational& q) { return sgn(q) >= 0; });
  }
  std::vector<RationalVector> a(ambient_dim(), RationalVector(rays.size()));
  for (std::size_t j = 0; j < rays.size(); ++j)
    for (std::size_t i = 0; i < ambient_dim(); ++i) a[i][j] = rays[j][i];
  return nonnegative_solution(a, point).has_value();
}

bool RationalCone::contains_in_relative_interior(const RationalVector& point) const {
  if (rays.empty()) return std::all_of(point.begin(), point.end(), [](const Rational& q) { return sgn(q) == 0; });
  if (point.size() != ambient_dim()) throw DomainError("cone membership: dimension mismatch");
  if (is_simplicial()) {
    auto c = solve(ray_matrix(), point);
    return c && std::all_of(c->begin(), c->end(), [](const Rational& q) { return sgn(q) > 0; });
  }
  // sum (1 + l_j) r_j = t p with l, t >= 0; for a pointed cone t > 0 follows.
  const std::size_t n = ambient_dim(), k = rays.size();
  std::vector<RationalVector> a(n, RationalVector(k + 1));
  RationalVector b(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      a[i][j] = rays[j][i];
      b[i] -= rays[j][i];
    }
    a[i][k] = -point[i];
  }
  auto sol = nonnegative_solution(a, b);
  return sol && sgn((*sol)[k]) > 0;
}

Fan::Fan(std::size_t ambient_dim, std::vector<IntVector> rays, std::vector<FanCone> cones)
    : n_(ambient_dim), rays_(std::move(rays)), cones_(std::move(cones)) {}

Fan Fan::from_simplicial_cones(std::size_t ambient_dim, const std::vector<std::vector<IntVector>>& max_cones) {
  std::set<IntVector> ray_set;
  for (const auto& c : max_cones) ray_set.insert(c.begin(), c.end());
  std::vector<IntVector> rays(ray_set.begin(), ray_set.end());
  auto id_of = [&](const IntVector& r) {
    return static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin());
  };
  std::set<std::vector<std::size_t>> all;
  for (const auto& c : max_cones) {
    std::vector<std::size_t> ids;
    for (const auto& r : c) ids.push_back(id_of(r));
    std::sort(ids.begin(), ids.end());
    const std::size_t k = ids.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) sub.push_back(ids[i]);
      all.insert(sub);
    }
  }
  std::vector<FanCone> cones;
  for (const auto& ids : all) cones.push_back({ids, ids.size()});
  std::stable_sort(cones.begin(), cones.end(), [](const FanCone& a, const FanCone& b) { return a.dim < b.dim; });
  return Fan(ambient_dim, std::move(rays), std::move(cones));
}

std::vector<std::size_t> Fan::max_cones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].dim == n_) out.push_back(i);
  return out;
}

RationalCone Fan::cone(std::size_t index) const {
  if (index >= cones_.size()) throw DomainError("cone index out of range");
  RationalCone c;
  for (std::size_t id : cones_[index].ray_ids) c.rays.push_back(rays_[id]);
  return c;
}

bool Fan::is_simplicial() const {
  return std::all_of(cones_.begin(), cones_.end(), [](const FanCone& c) { return c.ray_ids.size() == c.dim; });
}

bool Fan::is_regular() const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].dim == n_ && !cone(i).is_regular()) return false;
  return is_simplicial();
}

Fan dual_fan(const NewtonPolyhedron& np) {
  std::vector<IntVector> rays;
  for (const auto& fc : np.facets()) rays.push_back(fc.normal);
  std::vector<FanCone> cones;
  for (const auto& face : np.faces()) cones.push_back({face.tight_facets, face.codimension});
  return Fan(np.dim(), std::move(rays), std::move(cones));
}

const Face& face_of_cone(const NewtonPolyhedron& np, const RationalCone& cone) {
  std::vector<std::size_t> tight;
  for (const auto& r : cone.rays) {
    auto idx = np.facet_index(r);
    if (!idx) throw DomainError("ray " + to_string(r) + " is not a facet normal of the Newton polyhedron");
    tight.push_back(*idx);
  }
  std::sort(tight.begin(), tight.end());
  tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
  auto id = np.find_face(tight);
  if (!id) throw DomainError("cone is not a cone of the dual fan");
  return np.face(*id);
}

RationalCone cone_of_face(const NewtonPolyhedron& np, std::size_t face_id) {
  RationalCone c;
  for (std::size_t j : np.face(face_id).tight_facets) c.rays.push_back(np.facets()[j].normal);
  return c;
}

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& rays) {
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<IntVector> placed;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<IntVector> with = placed;
    with.push_back(rays[i]);
    std::size_t new_dim = rank(with);
    if (simplices.empty()) {
      simplices.push_back({i});
    } else if (new_dim > dim) {
      for (auto& s : simplices) s.push_back(i);
    } else {
      // Boundary facets visible from the new ray get coned over it.
      std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> facets;
      for (const auto& s : simplices)
        for (std::size_t a : s) {
          std::vector<std::size_t> f;
          for (std::size_t x : s)
            if (x != a) f.push_back(x);
          auto& entry = facets[f];
          entry.first += 1;
          entry.second = a;
        }
      std::vector<std::vector<std::size_t>> added;
      for (const auto& [f, entry] : facets) {
        if (entry.first != 1) continue;
        std::vector<IntVector> cols;
        for (std::size_t x : f) cols.push_back(rays[x]);
        cols.push_back(rays[entry.second]);
        auto c = solve(IntMatrix::from_columns(cols), to_rational(rays[i]));
        if (c && sgn(c->back()) < 0) {
          auto s = f;
          s.push_back(i);
          added.push_back(s);
        }
      }
      simplices.insert(simplices.end(), added.begin(), added.end());
    }
    placed = std::move(with);
    dim = new_dim;
  }
  for (auto& s : simplices) std::sort(s.begin(), s.end());
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

Fan simplicialize(const Fan& fan) {
  std::vector<std::vector<IntVector>> pieces;
  for (std::size_t idx : fan.max_cones()) {
    const auto& ids = fan.cones()[idx].ray_ids;  // ascending id == lexicographic order
    std::vector<IntVector> rays;
    for (std::size_t id : ids) rays.push_back(fan.rays()[id]);
    if (ids.size() == fan.ambient_dim()) {
      pieces.push_back(rays);
      continue;
    }
    for (const auto& simplex : placing_triangulation(rays)) {
      std::vector<IntVector> piece;
      for (std::size_t k : simplex) piece.push_back(rays[k]);
      pieces.push_back(piece);
    }
  }
  return Fan::from_simplicial_cones(fan.ambient_dim(), pieces);
}

DualConePair dual_cone(const RationalCone& sigma) {
  const std::size_t n = sigma.ambient_dim();
  if (sigma.rays.size() != n || sigma.dim() != n)
    throw DomainError("dual_cone needs a full-dimensional simplicial cone");
  DualConePair pair;
  pair.n = sigma.ray_matrix();
  IntMatrix adj = adjugate(pair.n);
  Int det = determinant(pair.n);
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector v = primitive(adj.row(j));
    if (det < 0) v = scale(v, -1);
    cols.push_back(v);
    pair.lambda.push_back(dot(sigma.rays[j], v));
  }
  pair.m = IntMatrix::from_columns(cols);
  return pair;
}

RationalCone dual_of(const RationalCone& sigma) { return RationalCone{dual_cone(sigma).m.columns()}; }

std::vector<IntVector> hilbert_basis(const RationalCone& cone) {
  const std::size_t n = cone.ambient_dim();
  if (cone.rays.empty() || cone.dim() != n) throw DomainError("hilbert_basis needs a full-dimensional cone");
  bool simplicial = cone.rays.size() == n;
  if (!simplicial && !is_pointed(cone.rays)) throw DomainError("hilbert_basis needs a pointed cone");

  std::vector<SimplicialPiece> pieces;
  if (simplicial) {
    pieces.emplace_back(cone.rays);
  } else {
    for (const auto& s : placing_triangulation(cone.rays)) {
      std::vector<IntVector> r;
      for (std::size_t k : s) r.push_back(cone.rays[k]);
      pieces.emplace_back(r);
    }
  }
  std::set<IntVector> cand(cone.rays.begin(), cone.rays.end());
  for (const auto& p : pieces)
    for (auto& x : parallelepiped_points(p))
      if (!is_zero(x)) cand.insert(std::move(x));

  auto in_cone = [&](const IntVector& x) {
    return std::any_of(pieces.begin(), pieces.end(), [&](const SimplicialPiece& p) { return p.contains(x); });
  };
  // Grading positive on the cone (only available for a single piece).
  std::vector<std::pair<Wide, IntVector>> graded;
  for (const auto& x : cand) {
    Wide g = 0;
    if (simplicial) {
      const auto& p = pieces[0];
      for (std::size_t i = 0; i < n; ++i) g += wide_dot(p.adj.row(i), x) * (p.det < 0 ? -1 : 1);
    }
    graded.emplace_back(g, x);
  }
  std::sort(graded.begin(), graded.end());
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < graded.size(); ++i) {
    const auto& [gx, x] = graded[i];
    bool reducible = false;
    for (std::size_t j = 0; j < graded.size() && !reducible; ++j) {
      if (j == i) continue;
      const auto& [gy, y] = graded[j];
      if (simplicial && gy >= gx) break;
      reducible = in_cone(subtract(x, y));
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

Fan regularize(const Fan& fan) {
  if (!fan.is_simplicial()) throw DomainError("regularize needs a simplicial fan");
  std::vector<std::vector<IntVector>> cones;
  for (std::size_t idx : fan.max_cones()) {
    auto rays = fan.cone(idx).rays;
    std::sort(rays.begin(), rays.end());
    cones.push_back(rays);
  }
  auto measure = multiplicity_measure(cones);
  while (true) {
    const std::vector<IntVector>* target = nullptr;
    for (const auto& c : cones)
      if (RationalCone{c}.multiplicity() > 1 && (!target || c < *target)) target = &c;
    if (!target) break;
    const std::vector<IntVector> sigma = *target;
    SimplicialPiece piece(sigma);
    const Int d = piece.det < 0 ? -piece.det : piece.det;

    std::optional<IntVector> best;
    std::vector<std::size_t> best_support;
    Rational best_cost;
    for (const auto& w : hilbert_basis(RationalCone{sigma})) {
      if (std::find(sigma.begin(), sigma.end(), w) != sigma.end()) continue;
      // w = sum c_g g; the new cones have multiplicities d * c_g.
      Rational cost = 0;
      std::vector<std::size_t> supp;
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        Rational c(mpz_class(static_cast<long>(wide_dot(piece.adj.row(i), w))), mpz_class(piece.det));
        c.canonicalize();
        if (sgn(c) > 0) {
          supp.push_back(i);
          cost += d * c;
        }
      }
      if (!best || cost < best_cost || (cost == best_cost && w < *best)) {
        best = w;
        best_cost = cost;
        best_support = supp;
      }
    }
    if (!best) throw std::logic_error("non-regular cone without interior Hilbert basis element");
    std::vector<IntVector> face;
    for (std::size_t i : best_support) face.push_back(sigma[i]);

    std::vector<std::vector<IntVector>> next;
    for (const auto& c : cones) {
      bool contains_face = std::all_of(face.begin(), face.end(), [&](const IntVector& g) {
        return std::find(c.begin(), c.end(), g) != c.end();
      });
      if (!contains_face) {
        next.push_back(c);
        continue;
      }
      for (const auto& g : face) {
        std::vector<IntVector> nc;
        for (const auto& r : c)
          if (r != g) nc.push_back(r);
        nc.push_back(*best);
        std::sort(nc.begin(), nc.end());
        next.push_back(nc);
      }
    }
    auto next_measure = multiplicity_measure(next);
    if (!(next_measure < measure)) throw std::logic_error("regularize: multiplicity measure did not decrease");
    cones = std::move(next);
    measure = std::move(next_measure);
  }
  return Fan::from_simplicial_cones(fan.ambient_dim(), cones);
}

ChartData chart_data(const RationalCone& sigma) {
  const std::size_t n = sigma.ambient_dim();
  for (const auto& r : sigma.rays)
    if (std::any_of(r.begin(), r.end(), [](Int x) { return x < 0; }))
      throw DomainError("chart_data needs a cone inside the first orthant");
  DualConePair pair = dual_cone(sigma);
  ChartData chart;
  chart.sigma = sigma;
  chart.generators = pair.m.columns();
  for (std::size_t i = 0; i < n; ++i) chart.generators.push_back(unit(n, i));
  for (const auto& h : hilbert_basis(RationalCone{pair.m.columns()})) {
    if (std::find(chart.generators.begin(), chart.generators.end(), h) != chart.generators.end()) continue;
    chart.generators.push_back(h);
    ++chart.num_w;
  }
  IntMatrix g = IntMatrix::from_columns(chart.generators);
  chart.relations = integer_kernel(g);
  chart.phi_matrix = pair.n.transpose() * g;
  return chart;
}

}  // namespace polyzeta
