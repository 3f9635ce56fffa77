// Independent brute-force references used by the tests. Nothing here calls
// the geometry code under test.
#ifndef POLYZETA_TESTS_ORACLES_HPP
#define POLYZETA_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "polyzeta/polynomial.hpp"

namespace oracle {

using polyzeta::Int;
using polyzeta::IntVector;
using polyzeta::Polynomial;
using polyzeta::Rational;

// Rank over Q by plain Gaussian elimination on mpq.
inline std::size_t rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> q;
    for (Int x : r) q.emplace_back(static_cast<long>(x));
    m.push_back(q);
  }
  std::size_t r = 0, cols = m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct HullFacet {
  IntVector normal;
  Int offset;
  bool operator<(const HullFacet& o) const { return normal < o.normal; }
};

// Facets of conv(points) + R^n_{>=0} by scanning every primitive u in
// [0, bound]^n: u is a facet normal iff its minimizers together with the
// free directions {e_i : u_i = 0} span a hyperplane.
inline std::vector<HullFacet> hull_facets(const std::vector<IntVector>& points, Int bound) {
  const std::size_t n = points[0].size();
  std::vector<HullFacet> out;
  IntVector u(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && ++u[i] > bound) u[i++] = 0;
    if (i == n) break;
    Int g = 0;
    for (Int x : u) g = std::gcd(g, x);
    if (g != 1) continue;
    Int nu = dot(u, points[0]);
    for (const auto& p : points) nu = std::min(nu, dot(u, p));
    std::vector<IntVector> span;
    const IntVector* base = nullptr;
    for (const auto& p : points) {
      if (dot(u, p) != nu) continue;
      if (!base) {
        base = &p;
        continue;
      }
      IntVector d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = p[k] - (*base)[k];
      span.push_back(d);
    }
    for (std::size_t k = 0; k < n; ++k)
      if (u[k] == 0) {
        IntVector e(n, 0);
        e[k] = 1;
        span.push_back(e);
      }
    if (rank(span) == n - 1) out.push_back({u, nu});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices: support points at which n linearly independent facets are tight.
inline std::vector<IntVector> hull_vertices(const std::vector<IntVector>& points, const std::vector<HullFacet>& facets) {
  std::set<IntVector> out;
  for (const auto& p : points) {
    std::vector<IntVector> tight;
    for (const auto& f : facets)
      if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
    if (rank(tight) == p.size()) out.insert(p);
  }
  return {out.begin(), out.end()};
}

// d/dx_j of x^a, a possibly negative (Laurent).
inline Polynomial monomial_derivative(std::size_t n, const IntVector& a, std::size_t j) {
  if (a[j] == 0) return Polynomial(n);
  IntVector e = a;
  e[j] -= 1;
  return Polynomial::monomial(n, e, polyzeta::GaussianRational(static_cast<long>(a[j])));
}

// Jacobian determinant of psi_A (k-th coordinate x^{column k}) expanded by
// the Leibniz formula over symbolic entries.
inline Polynomial symbolic_jacobian(const std::vector<IntVector>& columns) {
  const std::size_t n = columns.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(n);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Polynomial term = Polynomial::constant(n, inversions % 2 ? -1 : 1);
    // entry (k, j) = d psi_k / d x_j
    for (std::size_t k = 0; k < n; ++k) term *= monomial_derivative(n, columns[k], perm[k]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Cone in Z^2 spanned by a and b (det(a, b) != 0).
struct PlaneCone {
  IntVector a, b;
  bool contains(const IntVector& p) const {
    Int d = a[0] * b[1] - a[1] * b[0];
    Int ca = p[0] * b[1] - p[1] * b[0];  // d * coefficient of a
    Int cb = a[0] * p[1] - a[1] * p[0];  // d * coefficient of b
    if (d < 0) {
      ca = -ca;
      cb = -cb;
    }
    return ca >= 0 && cb >= 0;
  }
};

// Whether p is a sum of elements of `gens` (repetition allowed) by a search
// over partial sums that stay in the cone; `skip` excludes one generator.
inline bool decomposes(const PlaneCone& cone, const std::vector<IntVector>& gens, const IntVector& p,
                       int skip = -1) {
  std::map<IntVector, bool> memo;
  std::function<bool(const IntVector&)> go = [&](const IntVector& q) -> bool {
    if (q[0] == 0 && q[1] == 0) return true;
    if (!cone.contains(q)) return false;
    auto it = memo.find(q);
    if (it != memo.end()) return it->second;
    memo[q] = false;
    bool ok = false;
    for (std::size_t g = 0; g < gens.size() && !ok; ++g) {
      if (static_cast<int>(g) == skip) continue;
      ok = go({q[0] - gens[g][0], q[1] - gens[g][1]});
    }
    return memo[q] = ok;
  };
  return go(p);
}

}  // namespace oracle

#endif
