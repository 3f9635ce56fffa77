// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "polyzeta/fan.hpp"
#include "polyzeta/monomial.hpp"
#include "polyzeta/nondeg.hpp"
#include "polyzeta/poles.hpp"
#include "polyzeta/zeta.hpp"

using namespace polyzeta;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::set<Rational> values(const CandidatePoleSet& s) {
  std::set<Rational> out;
  for (const auto& e : s.entries) out.insert(e.value);
  return out;
}

const CandidatePole* find_entry(const CandidatePoleSet& s, const Rational& v) {
  for (const auto& e : s.entries)
    if (e.value == v) return &e;
  return nullptr;
}

PoleOptions with_k(Int k) {
  PoleOptions o;
  o.max_k = k;
  return o;
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp), c(1, 9);
  Polynomial f(n);
  for (int t = 0; t < terms; ++t) {
    Exponent x(n);
    for (auto& v : x) v = e(rng);
    f.add_term(x, GaussianRational(c(rng)));
  }
  return f;
}

// 1
void cusp_end_to_end(Outcome& o) {
  const auto start = Clock::now();
  Polynomial f = parse_polynomial("x1^2+x2^3", 2);
  NewtonPolyhedron np(f);
  Fan fan = dual_fan(np);
  NondegReport nd = check_all(f, true, NondegConfig{});
  CandidatePoleSet set = candidate_poles(f, with_k(12), nd);
  const double elapsed = seconds_since(start);

  o.require(np.vertices() == std::vector<Exponent>{{0, 3}, {2, 0}}, "vertices");
  auto hull = oracle::hull_facets(support(f), 12);
  std::map<IntVector, Int> expected_facets{{{3, 2}, 6}, {{1, 0}, 0}, {{0, 1}, 0}};
  std::map<IntVector, Int> got, oracle_facets;
  for (const auto& fc : np.facets()) got[fc.normal] = fc.offset;
  for (const auto& fc : hull) oracle_facets[fc.normal] = fc.offset;
  o.require(got == expected_facets && oracle_facets == expected_facets, "facet normals and nu");
  std::set<IntVector> rays(fan.rays().begin(), fan.rays().end());
  std::set<IntVector> normals;
  for (const auto& [u, nu] : expected_facets) normals.insert(u);
  o.require(rays == normals, "Vert(dual fan) = facet normals");
  o.require(set.remoteness.nu0 == q(5, 12), "remoteness 5/12");
  o.require(set.holomorphy_bound == q(-5, 12) && holomorphy_bound(f) == q(-5, 12), "holomorphy bound");

  std::set<Rational> expected;
  for (long k = 0; k <= 12; ++k) expected.insert(q(-(5 + k), 12));
  for (long k = 0; q(-(1 + k), 2) >= q(-17, 12); ++k) expected.insert(q(-(1 + k), 2));
  o.require(values(set) == expected, "candidate set at K = 12");

  bool exact = nd.overall == OverallStatus::NonDegenerate && !nd.faces.empty();
  for (const auto& v : nd.faces)
    exact = exact && v.status == FaceStatus::NonDegenerate && v.method != CheckMethod::NumericSearch;
  o.require(exact, "non-degenerate (exact) on compact faces");
  o.require(elapsed < 1.0, "runtime under 1 s");
  o.detail << expected.size() << " candidates, " << nd.faces.size() << " compact faces, " << elapsed * 1000
           << " ms";
}

// 2
void refined_vs_naive(Outcome& o) {
  Polynomial cusp = parse_polynomial("x1^2+x2^3", 2);
  const Int k = 12;
  std::set<Rational> refined = values(candidate_poles(cusp, with_k(k)));
  std::set<Rational> naive = values(naive_candidates(cusp, with_k(k)));
  o.require(std::includes(naive.begin(), naive.end(), refined.begin(), refined.end()), "refined subset of naive");
  for (long j = 0; j <= k; ++j) {
    o.require(naive.count(q(-(2 + j), 4)) == 1, "progression of (1,1)");
    o.require(naive.count(q(-(3 + j), 6)) == 1, "progression of (2,1)");
  }
  std::set<Rational> extra;
  std::set_difference(naive.begin(), naive.end(), refined.begin(), refined.end(),
                      std::inserter(extra, extra.begin()));
  o.require(!extra.empty(), "naive list is longer for the cusp");
  for (const auto& v : extra)
    o.require(in_progression(v, {1, 1}, 2) || in_progression(v, {2, 1}, 3) || is_half_integer_candidate(v),
              "extra values come from the new rays");

  Polynomial lin = parse_polynomial("x1+x2", 2);
  std::set<Rational> a = values(candidate_poles(lin, with_k(k))), b = values(naive_candidates(lin, with_k(k)));
  o.require(a == b, "x1+x2 lists coincide");
  o.detail << "cusp: " << refined.size() << " refined, " << naive.size() << " naive; x1+x2: " << a.size()
           << " each";
}

// Pole orders of prod_i pi p! / prod_{j=1}^{p+1} (m_i s + j): how many linear
// factors vanish at each s0.
std::map<Rational, int> closed_form_poles(const std::vector<long>& m, int p) {
  std::map<Rational, int> out;
  for (long mi : m)
    for (long j = 1; j <= p + 1; ++j) ++out[q(-j, mi)];
  return out;
}

// 3
void order_bound_ground_truth(Outcome& o) {
  Polynomial f = parse_polynomial("x1*x2", 2);
  CandidatePoleSet set = candidate_poles(f, with_k(12));
  const CandidatePole* half = find_entry(set, q(-1, 2));
  o.require(half != nullptr && half->order_bound == 2, "-1/2 has order bound 2");
  o.require(set.entries.front().value == q(-1, 2), "-1/2 is the top candidate");
  // The closed form has double poles at -1, -2, ...: each must be a candidate
  // with an order bound of at least 2.
  auto poles = closed_form_poles({1, 1}, 5);
  for (const auto& [s0, order] : poles) {
    const CandidatePole* e = find_entry(set, s0);
    o.require(e != nullptr && e->order_bound >= order, "closed-form pole order within the bound");
  }
  o.detail << "order_bound(-1/2) = " << (half ? half->order_bound : 0) << "; " << poles.size()
           << " closed-form double poles bounded";
}

// 4
void monomial_containment(Outcome& o) {
  int cases = 0, poles_checked = 0;
  for (int n = 1; n <= 2; ++n)
    for (long b1 = 1; b1 <= 5; ++b1)
      for (long b2 = 1; b2 <= (n == 2 ? 5 : 1); ++b2) {
        std::vector<long> b = n == 2 ? std::vector<long>{b1, b2} : std::vector<long>{b1};
        Polynomial f = Polynomial::monomial(n, n == 2 ? Exponent{b1, b2} : Exponent{b1});
        CandidatePoleSet set = candidate_poles(f, with_k(12));
        for (int p = 0; p <= 3; ++p) {
          ++cases;
          for (const auto& [s0, order] : closed_form_poles(b, p)) {
            ++poles_checked;
            o.require(find_entry(set, s0) != nullptr, "pole " + s0.get_str() + " is a candidate");
          }
        }
      }
  o.detail << cases << " (b, p) cases, " << poles_checked << " poles contained";
}

// 5
void jacobian_suite(Outcome& o) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 4), entry(0, 3);
  int done = 0;
  while (done < 50) {
    const std::size_t n = dim(rng);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    if (determinant(a) == 0) continue;
    ++done;
    std::vector<IntVector> columns;
    for (std::size_t k = 0; k < n; ++k) {
      IntVector c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = a(i, k);
      columns.push_back(c);
    }
    JacobianMonomial jm = jacobian_exponents(a);
    o.require(oracle::symbolic_jacobian(columns) == Polynomial::monomial(n, jm.exponents, GaussianRational(jm.det)),
              "symbolic Jacobian matches");
  }
  o.detail << done << " matrices";
}

// 6
void factorization_suite(Outcome& o) {
  std::vector<Polynomial> cases{parse_polynomial("x1^2+x2^3", 2)};
  std::mt19937_64 rng(6);
  NondegConfig cfg;
  while (cases.size() < 11) {
    Polynomial f = random_polynomial(rng, 2, 4, 6);
    if (!f.constant_term().is_zero() || f.size() < 2) continue;
    if (check_all(f, true, cfg).overall == OverallStatus::NonDegenerate) cases.push_back(f);
  }
  std::mt19937_64 pts(66);
  std::uniform_real_distribution<double> r(0.5, 1.5), ang(0, 6.283);
  int charts = 0;
  for (const auto& f : cases) {
    NewtonPolyhedron np(f);
    Fan simplicial = simplicialize(dual_fan(np));
    for (const Fan& fan : {simplicial, regularize(simplicial)})
      for (std::size_t idx : fan.max_cones()) {
        ++charts;
        RationalCone sigma = fan.cone(idx);
        VertexFactorization fv = factor_vertex(f, sigma);
        // b_i = min over the support of <u_i, mu>, computed directly
        Exponent b;
        for (const auto& u : sigma.rays) {
          Int best = -1;
          for (const auto& mu : support(f)) {
            Int v = oracle::dot(u, mu);
            if (best < 0 || v < best) best = v;
          }
          b.push_back(best);
        }
        o.require(fv.b_image == b, "exponent of the monomial factor");
        o.require(!fv.h.constant_term().is_zero() && !fv.h.has_negative_exponents(), "h(0) != 0");
        // f(psi(x)) = x^b h(x) at random torus points, psi_k(x) = x^{row k of N}
        for (int t = 0; t < 3; ++t) {
          std::vector<std::complex<double>> x;
          for (int i = 0; i < 2; ++i) x.push_back(std::polar(r(pts), ang(pts)));
          std::vector<std::complex<double>> y(2, 1.0);
          std::complex<double> xb = 1.0;
          for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i) y[k] *= std::pow(x[i], static_cast<double>(sigma.rays[i][k]));
          for (int i = 0; i < 2; ++i) xb *= std::pow(x[i], static_cast<double>(b[i]));
          std::complex<double> lhs = f.evaluate(std::span<const std::complex<double>>(y));
          std::complex<double> rhs = xb * fv.h.evaluate(std::span<const std::complex<double>>(x));
          o.require(std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(lhs)), "pull-back identity");
        }
      }
  }
  o.detail << cases.size() << " polynomials, " << charts << " charts (simplicial and regular)";
}

// 7
void dual_fan_partition(Outcome& o) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(1, 1000);
  int points = 0;
  for (auto [text, n] : std::vector<std::pair<const char*, std::size_t>>{{"x1^2+x2^3", 2},
                                                                        {"x1^3*x2+x1*x2^2+x2^5+x1^4", 2},
                                                                        {"x1*x2+x3", 3},
                                                                        {"x1^2+x2^2+x3^3+x1*x2*x3", 3}}) {
    Polynomial f = parse_polynomial(text, n);
    NewtonPolyhedron np(f);
    Fan fan = dual_fan(np);
    for (int trial = 0; trial < 1000; ++trial, ++points) {
      RationalVector w;
      for (std::size_t i = 0; i < n; ++i) w.push_back(q(num(rng), num(rng)));
      int hits = 0;
      std::size_t hit = 0;
      for (std::size_t idx : fan.max_cones())
        if (fan.cone(idx).contains_in_relative_interior(w)) {
          ++hits;
          hit = idx;
        }
      o.require(hits == 1, "exactly one maximal cone");
      if (hits == 1) o.require(face_of_cone(np, fan.cone(hit)).id == first_meet_locus(np, w).id, "dual face");
    }
  }
  o.detail << points << " points over 4 polynomials";
}

// 8
void hilbert_oracle(Outcome& o) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> e(-6, 6);
  int done = 0, lattice_points = 0;
  while (done < 30) {
    IntVector a = primitive(IntVector{e(rng), e(rng)}), b = primitive(IntVector{e(rng), e(rng)});
    Int det = a[0] * b[1] - a[1] * b[0];
    if (det == 0 || std::abs(det) > 20) continue;
    ++done;
    auto basis = hilbert_basis(RationalCone{{a, b}});
    oracle::PlaneCone cone{a, b};
    for (const auto& g : basis) o.require(cone.contains(g), "basis lies in the cone");
    for (Int x = -5; x < 5; ++x)
      for (Int y = -5; y < 5; ++y)
        if (cone.contains({x, y})) {
          ++lattice_points;
          o.require(oracle::decomposes(cone, basis, {x, y}), "lattice point decomposes");
        }
    for (std::size_t g = 0; g < basis.size(); ++g)
      o.require(!oracle::decomposes(cone, basis, basis[g], static_cast<int>(g)), "basis is minimal");
  }
  o.detail << done << " cones, " << lattice_points << " lattice points";
}

// 9
void nondeg_exactness(Outcome& o) {
  NondegConfig cfg;
  NondegReport sq = check_all(parse_polynomial("(x1+x2)^2", 2), true, cfg);
  const Polynomial sqf = parse_polynomial("(x1+x2)^2", 2);
  NewtonPolyhedron np(sqf);
  double refined = INFINITY;
  for (const auto& v : sq.faces)
    if (v.status == FaceStatus::Degenerate)
      refined = std::min(refined, refined_residual(face_function(sqf, np, v.face_id), v.witness));
  o.require(sq.overall == OverallStatus::Degenerate, "(x1+x2)^2 degenerate");
  o.require(refined < kRefinedResidualBound, "refined witness residual");
  for (const char* text : {"x1^2+x2^3", "x1^2+x2^2"}) {
    NondegReport r = check_all(parse_polynomial(text, 2), true, cfg);
    bool exact = r.overall == OverallStatus::NonDegenerate;
    for (const auto& v : r.faces) exact = exact && v.method != CheckMethod::NumericSearch;
    o.require(exact, std::string(text) + " non-degenerate (exact)");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", refined);
  o.detail << "refined residual " << buf;
}

// 10
void numerical_validation(Outcome& o) {
  const auto start = Clock::now();
  double worst = 0;
  int cases = 0;
  const std::complex<double> s_values[] = {{0.5, 0}, {1, 0}, {2.5, 0}, {0.75, 0.5}, {1.5, -2}};
  for (int m = 1; m <= 4; ++m)
    for (int idx = 0; idx < 5; ++idx) {
      const int p = (m + idx) % 4;
      const auto s = s_values[idx];
      ZetaSample z = zeta_quadrature(Polynomial::monomial(1, {m}), BumpSpec{1.0, p}, s, {4096, 4});
      std::complex<double> ref = monomial_reference(m, p, s);
      double rel = std::abs(z.value - ref) / std::abs(ref);
      worst = std::max(worst, rel);
      ++cases;
      o.require(rel < 1e-5, "quadrature within 1e-5");
    }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 10, "quadrature under 10 s");

  ProbeReport inside = holomorphy_probe(parse_polynomial("x1^2+x2^3", 2), {}, {-0.3});
  ProbeReport outside = holomorphy_probe(parse_polynomial("x1", 1), {}, {-0.9});
  o.require(inside.all_stable, "cusp stable at -0.3");
  o.require(!outside.all_stable, "x1 flagged at -0.9");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d cases, worst rel. error %.1e, %.2f s; probe change %.1e (cusp) / %.2f (x1)",
                cases, worst, elapsed, inside.points[0].extrapolated_change, outside.points[0].extrapolated_change);
  o.detail << buf;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"cusp end-to-end", cusp_end_to_end},
      {"refined vs naive candidate lists", refined_vs_naive},
      {"order bound for x1*x2", order_bound_ground_truth},
      {"monomial pole containment", monomial_containment},
      {"Jacobian of monomial maps", jacobian_suite},
      {"vertex factorization on every chart", factorization_suite},
      {"dual fan partition", dual_fan_partition},
      {"Hilbert bases", hilbert_oracle},
      {"non-degeneracy exactness", nondeg_exactness},
      {"numerical validation", numerical_validation},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << ++index << ". " << name << ": " << o.detail.str() << "\n";
    failed += !o.ok;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (10 - failed) << "/10\n";
  return failed ? 1 : 0;
}
