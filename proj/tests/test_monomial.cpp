#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyzeta/monomial.hpp"

using namespace polyzeta;

namespace {

using C = std::complex<double>;

std::vector<C> random_torus_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> r(0.5, 1.5), a(0, 6.283);
  std::vector<C> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(std::polar(r(rng), a(rng)));
  return p;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi);
  while (true) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
    if (determinant(m) != 0) return m;
  }
}

}  // namespace

TEST_SUITE("monomial") {
  TEST_CASE("apply") {
    MonomialMap id(IntMatrix::identity(2));
    std::vector<C> p{C(2, 1), C(-1, 3)};
    CHECK(polyzeta::apply(id, p) == p);
    MonomialMap m(IntMatrix::from_columns({{1, 0}, {1, 1}}));
    CHECK(m.covering_degree == 1);
    std::vector<GaussianRational> q{2, 3};
    CHECK(polyzeta::apply(m, q) == std::vector<GaussianRational>{2, 6});
    std::vector<C> zero{C(0), C(1)};
    CHECK(polyzeta::apply(m, zero) == std::vector<C>{C(0), C(0)});
    MonomialMap inv(IntMatrix::from_columns({{-1, 0}, {0, 1}}));
    CHECK_THROWS_AS(polyzeta::apply(inv, zero), DomainError);
    CHECK_THROWS_AS(MonomialMap(IntMatrix::from_rows({{1, 2}, {2, 4}})), DomainError);
    CHECK(MonomialMap(IntMatrix::diagonal({2, 3})).covering_degree == 6);
  }

  TEST_CASE("composition follows psi_M o psi_N = psi_{NM}") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t n = 2 + trial % 2;
      MonomialMap m(random_matrix(rng, n, -2, 3)), k(random_matrix(rng, n, -2, 3));
      MonomialMap mk = compose(m, k);
      CHECK(mk.matrix == k.matrix * m.matrix);
      auto p = random_torus_point(rng, n);
      auto lhs = polyzeta::apply(mk, p), rhs = polyzeta::apply(m, polyzeta::apply(k, p));
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(lhs[i] - rhs[i]) <= 1e-12 * std::abs(rhs[i]));
    }
  }

  TEST_CASE("jacobian exponents") {
    JacobianMonomial a = jacobian_exponents(IntMatrix::from_columns({{1, 0}, {1, 1}}));
    CHECK(a.det == 1);
    CHECK(a.exponents == IntVector{1, 0});
    JacobianMonomial id = jacobian_exponents(IntMatrix::identity(3));
    CHECK(id.det == 1);
    CHECK(id.exponents == IntVector{0, 0, 0});
    JacobianMonomial d = jacobian_exponents(IntMatrix::diagonal({3, 5}));
    CHECK(d.det == 15);
    CHECK(d.exponents == IntVector{2, 4});
    CHECK_THROWS_AS(jacobian_exponents(IntMatrix::from_rows({{1, -1}, {0, 1}})), DomainError);
    // symbolic oracle on the examples
    CHECK(oracle::symbolic_jacobian({{1, 0}, {1, 1}}) == Polynomial::monomial(2, {1, 0}));
    CHECK(oracle::symbolic_jacobian({{3, 0}, {0, 5}}) == Polynomial::monomial(2, {2, 4}, 15));
  }

  TEST_CASE("transform") {
    Polynomial cusp = parse_polynomial("x1^2+x2^3", 2);
    IntMatrix nt = IntMatrix::from_rows({{1, 0}, {3, 2}});
    CHECK(transform(cusp, nt) == parse_polynomial("x2^6*(x1^2+1)", 2));
    Polynomial f = parse_polynomial("x1*x2", 2);
    CHECK(transform(f, IntMatrix::identity(2)) == f);
    CHECK_THROWS_AS(transform(f, IntMatrix::from_rows({{1, 1}, {1, 1}})), DomainError);

    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> e(0, 4), c(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
      IntMatrix m = random_matrix(rng, 2, -2, 3);
      Polynomial g(2);
      for (int t = 0; t < 4; ++t) g.add_term({e(rng), e(rng)}, GaussianRational(c(rng)));
      std::vector<Exponent> expected;
      for (const auto& mu : support(g)) expected.push_back(m * mu);
      std::sort(expected.begin(), expected.end());
      CHECK(support(transform(g, m)) == expected);
    }
  }

  TEST_CASE("vertex factorization") {
    Polynomial cusp = parse_polynomial("x1^2+x2^3", 2);
    VertexFactorization a = factor_vertex(cusp, RationalCone{{{1, 0}, {3, 2}}});
    CHECK(a.b_image == Exponent{0, 6});
    CHECK(a.h == parse_polynomial("x1^2+1", 2));
    VertexFactorization b = factor_vertex(cusp, RationalCone{{{0, 1}, {3, 2}}});
    CHECK(b.b_image == Exponent{0, 6});
    CHECK(b.h == parse_polynomial("1+x1^3", 2));
    VertexFactorization c = factor_vertex(parse_polynomial("x1*x2", 2), RationalCone{{{1, 0}, {0, 1}}});
    CHECK(c.b_image == Exponent{1, 1});
    CHECK(c.h == Polynomial::constant(2, 1));
    // a cone meeting two maximal cones of the dual fan is not subordinated
    CHECK_THROWS_AS(factor_vertex(cusp, RationalCone{{{1, 0}, {0, 1}}}), DomainError);
  }

  TEST_CASE("single vertex after the pull-back") {
    Polynomial f = parse_polynomial("x1^3*x2 + x1*x2^2 + x2^5 + x1^4", 2);
    Fan fan = simplicialize(dual_fan(NewtonPolyhedron(f)));
    for (std::size_t idx : fan.max_cones()) {
      RationalCone sigma = fan.cone(idx);
      VertexFactorization fv = factor_vertex(f, sigma);
      NewtonPolyhedron pulled(transform(f, sigma.ray_matrix().transpose()));
      CHECK(pulled.vertices() == std::vector<Exponent>{fv.b_image});
    }
  }

  TEST_CASE("face transform check") {
    Polynomial cusp = parse_polynomial("x1^2+x2^3", 2);
    RationalCone sigma{{{1, 0}, {3, 2}}};
    CHECK(face_transform_check(cusp, sigma, {1}) == parse_polynomial("x1^2+1", 2));
    CHECK(face_transform_check(cusp, sigma, {0}) == Polynomial::constant(2, 1));
    CHECK(face_transform_check(cusp, sigma, {}) == factor_vertex(cusp, sigma).h);
    CHECK(face_transform_check(cusp, sigma, {0, 1}) == Polynomial::constant(2, 1));
  }

  TEST_CASE("chart diagram at exponent level") {
    // rho_x o Phi = psi_Lambda and rho_y o Phi = psi_{N^t}
    RationalCone sigma{{{1, 0}, {3, 2}}};
    ChartData c = chart_data(sigma);
    DualConePair d = dual_cone(sigma);
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = random_torus_point(rng, 2);
      std::vector<C> phi;
      for (std::size_t k = 0; k < c.phi_matrix.cols(); ++k)
        phi.push_back(std::pow(x[0], static_cast<int>(c.phi_matrix(0, k))) *
                      std::pow(x[1], static_cast<int>(c.phi_matrix(1, k))));
      auto lam = polyzeta::apply(MonomialMap(IntMatrix::diagonal(d.lambda)), x);
      auto nt = polyzeta::apply(MonomialMap(d.n.transpose()), x);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(std::abs(phi[i] - lam[i]) < 1e-12);
        CHECK(std::abs(phi[2 + i] - nt[i]) < 1e-12);
      }
    }
  }
}
