#include "polyzeta/nondeg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "polyzeta/linalg.hpp"

namespace polyzeta {

namespace {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

void trim(Univariate& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    GaussianRational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate monic(Univariate p) {
  trim(p);
  if (p.empty()) return p;
  GaussianRational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

std::vector<Complex> roots(const Univariate& p) {
  const std::size_t d = p.size() - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  Complex lead = p.back().to_complex();
  for (std::size_t i = 0; i < d; ++i) companion(i, d - 1) = -p[i].to_complex() / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

struct System {
  Polynomial g;
  std::vector<Polynomial> grad;
  std::vector<std::vector<Polynomial>> hess;

  explicit System(const Polynomial& p) : g(p), grad(gradient(p)) {
    for (const auto& d : grad) hess.push_back(gradient(d));
  }
  std::size_t n() const { return g.dim(); }
};

double max_abs(const System& s, const CVector& x) {
  double r = std::abs(s.g.evaluate(x));
  for (const auto& d : s.grad) r = std::max(r, std::abs(d.evaluate(x)));
  return r;
}

double cost(const System& s, const CVector& x) {
  double c = std::norm(s.g.evaluate(x));
  for (const auto& d : s.grad) c += std::norm(d.evaluate(x));
  return c;
}

// One Levenberg-Marquardt step for F = (g, grad g).
CVector lm_step(const System& s, const CVector& x, double lambda) {
  const std::size_t n = s.n();
  Eigen::VectorXcd fx(n + 1);
  Eigen::MatrixXcd jac(n + 1, n);
  fx(0) = s.g.evaluate(x);
  for (std::size_t j = 0; j < n; ++j) jac(0, j) = s.grad[j].evaluate(x);
  for (std::size_t i = 0; i < n; ++i) {
    fx(i + 1) = s.grad[i].evaluate(x);
    for (std::size_t j = 0; j < n; ++j) jac(i + 1, j) = s.hess[i][j].evaluate(x);
  }
  Eigen::MatrixXcd a = jac.adjoint() * jac;
  a.diagonal().array() += lambda;
  Eigen::VectorXcd delta = a.ldlt().solve(-(jac.adjoint() * fx));
  CVector out = x;
  for (std::size_t j = 0; j < n; ++j) out[j] += delta(j);
  return out;
}

// Weight omega >= 0, sum 1, constant on the support of g, if one exists.
std::optional<std::vector<double>> homogeneity_weight(const Polynomial& g) {
  const auto supp = support(g);
  const std::size_t n = g.dim();
  std::vector<RationalVector> a;
  for (std::size_t k = 1; k < supp.size(); ++k) {
    RationalVector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = supp[k][i] - supp[0][i];
    a.push_back(row);
  }
  a.push_back(RationalVector(n, 1));
  RationalVector b(a.size(), 0);
  b.back() = 1;
  auto w = nonnegative_solution(a, b);
  if (!w) return std::nullopt;
  std::vector<double> out;
  for (const auto& q : *w) out.push_back(q.get_d());
  return out;
}

// Moves x along the torus orbit t^omega . x to |x_k| = 1, k the heaviest weight.
void normalize(CVector& x, const std::optional<std::vector<double>>& w) {
  if (!w) return;
  std::size_t k = static_cast<std::size_t>(std::max_element(w->begin(), w->end()) - w->begin());
  double r = std::abs(x[k]);
  if (r == 0 || !std::isfinite(r)) return;
  double log_t = -std::log(r) / (*w)[k];
  for (std::size_t j = 0; j < x.size(); ++j) x[j] *= std::exp(log_t * (*w)[j]);
}

Rational round_dyadic(double v) {
  constexpr int kBits = 28;
  Rational q(mpz_class(static_cast<long>(std::llround(std::ldexp(v, kBits)))), mpz_class(1) << kBits);
  q.canonicalize();
  return q;
}

using GVector = std::vector<GaussianRational>;

// Solves a x = b over the Gaussian rationals (a nonsingular).
GVector solve_exact(std::vector<GVector> a, GVector b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::logic_error("singular refinement system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      GaussianRational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  GVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

std::string to_string(FaceStatus s) {
  switch (s) {
    case FaceStatus::NonDegenerate: return "non-degenerate";
    case FaceStatus::Degenerate: return "degenerate";
    case FaceStatus::Unknown: return "unknown";
  }
  return "";
}

std::string to_string(CheckMethod m) {
  switch (m) {
    case CheckMethod::Monomial: return "monomial";
    case CheckMethod::EdgeUnivariate: return "edge-univariate";
    case CheckMethod::NumericSearch: return "numeric-search";
  }
  return "";
}

std::string to_string(OverallStatus s) {
  switch (s) {
    case OverallStatus::NonDegenerate: return "non-degenerate";
    case OverallStatus::Degenerate: return "degenerate";
    case OverallStatus::Inconclusive: return "inconclusive";
  }
  return "";
}

Univariate derivative(const Univariate& p) {
  Univariate d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * GaussianRational(static_cast<long>(j)));
  trim(d);
  return d;
}

Univariate gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Univariate edge_univariate(const Polynomial& f, const NewtonPolyhedron& np, std::size_t face_id) {
  const Face& face = np.face(face_id);
  if (face.dimension != 1) throw DomainError("edge_univariate needs a one-dimensional face");
  const auto& pts = face.support_points;
  if (pts.size() < 2) throw DomainError("edge carries fewer than two support points");
  const Exponent& mu0 = pts.back();
  IntVector d = primitive(subtract(pts.front(), mu0));
  std::size_t i = 0;
  while (d[i] == 0) ++i;
  Univariate p;
  for (const auto& mu : pts) {
    Int j = (mu[i] - mu0[i]) / d[i];
    if (p.size() <= static_cast<std::size_t>(j)) p.resize(j + 1);
    p[j] = f.coefficient(mu);
  }
  return p;
}

double residual(const Polynomial& g, const std::vector<std::complex<double>>& x) { return max_abs(System(g), x); }

double refined_residual(const Polynomial& g, const std::vector<std::complex<double>>& x) {
  const System s(g);
  const std::size_t n = s.n();
  GVector p;
  for (const auto& z : x) p.emplace_back(round_dyadic(z.real()), round_dyadic(z.imag()));

  std::vector<GVector> jac(n + 1, GVector(n));
  GVector fx(n + 1);
  fx[0] = s.g.evaluate(p);
  for (std::size_t j = 0; j < n; ++j) jac[0][j] = s.grad[j].evaluate(p);
  for (std::size_t i = 0; i < n; ++i) {
    fx[i + 1] = s.grad[i].evaluate(p);
    for (std::size_t j = 0; j < n; ++j) jac[i + 1][j] = s.hess[i][j].evaluate(p);
  }
  const GaussianRational lambda(Rational(1, 1 << 30));
  std::vector<GVector> a(n, GVector(n));
  GVector rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k <= n; ++k) a[r][c] += jac[k][r].conj() * jac[k][c];
      if (r == c) a[r][c] += lambda;
    }
    for (std::size_t k = 0; k <= n; ++k) rhs[r] -= jac[k][r].conj() * fx[k];
  }
  GVector delta = solve_exact(a, rhs);
  for (std::size_t j = 0; j < n; ++j) p[j] += delta[j];

  Rational worst = s.g.evaluate(p).norm();
  for (const auto& d : s.grad) worst = std::max(worst, Rational(d.evaluate(p).norm()));
  return std::sqrt(worst.get_d());
}

std::optional<std::vector<std::complex<double>>> witness_search(const Polynomial& g, const NondegConfig& cfg,
                                                                std::uint64_t stream) {
  if (g.size() <= 1) return std::nullopt;
  const System s(g);
  const std::size_t n = s.n();
  const auto weight = homogeneity_weight(g);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> log_radius(-1.0, 1.0), angle(0.0, 2 * M_PI);

  for (int attempt = 0; attempt < cfg.attempts; ++attempt) {
    CVector x(n);
    for (auto& z : x) z = std::polar(std::exp(log_radius(rng)), angle(rng));
    normalize(x, weight);
    double c = cost(s, x), lambda = 1e-3;
    for (int it = 0; it < 400 && std::isfinite(c); ++it) {
      if (max_abs(s, x) < cfg.tol * 1e-2) break;
      CVector y = lm_step(s, x, lambda);
      normalize(y, weight);
      double cy = cost(s, y);
      if (std::isfinite(cy) && cy < c) {
        x = std::move(y);
        c = cy;
        lambda = std::max(lambda / 3, 1e-15);
      } else {
        lambda *= 4;
        if (lambda > 1e12) break;
      }
    }
    double smallest = std::abs(x[0]);
    for (const auto& z : x) smallest = std::min(smallest, std::abs(z));
    if (std::isfinite(c) && max_abs(s, x) < cfg.tol && smallest > cfg.tol) return x;
  }
  return std::nullopt;
}

Verdict check_face(const Polynomial& f, const NewtonPolyhedron& np, std::size_t face_id, const NondegConfig& cfg) {
  const Face& face = np.face(face_id);
  Verdict v;
  v.face_id = face_id;
  v.face_dim = face.dimension;
  const Polynomial g = face_function(f, np, face_id);

  auto degenerate_or_unknown = [&](const CVector& w) {
    if (refined_residual(g, w) <= kRefinedResidualBound) {
      v.status = FaceStatus::Degenerate;
      v.witness = w;
      v.residual = residual(g, w);
    } else {
      v.status = FaceStatus::Unknown;
      v.attempts = cfg.attempts;
      v.tolerance = cfg.tol;
    }
  };

  if (g.size() <= 1) {
    v.method = CheckMethod::Monomial;
    v.status = FaceStatus::NonDegenerate;
    return v;
  }
  if (face.dimension == 1) {
    v.method = CheckMethod::EdgeUnivariate;
    Univariate p = edge_univariate(f, np, face_id);
    Univariate q = gcd(p, derivative(p));
    if (q.size() <= 1) {
      v.status = FaceStatus::NonDegenerate;
      return v;
    }
    // p(0) != 0, so every root of q is a nonzero multiple root of p.
    Complex t = roots(q)[0];
    const auto& pts = face.support_points;
    IntVector d = primitive(subtract(pts.front(), pts.back()));
    std::size_t i = 0;
    while (d[i] == 0) ++i;
    CVector w(f.dim(), 1.0);
    w[i] = std::exp(std::log(t) / static_cast<double>(d[i]));
    degenerate_or_unknown(w);
    return v;
  }
  v.method = CheckMethod::NumericSearch;
  auto w = witness_search(g, cfg, face_id);
  if (w) {
    degenerate_or_unknown(*w);
  } else {
    v.status = FaceStatus::Unknown;
    v.attempts = cfg.attempts;
    v.tolerance = cfg.tol;
  }
  return v;
}

NondegReport check_all(const Polynomial& f, bool compact_only, const NondegConfig& cfg) {
  NewtonPolyhedron np(f);
  NondegReport report;
  report.compact_only = compact_only;
  bool all_exact = true, any_degenerate = false;
  for (const auto& face : np.faces()) {
    if (face.id == np.improper_face().id) continue;
    if (compact_only && !face.compact) continue;
    Verdict v = check_face(f, np, face.id, cfg);
    any_degenerate |= v.status == FaceStatus::Degenerate;
    all_exact &= v.status == FaceStatus::NonDegenerate;
    report.faces.push_back(std::move(v));
  }
  report.overall = any_degenerate ? OverallStatus::Degenerate
                   : all_exact    ? OverallStatus::NonDegenerate
                                  : OverallStatus::Inconclusive;
  return report;
}

}  // namespace polyzeta
