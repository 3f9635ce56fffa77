#include "polyzeta/poles.hpp"

#include <algorithm>
#include <map>

#include "polyzeta/fan.hpp"

namespace polyzeta {

namespace {

const char* kOmegaCaveat =
    "candidates hold for test functions supported in a sufficiently small neighbourhood of the origin";
const char* kQuantifierNote =
    "order bounds require s0 in P(u) for every facet F_u containing the face";

Rational make_rational(Int num, Int den) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

void check_hypotheses(const Polynomial& f, const PoleOptions& options, const NondegReport& nondeg,
                      CandidatePoleSet& set) {
  if (options.max_k < 0 || options.max_k > kMaxTruncation)
    throw DomainError("truncation depth must lie in [0, " + std::to_string(kMaxTruncation) + "]");
  if (!f.constant_term().is_zero()) throw HypothesisError("f(0) != 0: the origin is not a zero of f");
  if (nondeg.overall == OverallStatus::Degenerate) {
    long face = -1;
    for (const auto& v : nondeg.faces)
      if (v.status == FaceStatus::Degenerate) {
        face = static_cast<long>(v.face_id);
        break;
      }
    if (!options.force)
      throw HypothesisError("f is degenerate on face " + std::to_string(face) + " of its Newton polyhedron", face);
    set.hypothesis_unverified = true;
    set.caveats.push_back("hypothesis-unverified: f is degenerate on face " + std::to_string(face));
  } else if (nondeg.overall == OverallStatus::Inconclusive) {
    set.caveats.push_back("non-degeneracy not decided on every face; candidates assume it holds");
  }
}

// Merges the progressions of `normals` and the half-integer family.
void fill_entries(const Polynomial& f, const std::vector<IntVector>& normals, CandidatePoleSet& set) {
  std::map<Rational, CandidatePole> merged;
  Rational floor = 0;
  bool first = true;
  for (const auto& u : normals) {
    Rational order = omega_order(f, to_rational(u));
    if (sgn(order) <= 0) continue;
    PoleProgression p = progression(f, u, set.max_k);
    for (const auto& v : p.values) {
      auto& e = merged[v];
      e.value = v;
      e.sources.push_back(u);
    }
    if (first || p.values.back() < floor) floor = p.values.back();
    first = false;
  }
  if (first) throw DomainError("no ray with positive order: candidate set undefined");
  for (Int k = 0;; ++k) {
    Rational v = make_rational(-(1 + k), 2);
    if (v < floor) break;
    auto& e = merged[v];
    e.value = v;
  }
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    CandidatePole e = it->second;
    e.half_integer = is_half_integer_candidate(e.value);
    std::sort(e.sources.begin(), e.sources.end());
    e.sources.erase(std::unique(e.sources.begin(), e.sources.end()), e.sources.end());
    set.entries.push_back(std::move(e));
  }
}

}  // namespace

bool in_progression(const Rational& s, const IntVector& u, Int nu) {
  Rational k = -2 * Rational(static_cast<long>(nu)) * s - Rational(static_cast<long>(l1(u)));
  return k.get_den() == 1 && sgn(k) >= 0;
}

bool is_half_integer_candidate(const Rational& s) {
  Rational k = -2 * s - 1;
  return k.get_den() == 1 && sgn(k) >= 0;
}

PoleProgression progression(const Polynomial& f, const IntVector& u, Int max_k) {
  if (u.size() != f.dim()) throw DomainError("normal has wrong length");
  if (std::any_of(u.begin(), u.end(), [](Int x) { return x < 0; }) || l1(u) == 0)
    throw DomainError("normal must be non-negative and nonzero");
  if (max_k < 0) throw DomainError("truncation depth must be non-negative");
  Rational order = omega_order(f, to_rational(u));
  if (sgn(order) == 0) throw DomainError("nu_u(f) = 0 for u = " + to_string(u) + ": progression undefined");
  PoleProgression p;
  p.u = u;
  p.nu = order.get_num().get_si();
  for (Int k = 0; k <= max_k; ++k) p.values.push_back(make_rational(-(l1(u) + k), 2 * p.nu));
  return p;
}

Rational holomorphy_bound(const Polynomial& f) {
  RemotenessReport r = remoteness(NewtonPolyhedron(f));
  Rational a = -r.nu0, b(-1, 2);
  return a > b ? a : b;
}

void order_bounds(CandidatePoleSet& set, const NewtonPolyhedron& np) {
  const Int n = static_cast<Int>(np.dim());
  for (auto& e : set.entries) {
    Int best = 0;  // the polyhedron itself satisfies the condition vacuously
    for (const auto& face : np.faces()) {
      bool ok = std::all_of(face.tight_facets.begin(), face.tight_facets.end(), [&](std::size_t j) {
        const Facet& fc = np.facets()[j];
        return fc.has_positive_offset() && in_progression(e.value, fc.normal, fc.offset);
      });
      if (ok) best = std::max(best, static_cast<Int>(face.codimension));
    }
    Int bound = e.half_integer ? 1 + best : best;
    e.order_bound = static_cast<int>(std::clamp<Int>(bound, 1, n));
  }
}

CandidatePoleSet candidate_poles(const Polynomial& f, const PoleOptions& options) {
  return candidate_poles(f, options, check_all(f, options.compact_only, options.nondeg));
}

CandidatePoleSet candidate_poles(const Polynomial& f, const PoleOptions& options, const NondegReport& nondeg) {
  CandidatePoleSet set;
  set.max_k = options.max_k;
  check_hypotheses(f, options, nondeg, set);
  NewtonPolyhedron np(f);
  set.remoteness = remoteness(np);
  set.holomorphy_bound = std::max(Rational(-set.remoteness.nu0), Rational(-1, 2));
  std::vector<IntVector> normals;
  for (const auto& fc : np.facets()) normals.push_back(fc.normal);
  fill_entries(f, normals, set);
  order_bounds(set, np);
  set.caveats.insert(set.caveats.begin(), {kOmegaCaveat, kQuantifierNote});
  return set;
}

CandidatePoleSet naive_candidates(const Polynomial& f, const PoleOptions& options) {
  return naive_candidates(f, options, check_all(f, options.compact_only, options.nondeg));
}

CandidatePoleSet naive_candidates(const Polynomial& f, const PoleOptions& options, const NondegReport& nondeg) {
  CandidatePoleSet set;
  set.max_k = options.max_k;
  check_hypotheses(f, options, nondeg, set);
  NewtonPolyhedron np(f);
  set.remoteness = remoteness(np);
  set.holomorphy_bound = std::max(Rational(-set.remoteness.nu0), Rational(-1, 2));
  Fan regular = regularize(simplicialize(dual_fan(np)));
  fill_entries(f, regular.rays(), set);

  // Order bound of a resolution: how many rays of one chart carry the value.
  const Int n = static_cast<Int>(f.dim());
  for (auto& e : set.entries) {
    Int best = 0;
    for (std::size_t idx : regular.max_cones()) {
      Int count = 0;
      for (const auto& u : regular.cone(idx).rays) {
        Rational order = omega_order(f, to_rational(u));
        if (sgn(order) > 0 && in_progression(e.value, u, order.get_num().get_si())) ++count;
      }
      best = std::max(best, count);
    }
    if (e.half_integer) ++best;
    e.order_bound = static_cast<int>(std::clamp<Int>(best, 1, n));
  }
  set.caveats.insert(set.caveats.begin(), kOmegaCaveat);
  return set;
}

}  // namespace polyzeta
