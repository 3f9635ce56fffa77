#ifndef POLYZETA_POLES_HPP
#define POLYZETA_POLES_HPP

#include <string>
#include <vector>

#include "polyzeta/newton.hpp"
#include "polyzeta/nondeg.hpp"

namespace polyzeta {

/// P(u) = { -(||u|| + k) / (2 nu_u) : k = 0..K }.
struct PoleProgression {
  IntVector u;
  Int nu = 0;
  std::vector<Rational> values;
};

struct CandidatePole {
  Rational value;
  std::vector<IntVector> sources;  // normals whose progression contains value, sorted
  bool half_integer = false;       // value in -(1 + N)/2
  int order_bound = 1;
};

struct CandidatePoleSet {
  Int max_k = 0;
  std::vector<CandidatePole> entries;  // descending by value
  Rational holomorphy_bound;
  RemotenessReport remoteness;
  bool hypothesis_unverified = false;
  std::vector<std::string> caveats;
};

struct PoleOptions {
  Int max_k = 20;
  bool compact_only = true;  // faces checked for non-degeneracy
  bool force = false;        // continue (tagged) on a degenerate verdict
  NondegConfig nondeg;
};

PoleProgression progression(const Polynomial& f, const IntVector& u, Int max_k);
bool in_progression(const Rational& s, const IntVector& u, Int nu);
bool is_half_integer_candidate(const Rational& s);

// Union of P(u) over facet normals with nu_u > 0 and -(1 + N)/2, cut at the
// smallest K-th progression value.
CandidatePoleSet candidate_poles(const Polynomial& f, const PoleOptions& options);
// Same with a precomputed non-degeneracy report.
CandidatePoleSet candidate_poles(const Polynomial& f, const PoleOptions& options, const NondegReport& nondeg);

// Fills order_bound from the face lattice of np.
void order_bounds(CandidatePoleSet& set, const NewtonPolyhedron& np);

// max(-nu0, -1/2)
Rational holomorphy_bound(const Polynomial& f);

// The list obtained from every ray of a regular refinement of the dual fan.
CandidatePoleSet naive_candidates(const Polynomial& f, const PoleOptions& options);
CandidatePoleSet naive_candidates(const Polynomial& f, const PoleOptions& options, const NondegReport& nondeg);

constexpr Int kMaxTruncation = 10000;

}  // namespace polyzeta

#endif
