#ifndef POLYZETA_REPORT_HPP
#define POLYZETA_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "polyzeta/fan.hpp"
#include "polyzeta/newton.hpp"
#include "polyzeta/nondeg.hpp"
#include "polyzeta/poles.hpp"
#include "polyzeta/zeta.hpp"

namespace polyzeta {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Report bodies; rationals are rendered as strings ("-5/12").
Json to_json(const NewtonPolyhedron& np);
Json to_json(const Fan& fan);
// Dual fan, its simplicial refinement and a regular refinement.
Json fans_json(const NewtonPolyhedron& np);
Json to_json(const NondegReport& report, const NewtonPolyhedron& np);
Json to_json(const CandidatePoleSet& set);
Json to_json(const std::vector<ZetaSample>& samples);
Json to_json(const ProbeReport& report);

std::string np_text(const NewtonPolyhedron& np);
std::string fans_text(const NewtonPolyhedron& np);
std::string nondeg_text(const NondegReport& report, const NewtonPolyhedron& np);
std::string poles_text(const CandidatePoleSet& set);
std::string zeta_text(const std::vector<ZetaSample>& samples);
// Header s_re,s_im,value_re,value_im,est_error.
std::string zeta_csv(const std::vector<ZetaSample>& samples);
std::string probe_text(const ProbeReport& report);

}  // namespace polyzeta

#endif
