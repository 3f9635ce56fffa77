#include "polyzeta/report.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

namespace polyzeta {

namespace {

Json vectors(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

Json complex_vector(const std::vector<std::complex<double>>& z) {
  Json out = Json::array();
  for (const auto& c : z) out.push_back({c.real(), c.imag()});
  return out;
}

std::string show(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real();
  if (z.imag() != 0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string sources_text(const CandidatePole& e) {
  std::string out;
  for (const auto& u : e.sources) out += (out.empty() ? "" : " ") + to_string(u);
  if (e.half_integer) out += (out.empty() ? "" : " ") + std::string("half-integer");
  return out;
}

std::string fan_text(const std::string& title, const Fan& fan) {
  std::ostringstream os;
  os << title << ": " << fan.rays().size() << " rays, " << fan.max_cones().size() << " maximal cones\n";
  for (std::size_t idx : fan.max_cones()) {
    RationalCone c = fan.cone(idx);
    os << "  <";
    for (std::size_t i = 0; i < c.rays.size(); ++i) os << (i ? " " : "") << to_string(c.rays[i]);
    os << ">";
    if (c.is_simplicial()) os << "  det " << c.multiplicity() << (c.is_regular() ? " (regular)" : "");
    os << "\n";
  }
  return os.str();
}

std::optional<RemotenessReport> optional_remoteness(const NewtonPolyhedron& np) {
  bool any = std::any_of(np.facets().begin(), np.facets().end(), [](const Facet& f) { return f.has_positive_offset(); });
  if (!any) return std::nullopt;
  return remoteness(np);
}

}  // namespace

Json to_json(const NewtonPolyhedron& np) {
  Json out;
  out["n"] = np.dim();
  out["vertices"] = vectors(np.vertices());
  out["facets"] = Json::array();
  for (const auto& fc : np.facets()) out["facets"].push_back({{"u", fc.normal}, {"nu", fc.offset}});
  out["faces"] = Json::array();
  for (const auto& face : np.faces()) {
    Json j;
    j["dim"] = face.dimension;
    j["tight"] = face.tight_facets;
    j["vertex_ids"] = face.vertex_ids;
    j["compact"] = face.compact;
    out["faces"].push_back(j);
  }
  if (auto r = optional_remoteness(np))
    out["remoteness"] = {{"nu0", to_string(r->nu0)}, {"t0", to_string(r->t0)}, {"attaining", vectors(r->attaining_normals)}};
  else
    out["remoteness"] = nullptr;
  return out;
}

Json to_json(const Fan& fan) {
  Json out;
  out["rays"] = vectors(fan.rays());
  out["cones"] = Json::array();
  for (std::size_t idx : fan.max_cones()) {
    RationalCone c = fan.cone(idx);
    Json j;
    j["ray_ids"] = fan.cones()[idx].ray_ids;
    if (c.is_simplicial())
      j["det"] = c.multiplicity();
    else
      j["det"] = nullptr;
    j["regular"] = c.is_regular();
    out["cones"].push_back(j);
  }
  out["vertices"] = vectors(fan.vertices());
  return out;
}

Json fans_json(const NewtonPolyhedron& np) {
  Fan dual = dual_fan(np);
  Fan simplicial = simplicialize(dual);
  Json out;
  out["dual"] = to_json(dual);
  out["simplicial"] = to_json(simplicial);
  out["regular"] = to_json(regularize(simplicial));
  return out;
}

Json to_json(const NondegReport& report, const NewtonPolyhedron& np) {
  Json out;
  out["overall"] = to_string(report.overall);
  out["compact_only"] = report.compact_only;
  out["faces"] = Json::array();
  for (const auto& v : report.faces) {
    Json j;
    j["id"] = v.face_id;
    j["dim"] = v.face_dim;
    j["compact"] = np.face(v.face_id).compact;
    j["status"] = to_string(v.status);
    j["method"] = to_string(v.method);
    if (v.status == FaceStatus::Degenerate) {
      j["witness"] = complex_vector(v.witness);
      j["residual"] = v.residual;
    } else if (v.status == FaceStatus::Unknown) {
      j["attempts"] = v.attempts;
      j["tolerance"] = v.tolerance;
    }
    out["faces"].push_back(j);
  }
  return out;
}

Json to_json(const CandidatePoleSet& set) {
  Json out;
  out["max_k"] = set.max_k;
  out["holomorphy_bound"] = to_string(set.holomorphy_bound);
  out["remoteness"] = {{"nu0", to_string(set.remoteness.nu0)},
                       {"t0", to_string(set.remoteness.t0)},
                       {"attaining", vectors(set.remoteness.attaining_normals)}};
  out["hypothesis"] = set.hypothesis_unverified ? "hypothesis-unverified" : "verified";
  out["caveats"] = set.caveats;
  out["candidates"] = Json::array();
  for (const auto& e : set.entries) {
    Json sources = vectors(e.sources);
    if (e.half_integer) sources.push_back("half-integer");
    out["candidates"].push_back({{"value", to_string(e.value)}, {"sources", sources}, {"order_bound", e.order_bound}});
  }
  return out;
}

Json to_json(const std::vector<ZetaSample>& samples) {
  Json out = Json::array();
  for (const auto& z : samples)
    out.push_back({{"s_re", z.s.real()},
                   {"s_im", z.s.imag()},
                   {"value_re", z.value.real()},
                   {"value_im", z.value.imag()},
                   {"est_error", z.est_error},
                   {"grid", {z.grid.radial, z.grid.angular}}});
  return out;
}

Json to_json(const ProbeReport& report) {
  Json out;
  out["all_stable"] = report.all_stable;
  out["points"] = Json::array();
  for (const auto& p : report.points) {
    Json values = Json::array();
    for (const auto& v : p.values) values.push_back({v.real(), v.imag()});
    Json single = std::isfinite(p.single_change) ? Json(p.single_change) : Json(nullptr);
    Json extrapolated = std::isfinite(p.extrapolated_change) ? Json(p.extrapolated_change) : Json(nullptr);
    out["points"].push_back({{"s_re", p.s.real()},
                             {"s_im", p.s.imag()},
                             {"values", values},
                             {"single_change", single},
                             {"extrapolated_change", extrapolated},
                             {"stable", p.stable}});
  }
  return out;
}

std::string np_text(const NewtonPolyhedron& np) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : np.vertices()) os << " " << to_string(v);
  os << "\nfacets:\n";
  for (const auto& fc : np.facets()) os << "  u = " << to_string(fc.normal) << "  nu = " << fc.offset << "\n";
  os << "faces:\n";
  for (const auto& face : np.faces()) {
    os << "  #" << face.id << " dim " << face.dimension << (face.compact ? " compact" : "") << "  vertices";
    for (std::size_t v : face.vertex_ids) os << " " << to_string(np.vertices()[v]);
    os << "\n";
  }
  if (auto r = optional_remoteness(np))
    os << "remoteness: nu0 = " << to_string(r->nu0) << ", t0 = " << to_string(r->t0) << "\n";
  else
    os << "remoteness: undefined (no facet with positive offset)\n";
  return os.str();
}

std::string fans_text(const NewtonPolyhedron& np) {
  Fan dual = dual_fan(np);
  Fan simplicial = simplicialize(dual);
  return fan_text("dual fan", dual) + fan_text("simplicial refinement", simplicial) +
         fan_text("regular refinement", regularize(simplicial));
}

std::string nondeg_text(const NondegReport& report, const NewtonPolyhedron& np) {
  std::ostringstream os;
  os << "overall: " << to_string(report.overall) << (report.compact_only ? " (compact faces)" : " (all faces)") << "\n";
  for (const auto& v : report.faces) {
    os << "  face #" << v.face_id << " dim " << v.face_dim << (np.face(v.face_id).compact ? " compact" : "") << ": "
       << to_string(v.status) << " [" << to_string(v.method) << "]";
    if (v.status == FaceStatus::Degenerate) {
      os << " witness (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << show(v.witness[i]);
      os << ") residual " << v.residual;
    } else if (v.status == FaceStatus::Unknown) {
      os << " after " << v.attempts << " attempts at tol " << v.tolerance;
    }
    os << "\n";
  }
  return os.str();
}

std::string poles_text(const CandidatePoleSet& set) {
  std::ostringstream os;
  os << "holomorphic for Re(s) > " << to_string(set.holomorphy_bound) << "\n";
  os << "remoteness nu0 = " << to_string(set.remoteness.nu0) << "\n";
  if (set.hypothesis_unverified) os << "WARNING: hypothesis-unverified\n";
  os << "candidate poles (K = " << set.max_k << "):\n";
  for (const auto& e : set.entries)
    os << "  " << std::setw(8) << to_string(e.value) << "  order <= " << e.order_bound << "  from " << sources_text(e)
       << "\n";
  for (const auto& c : set.caveats) os << "note: " << c << "\n";
  return os.str();
}

std::string zeta_text(const std::vector<ZetaSample>& samples) {
  std::ostringstream os;
  for (const auto& z : samples)
    os << "Z(" << show(z.s) << ") = " << show(z.value) << "  +/- " << std::setprecision(3) << z.est_error
       << "  grid " << z.grid.radial << "x" << z.grid.angular << "\n";
  return os.str();
}

std::string zeta_csv(const std::vector<ZetaSample>& samples) {
  std::ostringstream os;
  os << std::setprecision(17) << "s_re,s_im,value_re,value_im,est_error\n";
  for (const auto& z : samples)
    os << z.s.real() << "," << z.s.imag() << "," << z.value.real() << "," << z.value.imag() << "," << z.est_error
       << "\n";
  return os.str();
}

std::string probe_text(const ProbeReport& report) {
  std::ostringstream os;
  for (const auto& p : report.points)
    os << "s = " << show(p.s) << ": " << (p.stable ? "stable" : "UNSTABLE") << "  change on doubling "
       << std::setprecision(3) << p.single_change << ", extrapolated " << p.extrapolated_change << "\n";
  return os.str();
}

}  // namespace polyzeta
