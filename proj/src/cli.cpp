#include "polyzeta/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "polyzeta/report.hpp"

namespace polyzeta {

namespace {

struct RunConfig {
  std::string polynomial;
  std::size_t n = 0;
  Int max_k = 20;
  bool all_faces = false;
  std::optional<std::uint64_t> seed;
  int attempts = 64;
  double tol = 1e-9;
  std::string format = "text";
  std::string grid;
  double bump_radius = 1.0;
  int bump_p = 1;
  bool force = false;
  bool naive = false;
  bool probe = false;
  std::vector<std::string> s_values;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_nondeg, bool with_poles, bool with_zeta) {
  cmd->add_option("polynomial", cfg.polynomial, "polynomial in x1..xn, e.g. \"x1^2+x2^3\"")->required();
  cmd->add_option("-n", cfg.n, "number of variables")->required()->check(CLI::Range(1, 6));
  std::string formats = with_zeta ? "text|json|csv" : "text|json";
  cmd->add_option("--format", cfg.format, formats)
      ->check(with_zeta ? CLI::IsMember({"text", "json", "csv"}) : CLI::IsMember({"text", "json"}));
  if (with_nondeg) {
    auto* compact = cmd->add_flag("--compact-only", "check compact faces only (default)");
    cmd->add_flag("--all-faces", cfg.all_faces, "check every proper face")->excludes(compact);
    cmd->add_option("--seed", cfg.seed, "seed of the witness search (fallback: POLYZETA_SEED)");
    cmd->add_option("--attempts", cfg.attempts, "random starts per face")->check(CLI::Range(1, 100000));
    cmd->add_option("--tol", cfg.tol, "residual tolerance, in (0, 1e-2]")->check([](const std::string& v) {
      double t = std::stod(v);
      return t > 0 && t <= 1e-2 ? std::string() : std::string("tolerance must lie in (0, 1e-2]");
    });
  }
  if (with_poles) {
    cmd->add_option("--max-k", cfg.max_k, "truncation depth K")->check(CLI::Range(Int{0}, kMaxTruncation));
    cmd->add_flag("--force", cfg.force, "emit candidates even when f is degenerate");
  }
  if (with_zeta) {
    cmd->add_option("--s", cfg.s_values, "sample point: re or re,im (repeatable)");
    cmd->add_option("--grid", cfg.grid, "radial x angular nodes per variable, e.g. 64x64");
    cmd->add_option("--bump-radius", cfg.bump_radius, "support radius R")->check(CLI::PositiveNumber);
    cmd->add_option("--bump-p", cfg.bump_p, "bump exponent p")->check(CLI::Range(0, 64));
    cmd->add_flag("--probe", cfg.probe, "grid-stability probe instead of plain samples");
  }
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("POLYZETA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError("POLYZETA_SEED is not an unsigned integer");
    }
  }
  return 1;
}

std::complex<double> parse_s(const std::string& text) {
  try {
    auto comma = text.find(',');
    if (comma == std::string::npos) return {std::stod(text), 0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw DomainError("cannot read s value '" + text + "'");
  }
}

QuadratureGrid parse_grid(const std::string& text, QuadratureGrid fallback) {
  if (text.empty()) return fallback;
  try {
    auto x = text.find('x');
    QuadratureGrid g;
    g.radial = std::stoi(text.substr(0, x));
    g.angular = x == std::string::npos ? g.radial : std::stoi(text.substr(x + 1));
    if (g.radial < 1 || g.angular < 1 || g.radial > 4096 || g.angular > 4096) throw DomainError("range");
    return g;
  } catch (const std::exception&) {
    throw DomainError("grid must look like 64 or 64x32 with sizes in 1..4096");
  }
}

Json with_schema(const std::string& command, const RunConfig& cfg, Json body) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["command"] = command;
  out["polynomial"] = cfg.polynomial;
  out["n"] = cfg.n;
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

void emit(std::ostream& out, const RunConfig& cfg, const std::string& command, const Json& body,
          const std::string& text) {
  if (cfg.format == "json")
    out << with_schema(command, cfg, body).dump(2) << "\n";
  else
    out << text;
}

int dispatch(const std::string& command, const RunConfig& cfg, std::ostream& out) {
  const Polynomial f = parse_polynomial(cfg.polynomial, cfg.n);
  NondegConfig nd{resolve_seed(cfg), cfg.attempts, cfg.tol};
  PoleOptions po;
  po.max_k = cfg.max_k;
  po.compact_only = !cfg.all_faces;
  po.force = cfg.force;
  po.nondeg = nd;

  if (command == "zeta") {
    BumpSpec bump{cfg.bump_radius, cfg.bump_p};
    std::vector<std::complex<double>> s;
    for (const auto& t : cfg.s_values) s.push_back(parse_s(t));
    if (s.empty()) s.push_back(1.0);
    if (cfg.probe) {
      ProbeReport r = holomorphy_probe(f, bump, s, parse_grid(cfg.grid, {16, 32}));
      if (cfg.format == "csv") throw DomainError("--probe supports text and json output");
      emit(out, cfg, command, Json{{"probe", to_json(r)}}, probe_text(r));
      return kExitOk;
    }
    std::vector<ZetaSample> samples;
    for (const auto& z : s) samples.push_back(zeta_quadrature(f, bump, z, parse_grid(cfg.grid, {64, 64})));
    if (cfg.format == "csv")
      out << zeta_csv(samples);
    else
      emit(out, cfg, command, Json{{"samples", to_json(samples)}}, zeta_text(samples));
    return kExitOk;
  }

  NewtonPolyhedron np(f);
  if (command == "np") {
    emit(out, cfg, command, to_json(np), np_text(np));
    return kExitOk;
  }
  if (command == "fan") {
    emit(out, cfg, command, fans_json(np), fans_text(np));
    return kExitOk;
  }
  NondegReport nondeg = check_all(f, po.compact_only, nd);
  if (command == "nondeg") {
    emit(out, cfg, command, to_json(nondeg, np), nondeg_text(nondeg, np));
    return nondeg.overall == OverallStatus::Degenerate ? kExitRefused : kExitOk;
  }
  if (command == "poles") {
    CandidatePoleSet set = cfg.naive ? naive_candidates(f, po, nondeg) : candidate_poles(f, po, nondeg);
    emit(out, cfg, command, to_json(set), poles_text(set));
    return kExitOk;
  }
  // analyze
  CandidatePoleSet set = candidate_poles(f, po, nondeg);
  Json body;
  body["np"] = to_json(np);
  body["fan"] = fans_json(np);
  body["nondeg"] = to_json(nondeg, np);
  body["poles"] = to_json(set);
  std::string text = "== Newton polyhedron\n" + np_text(np) + "== fans\n" + fans_text(np) + "== non-degeneracy\n" +
                     nondeg_text(nondeg, np) + "== poles\n" + poles_text(set);
  emit(out, cfg, command, body, text);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton polyhedra, dual fans and candidate poles of local zeta functions", "polyzeta"};
  app.require_subcommand(1);
  RunConfig cfg;
  add_common(app.add_subcommand("np", "Newton polyhedron: vertices, facets, faces, remoteness"), cfg, false, false,
             false);
  add_common(app.add_subcommand("fan", "dual fan and its simplicial and regular refinements"), cfg, false, false,
             false);
  add_common(app.add_subcommand("nondeg", "non-degeneracy with respect to the faces of the Newton polyhedron"), cfg,
             true, false, false);
  auto* poles = app.add_subcommand("poles", "candidate poles, order bounds and holomorphy bound");
  add_common(poles, cfg, true, true, false);
  poles->add_flag("--naive", cfg.naive, "list of a regular refinement of the dual fan instead");
  add_common(app.add_subcommand("zeta", "numerical zeta function values (n <= 2)"), cfg, false, false, true);
  add_common(app.add_subcommand("analyze", "np, fan, nondeg and poles in one report"), cfg, true, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, cfg, out);
  } catch (const ParseError& e) {
    err << "error: cannot parse polynomial: " << e.what() << "\n";
    return kExitUsage;
  } catch (const HypothesisError& e) {
    err << "refused: " << e.what() << "\n";
    if (e.face_id() >= 0) err << "failing face: #" << e.face_id() << "\n";
    return kExitRefused;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace polyzeta
