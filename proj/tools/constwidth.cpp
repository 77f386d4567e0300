#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cw/config.hpp"
#include "cw/errors.hpp"
#include "cw/geometry.hpp"
#include "cw/json_io.hpp"
#include "cw/probe.hpp"
#include "cw/render.hpp"
#include "cw/verify.hpp"

namespace {

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cw::Error("cannot open output file '" + path + "'");
  out << text;
  if (!out) throw cw::Error("write failed for '" + path + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw cw::Error("trailing junk in integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw cw::Error("expected an integer, got '" + s + "'");
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> vals;
  for (const std::string& item : split(s, ',')) vals.push_back(parse_int(item));
  return vals;
}

// --family trig:3,5  or  --family rotor:4:4,8
cw::ProbeFamily parse_family(const std::string& spec, double D) {
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "trig") {
    return cw::ProbeFamily::constant_diameter_profile(D, parse_int_list(parts[1]));
  }
  if (parts.size() == 3 && parts[0] == "rotor") {
    return cw::ProbeFamily::rotor_displacement(parse_int(parts[1]), D,
                                               parse_int_list(parts[2]));
  }
  throw cw::Error("bad --family '" + spec +
                  "' (expected trig:m1,m2,... or rotor:n:f1,f2,...)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curves of constant width: generate, verify, render, export, probe"};
  app.require_subcommand(1);

  std::string genConfig, genOut;
  CLI::App* gen = app.add_subcommand("generate", "construct a curve, print summary");
  gen->add_option("--config", genConfig, "curve config JSON")->required();
  gen->add_option("--out", genOut, "output path (default stdout)");

  std::string verConfig, verCheck, verOut;
  double verD = 0.0;
  int verN = 0;
  bool noUnique = false;
  cw::VerificationOptions vopts;
  CLI::App* ver = app.add_subcommand("verify", "run a property check, emit report");
  ver->add_option("--config", verConfig, "curve config JSON")->required();
  ver->add_option("--check", verCheck, "property: cd or cn")
      ->required()
      ->check(CLI::IsMember({"cd", "cn"}));
  ver->add_option("--D", verD, "target distance")->required();
  ver->add_option("--n", verN, "polygon order (cn only)");
  ver->add_option("--bases", vopts.thetaSamples, "base points");
  ver->add_option("--offsets", vopts.phiSamples, "chord offsets per base");
  ver->add_option("--value-tol", vopts.valueTol, "max-chord tolerance");
  ver->add_option("--uniq-tol", vopts.uniqTol, "uniqueness gap tolerance");
  ver->add_flag("--no-unique", noUnique, "skip the uniqueness requirement (cd)");
  ver->add_option("--out", verOut, "report path (default stdout)");

  std::string renConfig, renOut;
  cw::RenderOptions ropts;
  CLI::App* ren = app.add_subcommand("render", "write an SVG figure");
  ren->add_option("--config", renConfig, "curve config JSON")->required();
  ren->add_option("--out", renOut, "SVG path")->required();
  ren->add_option("--samples", ropts.samples, "polyline resolution (>= 64)");
  ren->add_option("--chords", ropts.chords, "diametral chords to overlay");
  ren->add_option("--ngon", ropts.ngon, "overlay one inscribed n-gon witness");
  ren->add_flag("--show-centers", ropts.showCenters, "mark arc centers");
  ren->add_option("--stroke-width", ropts.strokeWidth, "fraction of curve scale");
  ren->add_option("--dot-radius", ropts.dotRadius, "fraction of curve scale");

  std::string expConfig, expOut;
  std::size_t expSamples = 1024;
  CLI::App* exp = app.add_subcommand("export", "write theta,x,y,kappa CSV");
  exp->add_option("--config", expConfig, "curve config JSON")->required();
  exp->add_option("--samples", expSamples, "sample count");
  exp->add_option("--out", expOut, "CSV path")->required();

  std::string prFamily, prOut, prTrace;
  double prD = 0.0, prSide = 0.0;
  int prN = 0;
  std::size_t prIters = 200, prRestarts = 4;
  std::uint64_t prSeed = 0;
  CLI::App* prb = app.add_subcommand("probe", "counterexample search");
  prb->add_option("--family", prFamily, "trig:m1,m2,... or rotor:n:f1,f2,...")
      ->required();
  prb->add_option("--D", prD, "family diameter")->required();
  prb->add_option("--n", prN, "polygon order of the joint property")->required();
  prb->add_option("--side", prSide, "polygon edge length")->required();
  prb->add_option("--iters", prIters, "simplex iterations per restart");
  prb->add_option("--restarts", prRestarts, "independent restarts");
  prb->add_option("--seed", prSeed, "search seed");
  prb->add_option("--out", prOut, "result JSON path (default stdout)");
  prb->add_option("--trace", prTrace, "trace CSV path (optional)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      const cw::CurveConfig cfg = cw::load_config(genConfig);
      const std::unique_ptr<cw::Curve> curve = cw::build_curve(cfg);
      write_output(cw::generate_summary_json_text(cfg, cw::perimeter(*curve),
                                                  curve->scale()),
                   genOut);
      return 0;
    }
    if (ver->parsed()) {
      const cw::CurveConfig cfg = cw::load_config(verConfig);
      const std::unique_ptr<cw::Curve> curve = cw::build_curve(cfg);
      cw::VerificationReport rep;
      if (verCheck == "cn") {
        if (verN < 2) {
          std::cerr << "error: --check cn requires --n >= 2\n";
          return 2;
        }
        rep = cw::check_cn(*curve, verN, verD, vopts);
      } else {
        rep = cw::check_constant_diameter(*curve, verD, vopts, !noUnique);
      }
      write_output(cw::report_to_json_text(rep), verOut);
      return rep.passed ? 0 : 1;
    }
    if (ren->parsed()) {
      const cw::CurveConfig cfg = cw::load_config(renConfig);
      const std::unique_ptr<cw::Curve> curve = cw::build_curve(cfg);
      write_output(cw::render_svg(*curve, ropts), renOut);
      return 0;
    }
    if (exp->parsed()) {
      const cw::CurveConfig cfg = cw::load_config(expConfig);
      const std::unique_ptr<cw::Curve> curve = cw::build_curve(cfg);
      write_output(cw::export_csv(*curve, expSamples), expOut);
      return 0;
    }
    if (prb->parsed()) {
      const cw::ProbeFamily family = parse_family(prFamily, prD);
      const cw::ProbeResult res =
          cw::counterexample_search(family, prN, prSide, prIters, prRestarts, prSeed);
      cw::ProbeRunMeta meta;
      meta.family = prFamily;
      meta.D = prD;
      meta.n = prN;
      meta.side = prSide;
      meta.iterations = prIters;
      meta.restarts = prRestarts;
      meta.seed = prSeed;
      write_output(cw::probe_to_json_text(meta, res), prOut);
      if (!prTrace.empty()) write_output(cw::probe_trace_to_csv(res), prTrace);
      return 0;
    }
  } catch (const cw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
