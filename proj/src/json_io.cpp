#include "cw/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace cw {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json num_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json term_json(const TrigTerm& t) {
  return ordered_json{{"m", t.m}, {"a", t.a}, {"b", t.b}};
}

ordered_json series_json(const std::vector<SeriesTerm>& terms) {
  ordered_json arr = ordered_json::array();
  for (const SeriesTerm& t : terms) {
    arr.push_back(ordered_json{{"freq", t.freq}, {"a", t.sinCoef}, {"b", t.cosCoef}});
  }
  return arr;
}

ordered_json witness_json(const NGonWitness& w) {
  ordered_json verts = ordered_json::array();
  for (const Vec2& v : w.vertices) {
    verts.push_back(ordered_json::array({v.x, v.y}));
  }
  ordered_json residuals = ordered_json::array();
  for (const double r : w.residuals) residuals.push_back(r);
  return ordered_json{
      {"orientation", w.orientation == Orientation::CCW ? "ccw" : "cw"},
      {"maxResidual", w.maxResidual},
      {"vertices", verts},
      {"residuals", residuals}};
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json config_json(const CurveConfig& config) {
  ordered_json j;
  j["kind"] = config.kind;
  if (config.kind == "ellipse") {
    j["semiAxes"] = ordered_json::array({config.semiA, config.semiB});
    return j;
  }
  j["D"] = config.D;
  if (config.kind == "trig") {
    ordered_json terms = ordered_json::array();
    for (const TrigTerm& t : config.terms) terms.push_back(term_json(t));
    j["terms"] = terms;
  } else if (config.kind == "rotor") {
    j["n"] = config.n;
    j["gx"] = series_json(config.gx);
    j["gy"] = series_json(config.gy);
  } else if (config.kind == "reuleaux") {
    j["n"] = config.n;
  } else if (config.kind == "rounded_reuleaux") {
    j["n"] = config.n;
    j["b"] = config.cornerRadius;
  }
  return j;
}

}  // namespace

std::string config_to_json_text(const CurveConfig& config) {
  return finish(config_json(config));
}

std::string generate_summary_json_text(const CurveConfig& config,
                                       double perimeter, double scale) {
  ordered_json j;
  j["config"] = config_json(config);
  j["scale"] = scale;
  j["perimeter"] = perimeter;
  return finish(j);
}

std::string report_to_json_text(const VerificationReport& rep) {
  const bool cd = rep.property == "C(D)";
  const double D = rep.D;

  ordered_json j;
  j["property"] = rep.property;
  j["passed"] = rep.passed;
  j["D"] = rep.D;
  j["n"] = rep.n;
  j["requireUnique"] = rep.requireUnique;
  j["options"] = ordered_json{
      {"thetaSamples", rep.options.thetaSamples},
      {"phiSamples", rep.options.phiSamples},
      {"valueTol", rep.options.valueTol > 0.0 ? rep.options.valueTol : 1e-9 * D},
      {"uniqTol", rep.options.uniqTol > 0.0 ? rep.options.uniqTol : 1e-6 * D},
      {"membershipTol", rep.options.membershipTol > 0.0 ? rep.options.membershipTol
                                                        : 1e-7 * D},
      {"epsilonMargin", rep.options.epsilonMargin}};
  ordered_json summary;
  summary["bases"] = rep.perBase.size();
  summary["failingBases"] = rep.failingBases;
  summary["worstBase"] = rep.worstBase;
  if (cd) {
    summary["worstValueDefect"] = rep.worstValueDefect;
    summary["plateauBases"] = rep.plateauBases;
  } else {
    summary["worstResidual"] = rep.worstResidual;
  }
  j["summary"] = summary;

  ordered_json bases = ordered_json::array();
  for (std::size_t b = 0; b < rep.perBase.size(); ++b) {
    const BaseRecord& rec = rep.perBase[b];
    ordered_json r;
    r["base"] = rec.baseParam;
    r["pass"] = rec.pass;
    if (cd) {
      r["maxChord"] = rec.maxChord;
      r["argmaxPhi"] = rec.argmaxPhi;
      r["uniquenessGap"] = num_or_null(rec.uniquenessGap);
      r["plateau"] = rec.plateau;
    } else {
      r["witnessCount"] = rec.witnessCount;
      r["worstResidual"] = rec.worstResidual;
      if (rec.witnessCount != 1 || b == rep.worstBase) {
        ordered_json wits = ordered_json::array();
        for (const NGonWitness& w : rec.witnesses) wits.push_back(witness_json(w));
        r["witnesses"] = wits;
      }
    }
    bases.push_back(r);
  }
  j["bases"] = bases;
  return finish(j);
}

std::string probe_to_json_text(const ProbeRunMeta& meta, const ProbeResult& res) {
  ordered_json j;
  j["family"] = meta.family;
  j["D"] = meta.D;
  j["n"] = meta.n;
  j["side"] = meta.side;
  j["iterations"] = meta.iterations;
  j["restarts"] = meta.restarts;
  j["seed"] = meta.seed;
  j["bestPenalty"] = num_or_null(res.bestPenalty);
  j["evaluations"] = res.evaluations;
  ordered_json coeffs = ordered_json::array();
  for (const double c : res.bestCoefficients) coeffs.push_back(c);
  j["bestCoefficients"] = coeffs;
  ordered_json trace = ordered_json::array();
  for (const TracePoint& t : res.trace) {
    trace.push_back(ordered_json{{"iteration", t.iteration},
                                 {"penalty", num_or_null(t.penalty)}});
  }
  j["trace"] = trace;
  return finish(j);
}

std::string probe_trace_to_csv(const ProbeResult& res) {
  std::string out = "iteration,penalty\n";
  char buf[64];
  for (const TracePoint& t : res.trace) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", t.iteration, t.penalty);
    out += buf;
  }
  return out;
}

}  // namespace cw
