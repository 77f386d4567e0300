#pragma once

#include <cstdint>
#include <string>

#include "cw/config.hpp"
#include "cw/probe.hpp"
#include "cw/verify.hpp"

namespace cw {

// Stable JSON text (2-space indent, trailing newline, key order fixed) for
// the CLI artifacts. Non-finite numbers serialize as null.

std::string config_to_json_text(const CurveConfig& config);

// `generate` artifact: the validated config echoed back plus the basic
// derived quantities.
std::string generate_summary_json_text(const CurveConfig& config,
                                       double perimeter, double scale);

// Full verification report. Witness polygons are embedded only for bases
// with witness count != 1 and for the worst base, keeping pass reports
// small while failures stay reproducible.
std::string report_to_json_text(const VerificationReport& rep);

// Invocation metadata echoed into probe artifacts.
struct ProbeRunMeta {
  std::string family;
  double D = 0.0;
  int n = 0;
  double side = 0.0;
  std::size_t iterations = 0;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
};

std::string probe_to_json_text(const ProbeRunMeta& meta, const ProbeResult& res);

// CSV trace: header iteration,penalty.
std::string probe_trace_to_csv(const ProbeResult& res);

}  // namespace cw
