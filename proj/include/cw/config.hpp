#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cw/curve.hpp"
#include "cw/curves.hpp"
#include "cw/trig_series.hpp"

namespace cw {

// A parsed, schema-validated curve description. Field use depends on kind:
//   trig             D, terms
//   rotor            D (polygon edge), n, gx, gy
//   reuleaux         D, n
//   rounded_reuleaux D, n, cornerRadius ("b" in the file)
//   circle           D
//   ellipse          semiA, semiB ("semiAxes": [a, b]; no D key)
struct CurveConfig {
  std::string kind;
  double D = 0.0;
  std::vector<TrigTerm> terms;
  int n = 0;
  std::vector<SeriesTerm> gx, gy;
  double cornerRadius = 0.0;
  double semiA = 0.0;
  double semiB = 0.0;
};

// Parses and validates a config. Unknown keys, wrong types, out-of-range
// numbers and missing fields are SchemaError with the offending field path;
// malformed JSON is ParseError.
CurveConfig config_from_json_text(const std::string& text);
CurveConfig load_config(const std::string& path);

// Constructs the curve, wrapping any curve-module validation failure in
// ConstructionError (the message keeps the underlying reason).
std::unique_ptr<Curve> build_curve(const CurveConfig& config);

}  // namespace cw
