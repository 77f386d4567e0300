#include "doctest.h"

#include <cstdlib>
#include <string>

#include "cw/arc_curve.hpp"
#include "cw/config.hpp"
#include "cw/curves.hpp"
#include "cw/errors.hpp"

namespace {

std::string schema_message(const std::string& text) {
  try {
    cw::config_from_json_text(text);
  } catch (const cw::SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("config: trig curve parses and builds") {
  const cw::CurveConfig cfg = cw::config_from_json_text(
      R"({"kind":"trig","D":1,"terms":[{"m":3,"a":0.3333333333333333,"b":0.2}]})");
  CHECK(cfg.kind == "trig");
  CHECK(cfg.D == 1.0);
  REQUIRE(cfg.terms.size() == 1);
  CHECK(cfg.terms[0].m == 3);
  CHECK(cfg.terms[0].a == 0.3333333333333333);
  CHECK(cfg.terms[0].b == 0.2);

  const auto curve = cw::build_curve(cfg);
  const auto* cd = dynamic_cast<const cw::ConstantDiameterCurve*>(curve.get());
  REQUIRE(cd != nullptr);
  CHECK(cd->diameter() == 1.0);
}

TEST_CASE("config: remaining kinds build the right curve types") {
  const auto circle = cw::build_curve(cw::config_from_json_text(
      R"({"kind":"circle","D":2})"));
  CHECK(circle->scale() == 2.0);

  const auto ellipse = cw::build_curve(cw::config_from_json_text(
      R"({"kind":"ellipse","semiAxes":[1,0.6]})"));
  CHECK(dynamic_cast<const cw::TrigCurve*>(ellipse.get()) != nullptr);

  const auto reuleaux = cw::build_curve(cw::config_from_json_text(
      R"({"kind":"reuleaux","D":1,"n":3})"));
  const auto* arcs = dynamic_cast<const cw::PiecewiseArcCurve*>(reuleaux.get());
  REQUIRE(arcs != nullptr);
  CHECK(arcs->arcs().size() == 3);

  const auto rounded = cw::build_curve(cw::config_from_json_text(
      R"({"kind":"rounded_reuleaux","D":1,"n":3,"b":0.1})"));
  const auto* rArcs = dynamic_cast<const cw::PiecewiseArcCurve*>(rounded.get());
  REQUIRE(rArcs != nullptr);
  CHECK(rArcs->arcs().size() == 6);

  const auto rotor = cw::build_curve(cw::config_from_json_text(
      R"({"kind":"rotor","D":0.5,"n":4,"gx":[{"freq":4,"b":0.02}],"gy":[{"freq":4,"a":0.02}]})"));
  const auto* r = dynamic_cast<const cw::RotorCurve*>(rotor.get());
  REQUIRE(r != nullptr);
  CHECK(r->order() == 4);
  CHECK(r->edge() == 0.5);
}

TEST_CASE("config: malformed JSON is a ParseError") {
  CHECK_THROWS_AS(cw::config_from_json_text("{nonsense"), cw::ParseError);
  CHECK_THROWS_AS(cw::config_from_json_text(""), cw::ParseError);
  CHECK_THROWS_AS(cw::load_config("/nonexistent/path.json"), cw::ParseError);
}

TEST_CASE("config: schema violations carry the offending path") {
  CHECK(schema_message(R"({"D":1})").find("$.kind") != std::string::npos);
  CHECK(schema_message(R"({"kind":"hexagon","D":1})").find("unknown kind") !=
        std::string::npos);
  CHECK(schema_message(R"({"kind":"circle","D":1,"extra":2})").find("$.extra") !=
        std::string::npos);
  CHECK(schema_message(R"({"kind":"circle","D":0})").find("must be > 0") !=
        std::string::npos);
  CHECK(schema_message(R"({"kind":"circle","D":"one"})").find("expected a number") !=
        std::string::npos);
  CHECK(schema_message(R"({"kind":"trig","D":1})").find("$.terms") !=
        std::string::npos);
  CHECK(schema_message(R"({"kind":"trig","D":1,"terms":[{"a":0.1}]})").find("$.terms[0].m") !=
        std::string::npos);
  CHECK(schema_message(R"({"kind":"reuleaux","D":1})").find("$.n") !=
        std::string::npos);
  CHECK(schema_message(R"({"kind":"rotor","D":1,"n":4,"gx":[{"a":0.1}],"gy":[]})")
            .find("freq") != std::string::npos);
}

TEST_CASE("config: the ellipse takes semiAxes and no D") {
  CHECK(schema_message(R"({"kind":"ellipse","semiAxes":[1,0.6],"D":1})").find("$.D") !=
        std::string::npos);
  CHECK(schema_message(R"({"kind":"ellipse"})").find("$.semiAxes") != std::string::npos);
  CHECK(schema_message(R"({"kind":"ellipse","semiAxes":[1]})").find("semiAxes") !=
        std::string::npos);
  CHECK(schema_message(R"({"kind":"ellipse","semiAxes":[1,2,3]})").find("semiAxes") !=
        std::string::npos);
  CHECK(schema_message(R"({"kind":"ellipse","semiAxes":[1,-0.5]})").find("> 0") !=
        std::string::npos);
}

TEST_CASE("config: schema-valid but unbuildable configs are ConstructionError") {
  // Even harmonic: the schema cannot know, the curve constructor does.
  const cw::CurveConfig evenTerm = cw::config_from_json_text(
      R"({"kind":"trig","D":1,"terms":[{"m":2,"a":0.1}]})");
  try {
    cw::build_curve(evenTerm);
    FAIL("expected ConstructionError");
  } catch (const cw::ConstructionError& e) {
    CHECK(std::string(e.what()).find("building 'trig'") != std::string::npos);
  }

  const cw::CurveConfig fatProfile = cw::config_from_json_text(
      R"({"kind":"trig","D":1,"terms":[{"m":3,"a":0.9}]})");
  CHECK_THROWS_AS(cw::build_curve(fatProfile), cw::ConstructionError);

  const cw::CurveConfig evenReuleaux = cw::config_from_json_text(
      R"({"kind":"reuleaux","D":1,"n":4})");
  CHECK_THROWS_AS(cw::build_curve(evenReuleaux), cw::ConstructionError);
}

TEST_CASE("config: the shipped fixture files load and build") {
  const char* dir = std::getenv("CW_CONFIG_DIR");
  if (dir == nullptr) return;  // exercised under ctest
  for (const char* name :
       {"circle", "curve1", "curve2", "curve3", "ellipse", "reuleaux3", "reuleaux5",
        "rotor4", "rotor5", "rounded_reuleaux3"}) {
    CAPTURE(name);
    const std::string path = std::string(dir) + "/" + name + ".json";
    std::unique_ptr<cw::Curve> curve;
    CHECK_NOTHROW(curve = cw::build_curve(cw::load_config(path)));
    REQUIRE(curve != nullptr);
    CHECK(curve->scale() > 0.0);
  }
}
