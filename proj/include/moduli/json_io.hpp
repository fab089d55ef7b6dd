#pragma once

#include "moduli/crossings.hpp"
#include "moduli/curve.hpp"
#include "moduli/groupscheme.hpp"
#include "moduli/lattice.hpp"
#include "moduli/level_checks.hpp"
#include "moduli/polygon.hpp"
#include "moduli/torsor.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace moduli {

void to_json(nlohmann::json& j, const QuotientType& t);
void to_json(nlohmann::json& j, const Subgroup& K);
void to_json(nlohmann::json& j, const Label& H);
void to_json(nlohmann::json& j, const LambdaClass& c);
void to_json(nlohmann::json& j, const GroupSchemeProfile& G);
void to_json(nlohmann::json& j, const Stratum& s);
void to_json(nlohmann::json& j, const DrinfeldLocus& locus);
void to_json(nlohmann::json& j, const H1Decomposition& h);
void to_json(nlohmann::json& j, const HTotal& h);
void to_json(nlohmann::json& j, const CheckResult& c);
void to_json(nlohmann::json& j, const TorsorReport& r);
void to_json(nlohmann::json& j, const GraphMember& m);
void to_json(nlohmann::json& j, const GraphNode& n);
void to_json(nlohmann::json& j, const ComponentGraph& g);
void to_json(nlohmann::json& j, const ConsistencyReport& r);
void to_json(nlohmann::json& j, const PolygonReport& r);
void to_json(nlohmann::json& j, const TorsorClassTable& t);
void to_json(nlohmann::json& j, const FieldElem& x);
void to_json(nlohmann::json& j, const CurvePoint& P);
void to_json(nlohmann::json& j, const AbLabel& l);

// {"p", "k", "modulus"?, "seed"?}; a missing modulus for k > 1 is drawn with the seed.
FieldPtr field_from_json(const nlohmann::json& j);
// Integer or coefficient list, low degree first.
FieldElem elem_from_json(const FieldPtr& F, const nlohmann::json& j);

struct CurveFixture {
  std::string name;
  Curve curve;
  std::map<std::string, CurvePoint> points;
  nlohmann::json raw;
};

CurveFixture curve_fixture_from_json(const nlohmann::json& j);
CurveFixture load_curve_fixture(const std::string& path);

struct PolygonInput {
  FieldPtr field;
  std::vector<PicardElement> elements;
};

PolygonInput polygon_input_from_json(const nlohmann::json& j, Int d);

}  // namespace moduli
