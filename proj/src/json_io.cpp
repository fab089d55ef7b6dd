#include "moduli/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace moduli {

using nlohmann::json;

namespace {

json basis_json(const Subgroup& K) {
  const auto& h = K.lattice_basis();
  return json::array({json::array({h(0, 0), h(0, 1)}), json::array({h(1, 0), h(1, 1)})});
}

}  // namespace

void to_json(json& j, const QuotientType& t) { j = json::array({t.n1, t.n2}); }

void to_json(json& j, const Subgroup& K) {
  j = json{{"level", K.modulus()},
           {"basis", basis_json(K)},
           {"order", K.order()},
           {"quotient_type", K.quotient_type()}};
}

void to_json(json& j, const Label& H) {
  auto g = H.smith_generator();
  j = json{{"id", H.to_string()},
           {"K", basis_json(H.parent())},
           {"K_H", basis_json(H.preimage())},
           {"order", H.order()},
           {"generator", json::array({g[0], g[1]})}};
}

void to_json(json& j, const LambdaClass& c) {
  j = json{{"id", "lambda[" + std::to_string(c.index) + "]"}, {"members", c.members}};
}

void to_json(json& j, const GroupSchemeProfile& G) {
  json factors = json::array();
  for (const auto& f : G.factors()) {
    const char* kind = f.kind == FactorKind::Multiplicative ? "Mu" : f.kind == FactorKind::Etale ? "Et" : "EtPrime";
    factors.push_back(json{{"kind", kind}, {"order", f.order}});
  }
  j = json{{"char", G.characteristic()}, {"factors", factors}, {"rank", G.rank()}};
}

void to_json(json& j, const Stratum& s) {
  j = json{{"id", s.id}, {"rank", s.rank}, {"etale_factor", s.etale_factor}, {"connected_factor", s.connected_factor}};
  if (s.a >= 0) j["ab"] = json::array({s.a, s.b});
  if (s.label) j["label"] = *s.label;
  if (s.oracle_connected_factor) {
    j["oracle_connected_factor"] = *s.oracle_connected_factor;
    j["oracle_agrees"] = s.oracle_agrees();
  }
}

void to_json(json& j, const DrinfeldLocus& locus) {
  j = json{{"kind", to_string(locus.kind)},
           {"level", locus.level},
           {"base", locus.base},
           {"strata", locus.strata},
           {"total", locus.total()}};
  if (locus.K) j["K"] = *locus.K;
  if (locus.oracle_checked()) j["oracle_agrees"] = locus.oracle_agrees();
}

void to_json(json& j, const H1Decomposition& h) {
  json comps = json::array();
  for (const auto& z : h.components) {
    json members = json::array();
    for (const auto& m : z.members) members.push_back(json{{"m", m.m}, {"ab", json::array({m.a, m.b})}, {"rank", m.rank}});
    comps.push_back(json{{"b", z.b}, {"members", members}, {"rank", z.rank()}});
  }
  j = json{{"char", h.p}, {"exp", h.n}, {"levels", h.levels}, {"components", comps}, {"total", h.total()}};
}

void to_json(json& j, const HTotal& h) {
  json rows = json::array();
  for (const auto& r : h.rows) {
    json row{{"class", r.cls}, {"member_ranks", r.member_ranks}, {"rank", r.rank}};
    row["length"] = r.length ? json(*r.length) : json(nullptr);
    row["reduced_degree"] = r.reduced_degree ? json(*r.reduced_degree) : json(nullptr);
    rows.push_back(row);
  }
  j = json{{"char", h.p}, {"exp", h.n}, {"rows", rows}, {"total", h.total}, {"lengths_known", h.lengths_known()}};
}

void to_json(json& j, const CheckResult& c) {
  j = json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"witnesses", c.witnesses}};
}

void to_json(json& j, const TorsorReport& r) {
  j = json{{"N", r.N},
           {"preconditions_met", r.preconditions_met()},
           {"precondition_failures", r.precondition_failures},
           {"checks", r.checks},
           {"passed", r.passed()}};
}

void to_json(json& j, const GraphMember& m) {
  j = json{{"id", m.id}, {"rank", m.rank}};
  j["length"] = m.length ? json(*m.length) : json(nullptr);
  j["reduced_degree"] = m.reduced_degree ? json(*m.reduced_degree) : json(nullptr);
}

void to_json(json& j, const GraphNode& n) {
  j = json{{"id", n.id}, {"members", n.members}, {"rank", n.rank()}, {"notes", n.notes}};
  j["length"] = n.length ? json(*n.length) : json(nullptr);
  j["reduced_degree"] = n.reduced_degree ? json(*n.reduced_degree) : json(nullptr);
}

void to_json(json& j, const ComponentGraph& g) {
  json context{{"family", g.context.family},
               {"N", g.context.N},
               {"char", g.context.p},
               {"exp", g.context.n},
               {"compactified", g.context.compactified}};
  context["expected_total"] = g.context.expected_total ? json(*g.context.expected_total) : json(nullptr);
  j = json{{"context", context}, {"nodes", g.nodes}, {"crossings", g.crossings}, {"notes", g.notes}, {"total", g.total()}};
}

void to_json(json& j, const ConsistencyReport& r) { j = json{{"identities", r.identities}, {"passed", r.passed()}}; }

void to_json(json& j, const PolygonReport& r) {
  json fibres = json::array();
  for (const auto& f : r.fibres)
    fibres.push_back(json{{"component", f.component}, {"units", f.units}, {"identity_holds", f.identity_holds}});
  j = json{{"check", r.check}, {"N", r.N},       {"d", r.d},           {"passed", r.passed},
           {"ambiguous", r.ambiguous}, {"reasons", r.reasons}, {"fibres", fibres}};
}

void to_json(json& j, const TorsorClassTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back(json{{"zeta", r.zeta}, {"component", r.component}, {"generates_components", r.generates_components}});
  j = json{{"d", t.d}, {"N", t.N}, {"order", t.order()}, {"rows", rows}};
}

void to_json(json& j, const FieldElem& x) { j = x.coefficients(); }

void to_json(json& j, const CurvePoint& P) {
  if (P.is_infinity()) j = "O";
  else j = json{{"x", P.x()}, {"y", P.y()}};
}

void to_json(json& j, const AbLabel& l) { j = json::array({l.a, l.b}); }

FieldPtr field_from_json(const json& j) {
  const Int p = j.at("p").get<Int>();
  const int k = j.value("k", 1);
  if (j.contains("modulus")) return GaloisField::make(p, j.at("modulus").get<std::vector<Int>>());
  if (k == 1) return GaloisField::prime(p);
  return GaloisField::with_random_modulus(p, k, j.value("seed", std::uint64_t{1}));
}

FieldElem elem_from_json(const FieldPtr& F, const json& j) {
  if (j.is_number_integer()) return F->from_int(j.get<Int>());
  return F->from_coefficients(j.get<std::vector<Int>>());
}

CurveFixture curve_fixture_from_json(const json& j) {
  FieldPtr F = field_from_json(j);
  if (F->degree() != j.value("k", 1)) throw std::invalid_argument("fixture: modulus degree does not match k");
  Curve E(elem_from_json(F, j.at("A")), elem_from_json(F, j.at("B")));
  CurveFixture fx{j.value("name", std::string{}), E, {}, j};
  if (j.contains("points"))
    for (const auto& [name, pt] : j.at("points").items())
      fx.points.emplace(name, E.point(elem_from_json(F, pt.at("x")), elem_from_json(F, pt.at("y"))));
  return fx;
}

CurveFixture load_curve_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  return curve_fixture_from_json(json::parse(in));
}

PolygonInput polygon_input_from_json(const json& j, Int d) {
  PolygonInput input{field_from_json(j), {}};
  PolygonPicard M(input.field, d);
  for (const auto& e : j.at("elements"))
    input.elements.push_back(M.element(elem_from_json(input.field, e.at("unit")), e.at("component").get<Int>()));
  return input;
}

}  // namespace moduli
