#include "moduli/crossings.hpp"
#include "moduli/groupscheme.hpp"
#include "moduli/json_io.hpp"
#include "moduli/lattice.hpp"
#include "moduli/level_checks.hpp"
#include "moduli/polygon.hpp"
#include "moduli/torsor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace moduli;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// "a,b;c,d" -> generator rows.
std::vector<Vec2> parse_basis(const std::string& text) {
  std::vector<Vec2> rows;
  std::stringstream rows_in(text);
  std::string row;
  while (std::getline(rows_in, row, ';')) {
    std::stringstream cols(row);
    std::string a, b;
    if (!std::getline(cols, a, ',') || !std::getline(cols, b, ',') || cols.rdbuf()->in_avail() > 0)
      throw std::invalid_argument("basis rows must look like a,b");
    rows.push_back({std::stoll(a), std::stoll(b)});
  }
  if (rows.empty()) throw std::invalid_argument("empty basis");
  return rows;
}

CurvePoint pick_point(const CurveFixture& fx, const std::string& name, Int N) {
  if (!name.empty()) {
    auto it = fx.points.find(name);
    if (it == fx.points.end()) throw std::invalid_argument("fixture has no point named " + name);
    return it->second;
  }
  for (const auto& P : fx.curve.torsion(N))
    if (exact_order_check(P, N)) return P;
  throw std::invalid_argument("no point of exact order N on the fixture curve");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level structures, component bookkeeping and torsor checks for modular curves"};
  app.require_subcommand(1);

  Int level = 0, p = 0;
  int exp = 0;

  auto* subgroups = app.add_subcommand("subgroups", "Subgroups of (Z/N)^2 in Hermite form");
  subgroups->add_option("--level", level, "N")->required();

  auto* labels = app.add_subcommand("labels", "Label sets L_K and Lambda classes");
  labels->add_option("--level", level, "N")->required();
  labels->add_option("--char", p, "characteristic p")->required();

  std::string kind, basis;
  bool oracle = false;
  unsigned jobs = 1;
  auto* strata = app.add_subcommand("strata", "Stratum ranks of a Drinfeld locus");
  strata->add_option("--kind", kind, "gamma1 or gK")->required()->check(CLI::IsMember({"gamma1", "gK"}));
  strata->add_option("--char", p, "characteristic p")->required();
  strata->add_option("--exp", exp, "n with level p^n")->required();
  strata->add_option("--K", basis, "generators of K as \"a,b;c,d\"");
  strata->add_flag("--oracle", oracle, "cross-check with the full-set-of-sections oracle");
  strata->add_option("--jobs", jobs, "threads for oracle runs")->check(CLI::PositiveNumber);

  std::string family, dot_path, json_path;
  bool compactified = false;
  auto* graph = app.add_subcommand("graph", "Component graph with crossings");
  graph->add_option("--family", family, "h1 or h")->required()->check(CLI::IsMember({"h1", "h"}));
  graph->add_option("--level", level, "N")->required();
  graph->add_option("--char", p, "characteristic p")->required();
  graph->add_flag("--compactified", compactified);
  graph->add_option("--dot", dot_path, "DOT output path (- for stdout)");
  graph->add_option("--json", json_path, "graph JSON output path (- for stdout)");

  std::string fixture, point_name, partner_name;
  Int torsor_level = 0;
  auto* verify_torsor = app.add_subcommand("verify-torsor", "Check the quotient/torsor description of E/<Q>");
  verify_torsor->add_option("--fixture", fixture)->required()->check(CLI::ExistingFile);
  verify_torsor->add_option("--N", torsor_level)->required();
  verify_torsor->add_option("--point", point_name, "named point Q (default: first of exact order N)");
  verify_torsor->add_option("--partner", partner_name, "named point paired against instead of Q");

  auto* verify_label = app.add_subcommand("verify-label", "(a,b) label of a p-power point and its level raise");
  verify_label->add_option("--fixture", fixture)->required()->check(CLI::ExistingFile);
  verify_label->add_option("--point", point_name)->required();
  verify_label->add_option("--exp", exp)->required();

  Int d = 0;
  std::string check, input_path;
  bool classes = false;
  auto* polygon = app.add_subcommand("polygon", "Level structures on stacky Neron 1-gons");
  polygon->add_option("--d", d)->required();
  polygon->add_option("--level", level)->required();
  polygon->add_option("--check", check)->required()->check(CLI::IsMember({"gamma1", "gamma"}));
  polygon->add_option("--input", input_path)->required()->check(CLI::ExistingFile);
  polygon->add_flag("--classes", classes, "also print the torsor class table");

  int a = 0, e = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Raw oracle computations");
  oracle_cmd->require_subcommand(1);
  auto* fss = oracle_cmd->add_subcommand("fss", "Full-set-of-sections generator rank");
  fss->add_option("--char", p)->required();
  fss->add_option("--a", a)->required();
  fss->add_option("--e", e)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*subgroups) {
      auto all = enumerate_subgroups(level);
      print(json{{"level", level}, {"count", all.size()}, {"subgroups", all}});
      return kOk;
    }
    if (*labels) {
      const auto split = split_prime_power(level, p);
      json table = json::array();
      for (const auto& K : enumerate_subgroups(level)) table.push_back(json{{"K", K}, {"labels", label_set(K, p)}});
      json out{{"level", level}, {"char", p}, {"subgroups", table}};
      out["lambda"] = lambda_classes(p, split.n);
      print(out);
      return kOk;
    }
    if (*strata) {
      OracleOptions opts{oracle, jobs};
      DrinfeldLocus locus = [&] {
        if (kind == "gamma1") return gamma1_components(p, exp, opts);
        if (basis.empty()) throw std::invalid_argument("--K is required for --kind gK");
        const Int N = ipow(p, static_cast<unsigned>(exp));
        return gK_components(Subgroup::from_generators(N, parse_basis(basis)), p, opts);
      }();
      print(locus);
      return locus.oracle_agrees() ? kOk : kVerificationFailure;
    }
    if (*graph) {
      ComponentGraph g = family == "h1" ? build_h1_graph(level, p, compactified) : build_h_graph(level, p, compactified);
      auto report = consistency_check(g);
      if (!dot_path.empty()) write_file(dot_path, emit_dot(g));
      if (!json_path.empty()) write_file(json_path, emit_json(g));
      if (dot_path != "-" && json_path != "-") print(json{{"graph", g}, {"consistency", report}});
      return report.passed() ? kOk : kVerificationFailure;
    }
    if (*verify_torsor) {
      auto fx = load_curve_fixture(fixture);
      CurvePoint Q = pick_point(fx, point_name, torsor_level);
      TorsorOptions opts;
      if (!partner_name.empty()) opts.pairing_partner = pick_point(fx, partner_name, torsor_level);
      auto report = verify_quotient_torsor(fx.curve, Q, torsor_level, opts);
      json out = report;
      out["curve"] = fx.name;
      out["Q"] = Q;
      print(out);
      return report.passed() ? kOk : kVerificationFailure;
    }
    if (*verify_label) {
      auto fx = load_curve_fixture(fixture);
      CurvePoint P = pick_point(fx, point_name, 1);
      auto result = level_raise_check(fx.curve, P, exp);
      print(json{{"curve", fx.name},
                 {"point", P},
                 {"exp", exp},
                 {"label", result.at_level},
                 {"raised_label", result.at_next_level},
                 {"shifted", result.shifted()}});
      return result.shifted() ? kOk : kVerificationFailure;
    }
    if (*polygon) {
      std::ifstream in(input_path);
      auto input = polygon_input_from_json(json::parse(in), d);
      PolygonPicard M(input.field, d);
      PolygonReport report;
      if (check == "gamma1") {
        if (input.elements.size() != 1) throw std::invalid_argument("gamma1 input needs exactly one element");
        report = polygon_gamma1_report(M, input.elements[0], level);
      } else {
        if (input.elements.size() != 2) throw std::invalid_argument("gamma input needs exactly two elements");
        report = polygon_gamma_report(M, input.elements[0], input.elements[1], level);
      }
      json out = report;
      if (classes) out["classes"] = torsor_class_decomposition(d, level, input.field);
      print(out);
      return kOk;
    }
    if (*oracle_cmd && *fss) {
      print(json{{"char", p}, {"a", a}, {"e", e}, {"rank", fss_generator_rank_oracle(p, a, e)}});
      return kOk;
    }
  } catch (const ResourceLimitError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsageError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}
