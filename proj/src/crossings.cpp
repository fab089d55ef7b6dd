#include "moduli/crossings.hpp"

#include "moduli/groupscheme.hpp"
#include "moduli/json_io.hpp"
#include "moduli/lattice.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace moduli {

namespace {

Int phi_pp(Int p, int e) { return e == 0 ? 1 : totient(ipow(p, static_cast<unsigned>(e))); }

// Number of homomorphisms (Z/M)^2 -> (Z/M)^2 with kernel exactly A, for every A.
std::map<Subgroup, Int> injective_quotient_counts(Int M) {
  std::map<Subgroup, Int> counts;
  for (Int u0 = 0; u0 < M; ++u0)
    for (Int u1 = 0; u1 < M; ++u1)
      for (Int v0 = 0; v0 < M; ++v0)
        for (Int v1 = 0; v1 < M; ++v1) {
          std::vector<Vec2> kernel;
          for (Int x0 = 0; x0 < M; ++x0)
            for (Int x1 = 0; x1 < M; ++x1)
              if (mod(x0 * u0 + x1 * v0, M) == 0 && mod(x0 * u1 + x1 * v1, M) == 0) kernel.push_back({x0, x1});
          ++counts[Subgroup::from_generators(M, kernel)];
        }
  return counts;
}

std::string member_prefix(bool compactified) { return compactified ? "X1tw" : "Y1"; }

}  // namespace

Int GraphNode::rank() const {
  Int r = 0;
  for (const auto& m : members) r += m.rank;
  return r;
}

Int ComponentGraph::total() const {
  Int t = 0;
  for (const auto& n : nodes) t += n.rank();
  return t;
}

ComponentGraph build_h1_graph(Int N, Int p, bool compactified) {
  const auto split = split_prime_power(N, p);
  if (split.n == 0) throw std::invalid_argument("build_h1_graph: p does not divide N");
  require_within_rank(split.prime_power, "p^n");
  ComponentGraph g;
  g.context = {"h1", N, p, split.n, compactified,
               split.prime_power * split.prime_power * split.cofactor * split.cofactor};
  g.crossings = kSupersingularCrossings;
  if (compactified) g.notes.push_back("compactified: same components and ranks as the open stack; boundary degrees not asserted");
  const bool lengths_known = split.n <= 1;
  if (!lengths_known) g.notes.push_back("lengths unknown for n >= 2; ranks and membership only");

  const auto decomposition = h1_decomposition(p, split.n);
  for (Int r : divisors(split.cofactor)) {
    const Int etale = jordan_totient2(r);
    for (const auto& z : decomposition.components) {
      GraphNode node;
      node.id = "Z[b=" + std::to_string(z.b) + "][r=" + std::to_string(r) + "]";
      const Int degree = etale * phi_pp(p, z.b) * ipow(p, static_cast<unsigned>(z.b));
      Int length = 0;
      for (const auto& m : z.members) {
        GraphMember member;
        member.id = member_prefix(compactified) + "[m=" + std::to_string(m.m) + "][r=" + std::to_string(r) + "](" +
                    std::to_string(m.a) + "," + std::to_string(m.b) + ")";
        member.rank = etale * m.rank;
        if (lengths_known) {
          member.length = phi_pp(p, m.a);
          member.reduced_degree = degree;
          length += *member.length;
        }
        node.members.push_back(std::move(member));
      }
      if (lengths_known) {
        node.length = length;
        node.reduced_degree = degree;
      }
      g.nodes.push_back(std::move(node));
    }
  }
  return g;
}

ComponentGraph build_h_graph(Int N, Int p, bool compactified) {
  const auto split = split_prime_power(N, p);
  if (split.n == 0) throw std::invalid_argument("build_h_graph: p does not divide N");
  require_within_rank(split.prime_power, "p^n");
  const Int pn = split.prime_power, M = split.cofactor;
  ComponentGraph g;
  g.context = {"h", N, p, split.n, compactified, pn * pn * pn * pn * M * M * M * M};
  g.crossings = kSupersingularCrossings;
  if (compactified) g.notes.push_back("compactified: same components and ranks as the open stack; boundary degrees not asserted");
  const bool lengths_known = split.n <= 1;
  if (!lengths_known) g.notes.push_back("lengths unknown for n >= 2; ranks and membership only");

  const auto table = h_total(p, split.n);
  std::vector<std::pair<std::string, Int>> prime_to_p{{"", 1}};
  if (M > 1) {
    prime_to_p.clear();
    auto counts = injective_quotient_counts(M);
    std::size_t i = 0;
    for (const auto& A : enumerate_subgroups(M)) {
      auto it = counts.find(A);
      Int c = it == counts.end() ? 0 : it->second;
      prime_to_p.emplace_back("A[" + std::to_string(i) + "]", c);
      ++i;
    }
  }
  for (const auto& [aid, inj] : prime_to_p) {
    if (inj == 0) continue;
    for (const auto& row : table.rows) {
      GraphNode node;
      const std::string lambda = "lambda[" + std::to_string(row.cls.index) + "]";
      node.id = aid.empty() ? lambda : aid + "/" + lambda;
      Int length = 0;
      for (std::size_t k = 0; k < row.cls.members.size(); ++k) {
        const Label& label = row.cls.members[k];
        GraphMember member;
        member.id = (aid.empty() ? "" : aid + ":") + label.to_string();
        member.rank = inj * row.member_ranks[k];
        if (lengths_known && row.reduced_degree) {
          member.length = phi_pp(p, label.h_exponent());
          member.reduced_degree = inj * *row.reduced_degree;
          length += *member.length;
        }
        node.members.push_back(std::move(member));
      }
      if (lengths_known && row.reduced_degree) {
        node.length = length;
        node.reduced_degree = inj * *row.reduced_degree;
      }
      if (!aid.empty()) node.notes.push_back("prime-to-p kernel " + aid + " contributes degree " + std::to_string(inj));
      g.nodes.push_back(std::move(node));
    }
  }
  return g;
}

bool ConsistencyReport::passed() const {
  return std::all_of(identities.begin(), identities.end(), [](const CheckResult& c) { return c.passed; });
}

ConsistencyReport consistency_check(const ComponentGraph& g) {
  ConsistencyReport report;
  CheckResult product{"length_times_degree", true, "", {}};
  CheckResult lengths{"member_lengths_sum", true, "", {}};
  CheckResult degrees{"uniform_reduced_degree", true, "", {}};
  CheckResult unique{"unique_members", true, "", {}};
  CheckResult total{"total_rank", true, "", {}};
  std::set<std::string> seen;
  Int checked = 0;
  for (const auto& node : g.nodes) {
    if (node.length && node.reduced_degree) {
      ++checked;
      if (*node.length * *node.reduced_degree != node.rank()) {
        product.passed = false;
        product.witnesses.push_back(node.id + ": " + std::to_string(*node.length) + " * " +
                                    std::to_string(*node.reduced_degree) + " != " + std::to_string(node.rank()));
      }
    }
    Int sum = 0;
    bool all_known = !node.members.empty();
    for (const auto& m : node.members) {
      if (!seen.insert(m.id).second) {
        unique.passed = false;
        unique.witnesses.push_back(m.id);
      }
      if (m.length) sum += *m.length;
      else all_known = false;
      if (m.reduced_degree && node.reduced_degree && *m.reduced_degree != *node.reduced_degree) {
        degrees.passed = false;
        degrees.witnesses.push_back(m.id);
      }
    }
    if (node.length && all_known && sum != *node.length) {
      lengths.passed = false;
      lengths.witnesses.push_back(node.id);
    }
  }
  product.detail = std::to_string(checked) + " nodes with known length and degree";
  lengths.detail = "node length equals the sum of member lengths";
  degrees.detail = "members of a node share its reduced degree";
  unique.detail = std::to_string(seen.size()) + " members";
  if (g.context.expected_total) {
    total.passed = g.total() == *g.context.expected_total;
    total.detail = std::to_string(g.total()) + " vs expected " + std::to_string(*g.context.expected_total);
  } else {
    total.detail = "no expected total";
  }
  report.identities = {product, lengths, degrees, unique, total};
  return report;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string record_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '{' || c == '}' || c == '|' || c == '<' || c == '>' || c == '"') out += '\\';
    out += c;
  }
  return out;
}

std::string opt(const std::optional<Int>& v) { return v ? std::to_string(*v) : "?"; }

}  // namespace

std::string emit_dot(const ComponentGraph& g) {
  std::ostringstream os;
  os << "graph " << dot_quote(g.context.family + "_N" + std::to_string(g.context.N) + "_p" + std::to_string(g.context.p))
     << " {\n";
  os << "  // " << g.crossings << "\n";
  os << "  node [shape=record];\n";
  for (const auto& node : g.nodes)
    os << "  " << dot_quote(node.id) << " [label=" << dot_quote(record_escape(node.id) + " | " + opt(node.length) + " | " + opt(node.reduced_degree))
       << "];\n";
  os << "  \"supersingular\" [shape=point];\n";
  for (const auto& node : g.nodes) os << "  " << dot_quote(node.id) << " -- \"supersingular\";\n";
  os << "}\n";
  return os.str();
}

std::string emit_json(const ComponentGraph& g) { return nlohmann::json(g).dump(2) + "\n"; }

}  // namespace moduli
