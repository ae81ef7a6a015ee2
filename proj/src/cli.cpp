#include "pml/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "pml/basisbuild.hpp"
#include "pml/matching.hpp"
#include "pml/tightcut.hpp"
#include "pml/verify.hpp"

namespace pml::cli {

using Json = nlohmann::ordered_json;

namespace {

inline std::size_t ix(int i) { return static_cast<std::size_t>(i); }

bool parse_int(const std::string& tok, long& v) {
  const char* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  return ec == std::errc() && p == end;
}

// The two integers of a data line; a third token is an error.
std::pair<long, long> two_ints(const std::string& text, int line, const char* what) {
  std::istringstream ss(text);
  std::string a, b, extra;
  if (!(ss >> a >> b)) throw ParseError(line, std::string("expected ") + what);
  if (ss >> extra) throw ParseError(line, "unexpected token '" + extra + "' after " + what);
  long x = 0, y = 0;
  if (!parse_int(a, x) || !parse_int(b, y)) throw ParseError(line, std::string("non-integer ") + what);
  return {x, y};
}

Json ids_json(const std::vector<int>& ids, int shift = 0) {
  Json a = Json::array();
  for (int v : ids) a.push_back(v + shift);
  return a;
}

Json provenance_json(const Provenance& p) {
  Json j;
  j["step"] = p.step;
  j["detail"] = p.detail;
  Json kids = Json::array();
  for (const auto& c : p.children) kids.push_back(provenance_json(c));
  j["children"] = std::move(kids);
  return j;
}

std::string one_based(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

std::string edge_list(const EdgeSet& es) {
  std::string out;
  for (EdgeId e : es) out += (out.empty() ? "" : " ") + std::to_string(e);
  return out;
}

Output not_matching_covered(const CoverageReport& cov) {
  Output o;
  o.exit_code = kNotMatchingCovered;
  o.err = cov.uncovered.empty() ? "graph is not matching covered (disconnected or without a perfect matching)\n"
                                : "graph is not matching covered; uncovered edges: " + edge_list(cov.uncovered) + "\n";
  return o;
}

// Runs f, mapping algorithmic failures onto the diagnostic exit code.
Output guarded(const std::function<Output()>& f) {
  try {
    return f();
  } catch (const UnsupportedInstance& e) {
    return {kDiagnostic, "", std::string("unsupported instance: ") + e.what() + "\n"};
  } catch (const InvariantViolation& e) {
    return {kDiagnostic, "", std::string("internal invariant violated: ") + e.what() + "\n"};
  }
}

std::string report_text(const VerificationReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    s += (c.pass ? "PASS " : "FAIL ") + c.name + (c.pass || c.witness.empty() ? "" : ": " + c.witness) + "\n";
  return s;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

MultiGraph parse_graph(std::istream& in) {
  std::string raw;
  int line = 0;
  long n = -1, m = -1;
  int header_line = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = raw.substr(0, hash);
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (n < 0) {
      std::tie(n, m) = two_ints(text, line, "header 'n m'");
      if (n < 0 || m < 0) throw ParseError(line, "negative vertex or edge count");
      header_line = line;
      continue;
    }
    if (static_cast<long>(edges.size()) == m) throw ParseError(line, "more than " + std::to_string(m) + " edge lines");
    const auto [u, v] = two_ints(text, line, "edge 'u v'");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line, "vertex out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
    edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
  }
  if (n < 0) throw ParseError(line, "missing header 'n m'");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(line, "expected " + std::to_string(m) + " edge lines after line " + std::to_string(header_line) +
                               ", found " + std::to_string(edges.size()));
  return MultiGraph(static_cast<int>(n), std::move(edges));
}

MultiGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_graph(in);
}

std::string print_graph(const MultiGraph& g) {
  std::string s = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) s += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return s;
}

Output cmd_info(const MultiGraph& g, bool json) {
  const auto cov = is_matching_covered(g);
  const bool has_pm = find_perfect_matching(g).has_value();
  std::optional<GraphSummary> s;
  if (has_pm) s = summarize(g);
  Output o;
  if (json) {
    Json j;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["perfectMatching"] = has_pm;
    j["matchingCovered"] = cov.matching_covered;
    j["uncovered"] = ids_json(has_pm ? cov.uncovered : EdgeSet{});
    j["b"] = s ? Json(s->bricks) : Json(nullptr);
    j["polytopeDim"] = s ? Json(s->polytope_dim) : Json(nullptr);
    j["latticeDim"] = s ? Json(s->lattice_dim) : Json(nullptr);
    o.out = j.dump(2) + "\n";
    return o;
  }
  std::ostringstream ss;
  ss << "vertices " << g.num_vertices() << "\nedges " << g.num_edges() << "\n";
  if (!has_pm) {
    ss << "perfect matching: none\n";
    o.out = ss.str();
    return o;
  }
  ss << "matching covered: " << (cov.matching_covered ? "yes" : "no") << "\n";
  if (!cov.uncovered.empty()) ss << "uncovered edges (dropped for dimensions): " << edge_list(cov.uncovered) << "\n";
  ss << "bricks " << s->bricks << "\npolytope dimension " << s->polytope_dim << "\nlattice dimension "
     << s->lattice_dim << "\n";
  o.out = ss.str();
  return o;
}

Output cmd_decompose(const MultiGraph& g, bool json) {
  const auto cov = is_matching_covered(g);
  if (!cov.matching_covered) return not_matching_covered(cov);
  const auto tree = tight_cut_decomposition(g);
  const auto kind = [](const DecompositionNode& nd) { return nd.kind == LeafKind::Brick ? "brick" : "brace"; };
  Output o;
  if (json) {
    Json j;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["b"] = tree.brick_count();
    Json nodes = Json::array();
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const auto& nd = tree.nodes[i];
      Json x;
      x["id"] = i;
      x["parent"] = nd.parent;
      x["n"] = nd.graph.num_vertices();
      x["m"] = nd.graph.num_edges();
      if (nd.leaf) {
        x["kind"] = kind(nd);
      } else {
        x["kind"] = "cut";
        x["shore"] = ids_json(tree.root_shore(static_cast<int>(i)), 1);
        x["children"] = {nd.children[0], nd.children[1]};
      }
      nodes.push_back(std::move(x));
    }
    j["nodes"] = std::move(nodes);
    o.out = j.dump(2) + "\n";
    return o;
  }
  std::ostringstream ss;
  ss << "bricks " << tree.brick_count() << ", braces " << tree.brace_count() << "\n";
  std::function<void(int, int)> show = [&](int i, int depth) {
    const auto& nd = tree.nodes[ix(i)];
    ss << std::string(ix(2 * depth), ' ') << "node " << i << " (n=" << nd.graph.num_vertices()
       << " m=" << nd.graph.num_edges() << "): ";
    if (nd.leaf) {
      ss << kind(nd) << "\n";
      return;
    }
    ss << "tight cut with shore " << one_based(tree.root_shore(i)) << "\n";
    show(nd.children[0], depth + 1);
    show(nd.children[1], depth + 1);
  };
  show(0, 0);
  o.out = ss.str();
  return o;
}

Output cmd_basis(const MultiGraph& g, const BasisOptions& opt) {
  if (!find_perfect_matching(g)) return {kNotMatchingCovered, "", "graph has no perfect matching\n"};
  return guarded([&] {
    Output o;
    const auto cov = is_matching_covered(g);
    if (!cov.uncovered.empty())
      o.err += "note: core reduction drops uncovered edges " + edge_list(cov.uncovered) + "\n";
    const Basis b = lattice_basis(g);
    const GraphSummary s = summarize(g);
    Json verified = nullptr;
    if (opt.verify) {
      const auto rep = check_basis(g, b.matchings, opt.oracle_cap);
      if (!rep.passed()) {
        verified = false;
        o.exit_code = kVerificationFailed;
        o.err += report_text(rep);
      } else if (rep.overflow) {
        o.err += "warning: verification skipped, " + rep.overflow_note + " (oracle cap " +
                 std::to_string(opt.oracle_cap) + ")\n";
      } else {
        verified = true;
      }
    }
    if (opt.json) {
      Json j;
      j["n"] = g.num_vertices();
      j["m"] = g.num_edges();
      j["b"] = s.bricks;
      j["latticeDim"] = s.lattice_dim;
      Json basis = Json::array();
      for (const auto& m : b.matchings) basis.push_back(ids_json(m.edges));
      j["basis"] = std::move(basis);
      j["provenance"] = provenance_json(b.provenance);
      j["verified"] = verified;
      o.out = j.dump(2) + "\n";
      return o;
    }
    std::ostringstream ss;
    ss << "lattice dimension " << s.lattice_dim << ", bricks " << s.bricks << "\n";
    for (const auto& m : b.matchings) ss << edge_list(m.edges) << "\n";
    if (opt.verify) ss << "verified: " << (verified.is_null() ? "skipped" : verified.get<bool>() ? "yes" : "no") << "\n";
    o.out = ss.str();
    return o;
  });
}

Output cmd_verify(const MultiGraph& g, const VerifyOptions& opt) {
  const auto cov = is_matching_covered(g);
  if (!cov.matching_covered) return not_matching_covered(cov);
  const auto& suite = opt.suite;
  if (suite != "all" && suite != "facets" && suite != "dims" && suite != "lovasz")
    return {kUsage, "", "unknown suite " + suite + "\n"};
  return guarded([&] {
    VerificationReport r;
    r.summary = summarize(g);
    if (suite == "all" || opt.corrupt_basis) {
      auto b = lattice_basis(g).matchings;
      if (opt.corrupt_basis) {
        if (b.size() > 1) b[1] = b[0];
        else b.push_back(b[0]);
      }
      r.absorb(check_basis(g, b, opt.oracle_cap));
    }
    if (suite == "all" || suite == "lovasz") r.absorb(check_lovasz_doubling(g, 64, 1, opt.oracle_cap));
    if (suite == "all" || suite == "facets") r.absorb(check_facet_characterizations(g, opt.oracle_cap));
    if (suite == "all" || suite == "dims") r.absorb(check_dim_formula_consistency(g, opt.oracle_cap));
    Output o;
    o.exit_code = r.passed() ? kOk : kVerificationFailed;
    if (r.overflow) o.err = "warning: oracle checks skipped, " + r.overflow_note + "\n";
    if (opt.json) {
      Json j;
      j["n"] = r.summary.n;
      j["m"] = r.summary.m;
      j["b"] = r.summary.bricks;
      j["polytopeDim"] = r.summary.polytope_dim;
      j["latticeDim"] = r.summary.lattice_dim;
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
      j["checks"] = std::move(checks);
      j["overflow"] = r.overflow;
      j["passed"] = r.passed();
      o.out = j.dump(2) + "\n";
    } else {
      o.out = report_text(r);
    }
    return o;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect matching lattice bases made of perfect matchings", "pmlat"};
  app.require_subcommand(1);
  std::string file;
  bool json = false;
  BasisOptions basis_opt;
  VerifyOptions verify_opt;

  auto* info = app.add_subcommand("info", "Sizes, matching coverage, brick count and dimensions");
  auto* decompose = app.add_subcommand("decompose", "Tight cut decomposition into bricks and braces");
  auto* basis = app.add_subcommand("basis", "Lattice basis consisting of perfect matchings");
  auto* verify = app.add_subcommand("verify", "Brute-force property checks");
  for (auto* sub : {info, decompose, basis, verify}) {
    sub->add_option("file", file, "Graph file")->required();
    sub->add_flag("--json", json, "Machine-readable output");
  }
  basis->add_flag("--verify", basis_opt.verify, "Check the basis against all perfect matchings");
  basis->add_option("--oracle-cap", basis_opt.oracle_cap, "Enumeration limit for --verify")->capture_default_str();
  verify->add_option("--suite", verify_opt.suite, "all, facets, dims or lovasz")
      ->check(CLI::IsMember({"all", "facets", "dims", "lovasz"}))
      ->capture_default_str();
  verify->add_option("--oracle-cap", verify_opt.oracle_cap, "Enumeration limit")->capture_default_str();
  verify->add_flag("--corrupt-basis", verify_opt.corrupt_basis)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  MultiGraph g;
  try {
    g = parse_graph_file(file);
  } catch (const ParseError& e) {
    err << file << ": " << e.what() << "\n";
    return kParse;
  }
  Output o;
  if (*info) {
    o = cmd_info(g, json);
  } else if (*decompose) {
    o = cmd_decompose(g, json);
  } else if (*basis) {
    basis_opt.json = json;
    o = cmd_basis(g, basis_opt);
  } else {
    verify_opt.json = json;
    o = cmd_verify(g, verify_opt);
  }
  out << o.out;
  err << o.err;
  return o.exit_code;
}

}  // namespace pml::cli
