// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "pml/basisbuild.hpp"
#include "pml/bvnalg.hpp"
#include "pml/cli.hpp"
#include "pml/corpus.hpp"
#include "pml/cutsearch.hpp"
#include "pml/lattice.hpp"
#include "pml/matching.hpp"
#include "pml/named_graphs.hpp"
#include "pml/tightcut.hpp"
#include "pml/verify.hpp"

using namespace pml;
using Json = nlohmann::ordered_json;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Graphs = std::vector<corpus::NamedGraph>;

struct Corpora {
  Graphs named, exhaustive, random, random_small;
  std::vector<const Graphs*> all() const { return {&named, &exhaustive, &random, &random_small}; }
};

std::vector<IntVector> rows_of(const MultiGraph& g, const std::vector<Matching>& ms) {
  std::vector<IntVector> rows;
  for (const auto& m : ms) rows.push_back(to_int_vector(incidence_vector(g, m)));
  return rows;
}

std::string failures(const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return c.name + ": " + c.witness;
  return r.overflow ? r.overflow_note : "";
}

bool has_step(const Provenance& p, const std::string& step) {
  if (p.step == step) return true;
  for (const auto& c : p.children)
    if (has_step(c, step)) return true;
  return false;
}

bool is_k4(const MultiGraph& h) {
  if (h.num_vertices() != 4 || h.num_edges() != 6) return false;
  for (VertexId v = 0; v < 4; ++v)
    if (h.degree(v) != 3) return false;
  return !is_bipartite(h) && is_matching_covered(h).matching_covered;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failed = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double t = seconds_since(t0);
  if (limit_s > 0 && t >= limit_s) {
    std::ostringstream ss;
    ss << "took " << t << " s, limit " << limit_s << " s";
    v.fail(ss.str());
  }
  if (!v.pass) ++failed;
  std::printf("%s  %2d  %-58s %8.2f s  %s\n", v.pass ? "PASS" : "FAIL", id, title.c_str(), t, v.detail.c_str());
  std::fflush(stdout);
}

Verdict basis_case(const MultiGraph& g, std::size_t expected, std::size_t cap = 100000) {
  Verdict v;
  const Basis b = lattice_basis(g);
  if (b.matchings.size() != expected)
    v.fail("basis size " + std::to_string(b.matchings.size()) + ", expected " + std::to_string(expected));
  const auto rep = check_basis(g, b.matchings, cap);
  if (!rep.passed() || rep.overflow) v.fail(failures(rep));
  if (v.pass) v.detail = std::to_string(b.matchings.size()) + " elements, HNF equal to all perfect matchings";
  return v;
}

}  // namespace

int main() {
  Corpora c;
  c.named = corpus::named_family();
  c.exhaustive = corpus::exhaustive_matching_covered(8);
  c.random = corpus::random_matching_covered(260, 14, 2026);
  c.random_small = corpus::random_matching_covered(60, 10, 77);
  std::printf("corpus: %zu named, %zu exhaustive (n <= 8), %zu random (n <= 14), %zu random (n <= 10)\n",
              c.named.size(), c.exhaustive.size(), c.random.size(), c.random_small.size());

  criterion(1, "Petersen: six matchings, verified", 1.0, [] {
    Verdict v;
    const auto out = cli::cmd_basis(named::petersen(), {true, true, 10000});
    const auto j = Json::parse(out.out);
    if (out.exit_code != 0) v.fail("exit " + std::to_string(out.exit_code));
    if (j["basis"].size() != 6) v.fail("basis size " + std::to_string(j["basis"].size()));
    if (j["verified"] != true) v.fail("not verified");
    v.detail = v.pass ? "6 matchings, HNF equal to all 6" : v.detail;
    return v;
  });

  criterion(2, "K4: all three matchings through the double-ear route", 0, [] {
    Verdict v;
    const auto g = named::complete(4);
    EdgeSet all_edges;
    for (EdgeId e = 0; e < g.num_edges(); ++e) all_edges.push_back(e);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto lp = lp1_value(g, all_edges, e);
      if (lp.unbounded || lp.value != 0) v.fail("LP1 of edge " + std::to_string(e) + " is not 0");
    }
    const auto out = run_bvn(g);
    const auto* b = std::get_if<BvnBasis>(&out);
    if (!b) {
      v.fail("run_bvn did not return a basis");
      return v;
    }
    auto got = b->matchings;
    std::sort(got.begin(), got.end());
    if (got != enumerate_perfect_matchings(g, 10)) v.fail("basis is not the set of all three matchings");
    const auto rep = check_basis(g, b->matchings);
    if (!rep.passed()) v.fail(failures(rep));
    if (v.pass) v.detail = "LP1 = 0 on every edge, 3 steps accepted";
    return v;
  });

  criterion(3, "Prism: certificate, rung cut with K4 sides, 4 elements", 1.0, [] {
    Verdict v;
    const auto g = named::prism();
    const auto out = run_bvn(g);
    const auto* cert = std::get_if<FractionalCertificate>(&out);
    if (!cert) {
      v.fail("run_bvn returned no certificate");
      return v;
    }
    const auto rc = robust_cut(g, *cert);
    if (rc.cut.edges != EdgeSet{6, 7, 8}) v.fail("cut is not the rung cut: " + to_string(rc.cut.shore));
    if (!is_k4(rc.shore_shrunk.graph) || !is_k4(rc.complement_shrunk.graph)) v.fail("contractions are not K4");
    const Basis b = lattice_basis(g);
    if (b.matchings.size() != 4) v.fail("basis size " + std::to_string(b.matchings.size()));
    const auto all = enumerate_perfect_matchings(g, 100);
    if (all.size() != 4 || !lattice_equal(rows_of(g, b.matchings), rows_of(g, all), g.num_edges()))
      v.fail("HNF differs from the 4 enumerated matchings");
    if (v.pass) v.detail = "triple " + to_string(rc.triple_matching);
    return v;
  });

  criterion(4, "Pentagonal prism: non-BvN path, 6 elements", 5.0, [] {
    const auto g = named::circular_ladder(5);
    const auto out = run_bvn(g);
    if (!std::holds_alternative<FractionalCertificate>(out)) {
      Verdict v;
      v.fail("run_bvn returned no certificate");
      return v;
    }
    Verdict v = basis_case(g, 6);
    if (!has_step(lattice_basis(g).provenance, "triple-augment")) v.fail("no robust cut step in the provenance");
    return v;
  });

  criterion(5, "Petersen + parallel spoke: 7 elements, copy used once", 0, [] {
    const auto g = named::with_parallel(named::petersen(), 10);
    Verdict v = basis_case(g, 7);
    int uses = 0;
    for (const auto& m : lattice_basis(g).matchings) uses += contains(m.edges, 15) ? 1 : 0;
    if (uses != 1) v.fail("extra edge in " + std::to_string(uses) + " elements");
    return v;
  });

  criterion(6, "Exhaustive n <= 8: basis --verify on every graph", 600.0, [&] {
    Verdict v;
    int ok = 0;
    for (const auto& [name, g] : c.exhaustive) {
      const auto out = cli::cmd_basis(g, {true, true, 10000});
      if (out.exit_code != 0) {
        v.fail(name + ": exit " + std::to_string(out.exit_code) + " " + out.err);
        continue;
      }
      const auto j = Json::parse(out.out);
      const int expected = g.num_edges() - g.num_vertices() + 2 - j["b"].get<int>();
      if (j["verified"] != true) v.fail(name + ": not verified");
      if (static_cast<int>(j["basis"].size()) != expected) v.fail(name + ": size differs from |E| - |V| + 2 - b");
      // Unimodular transform of the basis HNF, checked exactly inside hnf().
      std::vector<Matching> ms;
      for (const auto& row : j["basis"]) ms.push_back(Matching{row.get<EdgeSet>()});
      hnf(rows_of(g, ms), true);
      ++ok;
    }
    if (v.pass) v.detail = std::to_string(ok) + " graphs";
    return v;
  });

  criterion(7, "Random n <= 14: verified bases, Stuck rate", 0, [&] {
    Verdict v;
    if (c.random.size() < 200) v.fail("only " + std::to_string(c.random.size()) + " random graphs");
    int bricks = 0, stuck = 0, verified = 0;
    for (const auto& [name, g] : c.random) {
      bricks += brick_count(g);
      try {
        const Basis b = lattice_basis(g);
        const auto rep = check_basis(g, b.matchings, 100000);
        if (rep.overflow) v.fail(name + ": " + rep.overflow_note);
        else if (!rep.passed()) v.fail(name + ": " + failures(rep));
        else ++verified;
      } catch (const UnsupportedInstance& e) {
        if (is_bipartite(g)) v.fail(name + ": Stuck on a bipartite graph");
        std::printf("      stuck: %s %s\n", name.c_str(), e.what());
        ++stuck;
      }
    }
    if (stuck * 20 >= bricks && stuck > 0) v.fail("Stuck on " + std::to_string(stuck) + " of " + std::to_string(bricks) + " bricks");
    if (v.pass)
      v.detail = std::to_string(verified) + " verified, " + std::to_string(stuck) + " Stuck among " +
                 std::to_string(bricks) + " brick instances";
    return v;
  });

  criterion(8, "Brick count invariant under 5 shuffled decompositions", 0, [&] {
    Verdict v;
    int graphs = 0;
    for (const auto* set : c.all())
      for (const auto& [name, g] : *set) {
        if (!is_matching_covered(g).matching_covered) continue;
        const int b = tight_cut_decomposition(g).brick_count();
        for (std::uint64_t s = 1; s <= 5; ++s) {
          CutSearchOptions opt;
          opt.shuffle_seed = s * 7919;
          if (tight_cut_decomposition(g, opt).brick_count() != b) v.fail(name + ": seed " + std::to_string(s));
        }
        ++graphs;
      }
    if (v.pass) v.detail = std::to_string(graphs) + " graphs";
    return v;
  });

  criterion(9, "Doubling: Petersen odd point, Petersen-free closure", 0, [&] {
    Verdict v;
    const auto pet = check_lovasz_doubling(named::petersen(), 64, 1);
    bool witness = false;
    for (const auto& ch : pet.checks)
      if (ch.name == "a hull point outside the lattice exists") witness = ch.pass;
    if (!pet.passed() || !witness) v.fail("Petersen: " + failures(pet));
    int free = 0, with_petersen = 0;
    for (const auto* set : c.all())
      for (const auto& [name, g] : *set) {
        const auto r = check_lovasz_doubling(g, 64, std::hash<std::string>{}(name));
        if (r.overflow) v.fail(name + ": " + r.overflow_note);
        if (!r.passed()) v.fail(name + ": " + failures(r));
        bool closed = false;
        for (const auto& ch : r.checks) closed = closed || ch.name == "hull points lie in the lattice";
        (closed ? free : with_petersen) += 1;
      }
    if (v.pass)
      v.detail = std::to_string(free) + " Petersen-free graphs closed, " + std::to_string(with_petersen) +
                 " with a Petersen brick";
    return v;
  });

  criterion(10, "Facet characterizations agree with the oracle, n <= 10", 0, [&] {
    Verdict v;
    int graphs = 0, edge_suites = 0, cut_suites = 0;
    std::size_t cuts = 0, thin = 0;
    for (const auto* set : c.all())
      for (const auto& [name, g] : *set) {
        if (g.num_vertices() > 10) continue;
        ++graphs;
        auto r = check_facet_characterizations(g, 100000, 3);
        r.absorb(check_dim_formula_consistency(g, 100000, 3));
        if (r.overflow) v.fail(name + ": " + r.overflow_note);
        if (!r.passed()) v.fail(name + ": " + failures(r));
        for (const auto& ch : r.checks) {
          if (ch.name.find("edge facets") != std::string::npos) ++edge_suites;
          if (ch.name.rfind("odd cut facets", 0) == 0) ++cut_suites;
        }
        const std::size_t k = sample_odd_cuts(g, 64, 32, 3).size();
        cuts += k;
        // Only graphs with fewer than 20 odd cuts in total get fewer than 20.
        if (k < 20) {
          const std::size_t total = std::size_t{1} << (g.num_vertices() - 2);
          if (k != total) v.fail(name + ": " + std::to_string(k) + " cuts sampled");
          ++thin;
        }
      }
    if (v.pass) {
      std::ostringstream ss;
      ss << graphs << " graphs, " << edge_suites << " edge suites, " << cut_suites << " near-brick cut suites, " << cuts
         << " cuts (" << thin << " graphs with n <= 6 have all of their < 20 odd cuts checked)";
      v.detail = ss.str();
    }
    return v;
  });

  criterion(11, "Exactness: half-integral vertices, unimodular transforms", 0, [] {
    Verdict v;
    const auto& s = exactness_stats();
    if (s.relaxation_vertices == 0) v.fail("no relaxation vertices were recorded");
    if (s.transforms_checked == 0) v.fail("no HNF transforms were recorded");
    if (s.non_half_integral_vertices != 0) v.fail(std::to_string(s.non_half_integral_vertices.load()) + " vertices not half-integral");
    if (s.bad_determinants != 0) v.fail(std::to_string(s.bad_determinants.load()) + " transforms not unimodular");
    if (s.free_non_half_integral != 0)
      v.fail(std::to_string(s.free_non_half_integral.load()) + " vertices with a free variable have denominators above 2");
    if (v.pass)
      v.detail = std::to_string(s.relaxation_vertices.load()) + " relaxation and " +
                 std::to_string(s.free_variable_vertices.load()) + " free-variable vertices of " +
                 std::to_string(s.lp_vertices.load()) + " LP vertices, " + std::to_string(s.transforms_checked.load()) +
                 " unimodular transforms";
    return v;
  });

  std::printf("%s: %d of 11 criteria failed\n", failed ? "FAILED" : "OK", failed);
  return failed ? 1 : 0;
}
