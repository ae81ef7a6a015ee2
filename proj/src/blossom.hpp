#pragma once

// Internal blossom solvers over simple graphs given as vertex-pair lists.

#include <cstdint>
#include <vector>

namespace pml::detail {

/// Edmonds' cardinality blossom algorithm. Returns mate[v] (-1 when unmatched).
/// Stops early (returning an incomplete mate vector) when `require_perfect` is set
/// and some vertex cannot be matched.
class CardinalityMatcher {
 public:
  explicit CardinalityMatcher(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {}
  void add_edge(int u, int v) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  /// Returns true when every vertex in `active` ends up matched.
  bool solve(const std::vector<char>& active, bool require_perfect);
  const std::vector<int>& mate() const { return match_; }

 private:
  int lca(int a, int b);
  void mark_path(int v, int b, int child);
  int find_path(int root);

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

/// O(n^3) primal-dual weighted blossom for maximum weight matching with strictly
/// positive integer weights. Vertices are 1-based internally; the public interface is
/// 0-based.
class WeightedMatcher {
 public:
  explicit WeightedMatcher(int n);
  void set_edge(int u, int v, std::int64_t w);  // w > 0
  /// Returns mate (0-based, -1 unmatched) of a maximum weight matching.
  std::vector<int> solve();

 private:
  struct E {
    int u = 0, v = 0;
    std::int64_t w = 0;
  };
  E& g(int a, int b) { return g_[static_cast<std::size_t>(a) * stride_ + static_cast<std::size_t>(b)]; }
  int& flower_from(int b, int x) {
    return flower_from_[static_cast<std::size_t>(b) * static_cast<std::size_t>(n_ + 1) +
                        static_cast<std::size_t>(x)];
  }
  std::int64_t e_delta(const E& e) { return lab_[e.u] + lab_[e.v] - g(e.u, e.v).w * 2; }
  void update_slack(int u, int x);
  void set_slack(int x);
  void q_push(int x);
  void set_st(int x, int b);
  int get_pr(int b, int xr);
  void set_match(int u, int v);
  void augment(int u, int v);
  int get_lca(int u, int v);
  void add_blossom(int u, int lca, int v);
  void expand_blossom(int b);
  bool on_found_edge(const E& e);
  bool matching();

  int n_, n_x_ = 0;
  std::size_t stride_;
  std::vector<E> g_;
  std::vector<std::int64_t> lab_;
  std::vector<int> match_, slack_, st_, pa_, flower_from_, s_, vis_;
  std::vector<std::vector<int>> flower_;
  std::vector<int> queue_;
  std::size_t qhead_ = 0;
  int stamp_ = 0;
};

}  // namespace pml::detail
