#include "blossom.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace pml::detail {

namespace {
inline std::size_t ix(int i) { return static_cast<std::size_t>(i); }
}  // namespace

// ---------------------------------------------------------------------------
// Cardinality matching

int CardinalityMatcher::lca(int a, int b) {
  std::vector<char> seen(ix(n_), 0);
  for (;;) {
    a = base_[ix(a)];
    seen[ix(a)] = 1;
    if (match_[ix(a)] == -1) break;
    a = parent_[ix(match_[ix(a)])];
  }
  for (;;) {
    b = base_[ix(b)];
    if (seen[ix(b)]) return b;
    b = parent_[ix(match_[ix(b)])];
  }
}

void CardinalityMatcher::mark_path(int v, int b, int child) {
  while (base_[ix(v)] != b) {
    blossom_[ix(base_[ix(v)])] = 1;
    blossom_[ix(base_[ix(match_[ix(v)])])] = 1;
    parent_[ix(v)] = child;
    child = match_[ix(v)];
    v = parent_[ix(match_[ix(v)])];
  }
}

int CardinalityMatcher::find_path(int root) {
  used_.assign(ix(n_), 0);
  parent_.assign(ix(n_), -1);
  base_.resize(ix(n_));
  std::iota(base_.begin(), base_.end(), 0);
  used_[ix(root)] = 1;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int to : adj_[ix(v)]) {
      if (base_[ix(v)] == base_[ix(to)] || match_[ix(v)] == to) continue;
      if (to == root || (match_[ix(to)] != -1 && parent_[ix(match_[ix(to)])] != -1)) {
        const int cur = lca(v, to);
        blossom_.assign(ix(n_), 0);
        mark_path(v, cur, to);
        mark_path(to, cur, v);
        for (int i = 0; i < n_; ++i) {
          if (blossom_[ix(base_[ix(i)])]) {
            base_[ix(i)] = cur;
            if (!used_[ix(i)]) {
              used_[ix(i)] = 1;
              q.push(i);
            }
          }
        }
      } else if (parent_[ix(to)] == -1) {
        parent_[ix(to)] = v;
        if (match_[ix(to)] == -1) return to;
        used_[ix(match_[ix(to)])] = 1;
        q.push(match_[ix(to)]);
      }
    }
  }
  return -1;
}

bool CardinalityMatcher::solve(const std::vector<char>& active, bool require_perfect) {
  match_.assign(ix(n_), -1);
  for (int v = 0; v < n_; ++v) {
    if (!active[ix(v)] || match_[ix(v)] != -1) continue;
    for (int w : adj_[ix(v)]) {
      if (match_[ix(w)] == -1) {
        match_[ix(v)] = w;
        match_[ix(w)] = v;
        break;
      }
    }
  }
  bool all = true;
  for (int v = 0; v < n_; ++v) {
    if (!active[ix(v)] || match_[ix(v)] != -1) continue;
    int end = find_path(v);
    if (end == -1) {
      all = false;
      if (require_perfect) return false;
      continue;
    }
    while (end != -1) {
      const int pv = parent_[ix(end)];
      const int ppv = match_[ix(pv)];
      match_[ix(end)] = pv;
      match_[ix(pv)] = end;
      end = ppv;
    }
  }
  return all;
}

// ---------------------------------------------------------------------------
// Weighted matching

WeightedMatcher::WeightedMatcher(int n) : n_(n), stride_(ix(2 * n + 1)) {
  g_.resize(stride_ * stride_);
  for (int u = 1; u <= 2 * n; ++u)
    for (int v = 1; v <= 2 * n; ++v) g(u, v) = E{u, v, 0};
  lab_.assign(stride_, 0);
  match_.assign(stride_, 0);
  slack_.assign(stride_, 0);
  st_.assign(stride_, 0);
  pa_.assign(stride_, 0);
  s_.assign(stride_, 0);
  vis_.assign(stride_, 0);
  flower_from_.assign(stride_ * ix(n + 1), 0);
  flower_.assign(stride_, {});
}

void WeightedMatcher::set_edge(int u, int v, std::int64_t w) {
  g(u + 1, v + 1).w = w;
  g(v + 1, u + 1).w = w;
}

void WeightedMatcher::update_slack(int u, int x) {
  if (!slack_[ix(x)] || e_delta(g(u, x)) < e_delta(g(slack_[ix(x)], x))) slack_[ix(x)] = u;
}

void WeightedMatcher::set_slack(int x) {
  slack_[ix(x)] = 0;
  for (int u = 1; u <= n_; ++u)
    if (g(u, x).w > 0 && st_[ix(u)] != x && s_[ix(st_[ix(u)])] == 0) update_slack(u, x);
}

void WeightedMatcher::q_push(int x) {
  if (x <= n_) {
    queue_.push_back(x);
  } else {
    for (int y : flower_[ix(x)]) q_push(y);
  }
}

void WeightedMatcher::set_st(int x, int b) {
  st_[ix(x)] = b;
  if (x > n_)
    for (int y : flower_[ix(x)]) set_st(y, b);
}

int WeightedMatcher::get_pr(int b, int xr) {
  auto& f = flower_[ix(b)];
  const int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
  if (pr % 2 == 1) {
    std::reverse(f.begin() + 1, f.end());
    return static_cast<int>(f.size()) - pr;
  }
  return pr;
}

void WeightedMatcher::set_match(int u, int v) {
  match_[ix(u)] = g(u, v).v;
  if (u > n_) {
    const E e = g(u, v);
    const int xr = flower_from(u, e.u);
    const int pr = get_pr(u, xr);
    auto& f = flower_[ix(u)];
    for (int i = 0; i < pr; ++i) set_match(f[ix(i)], f[ix(i ^ 1)]);
    set_match(xr, v);
    std::rotate(f.begin(), f.begin() + pr, f.end());
  }
}

void WeightedMatcher::augment(int u, int v) {
  for (;;) {
    const int xnv = st_[ix(match_[ix(u)])];
    set_match(u, v);
    if (!xnv) return;
    set_match(xnv, st_[ix(pa_[ix(xnv)])]);
    u = st_[ix(pa_[ix(xnv)])];
    v = xnv;
  }
}

int WeightedMatcher::get_lca(int u, int v) {
  for (++stamp_; u || v; std::swap(u, v)) {
    if (u == 0) continue;
    if (vis_[ix(u)] == stamp_) return u;
    vis_[ix(u)] = stamp_;
    u = st_[ix(match_[ix(u)])];
    if (u) u = st_[ix(pa_[ix(u)])];
  }
  return 0;
}

void WeightedMatcher::add_blossom(int u, int lca, int v) {
  int b = n_ + 1;
  while (b <= n_x_ && st_[ix(b)]) ++b;
  if (b > n_x_) ++n_x_;
  lab_[ix(b)] = 0;
  s_[ix(b)] = 0;
  match_[ix(b)] = match_[ix(lca)];
  auto& f = flower_[ix(b)];
  f.clear();
  f.push_back(lca);
  for (int x = u, y; x != lca; x = st_[ix(pa_[ix(y)])]) {
    f.push_back(x);
    y = st_[ix(match_[ix(x)])];
    f.push_back(y);
    q_push(y);
  }
  std::reverse(f.begin() + 1, f.end());
  for (int x = v, y; x != lca; x = st_[ix(pa_[ix(y)])]) {
    f.push_back(x);
    y = st_[ix(match_[ix(x)])];
    f.push_back(y);
    q_push(y);
  }
  set_st(b, b);
  for (int x = 1; x <= n_x_; ++x) {
    g(b, x).w = 0;
    g(x, b).w = 0;
  }
  for (int x = 1; x <= n_; ++x) flower_from(b, x) = 0;
  for (int xs : flower_[ix(b)]) {
    for (int x = 1; x <= n_x_; ++x) {
      if (g(b, x).w == 0 || e_delta(g(xs, x)) < e_delta(g(b, x))) {
        g(b, x) = g(xs, x);
        g(x, b) = g(x, xs);
      }
    }
    for (int x = 1; x <= n_; ++x)
      if (flower_from(xs, x)) flower_from(b, x) = xs;
  }
  set_slack(b);
}

void WeightedMatcher::expand_blossom(int b) {
  for (int y : flower_[ix(b)]) set_st(y, y);
  const int xr = flower_from(b, g(b, pa_[ix(b)]).u);
  const int pr = get_pr(b, xr);
  auto& f = flower_[ix(b)];
  for (int i = 0; i < pr; i += 2) {
    const int xs = f[ix(i)];
    const int xns = f[ix(i + 1)];
    pa_[ix(xs)] = g(xns, xs).u;
    s_[ix(xs)] = 1;
    s_[ix(xns)] = 0;
    slack_[ix(xs)] = 0;
    set_slack(xns);
    q_push(xns);
  }
  s_[ix(xr)] = 1;
  pa_[ix(xr)] = pa_[ix(b)];
  for (std::size_t i = ix(pr + 1); i < f.size(); ++i) {
    const int xs = f[i];
    s_[ix(xs)] = -1;
    set_slack(xs);
  }
  st_[ix(b)] = 0;
}

bool WeightedMatcher::on_found_edge(const E& e) {
  const int u = st_[ix(e.u)];
  const int v = st_[ix(e.v)];
  if (s_[ix(v)] == -1) {
    pa_[ix(v)] = e.u;
    s_[ix(v)] = 1;
    const int nu = st_[ix(match_[ix(v)])];
    slack_[ix(v)] = 0;
    slack_[ix(nu)] = 0;
    s_[ix(nu)] = 0;
    q_push(nu);
  } else if (s_[ix(v)] == 0) {
    const int l = get_lca(u, v);
    if (!l) {
      augment(u, v);
      augment(v, u);
      return true;
    }
    add_blossom(u, l, v);
  }
  return false;
}

bool WeightedMatcher::matching() {
  std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
  std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
  queue_.clear();
  qhead_ = 0;
  for (int x = 1; x <= n_x_; ++x) {
    if (st_[ix(x)] == x && !match_[ix(x)]) {
      pa_[ix(x)] = 0;
      s_[ix(x)] = 0;
      q_push(x);
    }
  }
  if (queue_.empty()) return false;
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  for (;;) {
    while (qhead_ < queue_.size()) {
      const int u = queue_[qhead_++];
      if (s_[ix(st_[ix(u)])] == 1) continue;
      for (int v = 1; v <= n_; ++v) {
        if (g(u, v).w > 0 && st_[ix(u)] != st_[ix(v)]) {
          if (e_delta(g(u, v)) == 0) {
            if (on_found_edge(g(u, v))) return true;
          } else {
            update_slack(u, st_[ix(v)]);
          }
        }
      }
    }
    std::int64_t d = kInf;
    for (int b = n_ + 1; b <= n_x_; ++b)
      if (st_[ix(b)] == b && s_[ix(b)] == 1) d = std::min(d, lab_[ix(b)] / 2);
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[ix(x)] == x && slack_[ix(x)]) {
        if (s_[ix(x)] == -1)
          d = std::min(d, e_delta(g(slack_[ix(x)], x)));
        else if (s_[ix(x)] == 0)
          d = std::min(d, e_delta(g(slack_[ix(x)], x)) / 2);
      }
    }
    for (int u = 1; u <= n_; ++u) {
      if (s_[ix(st_[ix(u)])] == 0) {
        if (lab_[ix(u)] <= d) return false;
        lab_[ix(u)] -= d;
      } else if (s_[ix(st_[ix(u)])] == 1) {
        lab_[ix(u)] += d;
      }
    }
    for (int b = n_ + 1; b <= n_x_; ++b) {
      if (st_[ix(b)] == b) {
        if (s_[ix(st_[ix(b)])] == 0)
          lab_[ix(b)] += d * 2;
        else if (s_[ix(st_[ix(b)])] == 1)
          lab_[ix(b)] -= d * 2;
      }
    }
    queue_.clear();
    qhead_ = 0;
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[ix(x)] == x && slack_[ix(x)] && st_[ix(slack_[ix(x)])] != x &&
          e_delta(g(slack_[ix(x)], x)) == 0)
        if (on_found_edge(g(slack_[ix(x)], x))) return true;
    }
    for (int b = n_ + 1; b <= n_x_; ++b)
      if (st_[ix(b)] == b && s_[ix(b)] == 1 && lab_[ix(b)] == 0) expand_blossom(b);
  }
}

std::vector<int> WeightedMatcher::solve() {
  std::fill(match_.begin(), match_.end(), 0);
  n_x_ = n_;
  for (int u = 0; u <= 2 * n_; ++u) {
    st_[ix(u)] = u;
    flower_[ix(u)].clear();
  }
  std::int64_t w_max = 0;
  for (int u = 1; u <= n_; ++u) {
    for (int v = 1; v <= n_; ++v) {
      flower_from(u, v) = (u == v ? u : 0);
      w_max = std::max(w_max, g(u, v).w);
    }
  }
  for (int u = 1; u <= n_; ++u) lab_[ix(u)] = w_max;
  while (matching()) {
  }
  std::vector<int> mate(ix(n_), -1);
  for (int u = 1; u <= n_; ++u)
    if (match_[ix(u)]) mate[ix(u - 1)] = match_[ix(u)] - 1;
  return mate;
}

}  // namespace pml::detail
