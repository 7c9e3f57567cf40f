#include "neumann1/maxflow.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace neumann1 {

namespace {
constexpr int kInfDist = std::numeric_limits<int>::max();
}

MaxFlow::MaxFlow(int node_count) : nodes_(node_count) {}

void MaxFlow::add_edge(int u, int v, int64_t cap, int64_t rev_cap) {
  if (u == v) throw std::invalid_argument("self arc");
  if (cap < 0 || rev_cap < 0) throw std::invalid_argument("negative capacity");
  const int i = static_cast<int>(arcs_.size());
  arcs_.push_back({v, nodes_[u].first, cap});
  nodes_[u].first = i;
  arcs_.push_back({u, nodes_[v].first, rev_cap});
  nodes_[v].first = i + 1;
}

// The implementation follows the usual two-tree scheme: grow S- and T-trees
// from active nodes, augment along the path found when they touch, then
// re-attach the orphaned subtrees.
namespace {

struct ActiveQueue {
  std::deque<int> q;
  std::vector<uint8_t> flag;
  explicit ActiveQueue(size_t n) : flag(n, 0) {}
  void push(int u) {
    if (!flag[u]) {
      flag[u] = 1;
      q.push_back(u);
    }
  }
  bool empty() const { return q.empty(); }
  int pop() {
    const int u = q.front();
    q.pop_front();
    flag[u] = 0;
    return u;
  }
};

}  // namespace

int64_t MaxFlow::solve(int source, int sink) {
  source_ = source;
  sink_ = sink;
  for (Node& n : nodes_) {
    n.tree = 0;
    n.parent_arc = -1;
    n.ts = 0;
    n.dist = 0;
  }
  nodes_[source].tree = +1;
  nodes_[sink].tree = -1;
  time_ = 0;
  augmentations_ = 0;

  ActiveQueue active(nodes_.size());
  active.push(source);
  active.push(sink);
  std::deque<int> orphans;
  int64_t flow = 0;

  auto residual_from = [&](int a, int8_t tree) -> int64_t {
    // residual of the arc in the tree's growth direction at arc a (u -> head)
    return tree > 0 ? arcs_[a].rcap : arcs_[a ^ 1].rcap;
  };

  // distance-to-root check used during adoption; kInfDist when not rooted
  auto origin_dist = [&](int v) -> int {
    int d = 0;
    int u = v;
    while (true) {
      if (nodes_[u].ts == time_) {
        d += nodes_[u].dist;
        break;
      }
      if (u == source_ || u == sink_) break;
      const int pa = nodes_[u].parent_arc;
      if (pa < 0) return kInfDist;
      ++d;
      u = arcs_[pa].head;
    }
    int dd = d;
    for (int w = v; w != u;) {
      nodes_[w].ts = time_;
      nodes_[w].dist = dd--;
      w = arcs_[nodes_[w].parent_arc].head;
    }
    return d;
  };

  auto adopt_all = [&]() {
    while (!orphans.empty()) {
      const int u = orphans.front();
      orphans.pop_front();
      const int8_t tree = nodes_[u].tree;
      if (tree == 0) continue;
      ++time_;

      int best_arc = -1;
      int best_d = kInfDist;
      for (int a = nodes_[u].first; a >= 0; a = arcs_[a].next) {
        // candidate parent v must feed u in the tree direction
        const int64_t r = tree > 0 ? arcs_[a ^ 1].rcap : arcs_[a].rcap;
        if (r <= 0) continue;
        const int v = arcs_[a].head;
        if (nodes_[v].tree != tree) continue;
        const int d = origin_dist(v);
        if (d == kInfDist) continue;
        if (d + 1 < best_d) {
          best_d = d + 1;
          best_arc = a;
        }
      }
      if (best_arc >= 0) {
        nodes_[u].parent_arc = best_arc;
        nodes_[u].ts = time_;
        nodes_[u].dist = best_d;
        continue;
      }

      for (int a = nodes_[u].first; a >= 0; a = arcs_[a].next) {
        const int v = arcs_[a].head;
        if (nodes_[v].tree != tree) continue;
        const int64_t r = tree > 0 ? arcs_[a ^ 1].rcap : arcs_[a].rcap;
        if (r > 0) active.push(v);
        if (nodes_[v].parent_arc >= 0 && arcs_[nodes_[v].parent_arc].head == u) {
          nodes_[v].parent_arc = -1;
          orphans.push_back(v);
        }
      }
      nodes_[u].tree = 0;
      nodes_[u].parent_arc = -1;
    }
  };

  while (true) {
    // grow
    int join = -1;
    while (!active.empty()) {
      const int u = active.q.front();
      const int8_t tree = nodes_[u].tree;
      if (tree == 0) {
        active.pop();
        continue;
      }
      bool found = false;
      for (int a = nodes_[u].first; a >= 0; a = arcs_[a].next) {
        if (residual_from(a, tree) <= 0) continue;
        const int v = arcs_[a].head;
        if (nodes_[v].tree == 0) {
          nodes_[v].tree = tree;
          nodes_[v].parent_arc = a ^ 1;
          nodes_[v].ts = nodes_[u].ts;
          nodes_[v].dist = nodes_[u].dist + 1;
          active.push(v);
        } else if (nodes_[v].tree != tree) {
          join = tree > 0 ? a : (a ^ 1);
          found = true;
          break;
        }
      }
      if (found) break;
      active.pop();  // fully scanned
    }
    if (join < 0) break;

    // augment along source root .. join .. sink root
    const int s_side = arcs_[join ^ 1].head;
    const int t_side = arcs_[join].head;
    int64_t bottleneck = arcs_[join].rcap;
    for (int u = s_side; u != source_;) {
      const int pa = nodes_[u].parent_arc;
      bottleneck = std::min(bottleneck, arcs_[pa ^ 1].rcap);
      u = arcs_[pa].head;
    }
    for (int u = t_side; u != sink_;) {
      const int pa = nodes_[u].parent_arc;
      bottleneck = std::min(bottleneck, arcs_[pa].rcap);
      u = arcs_[pa].head;
    }
    arcs_[join].rcap -= bottleneck;
    arcs_[join ^ 1].rcap += bottleneck;
    for (int u = s_side; u != source_;) {
      const int pa = nodes_[u].parent_arc;
      const int next = arcs_[pa].head;
      arcs_[pa ^ 1].rcap -= bottleneck;
      arcs_[pa].rcap += bottleneck;
      if (arcs_[pa ^ 1].rcap == 0) {
        nodes_[u].parent_arc = -1;
        orphans.push_back(u);
      }
      u = next;
    }
    for (int u = t_side; u != sink_;) {
      const int pa = nodes_[u].parent_arc;
      const int next = arcs_[pa].head;
      arcs_[pa].rcap -= bottleneck;
      arcs_[pa ^ 1].rcap += bottleneck;
      if (arcs_[pa].rcap == 0) {
        nodes_[u].parent_arc = -1;
        orphans.push_back(u);
      }
      u = next;
    }
    flow += bottleneck;
    ++augmentations_;
    adopt_all();
  }

  solved_ = true;
  return flow;
}

std::vector<uint8_t> MaxFlow::min_cut_source_side() const {
  std::vector<uint8_t> side(nodes_.size(), 0);
  std::deque<int> q{source_};
  side[source_] = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int a = nodes_[u].first; a >= 0; a = arcs_[a].next) {
      if (arcs_[a].rcap <= 0) continue;
      const int v = arcs_[a].head;
      if (!side[v]) {
        side[v] = 1;
        q.push_back(v);
      }
    }
  }
  return side;
}

std::vector<uint8_t> MaxFlow::max_cut_source_side() const {
  std::vector<uint8_t> reaches(nodes_.size(), 0);
  std::deque<int> q{sink_};
  reaches[sink_] = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    // v -> u has residual iff the reverse of u's arc to v does
    for (int a = nodes_[u].first; a >= 0; a = arcs_[a].next) {
      if (arcs_[a ^ 1].rcap <= 0) continue;
      const int v = arcs_[a].head;
      if (!reaches[v]) {
        reaches[v] = 1;
        q.push_back(v);
      }
    }
  }
  std::vector<uint8_t> side(nodes_.size(), 0);
  for (size_t i = 0; i < side.size(); ++i) side[i] = reaches[i] ? 0 : 1;
  return side;
}

}  // namespace neumann1
