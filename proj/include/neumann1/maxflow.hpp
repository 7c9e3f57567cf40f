#pragma once

#include <cstdint>
#include <vector>

namespace neumann1 {

// Boykov-Kolmogorov max-flow on integer capacities. Deterministic for a fixed
// edge insertion order. Terminal arcs are ordinary arcs; callers add them
// against explicit source/sink node ids.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  // Adds arc u->v with capacity cap and v->u with capacity rev_cap.
  void add_edge(int u, int v, int64_t cap, int64_t rev_cap);

  int64_t solve(int source, int sink);

  // Minimal minimum cut: source side = nodes reachable from the source in the
  // residual network. Valid after solve().
  std::vector<uint8_t> min_cut_source_side() const;
  // Maximal minimum cut: source side = complement of the nodes that can still
  // reach the sink in the residual network.
  std::vector<uint8_t> max_cut_source_side() const;

  int64_t augmentations() const { return augmentations_; }

 private:
  struct Arc {
    int head;
    int next;
    int64_t rcap;
  };
  struct Node {
    int first = -1;
    int parent_arc = -1;
    int ts = 0;
    int dist = 0;
    int8_t tree = 0;  // 0 free, +1 source tree, -1 sink tree
  };

  std::vector<Arc> arcs_;
  std::vector<Node> nodes_;
  int source_ = -1;
  int sink_ = -1;
  int time_ = 0;
  int64_t augmentations_ = 0;
  bool solved_ = false;
};

}  // namespace neumann1
