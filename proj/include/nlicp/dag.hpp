#pragma once

#include <vector>

namespace nlicp {

/// Directed edge with a sign in {-1, +1}. Node ids are 1-based.
struct Edge {
  int parent;
  int child;
  int sign;
};

/// Acyclic directed graph over nodes 1..q with signed edges.
class Dag {
 public:
  Dag(int num_nodes, std::vector<Edge> edges);

  int num_nodes() const { return num_nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Parents of `node` in ascending order.
  std::vector<int> parents(int node) const;
  /// Edge signs aligned with parents(node).
  std::vector<int> parent_signs(int node) const;
  std::vector<int> children(int node) const;
  std::vector<int> ancestors(int node) const;
  std::vector<int> descendants(int node) const;

  /// Topological order, lowest node id first among ready nodes.
  std::vector<int> topological_order() const;

 private:
  void check_node(int node) const;

  int num_nodes_;
  std::vector<Edge> edges_;
};

/// The fixed six-node benchmark graph:
/// 1->2 (+), 1->3 (+), 2->3 (-), 3->4 (-), 3->6 (+), 4->6 (-), 5->6 (+).
Dag figure7_dag();

}  // namespace nlicp
