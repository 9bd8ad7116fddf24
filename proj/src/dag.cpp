#include "nlicp/dag.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace nlicp {

Dag::Dag(int num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
  if (num_nodes_ <= 0) throw std::invalid_argument("Dag: num_nodes must be positive");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    check_node(e.parent);
    check_node(e.child);
    if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("Dag: edge sign must be +1 or -1");
    if (e.parent == e.child) throw std::invalid_argument("Dag: self-loop");
    if (!seen.emplace(e.parent, e.child).second)
      throw std::invalid_argument("Dag: duplicate edge");
  }
  topological_order();  // throws when cyclic
}

void Dag::check_node(int node) const {
  if (node < 1 || node > num_nodes_) throw std::invalid_argument("Dag: node index out of range");
}

std::vector<int> Dag::parents(int node) const {
  check_node(node);
  std::vector<int> out;
  for (const Edge& e : edges_)
    if (e.child == node) out.push_back(e.parent);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Dag::parent_signs(int node) const {
  const std::vector<int> pa = parents(node);
  std::vector<int> out(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) {
    for (const Edge& e : edges_)
      if (e.child == node && e.parent == pa[i]) out[i] = e.sign;
  }
  return out;
}

std::vector<int> Dag::children(int node) const {
  check_node(node);
  std::vector<int> out;
  for (const Edge& e : edges_)
    if (e.parent == node) out.push_back(e.child);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Dag::ancestors(int node) const {
  check_node(node);
  std::set<int> seen;
  std::queue<int> frontier;
  frontier.push(node);
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop();
    for (const Edge& e : edges_) {
      if (e.child == cur && seen.insert(e.parent).second) frontier.push(e.parent);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> Dag::descendants(int node) const {
  check_node(node);
  std::set<int> seen;
  std::queue<int> frontier;
  frontier.push(node);
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop();
    for (const Edge& e : edges_) {
      if (e.parent == cur && seen.insert(e.child).second) frontier.push(e.child);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> Dag::topological_order() const {
  std::vector<int> indegree(num_nodes_ + 1, 0);
  for (const Edge& e : edges_) ++indegree[e.child];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= num_nodes_; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(num_nodes_);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const Edge& e : edges_) {
      if (e.parent == v && --indegree[e.child] == 0) ready.push(e.child);
    }
  }
  if (static_cast<int>(order.size()) != num_nodes_)
    throw std::invalid_argument("Dag: graph contains a cycle");
  return order;
}

Dag figure7_dag() {
  return Dag(6, {{1, 2, 1},
                 {1, 3, 1},
                 {2, 3, -1},
                 {3, 4, -1},
                 {3, 6, 1},
                 {4, 6, -1},
                 {5, 6, 1}});
}

}  // namespace nlicp
