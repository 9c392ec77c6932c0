#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pbk {

/// Small undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertices) : adj_(static_cast<std::size_t>(vertices)) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edges_; }
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
  std::vector<std::pair<int, int>> edges() const;

  bool is_connected() const;
  bool is_tree() const;
  bool is_path() const;
  /// Component index per vertex; returns the number of components.
  int components(std::vector<int>& label) const;
  Graph without_vertex(int v) const;
  /// Subgraph induced on `keep`, vertices renumbered in the given order.
  Graph induced(const std::vector<int>& keep) const;

 private:
  std::vector<std::vector<int>> adj_;
  int edges_ = 0;
};

/// Brute-force isomorphism test for small graphs (test support, <= ~10 vertices).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace pbk
