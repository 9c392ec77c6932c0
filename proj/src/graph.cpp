#include "pbk/graph.hpp"

#include <algorithm>
#include <numeric>

#include "pbk/error.hpp"

namespace pbk {

void Graph::add_edge(int a, int b) {
  if (a == b) throw PreconditionError("graph: self loop");
  if (has_edge(a, b)) return;
  adj_[static_cast<std::size_t>(a)].push_back(b);
  adj_[static_cast<std::size_t>(b)].push_back(a);
  ++edges_;
}

bool Graph::has_edge(int a, int b) const {
  const auto& n = neighbours(a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < vertex_count(); ++a)
    for (int b : neighbours(a))
      if (a < b) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::components(std::vector<int>& label) const {
  label.assign(adj_.size(), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    label[static_cast<std::size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : neighbours(v))
        if (label[static_cast<std::size_t>(u)] == -1) {
          label[static_cast<std::size_t>(u)] = count;
          stack.push_back(u);
        }
    }
    ++count;
  }
  return count;
}

bool Graph::is_connected() const {
  std::vector<int> label;
  return components(label) <= 1;
}

bool Graph::is_tree() const { return vertex_count() >= 1 && is_connected() && edges_ == vertex_count() - 1; }

bool Graph::is_path() const {
  if (!is_tree()) return false;
  for (int v = 0; v < vertex_count(); ++v)
    if (degree(v) > 2) return false;
  return true;
}

Graph Graph::without_vertex(int v) const {
  std::vector<int> keep;
  for (int u = 0; u < vertex_count(); ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> index(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  Graph g(static_cast<int>(keep.size()));
  for (auto [a, b] : edges())
    if (index[static_cast<std::size_t>(a)] >= 0 && index[static_cast<std::size_t>(b)] >= 0)
      g.add_edge(index[static_cast<std::size_t>(a)], index[static_cast<std::size_t>(b)]);
  return g;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < a.vertex_count() && ok; ++v)
      ok = da[static_cast<std::size_t>(v)] == db[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
    for (auto [x, y] : a.edges()) {
      if (!ok) break;
      ok = b.has_edge(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace pbk
