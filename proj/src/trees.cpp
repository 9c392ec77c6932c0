#include "pbk/trees.hpp"

#include <cctype>

#include "pbk/error.hpp"

namespace pbk {

Graph PlaneTree::graph() const {
  Graph g(vertex_count());
  for (int v = 0; v < vertex_count(); ++v)
    for (int c : children[static_cast<std::size_t>(v)]) g.add_edge(v, c);
  return g;
}

std::string PlaneTree::to_string() const {
  std::string out;
  auto emit = [&](auto&& self, int v) -> void {
    out += '(';
    for (int c : children[static_cast<std::size_t>(v)]) self(self, c);
    out += ')';
  };
  if (vertex_count() > 0) emit(emit, 0);
  return out;
}

PlaneTree parse_tree(std::string_view text) {
  PlaneTree tree;
  std::vector<int> stack;
  bool closed_root = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '(') {
      if (closed_root) throw ParseError("tree: more than one root");
      int v = tree.vertex_count();
      tree.children.emplace_back();
      if (!stack.empty()) tree.children[static_cast<std::size_t>(stack.back())].push_back(v);
      stack.push_back(v);
    } else if (ch == ')') {
      if (stack.empty()) throw ParseError("tree: unbalanced ')'");
      stack.pop_back();
      if (stack.empty()) closed_root = true;
    } else {
      throw ParseError(std::string("tree: unexpected character '") + ch + "'");
    }
  }
  if (!stack.empty()) throw ParseError("tree: unbalanced '('");
  if (tree.vertex_count() == 0) throw ParseError("tree: empty expression");
  return tree;
}

InvariantRecord tree_invariants(const PlaneTree& tree) {
  const IntMatrix a = seifert_matrix_tree(tree.graph());
  InvariantRecord rec;
  rec.strands = 0;
  rec.crossings = 0;
  rec.first_betti = tree.vertex_count();
  rec.components = boundary_components_homological(a);
  rec.prime = true;
  rec.genus = (rec.first_betti - rec.components + 1) / 2;
  rec.signature = symmetric_signature(a + a.transposed());
  rec.abs_signature = rec.signature < 0 ? -rec.signature : rec.signature;
  rec.alexander = poly_det(alexander_matrix(a)).normalized();
  rec.g4_smooth = rec.genus;
  return rec;
}

TreeClassification classify_tree_knot(const PlaneTree& tree) {
  TreeClassification out;
  out.invariants = tree_invariants(tree);
  const InvariantRecord& inv = out.invariants;
  if (inv.components != 1) throw PreconditionError("tree plumbing is a link, not a knot");
  const int g = inv.genus, s = inv.abs_signature;

  const Graph graph = tree.graph();
  for (int v = 0; v < graph.vertex_count(); ++v) out.high_degree_vertices += graph.degree(v) >= 3;
  if (s == 2 * g) {
    out.g4 = {g, g};
    return out;
  }

  // Two or more branch vertices already force X-tilde; with one, any of the four may be needed.
  std::vector<MinorName> order;
  if (out.high_degree_vertices >= 2)
    order = {MinorName::Xtilde};
  else
    order = {MinorName::Ttilde, MinorName::Etilde, MinorName::Xtilde, MinorName::Ytilde};
  const IntMatrix form = seifert_matrix_tree(graph);
  for (MinorName name : order) {
    if (auto found = find_carried_minor(graph, form, name, false)) {
      if (!verify_minor_embedding(graph, library_pattern(name).graph, found->embedding) ||
          !is_alexander_trivial(form, found->basis))
        throw InternalError("tree minor failed re-verification");
      out.certificate = name;
      out.embedding = std::move(found->embedding);
      out.basis = std::move(found->basis);
      break;
    }
  }
  out.g4 = {(s + 1) / 2, out.certificate ? g - 1 : g};
  return out;
}

}  // namespace pbk
