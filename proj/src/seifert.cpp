#include "pbk/seifert.hpp"

#include <sstream>

#include "pbk/error.hpp"

namespace pbk {

std::vector<SeifertRule> SeifertRule::all() {
  std::vector<SeifertRule> rules;
  const PairEntry entries[4] = {{true, 1}, {true, -1}, {false, 1}, {false, -1}};
  for (int d : {1, -1})
    for (const auto& s : entries)
      for (const auto& l : entries)
        for (const auto& r : entries) rules.push_back({d, s, l, r});
  return rules;
}

std::string SeifertRule::describe() const {
  auto entry = [](const PairEntry& e, const char* first, const char* second) {
    std::ostringstream o;
    o << "A(" << (e.first_row ? first : second) << "," << (e.first_row ? second : first)
      << ")=" << (e.sign > 0 ? "+1" : "-1");
    return o.str();
  };
  std::ostringstream out;
  out << "diag=" << (diagonal > 0 ? "+1" : "-1") << "; same column " << entry(same_column, "upper", "lower")
      << "; left-first " << entry(left_starts_first, "left", "right") << "; right-first "
      << entry(right_starts_first, "left", "right");
  return out.str();
}

SeifertRule calibrated_rule() {
  // Representative of the only class of rules (modulo transposition and sign
  // changes of basis vectors) that reproduces the Burau Alexander polynomial on
  // all words, with the positive diagonal of the tree rule.
  return SeifertRule{1, {true, -1}, {true, -1}, {true, 1}};
}

SeifertData seifert_matrix(const BraidWord& w, const SeifertRule& rule) {
  auto occ = w.occurrences();
  for (int g = 1; g < w.strands(); ++g)
    if (occ[static_cast<std::size_t>(g)] < 2)
      throw ReducibleWordError("seifert_matrix: generator s" + std::to_string(g) + " occurs fewer than twice", g);

  SeifertData out;
  out.basis = brick_diagram(w);
  const std::size_t r = out.basis.size();
  out.matrix = IntMatrix(r, r, Integer(0));
  for (std::size_t i = 0; i < r; ++i) out.matrix(i, i) = rule.diagonal;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const Brick& a = out.basis[i];
      const Brick& b = out.basis[j];
      LinkType type = link_type(a, b);
      if (type == LinkType::none) continue;
      std::size_t first = 0, second = 0;
      const PairEntry* e = nullptr;
      if (type == LinkType::same_column) {
        first = a.top < b.top ? i : j;
        e = &rule.same_column;
      } else {
        first = a.column < b.column ? i : j;
        e = type == LinkType::left_starts_first ? &rule.left_starts_first : &rule.right_starts_first;
      }
      second = first == i ? j : i;
      if (e->first_row)
        out.matrix(first, second) = e->sign;
      else
        out.matrix(second, first) = e->sign;
    }
  }
  return out;
}

IntMatrix seifert_matrix_tree(const Graph& tree, const std::vector<int>& order) {
  if (!tree.is_tree()) throw PreconditionError("seifert_matrix_tree: graph is not a tree");
  const std::size_t n = static_cast<std::size_t>(tree.vertex_count());
  if (order.size() != n) throw PreconditionError("seifert_matrix_tree: ordering has wrong size");
  std::vector<int> pos(n, -1);
  for (std::size_t k = 0; k < n; ++k) {
    int v = order[k];
    if (v < 0 || static_cast<std::size_t>(v) >= n || pos[static_cast<std::size_t>(v)] != -1)
      throw PreconditionError("seifert_matrix_tree: ordering is not a permutation");
    pos[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  IntMatrix a(n, n, Integer(0));
  for (std::size_t k = 0; k < n; ++k) a(k, k) = 1;
  for (auto [x, y] : tree.edges()) {
    auto px = static_cast<std::size_t>(pos[static_cast<std::size_t>(x)]);
    auto py = static_cast<std::size_t>(pos[static_cast<std::size_t>(y)]);
    a(std::min(px, py), std::max(px, py)) = 1;
  }
  return a;
}

IntMatrix seifert_matrix_tree(const Graph& tree) {
  std::vector<int> order(static_cast<std::size_t>(tree.vertex_count()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  return seifert_matrix_tree(tree, order);
}

int boundary_components_homological(const IntMatrix& a) {
  return static_cast<int>(a.rows()) - static_cast<int>(matrix_rank_rational(a - a.transposed())) + 1;
}

LaurentPoly alexander_burau(const BraidWord& w) {
  const int n = w.strands();
  const std::size_t m = static_cast<std::size_t>(n - 1);
  const LaurentPoly t = t_var();
  PolyMatrix b(m, m);
  for (std::size_t i = 0; i < m; ++i) b(i, i) = LaurentPoly(1);
  // Right multiplication by the reduced Burau image of sigma_i only rewrites
  // column i: col_i <- t col_{i-1} - t col_i + col_{i+1}.
  for (int g : w.letters()) {
    const std::size_t c = static_cast<std::size_t>(g - 1);
    for (std::size_t row = 0; row < m; ++row) {
      LaurentPoly v = -(t * b(row, c));
      if (c > 0) v += t * b(row, c - 1);
      if (c + 1 < m) v += b(row, c + 1);
      b(row, c) = std::move(v);
    }
  }
  PolyMatrix ib(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ib(i, j) = (i == j ? LaurentPoly(1) : LaurentPoly()) - b(i, j);
  LaurentPoly num = poly_det(ib) * (LaurentPoly(1) - t);
  LaurentPoly den = LaurentPoly(1) - LaurentPoly::monomial(1, n);
  return divide_exact(num, den).normalized();
}

InvariantRecord invariants(const BraidWord& w) {
  SeifertData sd = seifert_matrix(w);
  const IntMatrix& a = sd.matrix;
  InvariantRecord rec;
  rec.word = w;
  rec.strands = w.strands();
  rec.crossings = w.crossings();
  rec.first_betti = static_cast<int>(sd.basis.size());
  rec.components = component_count(w);
  rec.prime = is_connected(linking_pattern(sd.basis));
  int twice_genus = rec.first_betti - rec.components + 1;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw InternalError("invariants: Betti number and component count have inconsistent parity for " + w.to_string());
  rec.genus = twice_genus / 2;
  rec.signature = symmetric_signature(a + a.transposed());
  rec.abs_signature = std::abs(rec.signature);
  rec.alexander = poly_det(alexander_matrix(a)).normalized();
  rec.g4_smooth = rec.genus;
  if (rec.components == 1) {
    if (abs(rec.alexander.eval_at_one()) != 1 || rec.alexander.span() != 2 * rec.genus ||
        rec.alexander.leading() != 1)
      throw InternalError("invariants: Alexander polynomial of fibred knot " + w.to_string() +
                          " is not monic of span 2g");
  }
  return rec;
}

CoreInvariants core_invariants(const BraidWord& w) {
  CoreInvariants out;
  out.components = component_count(w);
  out.alexander = LaurentPoly(1);
  for (const BraidWord& f : split_connected_sum(w)) {
    if (f.crossings() == 1) continue;  // unknot factor
    InvariantRecord r = invariants(f);
    out.genus += r.genus;
    out.signature += r.signature;
    out.alexander *= r.alexander;
  }
  out.alexander = out.alexander.normalized();
  return out;
}

}  // namespace pbk
