#include "pbk/lemma5.hpp"

#include <vector>

#include "pbk/error.hpp"
#include "pbk/pattern.hpp"
#include "pbk/seifert.hpp"

namespace pbk {

namespace {

// Positions of the letters i, i+1 in u when their projection reads
// i^k (i+1) i (i+1)^l with k >= 1, l >= 0.
struct Shape {
  std::size_t q1 = 0;     // the first s_{i+1}
  std::size_t plast = 0;  // the last s_i
};

std::optional<Shape> match_shape(const std::vector<int>& u, int i) {
  std::vector<std::size_t> pos;
  std::vector<int> proj;
  for (std::size_t p = 0; p < u.size(); ++p)
    if (u[p] == i || u[p] == i + 1) {
      pos.push_back(p);
      proj.push_back(u[p]);
    }
  std::size_t k = 0;
  while (k < proj.size() && proj[k] == i) ++k;
  if (k == 0 || k + 2 > proj.size() || proj[k] != i + 1 || proj[k + 1] != i) return std::nullopt;
  for (std::size_t j = k + 2; j < proj.size(); ++j)
    if (proj[j] != i + 1) return std::nullopt;
  return Shape{pos[k], pos[k + 1]};
}

// Between the first s_{i+1} and the last s_i only letters far from both
// columns remain. Low ones (< i) commute with s_{i+1}, high ones (> i+1)
// commute with s_i and with the low ones, so the segment can be rewritten as
// lows, s_{i+1}, s_i, highs.
std::vector<int> bring_together(const std::vector<int>& u, const Shape& s) {
  std::vector<int> out(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(s.q1));
  std::vector<int> lows, highs;
  for (std::size_t p = s.q1 + 1; p < s.plast; ++p) (u[p] < u[s.plast] ? lows : highs).push_back(u[p]);
  out.insert(out.end(), lows.begin(), lows.end());
  out.push_back(u[s.q1]);
  out.push_back(u[s.plast]);
  out.insert(out.end(), highs.begin(), highs.end());
  out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(s.plast) + 1, u.end());
  return out;
}

BraidWord merge(const std::vector<int>& u, std::size_t drop, int i, int strands) {
  std::vector<int> letters;
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (p == drop) continue;
    letters.push_back(u[p] > i ? u[p] - 1 : u[p]);
  }
  return BraidWord(strands - 1, std::move(letters));
}

}  // namespace

Lemma5Outcome lemma5_attempt(const BraidWord& w) {
  if (w.strands() < 3)
    throw PreconditionError("lemma 5 reduction needs at least 3 strands");
  auto occ = w.occurrences();
  for (int g = 1; g < w.strands(); ++g)
    if (occ[static_cast<std::size_t>(g)] == 0)
      throw ReducibleWordError("reducible word: generator s" + std::to_string(g) + " does not occur", g);

  Lemma5Outcome outcome;
  const CoreInvariants before = core_invariants(w);
  for (int i = 1; i + 1 < w.strands(); ++i) {
    if (!induced_two_column_pattern(w, i).graph.is_path()) continue;
    for (bool rev : {false, true}) {
      BraidWord base = rev ? reverse(w) : w;
      for (int r = 0; r < w.crossings(); ++r) {
        const std::vector<int> u = rotate(base, r).letters();
        auto shape = match_shape(u, i);
        if (!shape) continue;
        const std::vector<int> v = bring_together(u, *shape);
        // After bring_together the pair s_{i+1} s_i is adjacent; the first of
        // the pair sits where the lows end.
        std::size_t q1 = 0;
        while (!(v[q1] == i + 1 && v[q1 + 1] == i)) ++q1;
        for (std::size_t drop : {q1, q1 + 1}) {
          BraidWord candidate = merge(v, drop, i, w.strands());
          auto cocc = candidate.occurrences();
          bool complete = true;
          for (int g = 1; g < candidate.strands(); ++g) complete = complete && cocc[static_cast<std::size_t>(g)] > 0;
          if (complete && core_invariants(candidate) == before) {
            outcome.reduced = std::move(candidate);
            outcome.column = i;
            outcome.rejected_by_postcheck = false;
            return outcome;
          }
          outcome.rejected_by_postcheck = true;
        }
      }
    }
  }
  return outcome;
}

}  // namespace pbk
