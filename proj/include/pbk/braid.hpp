#pragma once

// Positive braid words and the combinatorics of their closures.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pbk {

struct Syllable {
  int generator = 1;
  int exponent = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A word in positive powers of sigma_1 .. sigma_{n-1} on n strands.
/// Stored letter by letter; syllables are derived.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord from_syllables(int strands, const std::vector<Syllable>& syllables);
  /// Strand count inferred as 1 + max generator.
  static BraidWord from_letters(std::vector<int> letters);

  int strands() const { return strands_; }
  int crossings() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  int letter(int pos) const { return letters_[static_cast<std::size_t>(pos)]; }
  bool empty() const { return letters_.empty(); }

  std::vector<Syllable> syllables() const;
  /// Occurrence count per generator, indexed 1..strands-1 (index 0 unused).
  std::vector<int> occurrences() const;
  int max_generator() const;

  /// "s1^4 s2 s1^3 s2^2"
  std::string to_string() const;
  /// Compact digit form when every generator is <= 9, e.g. "111122".
  std::string to_compact() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend std::strong_ordering operator<=>(const BraidWord& a, const BraidWord& b);

 private:
  int strands_ = 2;
  std::vector<int> letters_;
};

/// Accepts "s1^4 s2 s1^3 s2^2", unicode sigma for 's', compact "1112", and a
/// trailing "@n" strand override.
BraidWord parse_braid(std::string_view text);

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// 1-based image of 1-based point.
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  const std::vector<int>& images() const { return images_; }
  int cycle_count() const;
  /// Cycle lengths sorted ascending.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Product of the transpositions (i i+1), one per letter, in word order.
Permutation closure_permutation(const BraidWord& w);
int component_count(const BraidWord& w);
bool is_knot(const BraidWord& w);

/// Moves the first k letters (mod length) to the end.
BraidWord rotate(const BraidWord& w, int k);
BraidWord reverse(const BraidWord& w);
/// sigma_i -> sigma_{n-i}
BraidWord flip_indices(const BraidWord& w);
/// sigma_i -> sigma_{i+k}; strands grow as needed.
BraidWord shift_indices(const BraidWord& w, int k);

/// Applies sigma_i sigma_{i+1} sigma_i -> sigma_{i+1} sigma_i sigma_{i+1} until no
/// such factor can be exposed by far commutations and cyclic rotation.
BraidWord push_right_normal_form(const BraidWord& w);

struct SubwordOptions {
  bool cyclic = true;
  bool reversal = true;
  bool index_shift = true;
  bool flip = false;
};

struct WordTransform {
  int offset = 0;
  bool reversed = false;
  bool flipped = false;
  int shift = 0;  // added to the pattern's generators
  friend bool operator==(const WordTransform&, const WordTransform&) = default;
};

/// Host letters are transformed by reversal, then index flip, then rotation by
/// `offset`; `positions` index into that transformed host and match the
/// pattern letter by letter after shifting the pattern by `shift`.
struct SubwordWitness {
  std::vector<int> positions;
  WordTransform transform;
};

BraidWord apply_transform(const BraidWord& host, const WordTransform& t);

/// Letter-level subword containment: deleting letters of the host (which merges
/// neighbouring powers) must produce the pattern.
std::optional<SubwordWitness> contains_subword(const BraidWord& host, const BraidWord& pattern,
                                               const SubwordOptions& opts = {});

bool verify_subword_witness(const BraidWord& host, const BraidWord& pattern,
                            const SubwordWitness& witness);

}  // namespace pbk
