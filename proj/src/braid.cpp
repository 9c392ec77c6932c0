#include "pbk/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "pbk/error.hpp"

namespace pbk {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw PreconditionError("braid word needs at least 2 strands");
  for (int g : letters_) {
    if (g < 1) throw PreconditionError("generator index must be >= 1");
    if (g > strands_ - 1)
      throw PreconditionError("generator s" + std::to_string(g) + " needs more than " +
                              std::to_string(strands_) + " strands");
  }
}

BraidWord BraidWord::from_syllables(int strands, const std::vector<Syllable>& syllables) {
  std::vector<int> letters;
  for (const auto& s : syllables) {
    if (s.exponent < 1) throw PreconditionError("exponents must be positive");
    letters.insert(letters.end(), static_cast<std::size_t>(s.exponent), s.generator);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::from_letters(std::vector<int> letters) {
  int mx = letters.empty() ? 1 : *std::max_element(letters.begin(), letters.end());
  return BraidWord(std::max(2, mx + 1), std::move(letters));
}

std::vector<Syllable> BraidWord::syllables() const {
  std::vector<Syllable> out;
  for (int g : letters_) {
    if (!out.empty() && out.back().generator == g)
      ++out.back().exponent;
    else
      out.push_back({g, 1});
  }
  return out;
}

std::vector<int> BraidWord::occurrences() const {
  std::vector<int> occ(static_cast<std::size_t>(strands_), 0);
  for (int g : letters_) ++occ[static_cast<std::size_t>(g)];
  return occ;
}

int BraidWord::max_generator() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : syllables()) {
    if (!first) out << ' ';
    first = false;
    out << 's' << s.generator;
    if (s.exponent != 1) out << '^' << s.exponent;
  }
  if (max_generator() + 1 != strands_) out << (first ? "" : " ") << '@' << strands_;
  return out.str();
}

std::string BraidWord::to_compact() const {
  std::string out;
  for (int g : letters_) {
    if (g > 9) return to_string();
    out.push_back(static_cast<char>('0' + g));
  }
  if (max_generator() + 1 != strands_) out += "@" + std::to_string(strands_);
  return out;
}

std::strong_ordering operator<=>(const BraidWord& a, const BraidWord& b) {
  if (auto c = a.strands_ <=> b.strands_; c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

int read_number(std::string_view text, std::size_t& pos, const char* what) {
  std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (start == pos) throw ParseError(std::string("expected ") + what + " at offset " + std::to_string(start));
  if (pos - start > 6) throw ParseError(std::string(what) + " too large");
  return std::stoi(std::string(text.substr(start, pos - start)));
}

}  // namespace

BraidWord parse_braid(std::string_view raw) {
  // Normalise unicode sigma (U+03C3, UTF-8 CF 83) to 's'.
  std::string text;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (static_cast<unsigned char>(raw[i]) == 0xCF && i + 1 < raw.size() &&
        static_cast<unsigned char>(raw[i + 1]) == 0x83) {
      text.push_back('s');
      ++i;
    } else {
      text.push_back(raw[i]);
    }
  }

  std::optional<int> declared;
  if (auto at = text.find('@'); at != std::string::npos) {
    std::size_t pos = at + 1;
    declared = read_number(text, pos, "strand count");
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos != text.size()) throw ParseError("trailing characters after strand count");
    text.resize(at);
  }

  std::vector<int> letters;
  bool compact = std::all_of(text.begin(), text.end(), [](char c) { return is_digit(c) || is_space(c); });
  if (compact) {
    for (char c : text) {
      if (is_space(c)) continue;
      if (c == '0') throw ParseError("generator index 0 in compact word");
      letters.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (is_space(text[pos])) {
        ++pos;
        continue;
      }
      if (text[pos] != 's' && text[pos] != 'S')
        throw ParseError("malformed token at offset " + std::to_string(pos));
      ++pos;
      int g = read_number(text, pos, "generator index");
      int k = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        k = read_number(text, pos, "exponent");
      }
      if (g == 0) throw ParseError("generator index 0");
      if (k == 0) throw ParseError("exponent 0");
      letters.insert(letters.end(), static_cast<std::size_t>(k), g);
    }
  }
  if (letters.empty()) throw ParseError("empty braid word");

  int inferred = *std::max_element(letters.begin(), letters.end()) + 1;
  int strands = declared.value_or(inferred);
  if (declared && *declared < inferred)
    throw ParseError("generator index " + std::to_string(inferred - 1) + " >= declared strand count " +
                     std::to_string(*declared));
  return BraidWord(std::max(2, strands), std::move(letters));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("permutation images are not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().size()); }

Permutation closure_permutation(const BraidWord& w) {
  // position -> strand currently there; afterwards invert to strand -> final position.
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 1);
  for (int g : w.letters()) std::swap(at[static_cast<std::size_t>(g - 1)], at[static_cast<std::size_t>(g)]);
  std::vector<int> images(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos)
    images[static_cast<std::size_t>(at[pos] - 1)] = static_cast<int>(pos) + 1;
  return Permutation(std::move(images));
}

int component_count(const BraidWord& w) { return closure_permutation(w).cycle_count(); }

bool is_knot(const BraidWord& w) { return component_count(w) == 1; }

BraidWord rotate(const BraidWord& w, int k) {
  if (w.empty()) return w;
  int len = w.crossings();
  k = ((k % len) + len) % len;
  std::vector<int> out(w.letters().begin() + k, w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + k);
  return BraidWord(w.strands(), std::move(out));
}

BraidWord reverse(const BraidWord& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  return BraidWord(w.strands(), std::move(out));
}

BraidWord flip_indices(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (int g : w.letters()) out.push_back(w.strands() - g);
  return BraidWord(w.strands(), std::move(out));
}

BraidWord shift_indices(const BraidWord& w, int k) {
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (int g : w.letters()) out.push_back(g + k);
  return BraidWord(std::max(w.strands() + k, 2), std::move(out));
}

namespace {

bool dependent(int x, int y) { return std::abs(x - y) <= 1; }

// Tries to rewrite one factor s_i s_{i+1} s_i in the linear word `u` that can be
// made contiguous by far commutations. Returns true and rewrites `u` on success.
bool rewrite_once(std::vector<int>& u) {
  const int len = static_cast<int>(u.size());
  std::vector<char> fwd(static_cast<std::size_t>(len)), bwd(static_cast<std::size_t>(len));
  for (int a = 0; a < len; ++a) {
    const int i = u[static_cast<std::size_t>(a)];
    for (int c = a + 2; c < len; ++c) {
      if (u[static_cast<std::size_t>(c)] != i) continue;
      // fwd: letters in (a, c) forced to stay after a; bwd: forced to stay before c.
      for (int e = a + 1; e < c; ++e) {
        bool f = dependent(u[static_cast<std::size_t>(e)], i);
        for (int p = a + 1; p < e && !f; ++p)
          f = fwd[static_cast<std::size_t>(p)] && dependent(u[static_cast<std::size_t>(p)], u[static_cast<std::size_t>(e)]);
        fwd[static_cast<std::size_t>(e)] = f;
      }
      for (int e = c - 1; e > a; --e) {
        bool g = dependent(u[static_cast<std::size_t>(e)], i);
        for (int p = e + 1; p < c && !g; ++p)
          g = bwd[static_cast<std::size_t>(p)] && dependent(u[static_cast<std::size_t>(p)], u[static_cast<std::size_t>(e)]);
        bwd[static_cast<std::size_t>(e)] = g;
      }
      int middle = -1;
      bool ok = true;
      for (int e = a + 1; e < c && ok; ++e) {
        if (!(fwd[static_cast<std::size_t>(e)] && bwd[static_cast<std::size_t>(e)])) continue;
        if (middle == -1 && u[static_cast<std::size_t>(e)] == i + 1)
          middle = e;
        else
          ok = false;
      }
      if (!ok || middle == -1) continue;
      std::vector<int> out(u.begin(), u.begin() + a);
      for (int e = a + 1; e < c; ++e)
        if (!fwd[static_cast<std::size_t>(e)]) out.push_back(u[static_cast<std::size_t>(e)]);
      out.push_back(i + 1);
      out.push_back(i);
      out.push_back(i + 1);
      for (int e = a + 1; e < c; ++e)
        if (fwd[static_cast<std::size_t>(e)] && e != middle) out.push_back(u[static_cast<std::size_t>(e)]);
      out.insert(out.end(), u.begin() + c + 1, u.end());
      u = std::move(out);
      return true;
    }
  }
  return false;
}

}  // namespace

BraidWord push_right_normal_form(const BraidWord& w) {
  BraidWord cur = w;
  const int len = w.crossings();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < len && !changed; ++r) {
      std::vector<int> u = rotate(cur, r).letters();
      if (rewrite_once(u)) {
        cur = rotate(BraidWord(cur.strands(), std::move(u)), len - r);
        changed = true;
      }
    }
  }
  return cur;
}

BraidWord apply_transform(const BraidWord& host, const WordTransform& t) {
  BraidWord h = host;
  if (t.reversed) h = reverse(h);
  if (t.flipped) h = flip_indices(h);
  return rotate(h, t.offset);
}

namespace {

bool greedy_match(const std::vector<int>& host, const std::vector<int>& pattern, int shift,
                  std::vector<int>& positions) {
  positions.clear();
  std::size_t j = 0;
  for (std::size_t p = 0; p < host.size() && j < pattern.size(); ++p) {
    if (host[p] == pattern[j] + shift) {
      positions.push_back(static_cast<int>(p));
      ++j;
    }
  }
  return j == pattern.size();
}

}  // namespace

std::optional<SubwordWitness> contains_subword(const BraidWord& host, const BraidWord& pattern,
                                               const SubwordOptions& opts) {
  if (pattern.empty()) throw PreconditionError("contains_subword: empty pattern");
  if (pattern.crossings() > host.crossings()) return std::nullopt;
  const int pmin = *std::min_element(pattern.letters().begin(), pattern.letters().end());
  const int pmax = pattern.max_generator();
  int shift_lo = 0, shift_hi = 0;
  if (opts.index_shift) {
    shift_lo = 1 - pmin;
    shift_hi = host.strands() - 1 - pmax;
  }
  const int offsets = opts.cyclic ? host.crossings() : 1;
  std::vector<int> positions;
  for (int rev = 0; rev <= (opts.reversal ? 1 : 0); ++rev) {
    for (int flip = 0; flip <= (opts.flip ? 1 : 0); ++flip) {
      for (int off = 0; off < offsets; ++off) {
        WordTransform t{off, rev == 1, flip == 1, 0};
        const BraidWord h = apply_transform(host, t);
        for (int k = shift_lo; k <= shift_hi; ++k) {
          if (pmin + k < 1 || pmax + k > host.strands() - 1) continue;
          if (greedy_match(h.letters(), pattern.letters(), k, positions)) {
            t.shift = k;
            return SubwordWitness{positions, t};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_subword_witness(const BraidWord& host, const BraidWord& pattern, const SubwordWitness& witness) {
  if (witness.positions.size() != pattern.letters().size()) return false;
  const BraidWord h = apply_transform(host, witness.transform);
  int prev = -1;
  for (std::size_t j = 0; j < witness.positions.size(); ++j) {
    int p = witness.positions[j];
    if (p <= prev || p >= h.crossings()) return false;
    if (h.letter(p) != pattern.letters()[j] + witness.transform.shift) return false;
    prev = p;
  }
  return true;
}

}  // namespace pbk
