#pragma once

// Exhaustive enumeration of positive braid words up to closure symmetries,
// and the regression suite against the published results.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pbk/braid.hpp"
#include "pbk/classify.hpp"
#include "pbk/seifert.hpp"

namespace pbk {

/// Lexicographic minimum over rotations and the index flip.
BraidWord canonical_word(const BraidWord& w);

/// Canonical words on exactly n strands for 2 <= n <= max_strands, each
/// generator occurring at least twice, c <= max_crossings. Sorted.
std::vector<BraidWord> enumerate_canonical_words(int max_strands, int max_crossings);

struct Fingerprint {
  int components = 0;
  int genus = 0;
  int abs_sigma = 0;
  LaurentPoly alexander;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  /// Total order used to group and print classes.
  std::string key() const;
};

Fingerprint fingerprint(const InvariantRecord& inv);

struct CensusRecord {
  BraidWord word;
  InvariantRecord invariants;
  std::optional<ClassificationResult> classification;  // knots only
  Fingerprint fingerprint;
};

struct CensusOptions {
  int max_strands = 3;
  int max_crossings = 8;
  bool knots_only = false;
  bool prime_only = false;
  int threads = 0;  // 0: hardware concurrency
};

/// Records in canonical-word order; identical for every thread count.
std::vector<CensusRecord> enumerate_census(const CensusOptions& opts);

struct FingerprintClass {
  Fingerprint fingerprint;
  BraidWord representative;  // smallest word in the class
  std::size_t count = 0;
};

std::vector<FingerprintClass> fingerprint_classes(const std::vector<CensusRecord>& records);

/// Per strand count of the canonical word: how many knots, how many with
/// certified defect, and the smallest guaranteed defect g - g4_hi.
struct IndexStats {
  int strands = 0;
  std::size_t knots = 0;
  std::size_t with_defect = 0;
  int min_defect = 0;
};

std::vector<IndexStats> defect_by_index(const std::vector<CensusRecord>& records);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The maximal-signature classes of a knot census are exactly the torus
/// knots T(2, odd) and T(3,4), T(3,5) within its bounds, and max_signature
/// coincides with is_max_torus record by record.
CheckResult corollary_check(const std::vector<CensusRecord>& knots, int max_strands, int max_crossings);

/// Every knot with |sigma| < 2g carries a certificate that re-verifies.
CheckResult certificate_check(const std::vector<CensusRecord>& knots);

struct TableRow {
  std::string name;
  std::string braid;
  int g, abs_sigma, g4;
};

const std::vector<TableRow>& small_knot_table();

struct PaperReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyOptions {
  bool census = true;
  int census_strands = 5;
  int census_crossings = 12;
  int threads = 0;
};

PaperReport verify_paper(const VerifyOptions& opts = {});

}  // namespace pbk
