#include "pbk/census.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "pbk/error.hpp"
#include "pbk/minors.hpp"
#include "pbk/pattern.hpp"

namespace pbk {

namespace {

std::vector<int> min_rotation(const std::vector<int>& v) {
  std::vector<int> best = v;
  std::vector<int> cur = v;
  for (std::size_t r = 1; r < v.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

// Lexicographically smallest rotations (necklaces) of length c over 1..k,
// by the Fredricksen-Kessler-Maiorana recursion.
template <typename Emit>
void necklaces(int c, int k, Emit&& emit) {
  std::vector<int> a(static_cast<std::size_t>(c) + 1, 0);
  auto gen = [&](auto&& self, int t, int p) -> void {
    if (t > c) {
      if (c % p == 0) emit(std::vector<int>(a.begin() + 1, a.end()));
      return;
    }
    a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - p)];
    self(self, t + 1, p);
    for (int j = a[static_cast<std::size_t>(t - p)] + 1; j < k; ++j) {
      a[static_cast<std::size_t>(t)] = j;
      self(self, t + 1, t);
    }
  };
  gen(gen, 1, 1);
}

unsigned worker_count(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

BraidWord canonical_word(const BraidWord& w) {
  std::vector<int> best = min_rotation(w.letters());
  std::vector<int> flipped = min_rotation(flip_indices(w).letters());
  return BraidWord(w.strands(), std::min(best, flipped));
}

std::vector<BraidWord> enumerate_canonical_words(int max_strands, int max_crossings) {
  if (max_strands > 6 || max_crossings > 14) throw BoundExceededError("census bounds exceed 6 strands or 14 crossings");
  std::vector<BraidWord> out;
  for (int n = 2; n <= max_strands; ++n) {
    const int k = n - 1;
    for (int c = 2 * k; c <= max_crossings; ++c) {
      necklaces(c, k, [&](std::vector<int> zero_based) {
        std::vector<int> count(static_cast<std::size_t>(k), 0);
        for (int& x : zero_based) ++count[static_cast<std::size_t>(x++)];
        if (std::any_of(count.begin(), count.end(), [](int m) { return m < 2; })) return;
        std::vector<int> flipped(zero_based.size());
        std::transform(zero_based.begin(), zero_based.end(), flipped.begin(), [n](int x) { return n - x; });
        if (min_rotation(flipped) < zero_based) return;
        out.emplace_back(n, std::move(zero_based));
      });
    }
  }
  return out;
}

std::string Fingerprint::key() const {
  std::ostringstream out;
  out << components << '|' << genus << '|' << abs_sigma << '|' << alexander.min_degree();
  for (const auto& c : alexander.coeffs()) out << ',' << c.get_str();
  return out.str();
}

Fingerprint fingerprint(const InvariantRecord& inv) {
  return {inv.components, inv.genus, inv.abs_signature, inv.alexander};
}

std::vector<CensusRecord> enumerate_census(const CensusOptions& opts) {
  const std::vector<BraidWord> words = enumerate_canonical_words(opts.max_strands, opts.max_crossings);
  std::vector<std::optional<CensusRecord>> slots(words.size());
  const unsigned workers = std::min<unsigned>(worker_count(opts.threads), std::max<std::size_t>(words.size(), 1));

  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < words.size(); i += workers) {
      const BraidWord& w = words[i];
      const bool knot = is_knot(w);
      if (opts.knots_only && !knot) continue;
      if (opts.prime_only && !is_prime(w)) continue;
      CensusRecord rec;
      rec.word = w;
      rec.invariants = invariants(w);
      if (knot) {
        rec.classification = classify_knot(w);
        rec.invariants.g4_top = rec.classification->g4;
        if (rec.classification->certificate) rec.invariants.certificate = rec.classification->certificate->summary();
      }
      rec.fingerprint = fingerprint(rec.invariants);
      slots[i] = std::move(rec);
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }

  std::vector<CensusRecord> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

std::vector<FingerprintClass> fingerprint_classes(const std::vector<CensusRecord>& records) {
  std::map<std::string, FingerprintClass> classes;
  for (const auto& r : records) {
    auto [it, fresh] = classes.try_emplace(r.fingerprint.key());
    FingerprintClass& cls = it->second;
    if (fresh || r.word < cls.representative) cls.representative = r.word;
    cls.fingerprint = r.fingerprint;
    ++cls.count;
  }
  std::vector<FingerprintClass> out;
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

std::vector<IndexStats> defect_by_index(const std::vector<CensusRecord>& records) {
  std::map<int, IndexStats> by;
  for (const auto& r : records) {
    if (!r.classification) continue;
    IndexStats& s = by[r.word.strands()];
    const int defect = r.classification->g - r.classification->g4.hi;
    if (s.knots == 0 || defect < s.min_defect) s.min_defect = defect;
    s.strands = r.word.strands();
    ++s.knots;
    if (defect > 0) ++s.with_defect;
  }
  std::vector<IndexStats> out;
  for (auto& [n, s] : by) out.push_back(s);
  return out;
}

CheckResult corollary_check(const std::vector<CensusRecord>& knots, int max_strands, int max_crossings) {
  CheckResult res{"maximal 4-genus classes are torus knots", true, ""};
  std::ostringstream detail;

  std::vector<std::pair<std::string, BraidWord>> expected;
  for (int n = 3; n <= max_crossings; n += 2)
    expected.emplace_back("T(2," + std::to_string(n) + ")", BraidWord(2, std::vector<int>(static_cast<std::size_t>(n), 1)));
  if (max_strands >= 3 && max_crossings >= 8) expected.emplace_back("T(3,4)", parse_braid("s1 s2 s1 s2 s1 s2 s1 s2"));
  if (max_strands >= 3 && max_crossings >= 10)
    expected.emplace_back("T(3,5)", parse_braid("s1 s2 s1 s2 s1 s2 s1 s2 s1 s2"));
  std::map<std::string, std::string> want;
  for (const auto& [name, w] : expected) want[fingerprint(invariants(w)).key()] = name;

  std::map<std::string, std::string> got;
  for (const auto& r : knots) {
    if (!r.classification) continue;
    const bool maximal = r.classification->method == Method::max_signature;
    if (maximal) got.emplace(r.fingerprint.key(), r.word.to_string());
    if (maximal != r.classification->torus.has_value()) {
      res.passed = false;
      detail << "recognizer disagrees on " << r.word.to_string() << "; ";
    }
  }
  for (const auto& [key, word] : got)
    if (!want.count(key)) {
      res.passed = false;
      detail << "unexpected maximal class " << word << "; ";
    }
  for (const auto& [key, name] : want)
    if (!got.count(key)) {
      res.passed = false;
      detail << "missing " << name << "; ";
    }
  if (res.passed) detail << got.size() << " maximal classes, all torus knots";
  res.detail = detail.str();
  return res;
}

CheckResult certificate_check(const std::vector<CensusRecord>& knots) {
  CheckResult res{"every defect knot has a certificate", true, ""};
  std::size_t defect = 0, subword = 0, minor = 0, failures = 0;
  std::ostringstream bad;
  for (const auto& r : knots) {
    if (!r.classification || r.classification->method == Method::max_signature) continue;
    ++defect;
    const auto& cert = r.classification->certificate;
    if (!cert || !verify_certificate(r.word, *cert)) {
      if (failures++ < 20) bad << r.word.to_string() << (cert ? " (certificate fails)" : " (none)") << "; ";
      continue;
    }
    (cert->kind == DefectCertificate::Kind::subword ? subword : minor)++;
  }
  res.passed = failures == 0;
  std::ostringstream detail;
  detail << defect << " defect knots, " << subword << " by subword, " << minor << " by graph minor";
  if (failures) detail << ", " << failures << " without certificate: " << bad.str();
  res.detail = detail.str();
  return res;
}

const std::vector<TableRow>& small_knot_table() {
  static const std::vector<TableRow> rows = {
      {"10_139", "s1^4 s2 s1^3 s2^2", 4, 6, 3},
      {"10_152", "s1^3 s2^2 s1^2 s2^3", 4, 6, 3},
      {"11n77", "s1^2 s2^2 s1 s3 s2^3 s3^2", 4, 6, 3},
      {"12n242", "s1 s2^2 s1^2 s2^7", 5, 8, 4},
      {"12n472", "s1 s2^4 s1^2 s2^5", 5, 8, 4},
      {"12n574", "s1 s2^6 s1^2 s2^3", 5, 8, 4},
      {"12n679", "s1^3 s2^2 s1^2 s2^5", 5, 8, 4},
      {"12n688", "s1^3 s2^4 s1^2 s2^3", 5, 8, 4},
      {"12n725", "s1 s2^2 s1^4 s2^5", 5, 8, 4},
      {"12n888", "s1^3 s2^3 s1^3 s2^3", 5, 8, 4},
  };
  return rows;
}

bool PaperReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

PaperReport verify_paper(const VerifyOptions& opts) {
  PaperReport report;

  for (const auto& row : small_knot_table()) {
    ClassificationResult r = classify_knot(parse_braid(row.braid));
    std::ostringstream d;
    d << "g=" << r.g << " |sigma|=" << r.abs_sigma << " g4=";
    if (r.g4.exact())
      d << r.g4.lo;
    else
      d << "[" << r.g4.lo << "," << r.g4.hi << "]";
    bool ok = r.g == row.g && r.abs_sigma == row.abs_sigma && r.g4.exact() && r.g4.lo == row.g4;
    report.checks.push_back({"table " + row.name, ok, d.str()});
  }

  {
    ExampleReport ex = verify_example();
    std::ostringstream d;
    for (const auto& c : ex.cases) d << to_string(c.name) << ": g=" << c.genus << " g4=" << c.g4 << "; ";
    report.checks.push_back({"example subspaces", ex.passed(), d.str()});
  }

  {
    ClassificationResult r = classify_knot(parse_braid("s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4"));
    std::ostringstream d;
    d << "g=" << r.g << " |sigma|=" << r.abs_sigma << " g4<=" << r.g4.hi;
    report.checks.push_back({"T(5,6) has defect", r.g == 10 && r.g4.hi <= 9 && r.abs_sigma < 20, d.str()});
  }

  if (opts.census) {
    CensusOptions co;
    co.max_strands = opts.census_strands;
    co.max_crossings = opts.census_crossings;
    co.knots_only = true;
    co.prime_only = true;
    co.threads = opts.threads;
    auto knots = enumerate_census(co);
    report.checks.push_back(corollary_check(knots, co.max_strands, co.max_crossings));
  }
  return report;
}

}  // namespace pbk
