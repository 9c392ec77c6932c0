// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "pbk/census.hpp"
#include "pbk/classify.hpp"
#include "pbk/lemma5.hpp"
#include "pbk/minors.hpp"
#include "support.hpp"

using namespace pbk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;
// ctest hides the output of passing tests, so the lines are also kept on disk.
std::FILE* report_file = nullptr;

void report(int id, const std::string& title, bool ok, const std::string& detail, double secs) {
  if (!ok) ++failures;
  for (std::FILE* out : {stdout, report_file}) {
    if (!out) continue;
    std::fprintf(out, "[%s] %d %s (%.2fs) %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs, detail.c_str());
    std::fflush(out);
  }
}

void table_rows() {
  auto t0 = Clock::now();
  std::ostringstream bad;
  int ok = 0;
  for (const auto& row : small_knot_table()) {
    auto r = classify_knot(parse_braid(row.braid));
    bool good = r.g == row.g && r.abs_sigma == row.abs_sigma && r.g4.exact() && r.g4.lo == row.g4 && row.g4 == row.g - 1;
    if (good)
      ++ok;
    else
      bad << " " << row.name << "=(" << r.g << "," << r.abs_sigma << "," << r.g4.lo << ".." << r.g4.hi << ")";
  }
  double s = seconds_since(t0);
  std::size_t n = small_knot_table().size();
  report(1, "table of small knots", ok == static_cast<int>(n) && n == 10 && s < 5.0,
         std::to_string(ok) + "/" + std::to_string(n) + " rows" + bad.str(), s);
}

void worked_example() {
  auto t0 = Clock::now();
  auto rep = verify_example();
  const int genus[] = {4, 5, 2, 4};
  const int g4[] = {3, 4, 1, 3};
  bool ok = rep.cases.size() == 4;
  std::ostringstream d;
  for (std::size_t i = 0; ok && i < 4; ++i) {
    const auto& c = rep.cases[i];
    ok = c.alexander_trivial && c.genus == genus[i] && c.g4 == g4[i];
    d << " " << to_string(c.name) << ":g=" << c.genus << ",g4=" << c.g4 << (c.alexander_trivial ? "" : ",not-trivial");
  }
  double s = seconds_since(t0);
  report(2, "worked example", ok && s < 1.0, d.str(), s);
}

void max_signature_classes(const std::vector<CensusRecord>& knots, double census_secs) {
  auto t0 = Clock::now();
  auto r = corollary_check(knots, 5, 12);
  report(3, "maximal-signature classes at 5 strands, 12 crossings", r.passed,
         std::to_string(knots.size()) + " knots; " + r.detail, census_secs + seconds_since(t0));
}

// Criteria 4 and 5 over every canonical word, computed straight from the
// Seifert matrix so the check does not route through the classifier.
void census_oracles() {
  auto t0 = Clock::now();
  auto words = enumerate_canonical_words(5, 12);
  std::size_t alex_bad = 0, bound_bad = 0, ident_bad = 0;
  std::string first_alex, first_bound, first_ident;
  for (const auto& w : words) {
    IntMatrix a = seifert_matrix(w).matrix;
    int r = static_cast<int>(a.rows());
    LaurentPoly delta = poly_det(alexander_matrix(a));
    if (!equal_up_to_unit(delta, alexander_burau(w))) {
      if (!alex_bad++) first_alex = w.to_string();
    }
    int b = boundary_components_homological(a);
    int cycles = closure_permutation(w).cycle_count();
    if (b != cycles) {
      if (!bound_bad++) first_bound = w.to_string();
    }
    int sigma = std::abs(symmetric_signature(a + a.transposed()));
    bool ident = (r - b + 1) % 2 == 0 && r == w.crossings() - w.strands() + 1 && sigma <= r;
    if (ident && cycles == 1) ident = delta.span() == r - b + 1;
    // Independent signature of the symmetrized form.
    if (ident && w.crossings() <= 10) ident = std::abs(oracle::float_signature(a + a.transposed())) == sigma;
    if (!ident) {
      if (!ident_bad++) first_ident = w.to_string();
    }
  }
  double s = seconds_since(t0);
  std::string n = std::to_string(words.size()) + " words";
  report(4, "Burau oracle and boundary count", alex_bad == 0 && bound_bad == 0,
         n + "; alexander mismatches " + std::to_string(alex_bad) + first_alex + ", boundary mismatches " +
             std::to_string(bound_bad) + first_bound,
         s);
  report(5, "structural identities", ident_bad == 0,
         n + "; violations " + std::to_string(ident_bad) + (ident_bad ? " first " + first_ident : ""), 0.0);
}

void certificates(const std::vector<CensusRecord>& knots) {
  auto t0 = Clock::now();
  auto r = certificate_check(knots);
  report(6, "defect certificates", r.passed, r.detail, seconds_since(t0));
}

void torus_5_6() {
  auto t0 = Clock::now();
  std::vector<int> letters;
  for (int k = 0; k < 6; ++k)
    for (int g = 1; g <= 4; ++g) letters.push_back(g);
  auto r = classify_knot(BraidWord(5, letters));
  bool ok = r.g == 10 && r.g4.hi <= 9 && r.abs_sigma < 20;
  report(7, "T(5,6)", ok && seconds_since(t0) < 1.0,
         "g=" + std::to_string(r.g) + " |sigma|=" + std::to_string(r.abs_sigma) + " g4<=" + std::to_string(r.g4.hi),
         seconds_since(t0));
}

void invariance() {
  auto t0 = Clock::now();
  std::mt19937 rng(20240611);
  int bad = 0, reductions = 0;
  std::string first;
  for (int i = 0; i < 1000; ++i) {
    int n = 3 + static_cast<int>(rng() % 3);
    BraidWord w = oracle::random_word(rng, n, 2 * (n - 1), 14);
    CoreInvariants base = core_invariants(w);
    LaurentPoly burau = alexander_burau(w);
    std::vector<BraidWord> variants{reverse(w), flip_indices(w), push_right_normal_form(w)};
    for (int k = 1; k < w.crossings(); ++k) variants.push_back(rotate(w, k));
    bool ok = true;
    for (const auto& v : variants) ok = ok && core_invariants(v) == base;
    if (auto red = reduce_index_lemma5(w)) {
      ++reductions;
      ok = ok && red->strands() == w.strands() - 1 && core_invariants(*red) == base &&
           equal_up_to_unit(alexander_burau(*red), burau);
    }
    if (!ok && !bad++) first = " first " + w.to_string();
  }
  report(8, "invariance under word moves", bad == 0,
         "1000 words, " + std::to_string(reductions) + " index reductions, failures " + std::to_string(bad) + first,
         seconds_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
  report_file = std::fopen(argc > 1 ? argv[1] : "acceptance_report.txt", "w");
  table_rows();
  worked_example();

  auto t0 = Clock::now();
  CensusOptions opts;
  opts.max_strands = 5;
  opts.max_crossings = 12;
  opts.knots_only = opts.prime_only = true;
  auto knots = enumerate_census(opts);
  double census_secs = seconds_since(t0);

  max_signature_classes(knots, census_secs);
  census_oracles();
  certificates(knots);
  torus_5_6();
  invariance();

  for (std::FILE* out : {stdout, report_file}) {
    if (!out) continue;
    std::fprintf(out, "defect by strand count:");
    for (const auto& s : defect_by_index(knots))
      std::fprintf(out, " n=%d knots=%zu defect=%zu", s.strands, s.knots, s.with_defect);
    std::fprintf(out, "\n%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  }
  if (report_file) std::fclose(report_file);
  return failures ? 1 : 0;
}
