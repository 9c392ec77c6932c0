#include "pbk/classify.hpp"

#include <algorithm>

#include "pbk/error.hpp"
#include "pbk/pattern.hpp"

namespace pbk {

std::string to_string(Method m) {
  switch (m) {
    case Method::max_signature: return "max_signature";
    case Method::sigma_gap_one: return "sigma_gap_one";
    case Method::bounds_only: return "bounds_only";
  }
  return "?";
}

namespace {

void require_knot(const BraidWord& w) {
  auto occ = w.occurrences();
  for (int g = 1; g < w.strands(); ++g)
    if (occ[static_cast<std::size_t>(g)] == 0)
      throw ReducibleWordError("reducible word: generator s" + std::to_string(g) + " does not occur", g);
  if (!is_knot(w)) throw PreconditionError("classification needs a knot, got a link");
}

ClassificationResult classify_prime(const BraidWord& w) {
  const CoreInvariants ci = core_invariants(w);
  ClassificationResult res;
  res.g = ci.genus;
  res.abs_sigma = std::abs(ci.signature);
  const int g = res.g, s = res.abs_sigma;
  if (s == 2 * g) {
    res.g4 = {g, g};
    res.method = Method::max_signature;
    res.torus = is_max_torus(w);
    return res;
  }
  if (s == 2 * g - 2) {
    res.g4 = {g - 1, g - 1};
    res.method = Method::sigma_gap_one;
  } else {
    res.g4 = {(s + 1) / 2, g - 1};
    res.method = Method::bounds_only;
  }
  res.certificate = defect_certificate(w);
  return res;
}

struct Fingerprint {
  int genus;
  int abs_sigma;
  LaurentPoly alexander;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint_of(const BraidWord& w) {
  CoreInvariants ci = core_invariants(w);
  return {ci.genus, std::abs(ci.signature), ci.alexander};
}

}  // namespace

ClassificationResult classify_knot(const BraidWord& w) {
  require_knot(w);
  if (is_prime(w)) return classify_prime(w);

  ClassificationResult total;
  bool all_max = true;
  total.g4 = {0, 0};
  for (const BraidWord& part : split_connected_sum(w)) {
    ClassificationResult r = classify_knot(part);
    total.g += r.g;
    total.abs_sigma += r.abs_sigma;
    total.g4.lo += r.g4.lo;
    total.g4.hi += r.g4.hi;
    all_max = all_max && r.method == Method::max_signature;
    if (!total.certificate && r.certificate) total.certificate = r.certificate;
  }
  total.g4.lo = std::max(total.g4.lo, (total.abs_sigma + 1) / 2);
  if (all_max)
    total.method = Method::max_signature;
  else if (total.abs_sigma == 2 * total.g - 2)
    total.method = Method::sigma_gap_one;
  else
    total.method = Method::bounds_only;
  return total;
}

std::optional<std::string> is_max_torus(const BraidWord& w) {
  if (!is_knot(w) || !is_prime(w)) return std::nullopt;
  const Fingerprint f = fingerprint_of(w);
  std::vector<std::pair<std::string, BraidWord>> candidates;
  candidates.emplace_back("T(2," + std::to_string(2 * f.genus + 1) + ")",
                          BraidWord(2, std::vector<int>(static_cast<std::size_t>(2 * f.genus + 1), 1)));
  candidates.emplace_back("T(3,4)", parse_braid("s1 s2 s1 s2 s1 s2 s1 s2"));
  candidates.emplace_back("T(3,5)", parse_braid("s1 s2 s1 s2 s1 s2 s1 s2 s1 s2"));
  for (const auto& [name, braid] : candidates)
    if (fingerprint_of(braid) == f) return name;
  return std::nullopt;
}

}  // namespace pbk
