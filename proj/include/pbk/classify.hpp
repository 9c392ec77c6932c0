#pragma once

// Topological 4-genus of positive braid knots.

#include <optional>
#include <string>

#include "pbk/braid.hpp"
#include "pbk/minors.hpp"
#include "pbk/seifert.hpp"

namespace pbk {

enum class Method { max_signature, sigma_gap_one, bounds_only };
std::string to_string(Method m);

struct ClassificationResult {
  int g = 0;
  int abs_sigma = 0;
  G4Bounds g4;
  Method method = Method::bounds_only;
  std::optional<DefectCertificate> certificate;
  std::optional<std::string> torus;
};

/// Knots only. Composite words are classified through their summands.
ClassificationResult classify_knot(const BraidWord& w);

/// Matches (g, |sigma|, Alexander) against T(2, 2g+1), T(3,4) and T(3,5),
/// whose fingerprints are computed from braids.
std::optional<std::string> is_max_torus(const BraidWord& w);

}  // namespace pbk
