#pragma once

// JSON and CSV forms of the engine's results.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbk/census.hpp"
#include "pbk/classify.hpp"
#include "pbk/lemma5.hpp"
#include "pbk/minors.hpp"
#include "pbk/seifert.hpp"
#include "pbk/trees.hpp"

namespace pbk {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
Json to_json(const G4Bounds& b);
Json to_json(const InvariantRecord& rec);
Json to_json(const IntMatrix& m);
Json to_json(const MinorEmbedding& e);
Json to_json(const DefectCertificate& cert);
Json to_json(const ClassificationResult& r);
Json to_json(const TreeClassification& t);
Json to_json(const CensusRecord& r);
Json to_json(const FingerprintClass& c);
Json to_json(const IndexStats& s);
Json to_json(const CheckResult& c);
Json to_json(const PaperReport& r);

/// Census CSV: word, n, c, b, prime, g, abs_sigma, alexander, g4_lo, g4_hi,
/// g4_exact, certificate.
void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records);
void write_census_json(std::ostream& out, const std::vector<CensusRecord>& records);

}  // namespace pbk
