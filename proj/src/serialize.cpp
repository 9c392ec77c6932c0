#include "pbk/serialize.hpp"

#include <ostream>

namespace pbk {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer_json(c));
  return Json{{"min_degree", p.min_degree()}, {"coeffs", coeffs}};
}

Json to_json(const G4Bounds& b) {
  if (b.exact()) return Json{{"exact", b.lo}};
  return Json{{"lo", b.lo}, {"hi", b.hi}};
}

Json to_json(const InvariantRecord& rec) {
  Json j;
  j["word"] = rec.word.empty() ? Json(nullptr) : Json(rec.word.to_string());
  j["strands"] = rec.strands;
  j["crossings"] = rec.crossings;
  j["first_betti"] = rec.first_betti;
  j["components"] = rec.components;
  j["prime"] = rec.prime;
  j["genus"] = rec.genus;
  j["signature"] = rec.signature;
  j["abs_signature"] = rec.abs_signature;
  j["alexander"] = to_json(rec.alexander);
  j["alexander_text"] = rec.alexander.to_string();
  j["g4_top"] = rec.g4_top ? to_json(*rec.g4_top) : Json(nullptr);
  j["g4_smooth"] = rec.g4_smooth;
  j["certificate"] = rec.certificate ? Json(*rec.certificate) : Json(nullptr);
  return j;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const MinorEmbedding& e) { return Json(e.branch_sets); }

Json to_json(const DefectCertificate& cert) {
  Json witness;
  if (const auto* s = std::get_if<SubwordCertificate>(&cert.witness)) {
    const WordTransform& t = s->witness.transform;
    witness = Json{{"host_word", s->host_word.to_string()},
                   {"pattern_word", s->pattern_word.to_string()},
                   {"positions", s->witness.positions},
                   {"transform",
                    {{"offset", t.offset}, {"reversed", t.reversed}, {"flipped", t.flipped}, {"shift", t.shift}}}};
  } else if (const auto* m = std::get_if<MinorCertificate>(&cert.witness)) {
    witness = Json{{"host_word", m->host_word.to_string()}, {"branch_sets", to_json(m->embedding)},
                   {"basis", to_json(m->basis)}};
  } else if (const auto* b = std::get_if<SubspaceCertificate>(&cert.witness)) {
    witness = Json{{"basis", to_json(b->basis)}};
  }
  return Json{{"kind", cert.kind_name()}, {"pattern", to_string(cert.pattern)}, {"witness", witness}};
}

Json to_json(const ClassificationResult& r) {
  return Json{{"g", r.g},
              {"abs_sigma", r.abs_sigma},
              {"g4", to_json(r.g4)},
              {"method", to_string(r.method)},
              {"certificate", r.certificate ? to_json(*r.certificate) : Json(nullptr)},
              {"torus", r.torus ? Json(*r.torus) : Json(nullptr)}};
}

Json to_json(const TreeClassification& t) {
  Json j = to_json(t.invariants);
  j["g4_top"] = to_json(t.g4);
  j["high_degree_vertices"] = t.high_degree_vertices;
  j["certificate"] = t.certificate ? Json{{"kind", "graph_minor"},
                                          {"pattern", to_string(*t.certificate)},
                                          {"witness", {{"branch_sets", to_json(*t.embedding)}, {"basis", to_json(*t.basis)}}}}
                                   : Json(nullptr);
  return j;
}

Json to_json(const CensusRecord& r) {
  Json j = to_json(r.invariants);
  j["classification"] = r.classification ? to_json(*r.classification) : Json(nullptr);
  return j;
}

Json to_json(const FingerprintClass& c) {
  return Json{{"components", c.fingerprint.components},
              {"genus", c.fingerprint.genus},
              {"abs_signature", c.fingerprint.abs_sigma},
              {"alexander", to_json(c.fingerprint.alexander)},
              {"representative", c.representative.to_string()},
              {"count", c.count}};
}

Json to_json(const IndexStats& s) {
  return Json{{"strands", s.strands}, {"knots", s.knots}, {"with_defect", s.with_defect}, {"min_defect", s.min_defect}};
}

Json to_json(const CheckResult& c) { return Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

Json to_json(const PaperReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"passed", r.passed()}, {"checks", checks}};
}

void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records) {
  out << "word,n,c,b,prime,g,abs_sigma,alexander,g4_lo,g4_hi,g4_exact,certificate\n";
  for (const auto& r : records) {
    const InvariantRecord& inv = r.invariants;
    out << csv_field(r.word.to_string()) << ',' << inv.strands << ',' << inv.crossings << ',' << inv.components << ','
        << (inv.prime ? "true" : "false") << ',' << inv.genus << ',' << inv.abs_signature << ','
        << csv_field(inv.alexander.to_string()) << ',';
    if (inv.g4_top)
      out << inv.g4_top->lo << ',' << inv.g4_top->hi << ',' << (inv.g4_top->exact() ? "true" : "false");
    else
      out << ",,";
    out << ',' << csv_field(inv.certificate.value_or("")) << '\n';
  }
}

void write_census_json(std::ostream& out, const std::vector<CensusRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  out << arr.dump(2) << '\n';
}

}  // namespace pbk
