// Command-line front end for the positive braid knot engine.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pbk/census.hpp"
#include "pbk/classify.hpp"
#include "pbk/error.hpp"
#include "pbk/lemma5.hpp"
#include "pbk/minors.hpp"
#include "pbk/serialize.hpp"
#include "pbk/trees.hpp"

namespace {

using namespace pbk;

constexpr int kVerifyFailure = 1;
constexpr int kUsage = 2;

void print_g4(std::ostream& out, const G4Bounds& b) {
  if (b.exact())
    out << b.lo;
  else
    out << "[" << b.lo << ", " << b.hi << "]";
}

void print_invariants(const InvariantRecord& r) {
  if (!r.word.empty()) std::cout << "word        " << r.word.to_string() << "\n";
  if (r.strands) std::cout << "strands     " << r.strands << "\ncrossings   " << r.crossings << "\n";
  std::cout << "betti       " << r.first_betti << "\n"
            << "components  " << r.components << "\n"
            << "prime       " << (r.prime ? "yes" : "no") << "\n"
            << "genus       " << r.genus << "\n"
            << "signature   " << r.signature << "\n"
            << "alexander   " << r.alexander.to_string() << "\n";
  if (r.g4_top) {
    std::cout << "g4          ";
    print_g4(std::cout, *r.g4_top);
    std::cout << "\n";
  }
  if (r.certificate) std::cout << "certificate " << *r.certificate << "\n";
}

void print_certificate(const DefectCertificate& c) {
  std::cout << "certificate " << c.kind_name() << " " << to_string(c.pattern);
  if (const auto* s = std::get_if<SubwordCertificate>(&c.witness)) {
    const auto& t = s->witness.transform;
    std::cout << " via subword " << s->pattern_word.to_string() << " of " << s->host_word.to_string()
              << " (rotation " << t.offset
              << (t.reversed ? ", reversed" : "") << (t.flipped ? ", flipped" : "") << ", shift " << t.shift << ")";
  } else if (const auto* m = std::get_if<MinorCertificate>(&c.witness)) {
    std::cout << " in the linking pattern of " << m->host_word.to_string();
  }
  std::cout << "\n";
}

void print_classification(const ClassificationResult& r) {
  std::cout << "g           " << r.g << "\n|sigma|     " << r.abs_sigma << "\ng4          ";
  print_g4(std::cout, r.g4);
  std::cout << "\nmethod      " << to_string(r.method) << "\n";
  if (r.torus) std::cout << "torus       " << *r.torus << "\n";
  if (r.certificate) print_certificate(*r.certificate);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and topological 4-genus of positive braid knots"};
  app.require_subcommand(1);
  bool json = false;
  std::string braid_text, tree_text, format = "csv", out_path;
  int bound = 2, strands = 3, crossings = 8, threads = 0;
  bool knots = false, prime = false, no_census = false;

  auto* inv_cmd = app.add_subcommand("invariants", "Seifert-matrix invariants of a braid closure");
  auto* cls_cmd = app.add_subcommand("classify", "topological 4-genus of a positive braid knot");
  auto* min_cmd = app.add_subcommand("minors", "linking pattern and genus-defect certificate");
  auto* red_cmd = app.add_subcommand("reduce", "merge two columns whose linking pattern is a path");
  auto* srch_cmd = app.add_subcommand("search-trivial", "search a rank-2 Alexander-trivial subspace");
  for (auto* c : {inv_cmd, cls_cmd, min_cmd, red_cmd, srch_cmd}) {
    c->add_option("braid", braid_text, "braid word, e.g. \"s1^3 s2 s1 s2\" or 1112")->required();
    c->add_flag("--json", json, "machine-readable output");
  }
  srch_cmd->add_option("--bound", bound, "coefficient bound for basis vectors")->check(CLI::Range(1, 6));

  auto* tree_cmd = app.add_subcommand("tree", "plumbing along a plane tree given by parentheses");
  tree_cmd->add_option("expr", tree_text, "e.g. \"(()(()))\"")->required();
  tree_cmd->add_flag("--json", json, "machine-readable output");

  auto* census_cmd = app.add_subcommand("census", "enumerate positive braid words");
  census_cmd->add_option("--strands", strands, "maximal strand count")->check(CLI::Range(2, 6));
  census_cmd->add_option("--crossings", crossings, "maximal crossing count")->check(CLI::Range(1, 14));
  census_cmd->add_flag("--knots", knots, "knots only");
  census_cmd->add_flag("--prime", prime, "prime words only");
  census_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  census_cmd->add_option("--out", out_path, "output file (default: stdout)");
  census_cmd->add_option("--threads", threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  census_cmd->add_flag("--json", json, "print the class summary as JSON");

  auto* paper_cmd = app.add_subcommand("verify-paper", "regression against the published values");
  paper_cmd->add_flag("--no-census", no_census, "skip the census check");
  paper_cmd->add_option("--threads", threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  paper_cmd->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*inv_cmd) {
      BraidWord w = parse_braid(braid_text);
      InvariantRecord r = invariants(w);
      if (r.components == 1) {
        ClassificationResult c = classify_knot(w);
        r.g4_top = c.g4;
        if (c.certificate) r.certificate = c.certificate->summary();
      }
      if (json) emit(to_json(r));
      else print_invariants(r);
    } else if (*cls_cmd) {
      ClassificationResult r = classify_knot(parse_braid(braid_text));
      if (json) emit(to_json(r));
      else print_classification(r);
    } else if (*min_cmd) {
      BraidWord w = parse_braid(braid_text);
      LinkingPattern lp = linking_pattern(w);
      auto cert = defect_certificate(w);
      if (cert && !verify_certificate(w, *cert)) {
        std::cerr << "certificate failed re-verification\n";
        return kVerifyFailure;
      }
      if (json) {
        Json edges = Json::array();
        for (auto [a, b] : lp.graph.edges()) edges.push_back({a, b});
        emit(Json{{"word", w.to_string()},
                  {"vertices", lp.vertex_count()},
                  {"edges", edges},
                  {"tree", lp.graph.is_tree()},
                  {"certificate", cert ? to_json(*cert) : Json(nullptr)}});
      } else {
        std::cout << graph_description(lp);
        std::cout << "tree        " << (lp.graph.is_tree() ? "yes" : "no") << "\n";
        if (cert) print_certificate(*cert);
        else std::cout << "certificate none\n";
      }
    } else if (*red_cmd) {
      BraidWord w = parse_braid(braid_text);
      Lemma5Outcome o = lemma5_attempt(w);
      if (json) {
        emit(Json{{"word", w.to_string()},
                  {"reduced", o.reduced ? Json(o.reduced->to_string()) : Json(nullptr)},
                  {"strands", o.reduced ? o.reduced->strands() : w.strands()},
                  {"merged_column", o.reduced ? Json(o.column) : Json(nullptr)},
                  {"rejected_by_postcheck", o.rejected_by_postcheck}});
      } else if (o.reduced) {
        std::cout << o.reduced->to_string() << " on " << o.reduced->strands() << " strands (merged s" << o.column << ", s"
                  << o.column + 1 << ")\n";
      } else {
        std::cout << "not reducible by Lemma 5" << (o.rejected_by_postcheck ? " (a merge changed an invariant)" : "")
                  << "\n";
      }
    } else if (*srch_cmd) {
      BraidWord w = parse_braid(braid_text);
      IntMatrix a = seifert_matrix(w).matrix;
      auto basis = search_alexander_trivial(a, 2, bound);
      if (json) {
        emit(Json{{"word", w.to_string()}, {"bound", bound}, {"basis", basis ? to_json(*basis) : Json(nullptr)}});
      } else if (basis) {
        for (std::size_t c = 0; c < 2; ++c) {
          std::cout << (c == 0 ? "u =" : "v =");
          for (std::size_t i = 0; i < basis->rows(); ++i) std::cout << " " << (*basis)(i, c).get_str();
          std::cout << "\n";
        }
      } else {
        std::cout << "no Alexander-trivial plane with entries in [-" << bound << ", " << bound << "]\n";
      }
    } else if (*tree_cmd) {
      PlaneTree t = parse_tree(tree_text);
      InvariantRecord r = tree_invariants(t);
      if (r.components != 1) {
        if (json) emit(to_json(r));
        else print_invariants(r);
        return 0;
      }
      TreeClassification c = classify_tree_knot(t);
      if (json) {
        emit(to_json(c));
      } else {
        print_invariants(c.invariants);
        std::cout << "g4          ";
        print_g4(std::cout, c.g4);
        std::cout << "\n";
        if (c.certificate) std::cout << "certificate graph_minor " << to_string(*c.certificate) << "\n";
      }
    } else if (*census_cmd) {
      CensusOptions o;
      o.max_strands = strands;
      o.max_crossings = crossings;
      o.knots_only = knots;
      o.prime_only = prime;
      o.threads = threads;
      auto records = enumerate_census(o);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
          std::cerr << "cannot open " << out_path << "\n";
          return kUsage;
        }
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      if (format == "json") write_census_json(out, records);
      else write_census_csv(out, records);
      if (!out_path.empty()) {
        auto classes = fingerprint_classes(records);
        if (json) {
          Json cls = Json::array(), stats = Json::array();
          for (const auto& c : classes) cls.push_back(to_json(c));
          for (const auto& s : defect_by_index(records)) stats.push_back(to_json(s));
          emit(Json{{"records", records.size()}, {"classes", cls}, {"defect_by_index", stats}});
        } else {
          std::cout << records.size() << " records, " << classes.size() << " fingerprint classes\n";
          for (const auto& s : defect_by_index(records))
            std::cout << "strands " << s.strands << ": " << s.knots << " knots, " << s.with_defect
                      << " with defect, min defect " << s.min_defect << "\n";
        }
      }
    } else if (*paper_cmd) {
      VerifyOptions o;
      o.census = !no_census;
      o.threads = threads;
      PaperReport r = verify_paper(o);
      if (json) {
        emit(to_json(r));
      } else {
        for (const auto& c : r.checks)
          std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
      }
      return r.passed() ? 0 : kVerifyFailure;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return 0;
}
