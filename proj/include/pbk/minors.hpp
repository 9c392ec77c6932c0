#pragma once

// Forbidden surface minors: the pattern library, graph-minor search in linking
// patterns, subword certificates, and Alexander-trivial subspaces.

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pbk/algebra.hpp"
#include "pbk/braid.hpp"
#include "pbk/graph.hpp"
#include "pbk/pattern.hpp"

namespace pbk {

enum class MinorName { T, E, X, Y, Ttilde, Etilde, Xtilde, Ytilde };

std::string to_string(MinorName name);
bool is_tilde(MinorName name);

struct MinorPattern {
  MinorName name;
  BraidWord defining_braid;  // for un-tilde patterns: the braid of the tilde version
  LinkingPattern pattern;    // bricks of the defining braid (minus the lowest for un-tilde)
  Graph graph;
};

/// Index of the lowest brick: the one with the smallest top position
/// (letters are drawn bottom-up), ties broken by the smaller column.
int lowest_brick(const std::vector<Brick>& bricks);

/// The eight patterns, graphs derived from their defining braids.
const std::vector<MinorPattern>& pattern_library();
const MinorPattern& library_pattern(MinorName name);

/// branch_sets[p] = host vertices contracted onto pattern vertex p.
struct MinorEmbedding {
  std::vector<std::vector<int>> branch_sets;
};

/// Exact branch-and-bound minor test. Pattern <= 12 vertices (connected), host <= 64.
std::optional<MinorEmbedding> is_graph_minor(const Graph& host, const Graph& pattern);

/// Minor using only vertex deletion and edge contraction: branch sets of
/// non-adjacent pattern vertices must not touch. Defect certificates use this,
/// since deleting an edge of a linking pattern has no surface counterpart.
std::optional<MinorEmbedding> is_induced_minor(const Graph& host, const Graph& pattern);

bool verify_minor_embedding(const Graph& host, const Graph& pattern, const MinorEmbedding& emb,
                            bool induced = false);

/// A graph minor alone does not give a surface minor: contracting linking
/// edges is not a surface operation in general. The example's rank-two
/// subspace for a tilde pattern is carried into the host by summing each
/// branch set with one sign per host vertex; the minor counts only when some
/// choice of signs leaves the subspace Alexander-trivial for `form`.
std::optional<IntMatrix> carry_example(const IntMatrix& form, MinorName name, const MinorEmbedding& emb);

struct CarriedMinor {
  MinorEmbedding embedding;
  IntMatrix basis;
};

/// Searches minors of a tilde pattern until one carries the example.
std::optional<CarriedMinor> find_carried_minor(const Graph& host, const IntMatrix& form, MinorName name,
                                               bool induced);

struct SubwordCertificate {
  BraidWord host_word;  // the word containing the pattern word
  BraidWord pattern_word;
  SubwordWitness witness;
};

struct MinorCertificate {
  BraidWord host_word;  // the word whose linking pattern carries the minor
  MinorEmbedding embedding;
  IntMatrix basis;  // the example subspace carried into the host's brick basis
};

struct SubspaceCertificate {
  IntMatrix basis;  // r x k
};

struct DefectCertificate {
  enum class Kind { subword, graph_minor, alexander_subspace };
  Kind kind = Kind::subword;
  MinorName pattern = MinorName::Xtilde;
  std::variant<SubwordCertificate, MinorCertificate, SubspaceCertificate> witness;

  std::string kind_name() const;
  std::string summary() const;
};

struct CertificateWord {
  BraidWord word;
  MinorName name;
};

/// Subwords whose fibre surfaces contain a tilde minor, in search order.
const std::vector<CertificateWord>& certificate_words();

/// Words with the same closure as `w`, in search order: `w` itself, the
/// rotations of its push-right normal form, then the same for every word
/// reached by repeated index reduction or by a braid relation followed by a
/// Markov destabilization.
std::vector<BraidWord> certificate_hosts(const BraidWord& w);

/// Least rotations of the positive words reachable from `w` by commuting
/// distant letters, braid relations, rotation and destabilization, breadth
/// first, at most `limit` of them.
std::vector<BraidWord> equivalent_hosts(const BraidWord& w, std::size_t limit);

/// Subword certificates first, then carried minors of the tilde patterns,
/// each tried over certificate_hosts(w) and then over equivalent_hosts(w).
std::optional<DefectCertificate> defect_certificate(const BraidWord& w);

/// Re-checks the witness against `w`.
bool verify_certificate(const BraidWord& w, const DefectCertificate& cert);

/// B^T A B
IntMatrix restrict_form(const IntMatrix& a, const IntMatrix& b);
bool is_alexander_trivial(const IntMatrix& a, const IntMatrix& b);

/// Rank-2 Alexander-trivial subspace with primitive spanning vectors of entries
/// in [-bound, bound]; deterministic order.
std::optional<IntMatrix> search_alexander_trivial(const IntMatrix& a, int rank = 2, int bound = 2);

/// Vertices by descending midpoint height of their bricks, ties left to right.
/// order[k] is the vertex numbered k+1.
std::vector<int> reading_order(const LinkingPattern& lp);

struct ExampleCase {
  MinorName name;
  std::vector<long> vector;
  int unit_index;  // 1-based e_k
  int expected_genus;
  int expected_g4;
};

const std::vector<ExampleCase>& example_cases();

/// The example's basis matrix (two columns) for one case.
IntMatrix example_subspace(const ExampleCase& c);

struct ExampleResult {
  MinorName name;
  bool alexander_trivial = false;
  int genus = 0;
  int abs_signature = 0;
  int g4 = 0;
  bool genus_ok = false;
  bool g4_ok = false;
};

struct ExampleReport {
  std::vector<ExampleResult> cases;
  bool passed() const;
};

/// Orderings under which the case's subspace is Alexander-trivial and that
/// have the fewest inversions relative to reading_order. Exhaustive.
std::vector<std::vector<int>> closest_verifying_numberings(const ExampleCase& c);

/// The frozen numbering for one case (order[k] = vertex numbered k+1).
std::vector<int> example_numbering(const ExampleCase& c);

using Numbering = std::function<std::vector<int>(const ExampleCase&)>;

ExampleReport verify_example(const Numbering& numbering = example_numbering);

}  // namespace pbk
