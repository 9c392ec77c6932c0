#include "pbk/minors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "pbk/error.hpp"
#include "pbk/lemma5.hpp"
#include "pbk/seifert.hpp"

namespace pbk {

std::string to_string(MinorName name) {
  switch (name) {
    case MinorName::T: return "T";
    case MinorName::E: return "E";
    case MinorName::X: return "X";
    case MinorName::Y: return "Y";
    case MinorName::Ttilde: return "Ttilde";
    case MinorName::Etilde: return "Etilde";
    case MinorName::Xtilde: return "Xtilde";
    case MinorName::Ytilde: return "Ytilde";
  }
  return "?";
}

bool is_tilde(MinorName name) {
  return name == MinorName::Ttilde || name == MinorName::Etilde || name == MinorName::Xtilde ||
         name == MinorName::Ytilde;
}

int lowest_brick(const std::vector<Brick>& bricks) {
  if (bricks.empty()) throw PreconditionError("lowest_brick: no bricks");
  int best = 0;
  for (int i = 1; i < static_cast<int>(bricks.size()); ++i) {
    const Brick& b = bricks[static_cast<std::size_t>(i)];
    const Brick& c = bricks[static_cast<std::size_t>(best)];
    if (b.top < c.top || (b.top == c.top && b.column < c.column)) best = i;
  }
  return best;
}

namespace {

std::vector<MinorPattern> build_library() {
  struct Def {
    MinorName tilde, plain;
    const char* braid;
  };
  const Def defs[] = {
      {MinorName::Ttilde, MinorName::T, "s1^5 s2 s1^4 s2"},
      {MinorName::Etilde, MinorName::E, "s1^7 s2 s1^3 s2"},
      {MinorName::Xtilde, MinorName::X, "s1^2 s2^2 s1 s3 s2^2 s3"},
      {MinorName::Ytilde, MinorName::Y, "s1^4 s2^2 s1^3 s2"},
  };
  std::vector<MinorPattern> tildes, plains;
  for (const auto& d : defs) {
    BraidWord w = parse_braid(d.braid);
    LinkingPattern lp = linking_pattern(w);
    if (!lp.graph.is_tree()) throw InternalError("pattern library: " + to_string(d.tilde) + " is not a tree");
    tildes.push_back({d.tilde, w, lp, lp.graph});

    std::vector<Brick> rest = lp.bricks;
    rest.erase(rest.begin() + lowest_brick(rest));
    LinkingPattern small = linking_pattern(rest);
    if (!small.graph.is_tree()) throw InternalError("pattern library: " + to_string(d.plain) + " is not a tree");
    plains.push_back({d.plain, w, small, small.graph});
  }
  std::vector<MinorPattern> lib = plains;
  lib.insert(lib.end(), tildes.begin(), tildes.end());
  return lib;
}

}  // namespace

const std::vector<MinorPattern>& pattern_library() {
  static const std::vector<MinorPattern> lib = build_library();
  return lib;
}

const MinorPattern& library_pattern(MinorName name) {
  for (const auto& p : pattern_library())
    if (p.name == name) return p;
  throw InternalError("unknown library pattern");
}

// ---------------------------------------------------------------------------
// Graph minors

namespace {

using Mask = std::uint64_t;

struct MaskVecHash {
  std::size_t operator()(const std::vector<Mask>& v) const noexcept {
    std::size_t h = v.size();
    for (Mask m : v) h ^= std::hash<Mask>{}(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

using Accept = std::function<bool(const MinorEmbedding&)>;

MinorEmbedding to_embedding(const std::vector<Mask>& branch) {
  MinorEmbedding emb;
  for (Mask b : branch) {
    std::vector<int> set;
    for (Mask m = b; m; m &= m - 1) set.push_back(std::countr_zero(m));
    emb.branch_sets.push_back(std::move(set));
  }
  return emb;
}

class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& pattern, bool induced, Accept accept)
      : pattern_(pattern), induced_(induced), accept_(std::move(accept)), k_(pattern.vertex_count()), n_(host.vertex_count()) {
    for (int v = 0; v < n_; ++v) {
      Mask m = 0;
      for (int u : host.neighbours(v)) m |= Mask{1} << u;
      adj_.push_back(m);
    }
    // BFS order from a vertex of maximum degree so the hardest vertex is placed first.
    int root = 0;
    for (int v = 1; v < k_; ++v)
      if (pattern.degree(v) > pattern.degree(root)) root = v;
    parent_.assign(static_cast<std::size_t>(k_), -1);
    std::vector<bool> seen(static_cast<std::size_t>(k_), false);
    order_.push_back(root);
    seen[static_cast<std::size_t>(root)] = true;
    for (std::size_t q = 0; q < order_.size(); ++q)
      for (int u : pattern.neighbours(order_[q]))
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          parent_[static_cast<std::size_t>(u)] = order_[q];
          order_.push_back(u);
        }
    branch_.assign(static_cast<std::size_t>(k_), 0);
  }

  std::optional<MinorEmbedding> run() {
    if (static_cast<int>(order_.size()) != k_) return std::nullopt;  // disconnected pattern unsupported
    if (!place(0)) return std::nullopt;
    return to_embedding(branch_);
  }

 private:
  Mask neighbourhood(Mask set) const {
    Mask out = 0;
    for (; set; set &= set - 1) out |= adj_[static_cast<std::size_t>(std::countr_zero(set))];
    return out;
  }

  // For induced minors, y may not touch a placed branch set of a pattern
  // vertex that is not adjacent to p.
  bool allowed(int p, Mask y) const {
    if (!induced_) return true;
    const Mask ny = adj_[static_cast<std::size_t>(std::countr_zero(y))];
    for (int q = 0; q < k_; ++q) {
      Mask bq = branch_[static_cast<std::size_t>(q)];
      if (q != p && bq && (ny & bq) && !pattern_.has_edge(p, q)) return false;
    }
    return true;
  }

  bool place(int j) {
    if (j == k_) return !accept_ || accept_(to_embedding(branch_));
    if (std::popcount(used_) + (k_ - j) > n_) return false;
    std::vector<Mask> key(branch_.begin(), branch_.end());
    key.push_back(static_cast<Mask>(j));
    if (!visited_.insert(std::move(key)).second) return false;

    const int p = order_[static_cast<std::size_t>(j)];
    Mask& mine = branch_[static_cast<std::size_t>(p)];
    if (j == 0) {
      for (int y = 0; y < n_; ++y) {
        mine = Mask{1} << y;
        used_ |= mine;
        if (place(1)) return true;
        used_ &= ~mine;
        mine = 0;
      }
      return false;
    }
    const int pp = parent_[static_cast<std::size_t>(p)];
    Mask& par = branch_[static_cast<std::size_t>(pp)];
    const Mask free = neighbourhood(par) & ~used_;
    for (Mask m = free; m; m &= m - 1) {
      Mask y = m & (~m + 1);
      if (!allowed(p, y)) continue;
      mine = y;
      used_ |= y;
      if (place(j + 1)) return true;
      used_ &= ~y;
      mine = 0;
    }
    // Grow the parent's branch set by one more vertex and retry.
    for (Mask m = free; m; m &= m - 1) {
      Mask z = m & (~m + 1);
      if (!allowed(pp, z)) continue;
      par |= z;
      used_ |= z;
      if (place(j)) return true;
      used_ &= ~z;
      par &= ~z;
    }
    return false;
  }

  const Graph& pattern_;
  bool induced_;
  Accept accept_;
  int k_, n_;
  std::vector<Mask> adj_;
  std::vector<int> order_, parent_;
  std::vector<Mask> branch_;
  Mask used_ = 0;
  std::unordered_set<std::vector<Mask>, MaskVecHash> visited_;
};

}  // namespace

namespace {

std::optional<MinorEmbedding> minor_search(const Graph& host, const Graph& pattern, bool induced,
                                           Accept accept = {}) {
  if (pattern.vertex_count() > 12) throw BoundExceededError("minor search: pattern larger than 12 vertices");
  if (host.vertex_count() > 64) throw BoundExceededError("minor search: host larger than 64 vertices");
  if (pattern.vertex_count() == 0) return MinorEmbedding{};
  if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
    return std::nullopt;
  return MinorSearch(host, pattern, induced, std::move(accept)).run();
}

long small(const Integer& x) {
  if (!x.fits_slong_p()) throw BoundExceededError("carry_example: entry exceeds machine range");
  return x.get_si();
}

const ExampleCase& example_case(MinorName name) {
  for (const auto& c : example_cases())
    if (c.name == name) return c;
  throw PreconditionError("carry_example: " + to_string(name) + " has no example subspace");
}

}  // namespace

std::optional<MinorEmbedding> is_graph_minor(const Graph& host, const Graph& pattern) {
  return minor_search(host, pattern, false);
}

std::optional<MinorEmbedding> is_induced_minor(const Graph& host, const Graph& pattern) {
  return minor_search(host, pattern, true);
}

bool verify_minor_embedding(const Graph& host, const Graph& pattern, const MinorEmbedding& emb, bool induced) {
  if (static_cast<int>(emb.branch_sets.size()) != pattern.vertex_count()) return false;
  std::vector<int> owner(static_cast<std::size_t>(host.vertex_count()), -1);
  for (std::size_t p = 0; p < emb.branch_sets.size(); ++p) {
    const auto& set = emb.branch_sets[p];
    if (set.empty()) return false;
    for (int v : set) {
      if (v < 0 || v >= host.vertex_count() || owner[static_cast<std::size_t>(v)] != -1) return false;
      owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
    Graph sub = host.induced(set);
    if (!sub.is_connected()) return false;
  }
  for (auto [a, b] : pattern.edges()) {
    bool found = false;
    for (int v : emb.branch_sets[static_cast<std::size_t>(a)]) {
      for (int u : host.neighbours(v))
        if (owner[static_cast<std::size_t>(u)] == b) found = true;
    }
    if (!found) return false;
  }
  if (induced) {
    for (auto [u, v] : host.edges()) {
      int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
      if (a >= 0 && b >= 0 && a != b && !pattern.has_edge(a, b)) return false;
    }
  }
  return true;
}

std::optional<IntMatrix> carry_example(const IntMatrix& form, MinorName name, const MinorEmbedding& emb) {
  const ExampleCase& c = example_case(name);
  const std::vector<int> order = example_numbering(c);
  if (emb.branch_sets.size() != order.size()) throw PreconditionError("carry_example: embedding size mismatch");
  const std::size_t r = form.rows();
  // Coefficient of each pattern vertex in the two spanning vectors.
  std::vector<long> x(order.size()), y(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) x[static_cast<std::size_t>(order[k])] = c.vector[k];
  y[static_cast<std::size_t>(order[static_cast<std::size_t>(c.unit_index - 1)])] = 1;

  std::vector<int> hosts, owner;
  for (std::size_t p = 0; p < emb.branch_sets.size(); ++p)
    for (int v : emb.branch_sets[p]) {
      if (v < 0 || static_cast<std::size_t>(v) >= r) throw PreconditionError("carry_example: vertex out of range");
      hosts.push_back(v);
      owner.push_back(static_cast<int>(p));
    }
  const std::size_t m = hosts.size();
  if (m > 24) throw BoundExceededError("carry_example: more than 24 branch vertices");
  std::vector<std::vector<long>> a(m, std::vector<long>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a[i][j] = small(form(static_cast<std::size_t>(hosts[i]), static_cast<std::size_t>(hosts[j])));

  // Negating every sign negates both vectors and leaves the form alone, so
  // the first sign stays positive.
  std::vector<long> u(m), v(m);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (m - 1)); ++mask) {
    for (std::size_t i = 0; i < m; ++i) {
      long sign = i > 0 && (mask >> (i - 1) & 1) ? -1 : 1;
      u[i] = sign * x[static_cast<std::size_t>(owner[i])];
      v[i] = sign * y[static_cast<std::size_t>(owner[i])];
    }
    // M = [u v]^T A [u v]; det(M - t M^T) = (ad - bc)(1 + t^2) + (b^2 + c^2 - 2ad) t,
    // a unit exactly when ad = bc and |b - c| = 1.
    long e[2][2] = {{0, 0}, {0, 0}};
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (!a[i][j]) continue;
        e[0][0] += u[i] * a[i][j] * u[j];
        e[0][1] += u[i] * a[i][j] * v[j];
        e[1][0] += v[i] * a[i][j] * u[j];
        e[1][1] += v[i] * a[i][j] * v[j];
      }
    if (e[0][0] * e[1][1] != e[0][1] * e[1][0] || std::abs(e[0][1] - e[1][0]) != 1) continue;
    IntMatrix basis(r, 2, Integer(0));
    for (std::size_t i = 0; i < m; ++i) {
      basis(static_cast<std::size_t>(hosts[i]), 0) = u[i];
      basis(static_cast<std::size_t>(hosts[i]), 1) = v[i];
    }
    return basis;
  }
  return std::nullopt;
}

std::optional<CarriedMinor> find_carried_minor(const Graph& host, const IntMatrix& form, MinorName name,
                                               bool induced) {
  if (!is_tilde(name)) throw PreconditionError("find_carried_minor: pattern must be a tilde tree");
  if (form.rows() != static_cast<std::size_t>(host.vertex_count()))
    throw PreconditionError("find_carried_minor: form does not match the host graph");
  std::optional<IntMatrix> basis;
  auto emb = minor_search(host, library_pattern(name).graph, induced, [&](const MinorEmbedding& e) {
    basis = carry_example(form, name, e);
    return basis.has_value();
  });
  if (!emb) return std::nullopt;
  return CarriedMinor{std::move(*emb), std::move(*basis)};
}

// ---------------------------------------------------------------------------
// Certificates

std::string DefectCertificate::kind_name() const {
  switch (kind) {
    case Kind::subword: return "subword";
    case Kind::graph_minor: return "graph_minor";
    case Kind::alexander_subspace: return "alexander_subspace";
  }
  return "?";
}

std::string DefectCertificate::summary() const {
  std::ostringstream out;
  out << kind_name() << ":" << to_string(pattern);
  if (const auto* s = std::get_if<SubwordCertificate>(&witness)) out << ":" << s->pattern_word.to_string();
  if (const auto* m = std::get_if<MinorCertificate>(&witness)) out << ":" << m->host_word.to_compact();
  return out.str();
}

const std::vector<CertificateWord>& certificate_words() {
  static const std::vector<CertificateWord> words = [] {
    const std::pair<const char*, MinorName> raw[] = {
        {"s1^2 s2^2 s1 s3 s2^2 s3", MinorName::Xtilde},
        {"s1^2 s2^3 s1^2 s2^2", MinorName::Xtilde},
        {"s1^3 s2^2 s1^2 s2^2", MinorName::Xtilde},
        {"s1 s2^3 s1 s3 s2^2 s3", MinorName::Xtilde},
        {"s1 s2^2 s1 s3 s2^2 s3^2", MinorName::Xtilde},
        {"s1 s2^3 s1 s2 s3^2 s2 s3^2", MinorName::Xtilde},
        {"s2 s3 s4^2 s3 s4 s2^2 s3^2 s2", MinorName::Xtilde},
        {"s1^4 s2^2 s1^3 s2", MinorName::Ytilde},
        {"s1^5 s2 s1^4 s2", MinorName::Ttilde},
        {"s1 s2^5 s1 s2^4", MinorName::Ttilde},
        {"s2^5 s1 s2^2 s1^3", MinorName::Ttilde},
        {"s1^7 s2 s1^3 s2", MinorName::Etilde},
    };
    std::vector<CertificateWord> out;
    for (auto [text, name] : raw) out.push_back({parse_braid(text), name});
    return out;
  }();
  return words;
}

namespace {

const MinorName kTildeOrder[] = {MinorName::Xtilde, MinorName::Ytilde, MinorName::Ttilde, MinorName::Etilde};

bool each_twice(const BraidWord& w) {
  const auto occ = w.occurrences();
  return std::all_of(occ.begin() + 1, occ.end(), [](int k) { return k >= 2; });
}

// Removes an extreme generator that occurs once (Markov destabilization).
std::optional<BraidWord> destabilize(const BraidWord& w) {
  const int n = w.strands();
  if (n < 3) return std::nullopt;
  const auto occ = w.occurrences();
  std::vector<int> letters;
  if (occ[static_cast<std::size_t>(n - 1)] == 1) {
    for (int x : w.letters())
      if (x != n - 1) letters.push_back(x);
    return BraidWord(n - 1, std::move(letters));
  }
  if (occ[1] == 1) {
    for (int x : w.letters())
      if (x != 1) letters.push_back(x - 1);
    return BraidWord(n - 1, std::move(letters));
  }
  return std::nullopt;
}

// Words on fewer strands reached by one cyclic braid relation followed by a
// destabilization.
std::vector<BraidWord> relation_destabilizations(const BraidWord& w) {
  std::vector<BraidWord> out;
  if (auto d = destabilize(w)) out.push_back(std::move(*d));
  const int c = w.crossings();
  if (c < 3) return out;
  for (int r = 0; r < c; ++r) {
    std::vector<int> letters = rotate(w, r).letters();
    const int a = letters[0], b = letters[1];
    if (letters[2] != a || std::abs(a - b) != 1) continue;
    letters[0] = letters[2] = b;
    letters[1] = a;
    if (auto d = destabilize(BraidWord(w.strands(), std::move(letters)))) out.push_back(std::move(*d));
  }
  return out;
}

BraidWord least_rotation(const BraidWord& w) {
  BraidWord best = w;
  for (int r = 1; r < w.crossings(); ++r) best = std::min(best, rotate(w, r));
  return best;
}

}  // namespace

std::vector<BraidWord> equivalent_hosts(const BraidWord& w, std::size_t limit) {
  std::vector<BraidWord> seen{least_rotation(w)};
  std::set<BraidWord> known(seen.begin(), seen.end());
  auto add = [&](const BraidWord& x) {
    BraidWord key = least_rotation(x);
    if (seen.size() < limit && known.insert(key).second) seen.push_back(std::move(key));
  };
  for (std::size_t i = 0; i < seen.size() && seen.size() < limit; ++i) {
    const BraidWord x = seen[i];
    const int c = x.crossings();
    if (auto d = destabilize(x)) add(*d);
    for (int r = 0; r < c && c >= 3; ++r) {
      std::vector<int> l = rotate(x, r).letters();
      if (std::abs(l[0] - l[1]) >= 2) {
        std::vector<int> m = l;
        std::swap(m[0], m[1]);
        add(BraidWord(x.strands(), std::move(m)));
      }
      if (l[0] == l[2] && std::abs(l[0] - l[1]) == 1) {
        std::vector<int> m = l;
        m[0] = m[2] = l[1];
        m[1] = l[0];
        add(BraidWord(x.strands(), std::move(m)));
      }
    }
  }
  return seen;
}

std::vector<BraidWord> certificate_hosts(const BraidWord& w) {
  std::vector<BraidWord> hosts{w};
  auto add = [&](BraidWord h) {
    if (std::find(hosts.begin(), hosts.end(), h) == hosts.end()) hosts.push_back(std::move(h));
  };
  // Seeds are w and every word on fewer strands reached from it; each seed
  // contributes the rotations of its normal form. Lemma 5 and the
  // destabilizations already look at every rotation, so they run on the seed
  // and its normal form only. Each step removes a strand, so this terminates.
  std::vector<BraidWord> seeds{w};
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const BraidWord x = seeds[i];
    if (i > 0) add(x);
    const BraidWord normal = push_right_normal_form(x);
    for (int r = 0; r < normal.crossings(); ++r) add(rotate(normal, r));
    for (const BraidWord* y : {&x, &normal}) {
      auto seed = [&](BraidWord z) {
        if (std::find(seeds.begin(), seeds.end(), z) == seeds.end()) seeds.push_back(std::move(z));
      };
      if (y->strands() >= 3 && each_twice(*y))
        if (auto reduced = reduce_index_lemma5(*y)) seed(std::move(*reduced));
      for (BraidWord& d : relation_destabilizations(*y)) seed(std::move(d));
    }
  }
  return hosts;
}

namespace {

std::optional<DefectCertificate> subword_in(const std::vector<BraidWord>& hosts) {
  SubwordOptions opts;
  opts.flip = true;
  for (const BraidWord& host : hosts)
    for (const auto& cw : certificate_words()) {
      if (cw.word.crossings() > host.crossings()) continue;
      if (auto wit = contains_subword(host, cw.word, opts)) {
        DefectCertificate cert;
        cert.kind = DefectCertificate::Kind::subword;
        cert.pattern = cw.name;
        cert.witness = SubwordCertificate{host, cw.word, *wit};
        return cert;
      }
    }
  return std::nullopt;
}

std::optional<DefectCertificate> minor_in(const std::vector<BraidWord>& hosts) {
  for (const BraidWord& host : hosts) {
    if (!each_twice(host)) continue;
    LinkingPattern lp = linking_pattern(host);
    if (lp.vertex_count() > 64) continue;
    const IntMatrix form = seifert_matrix(host).matrix;
    for (MinorName name : kTildeOrder) {
      if (auto found = find_carried_minor(lp.graph, form, name, true)) {
        DefectCertificate cert;
        cert.kind = DefectCertificate::Kind::graph_minor;
        cert.pattern = name;
        cert.witness = MinorCertificate{host, std::move(found->embedding), std::move(found->basis)};
        return cert;
      }
    }
  }
  return std::nullopt;
}

constexpr std::size_t kEquivalentLimit = 4000;

bool is_host(const BraidWord& w, const BraidWord& host) {
  if (host == w) return true;
  auto hosts = certificate_hosts(w);
  if (std::find(hosts.begin(), hosts.end(), host) != hosts.end()) return true;
  hosts = equivalent_hosts(w, kEquivalentLimit);
  return std::find(hosts.begin(), hosts.end(), host) != hosts.end();
}

}  // namespace

std::optional<DefectCertificate> defect_certificate(const BraidWord& w) {
  // Subwords are cheap, so they are tried on every host before any minor
  // search, and on w alone before building the host list.
  if (auto cert = subword_in({w})) return cert;
  const auto hosts = certificate_hosts(w);
  if (auto cert = subword_in(hosts)) return cert;
  const auto more = equivalent_hosts(w, kEquivalentLimit);
  if (auto cert = subword_in(more)) return cert;
  if (auto cert = minor_in(hosts)) return cert;
  return minor_in(more);
}

bool verify_certificate(const BraidWord& w, const DefectCertificate& cert) {
  switch (cert.kind) {
    case DefectCertificate::Kind::subword: {
      const auto* s = std::get_if<SubwordCertificate>(&cert.witness);
      if (!s) return false;
      const auto& words = certificate_words();
      bool listed = std::any_of(words.begin(), words.end(), [&](const CertificateWord& cw) {
        return cw.word == s->pattern_word && cw.name == cert.pattern;
      });
      return listed && is_host(w, s->host_word) && verify_subword_witness(s->host_word, s->pattern_word, s->witness);
    }
    case DefectCertificate::Kind::graph_minor: {
      const auto* m = std::get_if<MinorCertificate>(&cert.witness);
      if (!m || !is_tilde(cert.pattern)) return false;
      if (!is_host(w, m->host_word)) return false;
      return verify_minor_embedding(linking_pattern(m->host_word).graph, library_pattern(cert.pattern).graph,
                                    m->embedding, true) &&
             m->basis.rows() == static_cast<std::size_t>(linking_pattern(m->host_word).vertex_count()) &&
             is_alexander_trivial(seifert_matrix(m->host_word).matrix, m->basis);
    }
    case DefectCertificate::Kind::alexander_subspace: {
      const auto* s = std::get_if<SubspaceCertificate>(&cert.witness);
      return s && is_alexander_trivial(seifert_matrix(w).matrix, s->basis);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Alexander-trivial subspaces

IntMatrix restrict_form(const IntMatrix& a, const IntMatrix& b) {
  if (!a.square() || b.rows() != a.rows())
    throw PreconditionError("restrict_form: basis rows must match the form's size");
  if (matrix_rank_rational(b) != b.cols()) throw PreconditionError("restrict_form: basis is rank deficient");
  return b.transposed() * a * b;
}

bool is_alexander_trivial(const IntMatrix& a, const IntMatrix& b) {
  return is_unit(poly_det(alexander_matrix(restrict_form(a, b))));
}

std::optional<IntMatrix> search_alexander_trivial(const IntMatrix& a, int rank, int bound) {
  if (rank != 2) throw PreconditionError("search_alexander_trivial: only rank 2 subspaces are supported");
  if (bound < 1 || bound > 6) throw BoundExceededError("search_alexander_trivial: bound must lie in [1, 6]");
  const int r = static_cast<int>(a.rows());
  if (r < 2) return std::nullopt;
  double space = 1;
  for (int i = 0; i < r; ++i) space *= 2 * bound + 1;
  if (space > 4e9) throw BoundExceededError("search_alexander_trivial: search space too large");

  std::vector<long> am(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) am[static_cast<std::size_t>(i * r + j)] = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_si();
  auto at = [&](int i, int j) { return am[static_cast<std::size_t>(i * r + j)]; };
  auto quad = [&](const std::vector<long>& x) {
    long s = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) s += x[static_cast<std::size_t>(i)] * at(i, j) * x[static_cast<std::size_t>(j)];
    return s;
  };
  auto primitive = [&](const std::vector<long>& x) {
    long g = 0;
    for (long v : x) g = std::gcd(g, v);
    return g == 1;
  };

  std::vector<long> u(static_cast<std::size_t>(r)), v(static_cast<std::size_t>(r));
  // u runs over primitive vectors with positive first nonzero entry, by max-norm then lexicographically.
  for (int level = 1; level <= bound; ++level) {
    std::fill(u.begin(), u.end(), -level);
    while (true) {
      long mx = 0;
      for (long x : u) mx = std::max(mx, std::abs(x));
      auto first = std::find_if(u.begin(), u.end(), [](long x) { return x != 0; });
      if (mx == level && first != u.end() && *first > 0 && primitive(u)) {
        const long qa = quad(u);
        std::vector<long> p(static_cast<std::size_t>(r), 0), q(static_cast<std::size_t>(r), 0), h(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) {
          for (int i = 0; i < r; ++i) {
            p[static_cast<std::size_t>(j)] += u[static_cast<std::size_t>(i)] * at(i, j);
            q[static_cast<std::size_t>(j)] += at(j, i) * u[static_cast<std::size_t>(i)];
          }
          h[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)] - q[static_cast<std::size_t>(j)];
        }
        int pivot = -1;
        for (int j = 0; j < r; ++j)
          if (h[static_cast<std::size_t>(j)] != 0 &&
              (pivot < 0 || std::abs(h[static_cast<std::size_t>(j)]) < std::abs(h[static_cast<std::size_t>(pivot)])))
            pivot = j;
        if (pivot >= 0) {
          // Odometer over all coordinates except the pivot, which the linear
          // condition u^T (A - A^T) v = +-1 determines.
          std::fill(v.begin(), v.end(), -bound);
          v[static_cast<std::size_t>(pivot)] = 0;
          while (true) {
            long partial = 0;
            for (int j = 0; j < r; ++j)
              if (j != pivot) partial += h[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
            for (long target : {1L, -1L}) {
              long rem = target - partial;
              if (rem % h[static_cast<std::size_t>(pivot)] != 0) continue;
              long x = rem / h[static_cast<std::size_t>(pivot)];
              if (std::abs(x) > bound) continue;
              v[static_cast<std::size_t>(pivot)] = x;
              long b = 0, c = 0;
              for (int j = 0; j < r; ++j) {
                b += p[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
                c += q[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
              }
              if (qa * quad(v) == b * c && primitive(v)) {
                IntMatrix out(static_cast<std::size_t>(r), 2);
                for (int i = 0; i < r; ++i) {
                  out(static_cast<std::size_t>(i), 0) = u[static_cast<std::size_t>(i)];
                  out(static_cast<std::size_t>(i), 1) = v[static_cast<std::size_t>(i)];
                }
                if (is_alexander_trivial(a, out)) return out;
              }
              v[static_cast<std::size_t>(pivot)] = 0;
            }
            int j = 0;
            for (; j < r; ++j) {
              if (j == pivot) continue;
              if (v[static_cast<std::size_t>(j)] < bound) {
                ++v[static_cast<std::size_t>(j)];
                break;
              }
              v[static_cast<std::size_t>(j)] = -bound;
            }
            if (j == r) break;
          }
        }
      }
      int j = r - 1;
      for (; j >= 0; --j) {
        if (u[static_cast<std::size_t>(j)] < level) {
          ++u[static_cast<std::size_t>(j)];
          break;
        }
        u[static_cast<std::size_t>(j)] = -level;
      }
      if (j < 0) break;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The published example

std::vector<int> reading_order(const LinkingPattern& lp) {
  std::vector<int> order(lp.bricks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const Brick& a = lp.bricks[static_cast<std::size_t>(x)];
    const Brick& b = lp.bricks[static_cast<std::size_t>(y)];
    if (a.top + a.bottom != b.top + b.bottom) return a.top + a.bottom > b.top + b.bottom;
    return a.column < b.column;
  });
  return order;
}

const std::vector<ExampleCase>& example_cases() {
  static const std::vector<ExampleCase> cases = {
      {MinorName::Ttilde, {-1, 2, -3, 4, -2, -3, 2, -1, 1}, 8, 4, 3},
      {MinorName::Etilde, {2, -4, 6, -3, -5, 4, -3, 2, -1, 1}, 9, 5, 4},
      {MinorName::Xtilde, {-1, -1, 2, -1, -1, 0}, 6, 2, 1},
      {MinorName::Ytilde, {1, -2, 3, -2, 1, -2, 1, -1}, 7, 4, 3},
  };
  return cases;
}

IntMatrix example_subspace(const ExampleCase& c) {
  IntMatrix b(c.vector.size(), 2, Integer(0));
  for (std::size_t i = 0; i < c.vector.size(); ++i) b(i, 0) = c.vector[i];
  b(static_cast<std::size_t>(c.unit_index - 1), 1) = 1;
  return b;
}

bool ExampleReport::passed() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const ExampleResult& r) {
           return r.alexander_trivial && r.genus_ok && r.g4_ok;
         });
}

namespace {

// Integer form of the rank-two test for the tree rule, fast enough to run
// over every permutation of a ten-vertex tree.
bool tree_case_trivial(const Graph& g, const std::vector<int>& order, const ExampleCase& c) {
  const int n = static_cast<int>(order.size());
  auto entry = [&](int i, int j) -> long {
    if (i == j) return 1;
    return i < j && g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? 1 : 0;
  };
  const int k = c.unit_index - 1;
  long a = 0, b = 0, d = 1, e = 0;
  for (int i = 0; i < n; ++i) {
    const long ui = c.vector[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) a += ui * entry(i, j) * c.vector[static_cast<std::size_t>(j)];
    b += ui * entry(i, k);
    e += entry(k, i) * ui;
  }
  return (b - e) * (b - e) == 1 && a * d == b * e;
}

struct FrozenBrick {
  int column, top;
};

}  // namespace

std::vector<std::vector<int>> closest_verifying_numberings(const ExampleCase& c) {
  const MinorPattern& pat = library_pattern(c.name);
  if (pat.graph.vertex_count() != static_cast<int>(c.vector.size()))
    throw PreconditionError("closest_verifying_numberings: vector length does not match the pattern");
  if (pat.graph.vertex_count() > 10) throw BoundExceededError("closest_verifying_numberings: more than 10 vertices");
  const std::vector<int> base = reading_order(pat.pattern);
  const int n = static_cast<int>(base.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = n * n;
  std::vector<std::vector<int>> found;
  std::vector<int> order(static_cast<std::size_t>(n));
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    if (inversions > best) continue;
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    if (!tree_case_trivial(pat.graph, order, c)) continue;
    if (inversions < best) {
      best = inversions;
      found.clear();
    }
    found.push_back(order);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

std::vector<int> example_numbering(const ExampleCase& c) {
  // Result of closest_verifying_numberings, unique for every case; bricks
  // are named by (column, top position).
  static const std::vector<std::pair<MinorName, std::vector<FrozenBrick>>> frozen = {
      {MinorName::Ttilde, {{1, 8}, {1, 7}, {1, 6}, {1, 4}, {2, 5}, {1, 3}, {1, 2}, {1, 1}, {1, 0}}},
      {MinorName::Etilde, {{1, 9}, {1, 8}, {1, 6}, {2, 7}, {1, 5}, {1, 4}, {1, 3}, {1, 2}, {1, 1}, {1, 0}}},
      {MinorName::Xtilde, {{2, 6}, {3, 5}, {2, 3}, {1, 1}, {2, 2}, {1, 0}}},
      {MinorName::Ytilde, {{1, 7}, {2, 5}, {1, 3}, {1, 6}, {2, 4}, {1, 2}, {1, 1}, {1, 0}}},
  };
  const auto& bricks = library_pattern(c.name).pattern.bricks;
  for (const auto& [name, list] : frozen) {
    if (name != c.name) continue;
    std::vector<int> order;
    for (const FrozenBrick& fb : list) {
      auto it = std::find_if(bricks.begin(), bricks.end(),
                             [&](const Brick& b) { return b.column == fb.column && b.top == fb.top; });
      if (it == bricks.end()) throw InternalError("example_numbering: frozen brick missing");
      order.push_back(static_cast<int>(it - bricks.begin()));
    }
    return order;
  }
  throw PreconditionError("example_numbering: no frozen numbering for " + to_string(c.name));
}

ExampleReport verify_example(const Numbering& numbering) {
  ExampleReport report;
  for (const auto& c : example_cases()) {
    const MinorPattern& pat = library_pattern(c.name);
    std::vector<int> order = numbering(c);
    IntMatrix a = seifert_matrix_tree(pat.graph, order);
    ExampleResult res;
    res.name = c.name;
    res.alexander_trivial = is_alexander_trivial(a, example_subspace(c));
    InvariantRecord inv = invariants(pat.defining_braid);
    res.genus = inv.genus;
    res.abs_signature = inv.abs_signature;
    // Signature bound for links: 2 g4 >= |sigma| - (b - 1).
    int lower = (inv.abs_signature - inv.components + 2) / 2;
    res.g4 = (res.alexander_trivial && lower >= inv.genus - 1) ? inv.genus - 1 : -1;
    res.genus_ok = res.genus == c.expected_genus;
    res.g4_ok = res.g4 == c.expected_g4;
    report.cases.push_back(res);
  }
  return report;
}

}  // namespace pbk
