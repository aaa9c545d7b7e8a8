#pragma once

// Corpus-driven verification of the product-graph laws the library is built
// around, with self-contained counterexample certificates:
//   T1  strong-product eccentricity: ecc(i,j) = max(ecc_G(i), ecc_H(j))
//   T2  gamma(G boxtimes H) <= gamma(G) * gamma(H)
//   T3  lifted comfortable teams stay comfortable in the strong product,
//       so gamma_comf(G boxtimes H) <= gamma_comf(G) * gamma_comf(H)
//   T4  gamma_c(G o H) = gamma_c(G)            (gamma_c(G) >= 2)
//   T5  gamma_comf(G o H) = gamma_comf(G)      (radius(G) >= 2, team exists)
//   P1  lex product keeps every G-edge inside each fiber
//   P2  radius(G)=1, radius(H)=1  -> radius 1 and gamma_comf 1
//   P3  radius(G)=1, radius(H)>=2 -> 2-self-centered and gamma_comf 2
//   P4  radius(G)>=2 -> ecc(i,j) = ecc_G(i) in the lex product

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "comfteam/comfort.hpp"
#include "comfteam/domination.hpp"
#include "comfteam/generators.hpp"
#include "comfteam/graph.hpp"
#include "comfteam/products.hpp"

namespace comfteam {

enum class CheckId { kT1, kT2, kT3, kT4, kT5, kP1, kP2, kP3, kP4 };

inline std::string to_string(CheckId check) {
  switch (check) {
    case CheckId::kT1: return "T1";
    case CheckId::kT2: return "T2";
    case CheckId::kT3: return "T3";
    case CheckId::kT4: return "T4";
    case CheckId::kT5: return "T5";
    case CheckId::kP1: return "P1";
    case CheckId::kP2: return "P2";
    case CheckId::kP3: return "P3";
    case CheckId::kP4: return "P4";
  }
  return "?";
}

inline std::optional<CheckId> parse_check_id(std::string_view text) {
  static constexpr CheckId all[] = {CheckId::kT1, CheckId::kT2, CheckId::kT3,
                                    CheckId::kT4, CheckId::kT5, CheckId::kP1,
                                    CheckId::kP2, CheckId::kP3, CheckId::kP4};
  for (CheckId c : all)
    if (text == to_string(c)) return c;
  return std::nullopt;
}

/// Corpus description: either every connected labeled graph up to max_n, or
/// seeded random connected graphs. Reproducible by construction.
struct CorpusSpec {
  enum class Mode { kExhaustive, kRandom };

  Mode mode = Mode::kExhaustive;
  int max_n = 4;            // exhaustive
  long count = 0;           // random: number of instances
  int n_min = 4;
  int n_max = 6;
  double edge_prob = 0.5;
  std::uint64_t seed = 42;

  static CorpusSpec exhaustive(int max_n) {
    CorpusSpec spec;
    spec.mode = Mode::kExhaustive;
    spec.max_n = max_n;
    return spec;
  }

  static CorpusSpec random(long count, int n_min, int n_max, double edge_prob,
                           std::uint64_t seed) {
    CorpusSpec spec;
    spec.mode = Mode::kRandom;
    spec.count = count;
    spec.n_min = n_min;
    spec.n_max = n_max;
    spec.edge_prob = edge_prob;
    spec.seed = seed;
    return spec;
  }

  void validate() const {
    if (mode == Mode::kExhaustive) {
      if (max_n < 1 || max_n > 7)
        throw std::invalid_argument("corpus: exhaustive max_n must be in [1,7]");
    } else {
      if (count < 0) throw std::invalid_argument("corpus: count must be >= 0");
      if (n_min < 1 || n_max < n_min)
        throw std::invalid_argument("corpus: need 1 <= n_min <= n_max");
      if (edge_prob < 0.0 || edge_prob > 1.0)
        throw std::invalid_argument("corpus: edge_prob must be in [0,1]");
    }
  }

  std::string describe() const {
    std::ostringstream out;
    if (mode == Mode::kExhaustive) {
      out << "exhaustive max_n=" << max_n;
    } else {
      out << "random count=" << count << " n=" << n_min << ".." << n_max
          << " p=" << edge_prob << " seed=" << seed;
    }
    return out.str();
  }
};

struct PairCorpus {
  std::vector<Graph> graphs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Ordered factor pairs (G,H). Exhaustive mode takes all ordered pairs of
/// connected labeled graphs with 1..max_n vertices; random mode draws the
/// orders and the per-graph seeds from one SplitMix64 stream.
inline PairCorpus build_pair_corpus(const CorpusSpec& spec) {
  spec.validate();
  PairCorpus corpus;
  if (spec.mode == CorpusSpec::Mode::kExhaustive) {
    for (int n = 1; n <= spec.max_n; ++n)
      enumerate_connected_labeled(n,
                                  [&](const Graph& g) { corpus.graphs.push_back(g); });
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i)
      for (std::size_t j = 0; j < corpus.graphs.size(); ++j)
        corpus.pairs.emplace_back(i, j);
  } else {
    SplitMix64 rng(spec.seed);
    const auto span =
        static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
    for (long i = 0; i < spec.count; ++i) {
      const int n_g = spec.n_min + static_cast<int>(rng.next_below(span));
      const int n_h = spec.n_min + static_cast<int>(rng.next_below(span));
      const std::uint64_t seed_g = rng.next();
      const std::uint64_t seed_h = rng.next();
      corpus.graphs.push_back(random_connected(n_g, spec.edge_prob, seed_g));
      corpus.graphs.push_back(random_connected(n_h, spec.edge_prob, seed_h));
      corpus.pairs.emplace_back(corpus.graphs.size() - 2,
                                corpus.graphs.size() - 1);
    }
  }
  return corpus;
}

/// Single-graph corpus for per-graph surveys.
inline std::vector<Graph> build_single_corpus(const CorpusSpec& spec) {
  spec.validate();
  std::vector<Graph> graphs;
  if (spec.mode == CorpusSpec::Mode::kExhaustive) {
    for (int n = 1; n <= spec.max_n; ++n)
      enumerate_connected_labeled(n, [&](const Graph& g) { graphs.push_back(g); });
  } else {
    SplitMix64 rng(spec.seed);
    const auto span =
        static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
    for (long i = 0; i < spec.count; ++i) {
      const int n = spec.n_min + static_cast<int>(rng.next_below(span));
      const std::uint64_t seed = rng.next();
      graphs.push_back(random_connected(n, spec.edge_prob, seed));
    }
  }
  return graphs;
}

/// Self-contained certificate: both factor graphs embedded as edge-list
/// text, plus where and how the claim failed.
struct Counterexample {
  std::string left_graph;
  std::string right_graph;
  std::string location;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  CheckId check = CheckId::kT1;
  std::string corpus_description;
  long long instances_checked = 0;
  long long applicable = 0;
  std::vector<Counterexample> counterexamples;
  bool passed = true;
};

namespace detail {

// gamma_comf treated as non-existent on the trivial graph, which the exact
// solver refuses to evaluate.
inline ComfortVerdict gamma_comf_full(const Graph& g) {
  if (g.vertex_count() == 1) return ComfortVerdict{false, 0, VertexSet{}, 1};
  return search_comfortable_team(g, g.vertex_count());
}

inline int graph_radius(const Graph& g) { return eccentricity_profile(g).radius; }

inline bool has_universal_vertex(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == g.vertex_count() - 1) return true;
  return false;
}

inline std::string flag_string(const TeamDiagnosis& d) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "dominating=" << yn(d.dominating) << " connected=" << yn(d.connected)
      << " less-dispersive=" << yn(d.less_dispersive);
  return out.str();
}

inline Counterexample make_cex(const Graph& g, const Graph& h,
                               std::string location, std::string expected,
                               std::string actual) {
  return Counterexample{serialize_graph(g), serialize_graph(h),
                        std::move(location), std::move(expected),
                        std::move(actual)};
}

inline std::optional<Counterexample> eval_t1(const Graph& g, const Graph& h) {
  const auto product = strong_product(g, h);
  const auto pg = eccentricity_profile(g);
  const auto ph = eccentricity_profile(h);
  const auto pp = eccentricity_profile(product.graph);
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = 0; j < h.vertex_count(); ++j) {
      const int expected = std::max(pg.ecc[static_cast<std::size_t>(i)],
                                    ph.ecc[static_cast<std::size_t>(j)]);
      const int actual =
          pp.ecc[static_cast<std::size_t>(product.indexing.flatten(i, j))];
      if (actual != expected)
        return make_cex(g, h,
                        "strong product vertex " + product.indexing.describe_vertex(
                            product.indexing.flatten(i, j)),
                        "eccentricity " + std::to_string(expected),
                        "eccentricity " + std::to_string(actual));
    }
  return std::nullopt;
}

inline std::optional<Counterexample> eval_t2(const Graph& g, const Graph& h) {
  const auto wg = find_dominating_set_up_to(g, g.vertex_count(), false);
  const auto wh = find_dominating_set_up_to(h, h.vertex_count(), false);
  const int bound = wg->size * wh->size;
  const auto product = strong_product(g, h);
  const auto found = find_dominating_set_up_to(product.graph, bound, false);
  if (!found)
    return make_cex(g, h, "strong product domination",
                    "gamma <= " + std::to_string(bound) + " (gamma(G)=" +
                        std::to_string(wg->size) + ", gamma(H)=" +
                        std::to_string(wh->size) + ")",
                    "no dominating set of size <= " + std::to_string(bound));
  return std::nullopt;
}

inline std::optional<Counterexample> eval_t3(const Graph& g, const Graph& h) {
  const auto vg = gamma_comf_full(g);
  const auto vh = gamma_comf_full(h);
  const auto product = strong_product(g, h);
  const VertexSet lifted = lift_set(product.indexing, vg.team, vh.team);
  const auto diag = diagnose_team(product.graph, lifted);
  if (!diag.comfortable)
    return make_cex(
        g, h, "lifted set " + product.indexing.describe_set(lifted),
        "comfortable team of size " + std::to_string(vg.size * vh.size) +
            " in the strong product",
        flag_string(diag));
  return std::nullopt;
}

inline std::optional<Counterexample> eval_t4(const Graph& g, const Graph& h) {
  const auto wg = find_dominating_set_up_to(g, g.vertex_count(), true);
  const int bound = wg->size;
  const auto product = lex_product(g, h);
  const auto found = find_dominating_set_up_to(product.graph, bound, true);
  if (!found)
    return make_cex(g, h, "lex product connected domination",
                    "gamma_c(G o H) = gamma_c(G) = " + std::to_string(bound),
                    "no connected dominating set of size <= " +
                        std::to_string(bound));
  if (found->size < bound)
    return make_cex(g, h, "lex product connected domination",
                    "gamma_c(G o H) = gamma_c(G) = " + std::to_string(bound),
                    "gamma_c(G o H) = " + std::to_string(found->size) +
                        " (witness " + product.indexing.describe_set(found->witness) +
                        ")");
  return std::nullopt;
}

inline std::optional<Counterexample> eval_t5(const Graph& g, const Graph& h) {
  const auto vg = gamma_comf_full(g);
  const auto product = lex_product(g, h);
  const auto verdict = search_comfortable_team(product.graph, vg.size);
  if (!verdict.exists)
    return make_cex(g, h, "lex product gamma_comf",
                    "gamma_comf(G o H) = gamma_comf(G) = " +
                        std::to_string(vg.size),
                    "no comfortable team of size <= " +
                        std::to_string(vg.size));
  if (verdict.size < vg.size)
    return make_cex(g, h, "lex product gamma_comf",
                    "gamma_comf(G o H) = gamma_comf(G) = " +
                        std::to_string(vg.size),
                    "gamma_comf(G o H) = " + std::to_string(verdict.size) +
                        " (team " + product.indexing.describe_set(verdict.team) +
                        ")");
  for (int j = 0; j < h.vertex_count(); ++j) {
    std::vector<int> members;
    for (int i : vg.team) members.push_back(product.indexing.flatten(i, j));
    const VertexSet fiber_team(std::move(members));
    const auto diag = diagnose_team(product.graph, fiber_team);
    if (!diag.comfortable)
      return make_cex(g, h,
                      "fiber " + std::to_string(j) + " set " +
                          product.indexing.describe_set(fiber_team),
                      "comfortable team in the lex product",
                      flag_string(diag));
  }
  return std::nullopt;
}

inline std::optional<Counterexample> eval_p1(const Graph& g, const Graph& h) {
  const auto product = lex_product(g, h);
  for (int k = 0; k < g.vertex_count(); ++k)
    for (int a : g.neighbors(k))
      for (int j = 0; j < h.vertex_count(); ++j)
        if (!product.graph.has_edge(product.indexing.flatten(k, j),
                                    product.indexing.flatten(a, j)))
          return make_cex(
              g, h,
              "vertices " +
                  product.indexing.describe_vertex(product.indexing.flatten(k, j)) +
                  " and " +
                  product.indexing.describe_vertex(product.indexing.flatten(a, j)),
              "adjacent in the lex product", "not adjacent");
  return std::nullopt;
}

inline std::optional<Counterexample> eval_p2(const Graph& g, const Graph& h) {
  const auto product = lex_product(g, h);
  const auto profile = eccentricity_profile(product.graph);
  if (profile.radius != 1)
    return make_cex(g, h, "lex product radius", "radius 1",
                    "radius " + std::to_string(profile.radius));
  const auto verdict = search_comfortable_team(product.graph, 1);
  if (!verdict.exists)
    return make_cex(g, h, "lex product gamma_comf", "gamma_comf = 1",
                    "no singleton comfortable team");
  return std::nullopt;
}

inline std::optional<Counterexample> eval_p3(const Graph& g, const Graph& h) {
  const auto product = lex_product(g, h);
  const auto profile = eccentricity_profile(product.graph);
  if (!(profile.radius == 2 && profile.diameter == 2))
    return make_cex(g, h, "lex product eccentricities", "2-self-centered",
                    "radius " + std::to_string(profile.radius) + " diameter " +
                        std::to_string(profile.diameter));
  const auto verdict = search_comfortable_team(product.graph, 2);
  if (!verdict.exists || verdict.size != 2)
    return make_cex(g, h, "lex product gamma_comf", "gamma_comf = 2",
                    verdict.exists ? "gamma_comf = " + std::to_string(verdict.size)
                                   : "no comfortable team of size <= 2");
  return std::nullopt;
}

inline std::optional<Counterexample> eval_p4(const Graph& g, const Graph& h) {
  const auto product = lex_product(g, h);
  const auto pg = eccentricity_profile(g);
  const auto pp = eccentricity_profile(product.graph);
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = 0; j < h.vertex_count(); ++j) {
      const int expected = pg.ecc[static_cast<std::size_t>(i)];
      const int actual =
          pp.ecc[static_cast<std::size_t>(product.indexing.flatten(i, j))];
      if (actual != expected)
        return make_cex(g, h,
                        "lex product vertex " + product.indexing.describe_vertex(
                            product.indexing.flatten(i, j)),
                        "eccentricity " + std::to_string(expected),
                        "eccentricity " + std::to_string(actual));
    }
  return std::nullopt;
}

inline bool hypothesis_holds(CheckId check, const Graph& g, const Graph& h) {
  switch (check) {
    case CheckId::kT1:
    case CheckId::kT2:
    case CheckId::kP1:
      return true;
    case CheckId::kT3:
      return gamma_comf_full(g).exists && gamma_comf_full(h).exists;
    case CheckId::kT4:
      // The identity needs gamma_c(G) >= 2 (no dominating vertex in G): with
      // a universal vertex in G but none in H, gamma_c(G o H) is 2, not 1.
      // K2 o P4 is the smallest counterexample to the unrestricted claim.
      return g.vertex_count() >= 2 && !has_universal_vertex(g);
    case CheckId::kT5:
      return graph_radius(g) >= 2 && gamma_comf_full(g).exists;
    case CheckId::kP2:
      return graph_radius(g) == 1 && graph_radius(h) == 1;
    case CheckId::kP3:
      return graph_radius(g) == 1 && graph_radius(h) >= 2;
    case CheckId::kP4:
      return graph_radius(g) >= 2;
  }
  return false;
}

inline std::optional<Counterexample> evaluate_instance(CheckId check,
                                                       const Graph& g,
                                                       const Graph& h) {
  switch (check) {
    case CheckId::kT1: return eval_t1(g, h);
    case CheckId::kT2: return eval_t2(g, h);
    case CheckId::kT3: return eval_t3(g, h);
    case CheckId::kT4: return eval_t4(g, h);
    case CheckId::kT5: return eval_t5(g, h);
    case CheckId::kP1: return eval_p1(g, h);
    case CheckId::kP2: return eval_p2(g, h);
    case CheckId::kP3: return eval_p3(g, h);
    case CheckId::kP4: return eval_p4(g, h);
  }
  return std::nullopt;
}

}  // namespace detail

/// Re-parses the embedded factor graphs and re-evaluates the claim from
/// scratch. True iff the certificate still violates it.
inline bool recheck_counterexample(CheckId check, const Counterexample& cex) {
  const Graph g = parse_graph(cex.left_graph);
  const Graph h = parse_graph(cex.right_graph);
  if (!detail::hypothesis_holds(check, g, h)) return false;
  return detail::evaluate_instance(check, g, h).has_value();
}

/// Runs one check over every ordered pair of the corpus. Pairs failing the
/// check's hypothesis are counted but skipped, so a vacuous pass is visible
/// as applicable=0. Every recorded counterexample is re-checked standalone
/// before the report is returned.
inline VerificationReport run_check(CheckId check, const CorpusSpec& corpus) {
  corpus.validate();
  if (corpus.mode == CorpusSpec::Mode::kRandom && corpus.n_max > 16)
    throw std::invalid_argument("run_check: random corpus n_max exceeds 16");
  const PairCorpus pairs = build_pair_corpus(corpus);
  VerificationReport report;
  report.check = check;
  report.corpus_description = corpus.describe();
  for (const auto& [gi, hi] : pairs.pairs) {
    const Graph& g = pairs.graphs[gi];
    const Graph& h = pairs.graphs[hi];
    ++report.instances_checked;
    if (!detail::hypothesis_holds(check, g, h)) continue;
    ++report.applicable;
    if (auto cex = detail::evaluate_instance(check, g, h))
      report.counterexamples.push_back(std::move(*cex));
  }
  report.passed = report.counterexamples.empty();
  for (const auto& cex : report.counterexamples)
    if (!recheck_counterexample(check, cex))
      throw std::logic_error("phantom counterexample recorded for check " +
                             to_string(check));
  return report;
}

/// One no-team graph with witnesses for both classic failure modes: the
/// best less-dispersive sets do not dominate, and the minimum connected
/// dominating set is not less dispersive.
struct FailureModeEntry {
  std::string graph_text;
  long long less_dispersive_set_count = 0;  // connected ones, all sizes
  VertexSet maximal_less_dispersive;        // lex-first maximal such set
  VertexSet min_cds;
  int gamma_c = 0;
};

struct FailureModeReport {
  std::string corpus_description;
  long long graphs_checked = 0;
  long long trivial_skipped = 0;
  std::vector<FailureModeEntry> entries;
};

/// Surveys a single-graph corpus for graphs without a comfortable team and
/// classifies what blocks them. Exhaustive corpora up to n=7, random up to
/// n=12 (the maximality analysis walks every connected subset).
inline FailureModeReport find_failure_modes(const CorpusSpec& corpus) {
  corpus.validate();
  if (corpus.mode == CorpusSpec::Mode::kRandom && corpus.n_max > 12)
    throw std::invalid_argument(
        "find_failure_modes: random corpus n_max exceeds 12");
  FailureModeReport report;
  report.corpus_description = corpus.describe();
  for (const Graph& g : build_single_corpus(corpus)) {
    ++report.graphs_checked;
    const int n = g.vertex_count();
    if (n == 1) {
      ++report.trivial_skipped;
      continue;
    }
    if (search_comfortable_team(g, n).exists) continue;
    const auto profile = eccentricity_profile(g);
    std::vector<VertexSet> dispersive_sets;
    std::vector<std::uint64_t> masks;
    for (int k = 1; k <= n; ++k)
      enumerate_connected_subsets(g, k, [&](VertexSet s) {
        if (detail::less_dispersive_check(g, profile.ecc, s, nullptr)) {
          std::uint64_t mask = 0;
          for (int v : s) mask |= 1ULL << v;
          masks.push_back(mask);
          dispersive_sets.push_back(std::move(s));
        }
        return true;
      });
    FailureModeEntry entry;
    entry.graph_text = serialize_graph(g);
    entry.less_dispersive_set_count =
        static_cast<long long>(dispersive_sets.size());
    const VertexSet* best = nullptr;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < masks.size(); ++j)
        if (j != i && (masks[i] & masks[j]) == masks[i] && masks[j] != masks[i]) {
          maximal = false;
          break;
        }
      if (maximal && (!best || dispersive_sets[i] < *best))
        best = &dispersive_sets[i];
    }
    if (best) entry.maximal_less_dispersive = *best;
    const auto cds = find_dominating_set_up_to(g, n, true);
    entry.min_cds = cds->witness;
    entry.gamma_c = cds->size;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace detail {

inline void append_indented(std::ostringstream& out, const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    out << "  " << text.substr(pos, eol - pos) << '\n';
    pos = eol + 1;
  }
}

}  // namespace detail

inline std::string render_report_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "check " << to_string(report.check) << '\n';
  out << "corpus " << report.corpus_description << '\n';
  out << "instances " << report.instances_checked << '\n';
  out << "applicable " << report.applicable << '\n';
  out << "skipped " << report.instances_checked - report.applicable << '\n';
  out << "counterexamples " << report.counterexamples.size() << '\n';
  for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
    const auto& cex = report.counterexamples[i];
    out << "counterexample " << i + 1 << '\n';
    out << "left:" << '\n';
    detail::append_indented(out, cex.left_graph);
    out << "right:" << '\n';
    detail::append_indented(out, cex.right_graph);
    out << "location: " << cex.location << '\n';
    out << "expected: " << cex.expected << '\n';
    out << "actual: " << cex.actual << '\n';
  }
  out << "result " << (report.passed ? "PASS" : "FAIL") << '\n';
  return out.str();
}

/// JSON-lines rendering: one summary record, then one record per
/// counterexample with the factor graphs embedded.
inline std::string render_report_records(const VerificationReport& report) {
  std::ostringstream out;
  nlohmann::json summary = {
      {"check", to_string(report.check)},
      {"corpus", report.corpus_description},
      {"instances", report.instances_checked},
      {"applicable", report.applicable},
      {"counterexamples", report.counterexamples.size()},
      {"passed", report.passed},
  };
  out << summary.dump() << '\n';
  for (const auto& cex : report.counterexamples) {
    nlohmann::json record = {
        {"check", to_string(report.check)}, {"left", cex.left_graph},
        {"right", cex.right_graph},         {"location", cex.location},
        {"expected", cex.expected},         {"actual", cex.actual},
    };
    out << record.dump() << '\n';
  }
  return out.str();
}

inline std::string render_failures_text(const FailureModeReport& report) {
  std::ostringstream out;
  out << "failure-mode survey" << '\n';
  out << "corpus " << report.corpus_description << '\n';
  out << "graphs " << report.graphs_checked << '\n';
  out << "trivial skipped " << report.trivial_skipped << '\n';
  out << "no-team graphs " << report.entries.size() << '\n';
  for (const auto& entry : report.entries) {
    out << "no-team graph:" << '\n';
    detail::append_indented(out, entry.graph_text);
    out << "less-dispersive connected sets " << entry.less_dispersive_set_count
        << "; maximal " << entry.maximal_less_dispersive.to_string()
        << " does not dominate" << '\n';
    out << "minimum CDS " << entry.min_cds.to_string() << " (gamma_c "
        << entry.gamma_c << ") is not less dispersive" << '\n';
  }
  return out.str();
}

inline std::string render_failures_records(const FailureModeReport& report) {
  std::ostringstream out;
  nlohmann::json summary = {
      {"survey", "failure-modes"},
      {"corpus", report.corpus_description},
      {"graphs", report.graphs_checked},
      {"trivial_skipped", report.trivial_skipped},
      {"no_team_graphs", report.entries.size()},
  };
  out << summary.dump() << '\n';
  for (const auto& entry : report.entries) {
    nlohmann::json record = {
        {"graph", entry.graph_text},
        {"less_dispersive_sets", entry.less_dispersive_set_count},
        {"maximal_less_dispersive", entry.maximal_less_dispersive.members()},
        {"min_cds", entry.min_cds.members()},
        {"gamma_c", entry.gamma_c},
    };
    out << record.dump() << '\n';
  }
  return out.str();
}

}  // namespace comfteam
