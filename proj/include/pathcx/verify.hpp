#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pathcx/digraph.hpp"

namespace pathcx {

/// Shape parameters of the random edge generator.
struct EdgeProfile {
  /// Probability that a generated graph has s = t.
  double st_equal_probability = 0.05;
  /// Probability that an edge is oriented from the lower- to the
  /// higher-numbered endpoint (s is lowest, t highest). High values give
  /// mostly acyclic graphs, so the generic closed-form branch is exercised.
  double forward_bias = 0.8;
};

/// Deterministic corpus description. Random graphs are drawn from
/// std::mt19937_64 seeded with `seed`; integers in [0, n) are taken as
/// next() % n and probabilities as (next() >> 11) * 2^-53, so a corpus is
/// reproducible on every conforming platform.
struct CorpusSpec {
  std::size_t graph_count = 200;
  int max_vertices = 6;
  int max_edges = 8;
  EdgeProfile profile;
  bool allow_self_loops = true;
  bool allow_parallel = true;
  std::uint64_t seed = 1;
  bool include_fixtures = true;
};

/// Hand-built graphs always placed first in a corpus: the seven-edge
/// running example, k parallel s->t edges (k = 1..6), directed paths of
/// length 1..4, an edgeless graph with s != t, a self-loop at s = t, a graph
/// with one useful 2-cycle, and one with two edge-disjoint useful 2-cycles.
std::vector<Digraph> fixture_battery();

/// The seven-edge running example (edges a..g over s, p, q, r, t).
Digraph example_graph();
/// Two vertices s, t and k edges e1..ek from s to t.
Digraph parallel_graph(int k);
/// s -> v1 -> ... -> t with `length` edges e1..e<length>.
Digraph path_graph(int length);

/// Fixtures (if requested) followed by spec.graph_count random graphs.
/// Throws InputError when max_edges exceeds the enumeration limit.
std::vector<Digraph> generate_corpus(const CorpusSpec& spec);

enum class CheckStatus { Pass, Fail, Skip, Info };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::size_t graph_index = 0;
  std::string check_id;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  std::size_t info = 0;
};

struct VerificationReport {
  std::vector<CheckResult> results;
  /// Serialized graph of every graph with at least one failure.
  std::map<std::size_t, std::string> payloads;

  [[nodiscard]] std::size_t failures() const;
  [[nodiscard]] CheckTally tally() const;
  [[nodiscard]] std::map<std::string, CheckTally> tally_by_check() const;
  /// One line per result, `<graph-index> <check-id> <status>[ <detail>]`,
  /// ordered by graph index then manifest order, followed by `#` summary
  /// lines.
  [[nodiscard]] std::string to_text() const;
  void append(VerificationReport other);
};

/// Every check id run_all_checks reports, in report order.
const std::vector<std::string>& check_manifest();

struct VerifyOptions {
  /// Graphs with more edges skip all checks that enumerate subsets.
  int max_enumeration_edges = 12;
  /// Graphs with more edges skip the grape searches.
  int max_grape_edges = 10;
  std::size_t packing_limit = kDefaultPackingLimit;
};

/// Runs every check in the manifest on g. Conditional checks whose
/// hypotheses never hold are reported as skip. Failures are report entries,
/// never exceptions.
VerificationReport run_all_checks(const Digraph& g, std::size_t graph_index = 0,
                                  const VerifyOptions& options = {});

/// run_all_checks over a corpus, with per-graph work spread over `threads`
/// workers and the report merged by graph index.
VerificationReport verify_corpus(const std::vector<Digraph>& corpus, const VerifyOptions& options = {},
                                 unsigned threads = 1);

}  // namespace pathcx
