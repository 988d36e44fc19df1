#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "matchpoly/barrier.hpp"

namespace matchpoly {

/// Independent oracle: mu(G) by enumerating every edge subset and keeping
/// the matchings. Never touches the recurrence path. Refuses graphs with
/// more than 24 edges.
IntPoly mu_brute_force(const Graph& g);

/// A corpus is random-access and pure so graph-level parallelism is
/// deterministic.
struct Corpus {
    std::string description;
    std::uint64_t size = 0;
    std::function<Graph(std::uint64_t)> get;
};

/// All labeled graphs on 0..nmax vertices (nmax <= 7), in vertex-count
/// then edge-bitmap order.
Corpus exhaustive_corpus(int nmax);
/// All labeled graphs on exactly n vertices.
Corpus exhaustive_corpus_single(int n);
/// `count` seeded G(n, p) samples.
Corpus random_corpus(int n, double edge_probability, std::uint64_t count, std::uint64_t seed);
/// One graph6 line per graph; blank lines ignored.
Corpus graph6_corpus(std::string_view text);
Corpus concat_corpora(std::vector<Corpus> parts, std::string description);

enum class ThetaPolicy { ZeroOnly, CandidatesDeg2, ExplicitList };

struct SuiteOptions {
    ThetaPolicy policy = ThetaPolicy::CandidatesDeg2;
    std::vector<ThetaSpec> explicit_thetas;  // used by ThetaPolicy::ExplicitList
    int jobs = 1;
    /// All-subset checks (eq. (1), deficiency upper bound, barrier and
    /// extreme families, Berge scans) run only on graphs up to this size.
    int all_subsets_max_n = 6;
    /// Up to this size the barrier family is enumerated in both safe and
    /// pruned modes and the two are compared; above it pruned mode is
    /// trusted (its justification is itself one of the checks).
    int safe_enum_max_n = 5;
    /// Oracle equivalence runs on graphs with at most this many edges.
    int oracle_edge_cap = 12;
    /// Stored failures per check; beyond this only counted.
    std::size_t failure_cap = 100;
};

struct CheckFailure {
    std::uint64_t graph_index = 0;
    std::string graph6;
    std::string theta;  // minimal polynomial text form; empty for theta-free checks
    std::string detail;
};

struct CheckResult {
    std::string id;
    std::string statement;
    std::uint64_t instances = 0;
    std::vector<CheckFailure> failures;
    std::uint64_t failures_suppressed = 0;
    bool pass() const { return failures.empty() && failures_suppressed == 0; }
};

struct SuiteReport {
    std::string corpus;
    std::string policy;
    std::uint64_t graphs = 0;
    double runtime_seconds = 0.0;
    std::vector<CheckResult> checks;

    bool pass() const;
    const CheckResult* find(std::string_view id) const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Runs every numbered-result check over the corpus. Failures are data,
/// not errors; internal invariant traps are recorded as failures too.
SuiteReport run_suite(const Corpus& corpus, const SuiteOptions& options = {});

enum class HuntTarget {
    BarrierNotZeroBarrier,    // classical barrier that is not a 0-barrier
    ExtremeNotBarrier,        // 0-extreme set that is not a 0-barrier
    BarrierFamilyNotClosed,   // two 0-barriers with non-barrier union and intersection
    SpecialIntersectionGap,   // N_theta nonempty, intersection of maximal barriers != A_theta
};

std::string to_string(HuntTarget target);
std::optional<HuntTarget> hunt_target_from_string(std::string_view id);

struct HuntWitness {
    std::uint64_t graph_index = 0;
    int n = 0;
    std::string graph6;
    std::string theta_minpoly;
    std::string theta_label;
    std::vector<std::vector<int>> sets;
    std::string note;
};

struct HuntReport {
    HuntTarget target;
    int n_max = 0;
    int requested = 1;
    std::uint64_t scanned = 0;
    double runtime_seconds = 0.0;
    std::vector<HuntWitness> found;

    bool ok() const { return static_cast<int>(found.size()) >= requested; }
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Scans labeled graphs by increasing vertex count, reporting the first
/// `want` witnesses in corpus order. An empty result is a valid outcome.
/// Every reported witness is re-verified through the decision procedures
/// before being returned.
HuntReport hunt_counterexamples(HuntTarget target, int n_max, int want = 1, int jobs = 1);

/// Rebuilds the witness from its graph6/theta text and re-runs the
/// decision procedures.
bool verify_hunt_witness(HuntTarget target, const HuntWitness& witness);

}  // namespace matchpoly
