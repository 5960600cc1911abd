#ifndef GWL_EXPERIMENTS_HPP
#define GWL_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwl/graph.hpp"
#include "gwl/term.hpp"

namespace gwl {

struct StageStat {
    std::string name;
    std::size_t vertices = 0;
    std::size_t edges = 0;
};

struct PipelineReport {
    std::vector<StageStat> stages;
    bool verdict = false;
    std::string failure;                            // failing stage, if any
    std::vector<std::pair<std::string, int>> widths;
    std::int64_t elapsed_ms = 0;
    nlohmann::json to_json(bool timings = false) const;
};

/// Grid recovery through H_{m^2}: color the m x m grid, contract the
/// matching, apply the distance-2 map on the x-vertices, compare name-exact.
PipelineReport prop1_pipeline(int m);

/// Vertex-minor route through H'_{n^2}: contract, delete unused copies,
/// locally complement at y0, delete y0, erase the contraction vertices.
PipelineReport prop1_alt_pipeline(int n);

struct SuiteReport {
    std::size_t graphs_checked = 0;
    std::size_t steps_checked = 0;
    std::size_t violations = 0;
    std::vector<std::string> findings;
    std::int64_t elapsed_ms = 0;
    bool passed() const { return violations == 0; }
    nlohmann::json to_json(bool timings = false) const;
};

/// For every graph with at most max_n vertices and every single
/// erase/delete step: rank-width does not increase, and the step result's
/// clique-width is at most 2^(k+1)-1 for k the original clique-width.
SuiteReport prop2_property_suite(int max_n);

/// Every single edge contraction of a cograph with at most limit_n
/// vertices is again a cograph.
SuiteReport cograph_closure_check(int limit_n);

struct WitnessCandidate {
    int n = 0;
    std::vector<Edge> f_set;     // the matching F in H_n
    Edge removed_edge;           // f with cwd(H_n/(F-{f})) = 3
    int cwd_before = 0;
    int cwd_after = 0;
    std::string before_witness;  // term text for the width-3 certificate
};

struct SearchCheckpoint {
    int version = 1;
    int n = 2;
    std::vector<int> cursor;     // edge indices of the last processed matching
    std::uint64_t candidates_examined = 0;
    std::uint64_t matchings_seen = 0;
    bool exhausted = false;
    std::optional<WitnessCandidate> witness;
    std::int64_t elapsed_ms = 0;

    nlohmann::json to_json(bool timings = false) const;
    static SearchCheckpoint from_json(const nlohmann::json& j);
};

struct SearchBudget {
    std::optional<std::uint64_t> max_candidates;
    std::optional<std::int64_t> max_millis;
    int n_max = 3;
};

/// Exhaustive single-edge witness search: enumerates matchings F of H_n
/// in lexicographic order (pruned by the automorphism group of H_n),
/// looking for F and f in F with cwd(H_n/(F-{f})) = 3 and
/// cwd(H_n/F) > 3. Deterministic and resumable.
SearchCheckpoint witness_search(const SearchBudget& budget,
                                const SearchCheckpoint* resume = nullptr,
                                std::function<bool(const Graph&)> cwd3_backend = {});

}  // namespace gwl

#endif
