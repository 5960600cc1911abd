#ifndef GWL_CLIQUEWIDTH_HPP
#define GWL_CLIQUEWIDTH_HPP

#include <cstdint>
#include <optional>

#include "gwl/graph.hpp"
#include "gwl/term.hpp"

namespace gwl {

struct CwSolveOptions {
    int max_vertices = 12;  // budget guard; raise explicitly for larger inputs
    int max_k = 8;          // cwd_exact stops here and reports the partial bound
};

struct CwSolveResult {
    int value = 0;
    TermPtr witness;
    std::uint64_t states_explored = 0;
};

/// Decides whether g has a k-expression; returns a verified witness term
/// when it does. Exhaustive subset dynamic programming over
/// (vertex subset, label partition) states.
std::optional<TermPtr> cwd_leq(const Graph& g, int k, const CwSolveOptions& opts = {});
CwSolveResult cwd_exact(const Graph& g, const CwSolveOptions& opts = {});

/// Linear variant: every union extends the accumulated graph by one vertex.
std::optional<TermPtr> lcwd_leq(const Graph& g, int k, const CwSolveOptions& opts = {});
CwSolveResult lcwd_exact(const Graph& g, const CwSolveOptions& opts = {});

/// Recursive complement-connectivity test; cographs are exactly cwd <= 2.
bool is_cograph(const Graph& g);

}  // namespace gwl

#endif
