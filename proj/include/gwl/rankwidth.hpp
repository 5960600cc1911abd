#ifndef GWL_RANKWIDTH_HPP
#define GWL_RANKWIDTH_HPP

#include <string>
#include <vector>

#include "gwl/graph.hpp"

namespace gwl {

/// Certificate for rank-width. Stored as a rooted binary tree whose root
/// has degree 2; suppressing the root yields the unrooted subcubic tree
/// with internal degree 3 and leaves labeled bijectively by V(G).
struct BranchDecomposition {
    struct Node {
        int parent = -1;
        int left = -1;
        int right = -1;
        std::string leaf;  // nonempty iff the node is a leaf
    };
    std::vector<Node> nodes;
    int root = -1;

    std::vector<int> parent_array() const;
    std::vector<std::string> leaf_labels() const;
};

struct RankWidthResult {
    int value = 0;
    BranchDecomposition decomposition;
};

/// Exact rank-width by subset dynamic programming. Budget guard: at most
/// max_vertices vertices (default 16); single-vertex graphs return 0.
RankWidthResult rank_width_exact(const Graph& g, int max_vertices = 16);

/// Audit: maximum cut-rank across decomposition edges. Throws if the
/// decomposition is not a valid certificate for g.
int decomposition_width(const Graph& g, const BranchDecomposition& bd);

}  // namespace gwl

#endif
