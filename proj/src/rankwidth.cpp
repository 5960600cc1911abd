#include "gwl/rankwidth.hpp"

#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

#include "gwl/gf2.hpp"

namespace gwl {

std::vector<int> BranchDecomposition::parent_array() const {
    std::vector<int> p;
    p.reserve(nodes.size());
    for (const auto& n : nodes) p.push_back(n.parent);
    return p;
}

std::vector<std::string> BranchDecomposition::leaf_labels() const {
    std::vector<std::string> labels;
    for (const auto& n : nodes)
        if (!n.leaf.empty()) labels.push_back(n.leaf);
    return labels;
}

RankWidthResult rank_width_exact(const Graph& g, int max_vertices) {
    const int n = static_cast<int>(g.vertex_count());
    if (n == 0) throw std::invalid_argument("rank-width of the empty graph is undefined");
    if (n > max_vertices)
        throw std::invalid_argument("rank_width_exact budget: " + std::to_string(n) +
                                    " vertices exceeds the limit of " +
                                    std::to_string(max_vertices));
    BranchDecomposition bd;
    if (n == 1) {
        bd.nodes.push_back({-1, -1, -1, g.vertices()[0]});
        bd.root = 0;
        return {0, bd};
    }

    DenseGraph d = DenseGraph::from(g);
    const std::uint32_t full = (n == 32) ? 0xffffffffu : (1u << n) - 1;
    std::vector<std::int8_t> cutrk(std::size_t{1} << n, -1);
    auto rk = [&](std::uint32_t s) {
        if (cutrk[s] < 0) cutrk[s] = static_cast<std::int8_t>(cut_rank(d, s));
        return static_cast<int>(cutrk[s]);
    };

    for (int k = 0; k <= n; ++k) {
        std::vector<std::uint32_t> split(std::size_t{1} << n, 0);
        std::vector<char> feas(std::size_t{1} << n, 0);
        // subsets in increasing numeric order; submasks precede their superset
        for (std::uint32_t s = 1; s <= full; ++s) {
            if (std::popcount(s) == 1) {
                feas[s] = rk(s) <= k;
                continue;
            }
            if (s != full && rk(s) > k) continue;
            std::uint32_t low = s & (~s + 1);
            for (std::uint32_t s1 = (s - 1) & s; s1; s1 = (s1 - 1) & s) {
                if (!(s1 & low)) continue;  // each split once
                if (feas[s1] && feas[s ^ s1]) {
                    feas[s] = 1;
                    split[s] = s1;
                    break;
                }
            }
        }
        if (!feas[full]) continue;

        std::function<int(std::uint32_t, int)> build = [&](std::uint32_t s, int parent) {
            int id = static_cast<int>(bd.nodes.size());
            bd.nodes.push_back({parent, -1, -1, ""});
            if (std::popcount(s) == 1) {
                bd.nodes[id].leaf = d.names[std::countr_zero(s)];
                return id;
            }
            std::uint32_t s1 = split[s];
            bd.nodes[id].left = build(s1, id);
            bd.nodes[id].right = build(s ^ s1, id);
            return id;
        };
        bd.root = build(full, -1);
        return {k, bd};
    }
    throw std::logic_error("rank-width search did not terminate");
}

int decomposition_width(const Graph& g, const BranchDecomposition& bd) {
    if (bd.root < 0 || bd.nodes.empty())
        throw std::invalid_argument("empty branch decomposition");
    std::set<std::string> leaves;
    for (const auto& nd : bd.nodes) {
        bool is_leaf = !nd.leaf.empty();
        if (is_leaf && (nd.left != -1 || nd.right != -1))
            throw std::invalid_argument("leaf node with children");
        if (!is_leaf && (nd.left == -1 || nd.right == -1))
            throw std::invalid_argument("internal node must have two children");
        if (is_leaf && !leaves.insert(nd.leaf).second)
            throw std::invalid_argument("duplicate leaf label '" + nd.leaf + "'");
    }
    std::set<std::string> vs(g.vertices().begin(), g.vertices().end());
    if (leaves != vs)
        throw std::invalid_argument("leaf labels are not exactly V(G)");

    DenseGraph d = DenseGraph::from(g);
    std::vector<std::uint32_t> below(bd.nodes.size(), 0);
    int width = 0;
    std::function<void(int)> walk = [&](int id) {
        const auto& nd = bd.nodes[id];
        if (!nd.leaf.empty()) {
            below[id] = 1u << g.index_of(nd.leaf);
        } else {
            walk(nd.left);
            walk(nd.right);
            below[id] = below[nd.left] | below[nd.right];
        }
        if (id != bd.root)  // the two root edges are one edge of the unrooted tree
            width = std::max(width, static_cast<int>(cut_rank(d, below[id])));
    };
    walk(bd.root);
    return width;
}

}  // namespace gwl
