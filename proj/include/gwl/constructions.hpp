#ifndef GWL_CONSTRUCTIONS_HPP
#define GWL_CONSTRUCTIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "gwl/graph.hpp"

namespace gwl {

// Naming convention shared by the generators: x-vertices "x{i}",
// group copies "y{i}_{c}" for c in 1..4, hub "y0".
std::string x_name(int i);
std::string y_name(int i, int c);

/// Pendant-clique graph: y-clique K_n with a pendant x_i on each y_i.
Graph gen_G(int n);

/// G_n with each y_i replaced by four pairwise nonadjacent copies:
/// 5n vertices, 8n^2 - 4n edges.
Graph gen_H(int n);

/// H_n with K_4 groups and a hub y0 adjacent to every y-vertex:
/// 5n + 1 vertices, 8n^2 + 6n edges.
Graph gen_Hprime(int n);

/// n x n grid, vertices "x{r*n+c+1}" row-major.
Graph gen_grid(int n);

struct ProperEdgeColoring {
    Graph base;
    std::map<Edge, int> color;  // colors in {1,2,3,4}
};

/// Every two adjacent edges must have different colors.
bool coloring_is_proper(const ProperEdgeColoring& r);

/// Proper 4-edge-coloring of the n x n grid: horizontal edges alternate
/// colors 1/2 by column, vertical edges alternate 3/4 by row.
ProperEdgeColoring grid_coloring(int n);

/// Contraction set: one edge y{i}_c - y{j}_c per edge x{i}-x{j}
/// of r.base colored c. Always a matching when r is proper.
std::vector<Edge> contraction_set(const Graph& h, const ProperEdgeColoring& r);

/// Distance-2 graph on a stable set x: vertex set x, edge u-v iff u,v are
/// at distance exactly 2 in g.
Graph alpha(const Graph& g, const std::vector<std::string>& x);

/// Coloring export: lines `c <name> <name> <color>`.
std::string format_coloring(const ProperEdgeColoring& r);

// Induced-topological-minor script translation: erase/delete steps become
// local-complement/delete steps with the identical result.
struct ItmStep {
    enum class Kind { Erase, Delete };
    Kind kind;
    std::string vertex;
};

struct VmStep {
    enum class Kind { LocalComplement, Delete };
    Kind kind;
    std::string vertex;
};

std::vector<VmStep> itm_as_vertex_minor(const Graph& g, const std::vector<ItmStep>& script);
Graph apply_itm_script(const Graph& g, const std::vector<ItmStep>& script);
Graph apply_vm_script(const Graph& g, const std::vector<VmStep>& script);

}  // namespace gwl

#endif
