#ifndef GWL_GRAPH_HPP
#define GWL_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gwl {

using Edge = std::pair<std::string, std::string>;

/// Normalizes an edge so the lexicographically smaller endpoint comes first.
Edge make_edge(std::string a, std::string b);

/// Simple undirected graph with string vertex identities.
/// Loop-free, no parallel edges, vertices kept in lexicographic order.
/// Immutable after construction; every operation returns a new value.
class Graph {
public:
    Graph() = default;

    static Graph from_vertices_edges(const std::vector<std::string>& verts,
                                     const std::vector<Edge>& edges);

    const std::vector<std::string>& vertices() const { return verts_; }
    const std::set<Edge>& edge_set() const { return edges_; }
    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const std::string& v) const;
    bool has_edge(const std::string& a, const std::string& b) const;
    const std::set<std::string>& neighbors(const std::string& v) const;
    std::size_t degree(const std::string& v) const;
    /// Position of v in the sorted vertex list; throws if absent.
    std::size_t index_of(const std::string& v) const;
    void require_vertex(const std::string& v) const;

    bool operator==(const Graph& other) const {
        return verts_ == other.verts_ && edges_ == other.edges_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    std::vector<std::string> verts_;
    std::set<Edge> edges_;
    std::map<std::string, std::set<std::string>> adj_;
};

struct ContractionResult {
    Graph graph;
    std::map<std::string, std::string> merge_map;  // original -> survivor
};

/// Contracts the edges of f; each component of (V, f) collapses to its
/// lexicographically smallest member. Parallel edges fuse, loops vanish.
ContractionResult contract_edges(const Graph& g, const std::vector<Edge>& f);

/// Induced subgraph on V(g) minus s.
Graph delete_vertices(const Graph& g, const std::vector<std::string>& s);

/// Toggles every adjacency between distinct neighbours of v.
Graph local_complement(const Graph& g, const std::string& v);

/// Removes a degree-2 vertex x and joins its two neighbours.
Graph erase_vertex(const Graph& g, const std::string& x);

/// Shortest-path distance; nullopt when u and v are disconnected.
std::optional<int> distance(const Graph& g, const std::string& u,
                            const std::string& v);

/// True iff no edge of g has both endpoints in x.
bool is_stable(const Graph& g, const std::vector<std::string>& x);

/// Name-wise exact equality.
bool graphs_equal(const Graph& a, const Graph& b);

/// Isomorphism by exhaustive permutation; rejected beyond 8 vertices.
bool canonical_iso_equal(const Graph& a, const Graph& b);

/// Dense adjacency-bitmask view for the solvers. At most 32 vertices.
struct DenseGraph {
    int n = 0;
    std::vector<std::string> names;        // sorted, index == bit position
    std::vector<std::uint32_t> adj;        // adjacency rows

    static DenseGraph from(const Graph& g);
    Graph to_graph() const;
    bool edge(int u, int v) const { return (adj[u] >> v) & 1u; }
};

// --- text format: `v <name>`, `e <a> <b>`, `#` comments ---

Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);
std::string to_dot(const Graph& g);

}  // namespace gwl

#endif
