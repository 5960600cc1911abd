#include "gwl/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gwl {

Edge make_edge(std::string a, std::string b) {
    if (a == b) throw std::invalid_argument("loop edge {" + a + "," + b + "} is not allowed");
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

Graph Graph::from_vertices_edges(const std::vector<std::string>& verts,
                                 const std::vector<Edge>& edges) {
    Graph g;
    g.verts_ = verts;
    std::sort(g.verts_.begin(), g.verts_.end());
    auto dup = std::adjacent_find(g.verts_.begin(), g.verts_.end());
    if (dup != g.verts_.end())
        throw std::invalid_argument("duplicate vertex '" + *dup + "'");
    for (const auto& v : g.verts_) g.adj_[v];
    for (const auto& e : edges) {
        Edge n = make_edge(e.first, e.second);
        if (!g.adj_.count(n.first))
            throw std::invalid_argument("edge endpoint '" + n.first + "' is not a vertex");
        if (!g.adj_.count(n.second))
            throw std::invalid_argument("edge endpoint '" + n.second + "' is not a vertex");
        g.edges_.insert(n);
        g.adj_[n.first].insert(n.second);
        g.adj_[n.second].insert(n.first);
    }
    return g;
}

bool Graph::has_vertex(const std::string& v) const { return adj_.count(v) != 0; }

bool Graph::has_edge(const std::string& a, const std::string& b) const {
    if (a == b) return false;
    return edges_.count(a < b ? Edge{a, b} : Edge{b, a}) != 0;
}

void Graph::require_vertex(const std::string& v) const {
    if (!has_vertex(v)) throw std::invalid_argument("unknown vertex '" + v + "'");
}

const std::set<std::string>& Graph::neighbors(const std::string& v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex '" + v + "'");
    return it->second;
}

std::size_t Graph::degree(const std::string& v) const { return neighbors(v).size(); }

std::size_t Graph::index_of(const std::string& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v)
        throw std::invalid_argument("unknown vertex '" + v + "'");
    return static_cast<std::size_t>(it - verts_.begin());
}

ContractionResult contract_edges(const Graph& g, const std::vector<Edge>& f) {
    for (const auto& e : f) {
        Edge n = make_edge(e.first, e.second);
        if (!g.has_edge(n.first, n.second))
            throw std::invalid_argument("contraction edge {" + n.first + "," + n.second +
                                        "} is not an edge of the graph");
    }
    // union-find over vertices, restricted to f
    std::map<std::string, std::string> parent;
    for (const auto& v : g.vertices()) parent[v] = v;
    auto find = [&](const std::string& v) {
        std::string r = v;
        while (parent[r] != r) r = parent[r];
        std::string c = v;
        while (parent[c] != r) { std::string nx = parent[c]; parent[c] = r; c = nx; }
        return r;
    };
    for (const auto& e : f) {
        std::string ra = find(e.first), rb = find(e.second);
        if (ra == rb) continue;
        // survivor is the lexicographically smallest component member
        if (rb < ra) std::swap(ra, rb);
        parent[rb] = ra;
    }
    std::map<std::string, std::string> merge_map;
    std::vector<std::string> verts;
    for (const auto& v : g.vertices()) {
        std::string r = find(v);
        merge_map[v] = r;
        if (r == v) verts.push_back(v);
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edge_set()) {
        std::string a = merge_map[e.first], b = merge_map[e.second];
        if (a != b) edges.push_back(make_edge(a, b));
    }
    return {Graph::from_vertices_edges(verts, edges), std::move(merge_map)};
}

Graph delete_vertices(const Graph& g, const std::vector<std::string>& s) {
    std::set<std::string> gone;
    for (const auto& v : s) {
        g.require_vertex(v);
        gone.insert(v);
    }
    std::vector<std::string> verts;
    for (const auto& v : g.vertices())
        if (!gone.count(v)) verts.push_back(v);
    std::vector<Edge> edges;
    for (const auto& e : g.edge_set())
        if (!gone.count(e.first) && !gone.count(e.second)) edges.push_back(e);
    return Graph::from_vertices_edges(verts, edges);
}

Graph local_complement(const Graph& g, const std::string& v) {
    const auto& nb = g.neighbors(v);
    std::vector<std::string> ns(nb.begin(), nb.end());
    std::vector<Edge> edges(g.edge_set().begin(), g.edge_set().end());
    std::set<Edge> es(edges.begin(), edges.end());
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = i + 1; j < ns.size(); ++j) {
            Edge e = make_edge(ns[i], ns[j]);
            if (es.count(e)) es.erase(e); else es.insert(e);
        }
    return Graph::from_vertices_edges(g.vertices(),
                                      std::vector<Edge>(es.begin(), es.end()));
}

Graph erase_vertex(const Graph& g, const std::string& x) {
    const auto& nb = g.neighbors(x);
    if (nb.size() != 2)
        throw std::invalid_argument("cannot erase '" + x + "': degree is " +
                                    std::to_string(nb.size()) + ", not 2");
    auto it = nb.begin();
    std::string y = *it++;
    std::string z = *it;
    std::vector<std::string> verts;
    for (const auto& v : g.vertices())
        if (v != x) verts.push_back(v);
    std::vector<Edge> edges;
    for (const auto& e : g.edge_set())
        if (e.first != x && e.second != x) edges.push_back(e);
    if (!g.has_edge(y, z)) edges.push_back(make_edge(y, z));
    return Graph::from_vertices_edges(verts, edges);
}

std::optional<int> distance(const Graph& g, const std::string& u, const std::string& v) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v) return 0;
    std::map<std::string, int> dist;
    std::deque<std::string> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const auto& w : g.neighbors(cur)) {
            if (dist.count(w)) continue;
            dist[w] = dist[cur] + 1;
            if (w == v) return dist[w];
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

bool is_stable(const Graph& g, const std::vector<std::string>& x) {
    for (const auto& v : x) g.require_vertex(v);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (g.has_edge(x[i], x[j])) return false;
    return true;
}

bool graphs_equal(const Graph& a, const Graph& b) { return a == b; }

bool canonical_iso_equal(const Graph& a, const Graph& b) {
    if (a.vertex_count() > 8 || b.vertex_count() > 8)
        throw std::invalid_argument("canonical_iso_equal supports at most 8 vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    DenseGraph da = DenseGraph::from(a), db = DenseGraph::from(b);
    std::vector<int> perm(static_cast<std::size_t>(da.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < da.n && ok; ++u)
            for (int v = u + 1; v < da.n && ok; ++v)
                if (da.edge(u, v) != db.edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

DenseGraph DenseGraph::from(const Graph& g) {
    if (g.vertex_count() > 32)
        throw std::invalid_argument("dense view supports at most 32 vertices");
    DenseGraph d;
    d.n = static_cast<int>(g.vertex_count());
    d.names = g.vertices();
    d.adj.assign(static_cast<std::size_t>(d.n), 0);
    for (const auto& e : g.edge_set()) {
        auto u = g.index_of(e.first), v = g.index_of(e.second);
        d.adj[u] |= 1u << v;
        d.adj[v] |= 1u << u;
    }
    return d;
}

Graph DenseGraph::to_graph() const {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(u, v)) edges.push_back(make_edge(names[u], names[v]));
    return Graph::from_vertices_edges(names, edges);
}

Graph parse_graph(const std::string& text) {
    std::vector<std::string> verts;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::set<std::string> declared;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tag == "v") {
            std::string name;
            if (!(ls >> name)) fail("vertex line needs a name");
            if (!declared.insert(name).second) fail("duplicate vertex '" + name + "'");
            verts.push_back(name);
        } else if (tag == "e") {
            std::string a, b;
            if (!(ls >> a >> b)) fail("edge line needs two names");
            if (a == b) fail("loop edge on '" + a + "'");
            if (!declared.count(a)) fail("edge endpoint '" + a + "' not declared");
            if (!declared.count(b)) fail("edge endpoint '" + b + "' not declared");
            Edge e = make_edge(a, b);
            if (!seen.insert(e).second)
                fail("duplicate edge {" + e.first + "," + e.second + "}");
            edges.push_back(e);
        } else {
            fail("unknown record '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra && extra[0] != '#')
            fail("trailing token '" + extra + "'");
    }
    return Graph::from_vertices_edges(verts, edges);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices()) out << "v " << v << "\n";
    for (const auto& e : g.edge_set()) out << "e " << e.first << " " << e.second << "\n";
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
    for (const auto& e : g.edge_set())
        out << "  \"" << e.first << "\" -- \"" << e.second << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace gwl
