#include "gwl/constructions.hpp"

#include <sstream>
#include <stdexcept>

namespace gwl {

namespace {

void check_n(int n) {
    if (n < 2) throw std::invalid_argument("generators require n >= 2, got " + std::to_string(n));
}

}  // namespace

std::string x_name(int i) { return "x" + std::to_string(i); }
std::string y_name(int i, int c) { return "y" + std::to_string(i) + "_" + std::to_string(c); }

Graph gen_G(int n) {
    check_n(n);
    std::vector<std::string> verts;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        verts.push_back(x_name(i));
        verts.push_back("y" + std::to_string(i));
        edges.push_back(make_edge(x_name(i), "y" + std::to_string(i)));
        for (int j = i + 1; j <= n; ++j)
            edges.push_back(make_edge("y" + std::to_string(i), "y" + std::to_string(j)));
    }
    return Graph::from_vertices_edges(verts, edges);
}

Graph gen_H(int n) {
    check_n(n);
    std::vector<std::string> verts;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        verts.push_back(x_name(i));
        for (int c = 1; c <= 4; ++c) {
            verts.push_back(y_name(i, c));
            edges.push_back(make_edge(x_name(i), y_name(i, c)));
            for (int j = i + 1; j <= n; ++j)
                for (int e = 1; e <= 4; ++e)
                    edges.push_back(make_edge(y_name(i, c), y_name(j, e)));
        }
    }
    return Graph::from_vertices_edges(verts, edges);
}

Graph gen_Hprime(int n) {
    check_n(n);
    Graph h = gen_H(n);
    std::vector<std::string> verts = h.vertices();
    verts.push_back("y0");
    std::vector<Edge> edges(h.edge_set().begin(), h.edge_set().end());
    for (int i = 1; i <= n; ++i)
        for (int c = 1; c <= 4; ++c) {
            edges.push_back(make_edge("y0", y_name(i, c)));
            for (int e = c + 1; e <= 4; ++e)
                edges.push_back(make_edge(y_name(i, c), y_name(i, e)));
        }
    return Graph::from_vertices_edges(verts, edges);
}

Graph gen_grid(int n) {
    check_n(n);
    auto name = [n](int r, int c) { return x_name(r * n + c + 1); };
    std::vector<std::string> verts;
    std::vector<Edge> edges;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            verts.push_back(name(r, c));
            if (c + 1 < n) edges.push_back(make_edge(name(r, c), name(r, c + 1)));
            if (r + 1 < n) edges.push_back(make_edge(name(r, c), name(r + 1, c)));
        }
    return Graph::from_vertices_edges(verts, edges);
}

bool coloring_is_proper(const ProperEdgeColoring& r) {
    for (const auto& [e, c] : r.color) {
        if (c < 1 || c > 4) return false;
        if (!r.base.has_edge(e.first, e.second)) return false;
    }
    if (r.color.size() != r.base.edge_count()) return false;
    for (const auto& v : r.base.vertices()) {
        std::vector<int> seen;
        for (const auto& w : r.base.neighbors(v)) {
            int c = r.color.at(make_edge(v, w));
            for (int s : seen)
                if (s == c) return false;
            seen.push_back(c);
        }
    }
    return true;
}

ProperEdgeColoring grid_coloring(int n) {
    ProperEdgeColoring r;
    r.base = gen_grid(n);
    auto name = [n](int row, int col) { return x_name(row * n + col + 1); };
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) {
            if (col + 1 < n)
                r.color[make_edge(name(row, col), name(row, col + 1))] = col % 2 == 0 ? 1 : 2;
            if (row + 1 < n)
                r.color[make_edge(name(row, col), name(row + 1, col))] = row % 2 == 0 ? 3 : 4;
        }
    return r;
}

std::vector<Edge> contraction_set(const Graph& h, const ProperEdgeColoring& r) {
    std::vector<Edge> f;
    for (const auto& [e, c] : r.color) {
        // base vertex names are x{i}; strip the prefix to find the group index
        auto idx = [&](const std::string& name) {
            if (name.size() < 2 || name[0] != 'x')
                throw std::invalid_argument("coloring base vertex '" + name +
                                            "' does not follow the x{i} convention");
            return std::stoi(name.substr(1));
        };
        Edge ye = make_edge(y_name(idx(e.first), c), y_name(idx(e.second), c));
        if (!h.has_vertex(ye.first) || !h.has_vertex(ye.second))
            throw std::invalid_argument("coloring base vertex set does not match the host graph: " +
                                        ye.first + " or " + ye.second + " missing");
        f.push_back(ye);
    }
    return f;
}

Graph alpha(const Graph& g, const std::vector<std::string>& x) {
    if (!is_stable(g, x))
        throw std::invalid_argument("alpha is defined only for stable vertex sets");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            // distance 2 on a stable set == common neighbour
            const auto& nu = g.neighbors(x[i]);
            const auto& nv = g.neighbors(x[j]);
            bool common = false;
            for (const auto& w : nu)
                if (nv.count(w)) { common = true; break; }
            if (common) edges.push_back(make_edge(x[i], x[j]));
        }
    return Graph::from_vertices_edges(x, edges);
}

std::string format_coloring(const ProperEdgeColoring& r) {
    std::ostringstream out;
    for (const auto& [e, c] : r.color)
        out << "c " << e.first << " " << e.second << " " << c << "\n";
    return out.str();
}

std::vector<VmStep> itm_as_vertex_minor(const Graph& g, const std::vector<ItmStep>& script) {
    std::vector<VmStep> out;
    Graph cur = g;
    for (std::size_t i = 0; i < script.size(); ++i) {
        const auto& step = script[i];
        try {
            if (step.kind == ItmStep::Kind::Delete) {
                cur = delete_vertices(cur, {step.vertex});
                out.push_back({VmStep::Kind::Delete, step.vertex});
            } else {
                const auto& nb = cur.neighbors(step.vertex);
                if (nb.size() != 2)
                    throw std::invalid_argument("erase target '" + step.vertex +
                                                "' has degree " + std::to_string(nb.size()));
                auto it = nb.begin();
                std::string y = *it++;
                std::string z = *it;
                if (!cur.has_edge(y, z)) {
                    out.push_back({VmStep::Kind::LocalComplement, step.vertex});
                    cur = local_complement(cur, step.vertex);
                }
                out.push_back({VmStep::Kind::Delete, step.vertex});
                cur = delete_vertices(cur, {step.vertex});
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("script step " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

Graph apply_itm_script(const Graph& g, const std::vector<ItmStep>& script) {
    Graph cur = g;
    for (const auto& step : script)
        cur = step.kind == ItmStep::Kind::Erase ? erase_vertex(cur, step.vertex)
                                                : delete_vertices(cur, {step.vertex});
    return cur;
}

Graph apply_vm_script(const Graph& g, const std::vector<VmStep>& script) {
    Graph cur = g;
    for (const auto& step : script)
        cur = step.kind == VmStep::Kind::LocalComplement ? local_complement(cur, step.vertex)
                                                         : delete_vertices(cur, {step.vertex});
    return cur;
}

}  // namespace gwl
