#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gwl/constructions.hpp"

using namespace gwl;

TEST_CASE("generator counts") {
    for (int n = 2; n <= 10; ++n) {
        Graph g = gen_G(n), h = gen_H(n), hp = gen_Hprime(n);
        CHECK(g.vertex_count() == static_cast<std::size_t>(2 * n));
        CHECK(g.edge_count() == static_cast<std::size_t>(n + n * (n - 1) / 2));
        CHECK(h.vertex_count() == static_cast<std::size_t>(5 * n));
        CHECK(h.edge_count() == static_cast<std::size_t>(8 * n * n - 4 * n));
        CHECK(hp.vertex_count() == static_cast<std::size_t>(5 * n + 1));
        CHECK(hp.edge_count() == static_cast<std::size_t>(8 * n * n + 6 * n));
    }
    CHECK_THROWS_AS(gen_H(1), std::invalid_argument);
}

TEST_CASE("group structure") {
    Graph h = gen_H(4), hp = gen_Hprime(4);
    for (int i = 1; i <= 4; ++i) {
        std::vector<std::string> group;
        for (int c = 1; c <= 4; ++c) group.push_back(y_name(i, c));
        CHECK(is_stable(h, group));  // H groups are stable
        for (int c = 1; c <= 4; ++c)
            for (int e = c + 1; e <= 4; ++e)  // H' groups induce K4
                CHECK(hp.has_edge(y_name(i, c), y_name(i, e)));
        CHECK(h.has_edge(x_name(i), y_name(i, 2)));
    }
    // H' minus y0 and the intra-group edges is exactly H
    Graph stripped = delete_vertices(hp, {"y0"});
    std::vector<Edge> keep;
    for (const auto& e : stripped.edge_set()) {
        bool intra = false;
        for (int i = 1; i <= 4 && !intra; ++i)
            for (int c = 1; c <= 4 && !intra; ++c)
                for (int d = c + 1; d <= 4 && !intra; ++d)
                    intra = e == make_edge(y_name(i, c), y_name(i, d));
        if (!intra) keep.push_back(e);
    }
    CHECK(Graph::from_vertices_edges(stripped.vertices(), keep) == h);
}

TEST_CASE("grid and its coloring") {
    Graph g = gen_grid(3);
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 12);
    CHECK(g.has_edge("x1", "x2"));
    CHECK(g.has_edge("x1", "x4"));  // row-major numbering
    CHECK(!g.has_edge("x3", "x4"));
    for (int n = 2; n <= 6; ++n) CHECK(coloring_is_proper(grid_coloring(n)));

    ProperEdgeColoring bad = grid_coloring(2);
    bad.color[make_edge("x1", "x2")] = bad.color.at(make_edge("x1", "x3"));
    CHECK(!coloring_is_proper(bad));
}

TEST_CASE("contraction set is a matching") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        // random proper coloring of a random small base graph on x1..x6
        int m = 3 + static_cast<int>(rng() % 4);
        std::vector<std::string> verts;
        for (int i = 1; i <= m; ++i) verts.push_back(x_name(i));
        ProperEdgeColoring r;
        std::vector<Edge> edges;
        std::map<std::string, std::set<int>> used;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                if (rng() % 2) continue;
                std::vector<int> free;
                for (int c = 1; c <= 4; ++c)
                    if (!used[x_name(i)].count(c) && !used[x_name(j)].count(c)) free.push_back(c);
                if (free.empty()) continue;
                int c = free[rng() % free.size()];
                Edge e = make_edge(x_name(i), x_name(j));
                edges.push_back(e);
                r.color[e] = c;
                used[x_name(i)].insert(c);
                used[x_name(j)].insert(c);
            }
        r.base = Graph::from_vertices_edges(verts, edges);
        REQUIRE(coloring_is_proper(r));
        Graph h = gen_H(m);
        std::vector<Edge> f = contraction_set(h, r);
        CHECK(f.size() == r.color.size());
        std::set<std::string> touched;
        for (const auto& e : f) {
            CHECK(h.has_edge(e.first, e.second));
            CHECK(touched.insert(e.first).second);   // pairwise nonadjacent:
            CHECK(touched.insert(e.second).second);  // no endpoint repeats
        }
    }
}

TEST_CASE("contraction set rejects foreign names") {
    ProperEdgeColoring r;
    r.base = Graph::from_vertices_edges({"u1", "u2"}, {make_edge("u1", "u2")});
    r.color[make_edge("u1", "u2")] = 1;
    CHECK_THROWS_AS(contraction_set(gen_H(2), r), std::invalid_argument);
}

TEST_CASE("alpha") {
    // path x1 - m - x2: x1 and x2 are at distance 2
    Graph g = parse_graph("v m\nv x1\nv x2\nv x3\ne m x1\ne m x2\n");
    Graph a = alpha(g, {"x1", "x2", "x3"});
    CHECK(a == parse_graph("v x1\nv x2\nv x3\ne x1 x2\n"));
    CHECK_THROWS_AS(alpha(parse_graph("v a\nv b\ne a b\n"), {"a", "b"}),
                    std::invalid_argument);
}

TEST_CASE("coloring export format") {
    ProperEdgeColoring r = grid_coloring(2);
    std::string text = format_coloring(r);
    CHECK(text.find("c x1 x2 1") != std::string::npos);
    CHECK(text.find("c x1 x3 3") != std::string::npos);
}

TEST_CASE("induced topological minor as vertex-minor") {
    Graph c5 = parse_graph("v a\nv b\nv c\nv d\nv e\ne a b\ne b c\ne c d\ne d e\ne a e\n");
    std::vector<ItmStep> script{{ItmStep::Kind::Erase, "b"}, {ItmStep::Kind::Delete, "e"}};
    std::vector<VmStep> vm = itm_as_vertex_minor(c5, script);
    CHECK(apply_vm_script(c5, vm) == apply_itm_script(c5, script));

    // erasing inside a triangle needs no local complementation
    Graph k3 = parse_graph("v a\nv b\nv c\ne a b\ne a c\ne b c\n");
    std::vector<VmStep> vm2 = itm_as_vertex_minor(k3, {{ItmStep::Kind::Erase, "a"}});
    CHECK(vm2.size() == 1);
    CHECK(vm2[0].kind == VmStep::Kind::Delete);

    // deleting b leaves a with a single neighbour, so the erase must fail
    CHECK_THROWS_WITH_AS(itm_as_vertex_minor(c5, {{ItmStep::Kind::Delete, "b"},
                                                  {ItmStep::Kind::Erase, "a"}}),
                         doctest::Contains("step 1"), std::invalid_argument);
}
