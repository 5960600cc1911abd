#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwl/cliquewidth.hpp"
#include "gwl/constructions.hpp"
#include "gwl/gf2.hpp"
#include "gwl/rankwidth.hpp"

using namespace gwl;

namespace {

Graph clique(int n) {
    std::vector<std::string> v;
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i) v.push_back("k" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back(make_edge(v[i], v[j]));
    return Graph::from_vertices_edges(v, e);
}

Graph cycle(int n) {
    std::vector<std::string> v;
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i) v.push_back("c" + std::to_string(i));
    for (int i = 0; i < n; ++i) e.push_back(make_edge(v[i], v[(i + 1) % n]));
    return Graph::from_vertices_edges(v, e);
}

Graph path(int n) {
    std::vector<std::string> v;
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i) {
        v.push_back("p" + std::to_string(i));
        if (i > 1) e.push_back(make_edge(v[i - 2], v[i - 1]));
    }
    return Graph::from_vertices_edges(v, e);
}

void check_witness(const Graph& g, const CwSolveResult& r, bool linear = false) {
    REQUIRE(r.witness);
    CHECK(eval_term(r.witness).graph == g);
    CHECK(term_width(r.witness) == r.value);
    if (linear) CHECK(is_linear(r.witness));
}

}  // namespace

TEST_CASE("gf2 rank") {
    Gf2Matrix m(3, 3);
    m.set(0, 0, true);
    m.set(1, 1, true);
    m.set(2, 0, true);
    CHECK(gf2_rank(m) == 2);
    Gf2Matrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.set(i, i, true);
    CHECK(gf2_rank(id) == 4);
    CHECK(gf2_rank(Gf2Matrix(2, 5)) == 0);
}

TEST_CASE("cut rank") {
    Graph k5 = clique(5);
    // every nontrivial cut of a clique has rank 1
    CHECK(cut_rank(k5, {"k1"}) == 1);
    CHECK(cut_rank(k5, {"k1", "k2", "k3"}) == 1);
    CHECK(cut_rank(k5, {}) == 0);
    Graph c5 = cycle(5);
    CHECK(cut_rank(c5, {"c1", "c2"}) == 2);
    CHECK(cut_rank(c5, {"c1", "c3"}) == 2);

    DenseGraph d = DenseGraph::from(c5);
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
        std::vector<std::string> side;
        for (int i = 0; i < 5; ++i)
            if ((mask >> i) & 1u) side.push_back(d.names[i]);
        CHECK(cut_rank(d, mask) == cut_rank(c5, side));
    }
}

TEST_CASE("rank width with certificate audit") {
    auto check_rwd = [](const Graph& g, int expect) {
        RankWidthResult r = rank_width_exact(g);
        CHECK(r.value == expect);
        if (g.vertex_count() >= 2) CHECK(decomposition_width(g, r.decomposition) == expect);
    };
    check_rwd(clique(5), 1);
    check_rwd(cycle(4), 1);
    check_rwd(cycle(5), 2);
    check_rwd(gen_grid(3), 2);
    check_rwd(Graph::from_vertices_edges({"a"}, {}), 0);
    check_rwd(Graph::from_vertices_edges({"a", "b"}, {}), 0);
}

TEST_CASE("decomposition audit rejects foreign decompositions") {
    RankWidthResult r = rank_width_exact(cycle(4));
    CHECK_THROWS_AS(decomposition_width(cycle(5), r.decomposition), std::invalid_argument);
}

TEST_CASE("clique-width on the reference table") {
    CHECK(cwd_exact(clique(5)).value == 2);
    CHECK(cwd_exact(path(4)).value == 3);
    CHECK(cwd_exact(cycle(5)).value == 3);
    CHECK(cwd_exact(cycle(4)).value == 2);
    CHECK(cwd_exact(gen_G(3)).value == 3);
    CHECK(cwd_exact(Graph::from_vertices_edges({"a"}, {})).value == 1);

    CwSolveResult g3 = cwd_exact(gen_G(3));
    check_witness(gen_G(3), g3);
    CHECK(g3.states_explored > 0);
    CHECK(!cwd_leq(path(4), 2).has_value());
    auto w = cwd_leq(path(4), 3);
    REQUIRE(w.has_value());
    CHECK(eval_term(*w).graph == path(4));
}

TEST_CASE("linear clique-width") {
    CHECK(lcwd_exact(clique(5)).value == 2);
    CHECK(lcwd_exact(path(4)).value == 3);
    CwSolveResult g3 = lcwd_exact(gen_G(3));
    CHECK(g3.value == 4);
    check_witness(gen_G(3), g3, true);
    CHECK(!lcwd_leq(gen_G(3), 3).has_value());
    // lcwd never beats cwd
    CHECK(lcwd_exact(cycle(5)).value >= cwd_exact(cycle(5)).value);
}

TEST_CASE("solver budget guard") {
    CwSolveOptions opts;
    opts.max_vertices = 4;
    CHECK_THROWS_AS(cwd_exact(clique(5), opts), std::invalid_argument);
}

TEST_CASE("cograph recognition") {
    CHECK(is_cograph(clique(5)));
    CHECK(is_cograph(cycle(4)));
    CHECK(!is_cograph(path(4)));
    CHECK(!is_cograph(cycle(5)));
    CHECK(is_cograph(Graph::from_vertices_edges({"a", "b"}, {})));
    // cographs are exactly cwd <= 2 on a small sweep
    for (const Graph& g : {clique(4), cycle(4), path(4), cycle(6), gen_G(2)})
        CHECK(is_cograph(g) == (cwd_exact(g).value <= 2));
}
