#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwl/cliquewidth.hpp"
#include "oracle.hpp"

using namespace gwl;
using gwl_oracle::oracle_width;

namespace {

Graph from_mask(int n, std::uint32_t emask) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("v" + std::to_string(i));
    std::vector<Edge> e;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((emask >> bit) & 1u) e.push_back(make_edge(v[i], v[j]));
    return Graph::from_vertices_edges(v, e);
}

}  // namespace

TEST_CASE("oracle agrees with known values") {
    Graph p4 = parse_graph("v a\nv b\nv c\nv d\ne a b\ne b c\ne c d\n");
    CHECK(oracle_width(p4, false) == 3);
    CHECK(oracle_width(p4, true) == 3);

    Graph k5 = parse_graph("v a\nv b\nv c\nv d\nv e\n"
                           "e a b\ne a c\ne a d\ne a e\ne b c\ne b d\ne b e\n"
                           "e c d\ne c e\ne d e\n");
    CHECK(oracle_width(k5, false) == 2);

    Graph c5 = parse_graph("v a\nv b\nv c\nv d\nv e\ne a b\ne b c\ne c d\ne d e\ne a e\n");
    CHECK(oracle_width(c5, false) == 3);

    Graph lone = parse_graph("v a\n");
    CHECK(oracle_width(lone, false) == 1);
    CHECK(oracle_width(lone, true) == 1);
}

TEST_CASE("oracle matches the DP on every graph with at most 4 vertices") {
    for (int n = 1; n <= 4; ++n) {
        std::uint32_t bits = static_cast<std::uint32_t>(n * (n - 1) / 2);
        for (std::uint32_t emask = 0; emask < (1u << bits); ++emask) {
            Graph g = from_mask(n, emask);
            CAPTURE(n);
            CAPTURE(emask);
            CHECK(oracle_width(g, false) == cwd_exact(g).value);
            CHECK(oracle_width(g, true) == lcwd_exact(g).value);
        }
    }
}
