#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwl/constructions.hpp"
#include "gwl/term.hpp"

using namespace gwl;

TEST_CASE("constructors validate labels") {
    CHECK_THROWS_AS(make_create(0, "a"), std::invalid_argument);
    CHECK_THROWS_AS(make_add_edges(2, 2, make_create(1, "a")), std::invalid_argument);
    CHECK_THROWS_AS(make_relabel(1, 1, make_create(1, "a")), std::invalid_argument);
    CHECK_THROWS_AS(make_union(nullptr, make_create(1, "a")), std::invalid_argument);
}

TEST_CASE("evaluation of a K2 and a P3") {
    TermPtr k2 = make_add_edges(1, 2, make_union(make_create(1, "a"), make_create(2, "b")));
    LabeledGraph lg = eval_term(k2);
    CHECK(lg.graph == parse_graph("v a\nv b\ne a b\n"));
    CHECK(lg.labels.at("a") == 1);
    CHECK(lg.labels.at("b") == 2);

    // b gets label 2, edges to both label-1 ends; a and c stay nonadjacent
    TermPtr p3 = make_add_edges(
        1, 2,
        make_union(make_union(make_create(1, "a"), make_create(1, "c")), make_create(2, "b")));
    CHECK(eval_term(p3).graph == parse_graph("v a\nv b\nv c\ne a b\ne b c\n"));

    CHECK(term_width(p3) == 2);
    TermPtr dup = make_union(make_create(1, "a"), make_create(2, "a"));
    CHECK_THROWS_AS(eval_term(dup), std::invalid_argument);
}

TEST_CASE("relabel semantics") {
    TermPtr t = make_add_edges(
        1, 2,
        make_union(make_relabel(2, 1, make_create(2, "a")), make_create(2, "b")));
    CHECK(eval_term(t).graph.has_edge("a", "b"));
    // relabeling an absent label is a no-op
    TermPtr noop = make_relabel(5, 1, make_create(1, "a"));
    CHECK(eval_term(noop).labels.at("a") == 1);
    CHECK(term_width(noop) == 2);  // width counts symbols that occur
}

TEST_CASE("linearity predicate") {
    TermPtr a = make_create(1, "a"), b = make_create(1, "b");
    TermPtr c = make_create(1, "c"), d = make_create(1, "d");
    TermPtr lin = make_union(make_union(a, b), c);
    CHECK(is_linear(lin));
    CHECK(!is_linear(make_union(make_union(a, b), make_union(c, d))));
    CHECK(is_linear(a));
}

TEST_CASE("generator term builders") {
    for (int n : {2, 3, 5}) {
        CHECK(eval_term(build_term_G(n)).graph == gen_G(n));
        CHECK(eval_term(build_term_H(n)).graph == gen_H(n));
        CHECK(eval_term(build_term_Hprime(n)).graph == gen_Hprime(n));
        CHECK(term_width(build_term_G(n)) == 3);
        CHECK(term_width(build_term_H(n)) == 3);
        CHECK(term_width(build_term_Hprime(n)) == 3);

        CHECK(eval_term(build_linear_term_G(n)).graph == gen_G(n));
        CHECK(eval_term(build_linear_term_H(n)).graph == gen_H(n));
        CHECK(eval_term(build_linear_term_Hprime(n)).graph == gen_Hprime(n));
        CHECK(term_width(build_linear_term_G(n)) == 4);
        CHECK(term_width(build_linear_term_H(n)) == 4);
        CHECK(term_width(build_linear_term_Hprime(n)) == 4);
        CHECK(is_linear(build_linear_term_G(n)));
        CHECK(is_linear(build_linear_term_H(n)));
        CHECK(is_linear(build_linear_term_Hprime(n)));
    }
    CHECK_THROWS_AS(build_term_G(1), std::invalid_argument);
}

TEST_CASE("print/parse round trip") {
    TermPtr t = build_term_H(3);
    std::string text = print_term(t);
    CHECK(print_term(parse_term(text)) == text);
    CHECK(eval_term(parse_term(text)).graph == gen_H(3));

    std::string small = "(add 1 2 (u (v 1 a) (v 2 b)))";
    CHECK(print_term(parse_term(small)) == small);

    CHECK_THROWS_AS(parse_term("(v 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_term("(q 1 2 (v 1 a))"), std::invalid_argument);
    CHECK_THROWS_AS(parse_term("(v 1 a) extra"), std::invalid_argument);
}
