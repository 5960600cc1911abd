#ifndef GWL_TERM_HPP
#define GWL_TERM_HPP

#include <map>
#include <memory>
#include <string>

#include "gwl/graph.hpp"

namespace gwl {

/// Clique-width expression tree: create / disjoint union / add edges
/// between two label classes / relabel. Labels are positive integers.
struct CwTerm;
using TermPtr = std::shared_ptr<const CwTerm>;

struct CwTerm {
    enum class Kind { Create, Union, AddEdges, Relabel };
    Kind kind;
    int label_i = 0;        // Create label, or first label of AddEdges/Relabel
    int label_j = 0;        // second label of AddEdges/Relabel
    std::string name;       // Create only
    TermPtr left;           // Union left, or the unary child
    TermPtr right;          // Union right
};

TermPtr make_create(int label, std::string name);
TermPtr make_union(TermPtr left, TermPtr right);
TermPtr make_add_edges(int i, int j, TermPtr child);
TermPtr make_relabel(int i, int j, TermPtr child);

struct LabeledGraph {
    Graph graph;
    std::map<std::string, int> labels;  // covers exactly V(graph)
};

/// Evaluates a term; rejects duplicate vertex names.
LabeledGraph eval_term(const TermPtr& t);

/// Number of distinct label symbols occurring in the term.
int term_width(const TermPtr& t);

/// Linearity: every union has an operand with exactly one create.
bool is_linear(const TermPtr& t);

// Witness builders for the generator families; width-3 terms and
// width-4 linear terms. All require n >= 2.
TermPtr build_term_G(int n);
TermPtr build_term_H(int n);
TermPtr build_term_Hprime(int n);
TermPtr build_linear_term_G(int n);
TermPtr build_linear_term_H(int n);
TermPtr build_linear_term_Hprime(int n);

// s-expression format: (v <label> <name>), (u <t> <t>),
// (add <i> <j> <t>), (ren <i> <j> <t>). Print/parse round-trip byte-exact.
std::string print_term(const TermPtr& t);
TermPtr parse_term(const std::string& text);

}  // namespace gwl

#endif
