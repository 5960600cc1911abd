#include "gwl/term.hpp"

#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gwl {

namespace {

void check_label(int l) {
    if (l < 1) throw std::invalid_argument("labels must be positive, got " + std::to_string(l));
}

}  // namespace

TermPtr make_create(int label, std::string name) {
    check_label(label);
    if (name.empty()) throw std::invalid_argument("vertex name must be nonempty");
    auto t = std::make_shared<CwTerm>();
    t->kind = CwTerm::Kind::Create;
    t->label_i = label;
    t->name = std::move(name);
    return t;
}

TermPtr make_union(TermPtr left, TermPtr right) {
    if (!left || !right) throw std::invalid_argument("union operands must be nonnull");
    auto t = std::make_shared<CwTerm>();
    t->kind = CwTerm::Kind::Union;
    t->left = std::move(left);
    t->right = std::move(right);
    return t;
}

TermPtr make_add_edges(int i, int j, TermPtr child) {
    check_label(i);
    check_label(j);
    if (i == j) throw std::invalid_argument("add requires two distinct labels");
    if (!child) throw std::invalid_argument("add child must be nonnull");
    auto t = std::make_shared<CwTerm>();
    t->kind = CwTerm::Kind::AddEdges;
    t->label_i = i;
    t->label_j = j;
    t->left = std::move(child);
    return t;
}

TermPtr make_relabel(int i, int j, TermPtr child) {
    check_label(i);
    check_label(j);
    if (i == j) throw std::invalid_argument("relabel requires two distinct labels");
    if (!child) throw std::invalid_argument("relabel child must be nonnull");
    auto t = std::make_shared<CwTerm>();
    t->kind = CwTerm::Kind::Relabel;
    t->label_i = i;
    t->label_j = j;
    t->left = std::move(child);
    return t;
}

namespace {

struct EvalState {
    std::map<std::string, int> labels;
    std::set<Edge> edges;
};

EvalState eval_rec(const TermPtr& t) {
    switch (t->kind) {
        case CwTerm::Kind::Create: {
            EvalState s;
            s.labels[t->name] = t->label_i;
            return s;
        }
        case CwTerm::Kind::Union: {
            EvalState a = eval_rec(t->left);
            EvalState b = eval_rec(t->right);
            for (const auto& [name, label] : b.labels) {
                if (!a.labels.emplace(name, label).second)
                    throw std::invalid_argument("duplicate vertex name '" + name + "' in union");
            }
            a.edges.insert(b.edges.begin(), b.edges.end());
            return a;
        }
        case CwTerm::Kind::AddEdges: {
            EvalState s = eval_rec(t->left);
            std::vector<std::string> li, lj;
            for (const auto& [name, label] : s.labels) {
                if (label == t->label_i) li.push_back(name);
                if (label == t->label_j) lj.push_back(name);
            }
            for (const auto& a : li)
                for (const auto& b : lj) s.edges.insert(make_edge(a, b));
            return s;
        }
        case CwTerm::Kind::Relabel: {
            EvalState s = eval_rec(t->left);
            for (auto& [name, label] : s.labels)
                if (label == t->label_i) label = t->label_j;
            return s;
        }
    }
    throw std::logic_error("unreachable term kind");
}

}  // namespace

LabeledGraph eval_term(const TermPtr& t) {
    if (!t) throw std::invalid_argument("term must be nonnull");
    EvalState s = eval_rec(t);
    std::vector<std::string> verts;
    for (const auto& [name, label] : s.labels) verts.push_back(name);
    std::vector<Edge> edges(s.edges.begin(), s.edges.end());
    return {Graph::from_vertices_edges(verts, edges), std::move(s.labels)};
}

int term_width(const TermPtr& t) {
    std::set<int> labels;
    std::function<void(const TermPtr&)> walk = [&](const TermPtr& u) {
        if (!u) return;
        switch (u->kind) {
            case CwTerm::Kind::Create:
                labels.insert(u->label_i);
                break;
            case CwTerm::Kind::AddEdges:
            case CwTerm::Kind::Relabel:
                labels.insert(u->label_i);
                labels.insert(u->label_j);
                break;
            case CwTerm::Kind::Union:
                break;
        }
        walk(u->left);
        walk(u->right);
    };
    walk(t);
    return static_cast<int>(labels.size());
}

namespace {

int count_creates(const TermPtr& t) {
    if (!t) return 0;
    if (t->kind == CwTerm::Kind::Create) return 1;
    return count_creates(t->left) + count_creates(t->right);
}

}  // namespace

bool is_linear(const TermPtr& t) {
    if (!t) return true;
    if (t->kind == CwTerm::Kind::Union) {
        if (count_creates(t->left) != 1 && count_creates(t->right) != 1) return false;
    }
    if (t->left && !is_linear(t->left)) return false;
    if (t->right && !is_linear(t->right)) return false;
    return true;
}

// ---- generator witness builders ----
//
// Label discipline for the width-3 terms: dead x-vertices sit at label 1,
// the settled y-layer at label 2, and each group is assembled at label 3
// before being wired to the layer with add(2,3) and folded in by ren(3,2).

namespace {

std::string x_nm(int i) { return "x" + std::to_string(i); }
std::string y_nm(int i, int c) { return "y" + std::to_string(i) + "_" + std::to_string(c); }

void check_n(int n) {
    if (n < 2) throw std::invalid_argument("generators require n >= 2, got " + std::to_string(n));
}

// Group piece on labels {1,3}: the y-vertices of group i at label 3
// (as a clique when with_k4), with x_i attached at label 1.
TermPtr group_piece(int i, bool with_k4) {
    TermPtr acc = make_create(3, y_nm(i, 1));
    for (int c = 2; c <= 4; ++c) {
        TermPtr t = make_union(acc, make_create(1, y_nm(i, c)));
        if (with_k4) t = make_add_edges(1, 3, t);
        acc = make_relabel(1, 3, t);
    }
    return make_add_edges(1, 3, make_union(acc, make_create(1, x_nm(i))));
}

TermPtr build_grouped(int n, bool with_k4, bool with_hub) {
    check_n(n);
    TermPtr acc = with_hub ? make_create(2, "y0") : nullptr;
    for (int i = 1; i <= n; ++i) {
        TermPtr piece = group_piece(i, with_k4);
        TermPtr t = acc ? make_add_edges(2, 3, make_union(acc, piece)) : piece;
        acc = make_relabel(3, 2, t);
    }
    return acc;
}

TermPtr build_pendant_clique(int n) {
    check_n(n);
    TermPtr acc;
    for (int i = 1; i <= n; ++i) {
        TermPtr piece = make_add_edges(
            1, 3, make_union(make_create(3, "y" + std::to_string(i)),
                             make_create(1, x_nm(i))));
        TermPtr t = acc ? make_add_edges(2, 3, make_union(acc, piece)) : piece;
        acc = make_relabel(3, 2, t);
    }
    return acc;
}

// Linear variants, one vertex per union. Labels: 1 dead x's, 2 settled
// y-layer, 4 group under construction, 3 the arriving vertex.
TermPtr linear_add_y(TermPtr acc, const std::string& name, bool within_group_edges) {
    TermPtr t = acc ? make_union(acc, make_create(3, name)) : make_create(3, name);
    if (acc) {
        t = make_add_edges(2, 3, t);
        if (within_group_edges) t = make_add_edges(3, 4, t);
    }
    return make_relabel(3, 4, t);
}

TermPtr linear_close_group(TermPtr acc, const std::string& xname) {
    TermPtr t = make_add_edges(3, 4, make_union(acc, make_create(3, xname)));
    return make_relabel(4, 2, make_relabel(3, 1, t));
}

TermPtr build_linear_grouped(int n, bool with_k4, bool with_hub) {
    check_n(n);
    TermPtr acc;
    if (with_hub) acc = make_relabel(3, 2, make_create(3, "y0"));
    for (int i = 1; i <= n; ++i) {
        for (int c = 1; c <= 4; ++c) acc = linear_add_y(acc, y_nm(i, c), with_k4);
        acc = linear_close_group(acc, x_nm(i));
    }
    return acc;
}

TermPtr build_linear_pendant_clique(int n) {
    check_n(n);
    TermPtr acc;
    for (int i = 1; i <= n; ++i) {
        acc = linear_add_y(acc, "y" + std::to_string(i), false);
        acc = linear_close_group(acc, x_nm(i));
    }
    return acc;
}

}  // namespace

TermPtr build_term_G(int n) { return build_pendant_clique(n); }
TermPtr build_term_H(int n) { return build_grouped(n, false, false); }
TermPtr build_term_Hprime(int n) { return build_grouped(n, true, true); }
TermPtr build_linear_term_G(int n) { return build_linear_pendant_clique(n); }
TermPtr build_linear_term_H(int n) { return build_linear_grouped(n, false, false); }
TermPtr build_linear_term_Hprime(int n) { return build_linear_grouped(n, true, true); }

// ---- s-expression text format ----

std::string print_term(const TermPtr& t) {
    if (!t) throw std::invalid_argument("term must be nonnull");
    std::ostringstream out;
    std::function<void(const TermPtr&)> emit = [&](const TermPtr& u) {
        switch (u->kind) {
            case CwTerm::Kind::Create:
                out << "(v " << u->label_i << " " << u->name << ")";
                break;
            case CwTerm::Kind::Union:
                out << "(u ";
                emit(u->left);
                out << " ";
                emit(u->right);
                out << ")";
                break;
            case CwTerm::Kind::AddEdges:
                out << "(add " << u->label_i << " " << u->label_j << " ";
                emit(u->left);
                out << ")";
                break;
            case CwTerm::Kind::Relabel:
                out << "(ren " << u->label_i << " " << u->label_j << " ";
                emit(u->left);
                out << ")";
                break;
        }
    };
    emit(t);
    return out.str();
}

namespace {

struct Tokens {
    std::vector<std::string> toks;
    std::size_t pos = 0;
    const std::string& peek() {
        if (pos >= toks.size()) throw std::invalid_argument("unexpected end of term text");
        return toks[pos];
    }
    std::string next() {
        std::string t = peek();
        ++pos;
        return t;
    }
    void expect(const std::string& s) {
        std::string t = next();
        if (t != s) throw std::invalid_argument("expected '" + s + "', got '" + t + "'");
    }
};

int parse_label(Tokens& tk) {
    std::string s = tk.next();
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a label, got '" + s + "'");
    }
}

TermPtr parse_rec(Tokens& tk) {
    tk.expect("(");
    std::string op = tk.next();
    TermPtr result;
    if (op == "v") {
        int label = parse_label(tk);
        std::string name = tk.next();
        result = make_create(label, name);
    } else if (op == "u") {
        TermPtr a = parse_rec(tk);
        TermPtr b = parse_rec(tk);
        result = make_union(a, b);
    } else if (op == "add" || op == "ren") {
        int i = parse_label(tk);
        int j = parse_label(tk);
        TermPtr c = parse_rec(tk);
        result = op == "add" ? make_add_edges(i, j, c) : make_relabel(i, j, c);
    } else {
        throw std::invalid_argument("unknown term operator '" + op + "'");
    }
    tk.expect(")");
    return result;
}

}  // namespace

TermPtr parse_term(const std::string& text) {
    Tokens tk;
    std::string cur;
    for (char ch : text) {
        if (ch == '(' || ch == ')') {
            if (!cur.empty()) { tk.toks.push_back(cur); cur.clear(); }
            tk.toks.push_back(std::string(1, ch));
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) { tk.toks.push_back(cur); cur.clear(); }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tk.toks.push_back(cur);
    TermPtr t = parse_rec(tk);
    if (tk.pos != tk.toks.size())
        throw std::invalid_argument("trailing tokens after term");
    return t;
}

}  // namespace gwl
