#include "gwl/cliquewidth.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

namespace gwl {

namespace {

using Mask = std::uint32_t;

// Derivation of a feasible state: union of two feasible substates, a
// class matching giving the post-union partition p0, forced edge
// additions, and a relabel coarsening recorded in the Back entry.
struct Deriv {
    Mask s1 = 0, s2 = 0;
    int p1 = -1, p2 = -1;                       // partition indices in the substates
    std::vector<Mask> p0;                       // classes sorted by minimum member
    std::vector<std::array<int, 2>> origin;     // per p0 class: {P1 class, P2 class} or -1
    std::vector<std::pair<int, int>> add_pairs; // p0 class index pairs carrying cross edges
};

struct Back {
    int deriv = -1;            // -1: leaf (singleton subset)
    std::vector<int> assign;   // p0 class -> final class index
};

struct SubsetStates {
    std::vector<std::vector<Mask>> parts;
    std::map<std::vector<Mask>, int> index;
    std::vector<Back> back;
    std::vector<Deriv> derivs;
};

int lowbit_index(Mask m) { return std::countr_zero(m); }

// canonical order: classes sorted by minimum member
void sort_classes(std::vector<Mask>& classes, std::vector<int>* perm = nullptr) {
    std::vector<int> order(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return lowbit_index(classes[a]) < lowbit_index(classes[b]);
    });
    std::vector<Mask> sorted;
    sorted.reserve(classes.size());
    for (int i : order) sorted.push_back(classes[i]);
    classes = std::move(sorted);
    if (perm) *perm = std::move(order);
}

struct Solver {
    const DenseGraph& d;
    int k;
    bool linear;
    Mask full;
    std::vector<SubsetStates> states;
    std::uint64_t explored = 0;

    Solver(const DenseGraph& dg, int kk, bool lin)
        : d(dg), k(kk), linear(lin),
          full(dg.n == 32 ? 0xffffffffu : (1u << dg.n) - 1),
          states(std::size_t{1} << dg.n) {}

    bool run() {
        std::vector<Mask> by_size;
        by_size.reserve(std::size_t{1} << d.n);
        for (Mask s = 1; s <= full && s != 0; ++s) by_size.push_back(s);
        std::stable_sort(by_size.begin(), by_size.end(), [](Mask a, Mask b) {
            return std::popcount(a) < std::popcount(b);
        });
        for (Mask s : by_size) {
            process_subset(s);
            if (s == full && !states[full].parts.empty()) return true;
        }
        return !states[full].parts.empty();
    }

    void process_subset(Mask s) {
        auto& st = states[s];
        if (std::popcount(s) == 1) {
            st.parts.push_back({s});
            st.index[{s}] = 0;
            st.back.push_back({-1, {}});
            ++explored;
            return;
        }
        if (linear) {
            int pc = std::popcount(s);
            for (int v = 0; v < d.n; ++v) {
                Mask s2 = 1u << v;
                if (!(s & s2)) continue;
                Mask s1 = s ^ s2;
                if (pc == 2 && s2 < s1) continue;  // each 2-subset split once
                process_split(s, s1, s2);
                if (s == full && !st.parts.empty()) return;
            }
        } else {
            Mask low = s & (~s + 1);
            for (Mask s1 = (s - 1) & s; s1; s1 = (s1 - 1) & s) {
                if (!(s1 & low)) continue;  // each split once
                process_split(s, s1, s ^ s1);
                if (s == full && !st.parts.empty()) return;
            }
        }
    }

    void process_split(Mask s, Mask s1, Mask s2) {
        const auto& a = states[s1];
        const auto& b = states[s2];
        if (a.parts.empty() || b.parts.empty()) return;
        Mask comp = full & ~s;
        for (int p1i = 0; p1i < static_cast<int>(a.parts.size()); ++p1i) {
            const auto& part1 = a.parts[p1i];
            const int m1 = static_cast<int>(part1.size());
            std::vector<Mask> row1(m1), uadj1(m1);
            for (int i = 0; i < m1; ++i) {
                row1[i] = d.adj[lowbit_index(part1[i])] & comp;
                Mask u = 0;
                for (Mask c = part1[i]; c; c &= c - 1) u |= d.adj[lowbit_index(c)];
                uadj1[i] = u;
            }
            for (int p2i = 0; p2i < static_cast<int>(b.parts.size()); ++p2i) {
                const auto& part2 = b.parts[p2i];
                const int m2 = static_cast<int>(part2.size());
                std::vector<Mask> row2(m2);
                for (int j = 0; j < m2; ++j)
                    row2[j] = d.adj[lowbit_index(part2[j])] & comp;
                std::vector<int> match(static_cast<std::size_t>(m1), -1);
                std::uint32_t used_b = 0;
                enumerate_matchings(s, s1, s2, p1i, p2i, part1, part2, row1, row2,
                                    uadj1, match, used_b, 0, 0);
                if (s == full && !states[s].parts.empty()) return;
            }
        }
    }

    void enumerate_matchings(Mask s, Mask s1, Mask s2, int p1i, int p2i,
                             const std::vector<Mask>& part1, const std::vector<Mask>& part2,
                             const std::vector<Mask>& row1, const std::vector<Mask>& row2,
                             const std::vector<Mask>& uadj1,
                             std::vector<int>& match, std::uint32_t& used_b,
                             int a, int matched) {
        const int m1 = static_cast<int>(part1.size());
        const int m2 = static_cast<int>(part2.size());
        // lower bound on the final class count even if all remaining match
        int remaining = std::min(m1 - a, m2 - std::popcount(used_b));
        if (m1 + m2 - matched - remaining > k) return;
        if (a == m1) {
            complete_matching(s, s1, s2, p1i, p2i, part1, part2, match);
            return;
        }
        match[a] = -1;
        enumerate_matchings(s, s1, s2, p1i, p2i, part1, part2, row1, row2, uadj1,
                            match, used_b, a + 1, matched);
        if (s == full && !states[s].parts.empty()) return;
        for (int bcls = 0; bcls < m2; ++bcls) {
            if ((used_b >> bcls) & 1u) continue;
            if (row1[a] != row2[bcls]) continue;        // merged class must stay uniform
            if (uadj1[a] & part2[bcls]) continue;       // no cross edge inside one label
            match[a] = bcls;
            used_b |= 1u << bcls;
            enumerate_matchings(s, s1, s2, p1i, p2i, part1, part2, row1, row2, uadj1,
                                match, used_b, a + 1, matched + 1);
            used_b &= ~(1u << bcls);
            match[a] = -1;
            if (s == full && !states[s].parts.empty()) return;
        }
    }

    void complete_matching(Mask s, Mask s1, Mask s2, int p1i, int p2i,
                           const std::vector<Mask>& part1, const std::vector<Mask>& part2,
                           const std::vector<int>& match) {
        const int m1 = static_cast<int>(part1.size());
        const int m2 = static_cast<int>(part2.size());
        std::vector<Mask> p0;
        std::vector<std::array<int, 2>> origin;
        std::uint32_t used_b = 0;
        for (int a = 0; a < m1; ++a) {
            if (match[a] >= 0) {
                p0.push_back(part1[a] | part2[match[a]]);
                origin.push_back({a, match[a]});
                used_b |= 1u << match[a];
            } else {
                p0.push_back(part1[a]);
                origin.push_back({a, -1});
            }
        }
        for (int bcls = 0; bcls < m2; ++bcls)
            if (!((used_b >> bcls) & 1u)) {
                p0.push_back(part2[bcls]);
                origin.push_back({-1, bcls});
            }
        const int m0 = static_cast<int>(p0.size());
        if (m0 > k) return;
        {
            std::vector<int> perm;
            std::vector<Mask> copy = p0;
            sort_classes(copy, &perm);
            std::vector<std::array<int, 2>> og;
            og.reserve(origin.size());
            for (int i : perm) og.push_back(origin[i]);
            p0 = std::move(copy);
            origin = std::move(og);
        }

        // forced additions: every p0 class pair carrying a cross edge must be
        // completely adjacent in g
        std::vector<Mask> u_side1(m0, 0), u_side2(m0, 0);
        for (int i = 0; i < m0; ++i) {
            for (Mask c = p0[i] & s1; c; c &= c - 1) u_side1[i] |= d.adj[lowbit_index(c)];
            for (Mask c = p0[i] & s2; c; c &= c - 1) u_side2[i] |= d.adj[lowbit_index(c)];
        }
        std::vector<std::pair<int, int>> add_pairs;
        for (int i = 0; i < m0; ++i) {
            for (int j = i + 1; j < m0; ++j) {
                bool cross = (u_side1[i] & (p0[j] & s2)) || (u_side2[i] & (p0[j] & s1));
                if (!cross) continue;
                for (Mask c = p0[i]; c; c &= c - 1)
                    if ((d.adj[lowbit_index(c)] & p0[j]) != p0[j]) return;  // impossible add
                add_pairs.emplace_back(i, j);
            }
        }

        auto& st = states[s];
        st.derivs.push_back({s1, s2, p1i, p2i, p0, origin, add_pairs});
        const int deriv_idx = static_cast<int>(st.derivs.size()) - 1;

        // relabel coarsenings: only classes with equal rows toward the
        // complement may merge
        Mask comp = full & ~s;
        std::vector<Mask> row(m0);
        for (int i = 0; i < m0; ++i) row[i] = d.adj[lowbit_index(p0[i])] & comp;
        // restricted-growth enumeration of partitions of p0 classes
        std::vector<int> assign(static_cast<std::size_t>(m0), 0);
        enumerate_coarsenings(s, deriv_idx, row, assign, 0, 0);
    }

    void enumerate_coarsenings(Mask s, int deriv_idx, const std::vector<Mask>& row,
                               std::vector<int>& assign, int i, int groups) {
        auto& st = states[s];
        const auto& p0 = st.derivs[deriv_idx].p0;
        const int m0 = static_cast<int>(p0.size());
        if (i == m0) {
            std::vector<Mask> classes(static_cast<std::size_t>(groups), 0);
            for (int t = 0; t < m0; ++t) classes[assign[t]] |= p0[t];
            std::vector<int> perm;
            sort_classes(classes, &perm);
            std::vector<int> inv(static_cast<std::size_t>(groups));
            for (int t = 0; t < groups; ++t) inv[perm[t]] = t;
            std::vector<int> remapped(assign.begin(), assign.end());
            for (auto& x : remapped) x = inv[x];
            ++explored;
            if (!st.index.count(classes)) {
                st.index[classes] = static_cast<int>(st.parts.size());
                st.parts.push_back(classes);
                st.back.push_back({deriv_idx, remapped});
            }
            return;
        }
        for (int gsel = 0; gsel <= groups && gsel < k; ++gsel) {
            if (gsel < groups) {
                // may only join a group whose members share this row
                int rep = -1;
                for (int t = 0; t < i; ++t)
                    if (assign[t] == gsel) { rep = t; break; }
                if (row[rep] != row[i]) continue;
            }
            assign[i] = gsel;
            enumerate_coarsenings(s, deriv_idx, row, assign, i + 1,
                                  std::max(groups, gsel + 1));
            if (s == full && !st.parts.empty()) return;
        }
    }

    TermPtr witness(Mask s, int pidx, const std::vector<int>& label_of) const {
        const auto& st = states[s];
        const Back& bk = st.back[pidx];
        if (bk.deriv < 0)
            return make_create(label_of[0], d.names[lowbit_index(s)]);
        const Deriv& dv = st.derivs[bk.deriv];
        const int m0 = static_cast<int>(dv.p0.size());
        // assign labels to p0 classes: the first member of each final class
        // inherits the prescribed label, the rest take fresh pool labels
        std::vector<int> p0label(static_cast<std::size_t>(m0), 0);
        std::vector<bool> used(static_cast<std::size_t>(k + 1), false);
        for (int l : label_of) used[l] = true;
        std::vector<bool> class_seen(label_of.size(), false);
        int pool = 1;
        for (int i = 0; i < m0; ++i) {
            int c = bk.assign[i];
            if (!class_seen[c]) {
                class_seen[c] = true;
                p0label[i] = label_of[c];
            } else {
                while (used[pool]) ++pool;
                p0label[i] = pool;
                used[pool] = true;
            }
        }
        const auto& part1 = states[dv.s1].parts[dv.p1];
        const auto& part2 = states[dv.s2].parts[dv.p2];
        std::vector<int> label1(part1.size(), 0), label2(part2.size(), 0);
        for (int i = 0; i < m0; ++i) {
            if (dv.origin[i][0] >= 0) label1[dv.origin[i][0]] = p0label[i];
            if (dv.origin[i][1] >= 0) label2[dv.origin[i][1]] = p0label[i];
        }
        TermPtr t = make_union(witness(dv.s1, dv.p1, label1),
                               witness(dv.s2, dv.p2, label2));
        std::vector<std::pair<int, int>> adds;
        for (auto [i, j] : dv.add_pairs)
            adds.emplace_back(std::min(p0label[i], p0label[j]),
                              std::max(p0label[i], p0label[j]));
        std::sort(adds.begin(), adds.end());
        for (auto [li, lj] : adds) t = make_add_edges(li, lj, t);
        std::vector<std::pair<int, int>> rens;  // (from, to)
        for (int i = 0; i < m0; ++i) {
            int target = label_of[bk.assign[i]];
            if (p0label[i] != target) rens.emplace_back(p0label[i], target);
        }
        std::sort(rens.begin(), rens.end());
        for (auto [from, to] : rens) t = make_relabel(from, to, t);
        return t;
    }
};

TermPtr solve_leq(const Graph& g, int k, bool linear, const CwSolveOptions& opts,
                  std::uint64_t* explored_out) {
    if (k < 1) throw std::invalid_argument("clique-width bound must be at least 1");
    const int n = static_cast<int>(g.vertex_count());
    if (n == 0) throw std::invalid_argument("clique-width of the empty graph is undefined");
    if (n > opts.max_vertices)
        throw std::invalid_argument("cwd solver budget: " + std::to_string(n) +
                                    " vertices exceeds the limit of " +
                                    std::to_string(opts.max_vertices));
    DenseGraph d = DenseGraph::from(g);
    Solver solver(d, k, linear);
    bool ok = solver.run();
    if (explored_out) *explored_out += solver.explored;
    if (!ok) return nullptr;
    const auto& top = solver.states[solver.full].parts[0];
    std::vector<int> label_of(top.size());
    for (std::size_t i = 0; i < top.size(); ++i) label_of[i] = static_cast<int>(i) + 1;
    TermPtr t = solver.witness(solver.full, 0, label_of);
    LabeledGraph lg = eval_term(t);
    if (lg.graph != g)
        throw std::logic_error("internal: witness term does not evaluate to the input graph");
    if (term_width(t) > k)
        throw std::logic_error("internal: witness term exceeds the label budget");
    if (linear && !is_linear(t))
        throw std::logic_error("internal: linear witness term is not linear");
    return t;
}

CwSolveResult solve_exact(const Graph& g, bool linear, const CwSolveOptions& opts) {
    std::uint64_t explored = 0;
    for (int k = 1; k <= opts.max_k; ++k) {
        TermPtr t = solve_leq(g, k, linear, opts, &explored);
        if (t) return {k, t, explored};
    }
    throw std::runtime_error("clique-width exceeds the search budget (partial bound: value > " +
                             std::to_string(opts.max_k) + ")");
}

}  // namespace

std::optional<TermPtr> cwd_leq(const Graph& g, int k, const CwSolveOptions& opts) {
    TermPtr t = solve_leq(g, k, false, opts, nullptr);
    if (!t) return std::nullopt;
    return t;
}

CwSolveResult cwd_exact(const Graph& g, const CwSolveOptions& opts) {
    return solve_exact(g, false, opts);
}

std::optional<TermPtr> lcwd_leq(const Graph& g, int k, const CwSolveOptions& opts) {
    TermPtr t = solve_leq(g, k, true, opts, nullptr);
    if (!t) return std::nullopt;
    return t;
}

CwSolveResult lcwd_exact(const Graph& g, const CwSolveOptions& opts) {
    return solve_exact(g, true, opts);
}

namespace {

std::vector<Mask> components(const std::vector<Mask>& adj, Mask within, bool complemented) {
    std::vector<Mask> comps;
    Mask left = within;
    while (left) {
        Mask seed = left & (~left + 1);
        Mask comp = 0, frontier = seed;
        while (frontier) {
            comp |= frontier;
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) {
                int v = std::countr_zero(f);
                Mask nb = complemented ? (~adj[v] & within & ~(Mask{1} << v)) : adj[v];
                next |= nb & within & ~comp;
            }
            frontier = next;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

bool cograph_rec(const std::vector<Mask>& adj, Mask within) {
    if (std::popcount(within) <= 1) return true;
    auto comps = components(adj, within, false);
    if (comps.size() > 1) {
        for (Mask c : comps)
            if (!cograph_rec(adj, c)) return false;
        return true;
    }
    auto cocomps = components(adj, within, true);
    if (cocomps.size() == 1) return false;
    for (Mask c : cocomps)
        if (!cograph_rec(adj, c)) return false;
    return true;
}

}  // namespace

bool is_cograph(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    DenseGraph d = DenseGraph::from(g);
    Mask full = d.n == 32 ? 0xffffffffu : (1u << d.n) - 1;
    return cograph_rec(d.adj, full);
}

}  // namespace gwl
