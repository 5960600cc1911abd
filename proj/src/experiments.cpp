#include "gwl/experiments.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gwl/cliquewidth.hpp"
#include "gwl/constructions.hpp"
#include "gwl/gf2.hpp"
#include "gwl/rankwidth.hpp"

namespace gwl {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

StageStat stat(const std::string& name, const Graph& g) {
    return {name, g.vertex_count(), g.edge_count()};
}

}  // namespace

nlohmann::json PipelineReport::to_json(bool timings) const {
    nlohmann::json j;
    j["stages"] = nlohmann::json::array();
    for (const auto& s : stages)
        j["stages"].push_back({{"name", s.name}, {"vertices", s.vertices}, {"edges", s.edges}});
    j["verdict"] = verdict;
    if (!failure.empty()) j["failure"] = failure;
    j["widths"] = nlohmann::json::object();
    for (const auto& [k, v] : widths) j["widths"][k] = v;
    if (timings) j["elapsed_ms"] = elapsed_ms;
    return j;
}

nlohmann::json SuiteReport::to_json(bool timings) const {
    nlohmann::json j;
    j["graphs_checked"] = graphs_checked;
    j["steps_checked"] = steps_checked;
    j["violations"] = violations;
    j["findings"] = findings;
    if (timings) j["elapsed_ms"] = elapsed_ms;
    return j;
}

// ---- grid recovery, transduction route ----

PipelineReport prop1_pipeline(int m) {
    if (m < 2 || m > 6)
        throw std::invalid_argument("prop1_pipeline supports 2 <= m <= 6, got " + std::to_string(m));
    auto start = Clock::now();
    PipelineReport rep;
    const int n = m * m;

    Graph h = gen_H(n);
    rep.stages.push_back(stat("gen_H(" + std::to_string(n) + ")", h));

    ProperEdgeColoring r = grid_coloring(m);
    if (!coloring_is_proper(r)) {
        rep.failure = "grid_coloring";
        rep.elapsed_ms = ms_since(start);
        return rep;
    }
    std::vector<Edge> f = contraction_set(h, r);
    ContractionResult k = contract_edges(h, f);
    rep.stages.push_back(stat("contract", k.graph));

    std::vector<std::string> x;
    for (int i = 1; i <= n; ++i) x.push_back(x_name(i));
    if (!is_stable(k.graph, x)) {
        rep.failure = "x-set not stable after contraction";
        rep.elapsed_ms = ms_since(start);
        return rep;
    }
    Graph recovered = alpha(k.graph, x);
    rep.stages.push_back(stat("alpha", recovered));

    Graph grid = gen_grid(m);
    if (recovered != grid) {
        rep.failure = "alpha result differs from the grid";
        rep.elapsed_ms = ms_since(start);
        return rep;
    }

    TermPtr t = build_term_H(n);
    TermPtr lt = build_linear_term_H(n);
    rep.widths.emplace_back("term_width(build_term_H)", term_width(t));
    rep.widths.emplace_back("term_width(build_linear_term_H)", term_width(lt));
    if (term_width(t) != 3 || term_width(lt) != 4 || !is_linear(lt) ||
        eval_term(t).graph != h || eval_term(lt).graph != h) {
        rep.failure = "width certificates for H_n";
        rep.elapsed_ms = ms_since(start);
        return rep;
    }
    rep.verdict = true;
    rep.elapsed_ms = ms_since(start);
    return rep;
}

// ---- grid recovery, vertex-minor route ----

PipelineReport prop1_alt_pipeline(int n) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("prop1_alt_pipeline supports 2 <= n <= 4, got " +
                                    std::to_string(n));
    auto start = Clock::now();
    PipelineReport rep;
    const int nn = n * n;

    Graph hp = gen_Hprime(nn);
    rep.stages.push_back(stat("gen_Hprime(" + std::to_string(nn) + ")", hp));

    ProperEdgeColoring r = grid_coloring(n);
    std::vector<Edge> f = contraction_set(hp, r);
    ContractionResult k = contract_edges(hp, f);
    rep.stages.push_back(stat("contract", k.graph));

    // colors incident to each grid vertex
    std::vector<std::set<int>> incident(static_cast<std::size_t>(nn) + 1);
    for (const auto& [e, c] : r.color) {
        incident[std::stoul(e.first.substr(1))].insert(c);
        incident[std::stoul(e.second.substr(1))].insert(c);
    }
    std::vector<std::string> unused;
    for (int i = 1; i <= nn; ++i)
        for (int c = 1; c <= 4; ++c)
            if (!incident[i].count(c) && k.graph.has_vertex(y_name(i, c)))
                unused.push_back(y_name(i, c));
    Graph cur = delete_vertices(k.graph, unused);
    rep.stages.push_back(stat("delete unused copies", cur));

    cur = local_complement(cur, "y0");
    cur = delete_vertices(cur, {"y0"});
    rep.stages.push_back(stat("local complement + delete y0", cur));

    // contraction vertices, ascending name order
    std::vector<std::string> zs;
    std::map<std::string, int> preimages;
    for (const auto& [orig, surv] : k.merge_map) ++preimages[surv];
    for (const auto& [surv, cnt] : preimages)
        if (cnt >= 2) zs.push_back(surv);
    std::sort(zs.begin(), zs.end());

    if (!is_stable(cur, zs)) {
        rep.failure = "contraction vertices are not stable before erasure";
        rep.elapsed_ms = ms_since(start);
        return rep;
    }
    for (const auto& z : zs) {
        if (cur.degree(z) != 2) {
            rep.failure = "contraction vertex " + z + " has degree " +
                          std::to_string(cur.degree(z)) + " before erasure";
            rep.elapsed_ms = ms_since(start);
            return rep;
        }
        cur = erase_vertex(cur, z);
    }
    rep.stages.push_back(stat("erase contraction vertices", cur));

    Graph grid = gen_grid(n);
    if (cur != grid) {
        rep.failure = "final graph differs from the grid";
        rep.elapsed_ms = ms_since(start);
        return rep;
    }
    if (n <= 3) {
        RankWidthResult rw = rank_width_exact(grid);
        rep.widths.emplace_back("rwd(grid)", rw.value);
        if (rw.value != n - 1) {
            rep.failure = "grid rank-width is not n-1";
            rep.elapsed_ms = ms_since(start);
            return rep;
        }
        // the grid is a vertex-minor of the contracted graph, so the
        // contracted graph has rank-width at least n-1 as well
    }
    rep.verdict = true;
    rep.elapsed_ms = ms_since(start);
    return rep;
}

// ---- enumeration of small graphs up to isomorphism ----

namespace {

struct SmallGraphCat {
    int m;
    std::vector<std::pair<int, int>> pairs;       // bit index -> vertex pair
    std::vector<std::vector<int>> perm_bits;      // per permutation: bit remap

    explicit SmallGraphCat(int mm) : m(mm) {
        std::vector<std::vector<int>> pair_idx(static_cast<std::size_t>(m),
                                               std::vector<int>(static_cast<std::size_t>(m), -1));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                pair_idx[i][j] = pair_idx[j][i] = static_cast<int>(pairs.size());
                pairs.emplace_back(i, j);
            }
        std::vector<int> p(static_cast<std::size_t>(m));
        std::iota(p.begin(), p.end(), 0);
        do {
            std::vector<int> remap(pairs.size());
            for (std::size_t b = 0; b < pairs.size(); ++b)
                remap[b] = pair_idx[p[pairs[b].first]][p[pairs[b].second]];
            perm_bits.push_back(std::move(remap));
        } while (std::next_permutation(p.begin(), p.end()));
    }

    std::uint32_t bits() const { return static_cast<std::uint32_t>(pairs.size()); }

    std::uint32_t canon(std::uint32_t emask) const {
        std::uint32_t best = emask;
        for (const auto& remap : perm_bits) {
            std::uint32_t img = 0;
            for (std::uint32_t b = emask; b;) {
                int bit = std::countr_zero(b);
                b &= b - 1;
                img |= 1u << remap[bit];
            }
            best = std::min(best, img);
        }
        return best;
    }

    Graph to_graph(std::uint32_t emask) const {
        std::vector<std::string> verts;
        for (int i = 0; i < m; ++i) verts.push_back("v" + std::to_string(i + 1));
        std::vector<Edge> edges;
        for (std::uint32_t b = emask; b;) {
            int bit = std::countr_zero(b);
            b &= b - 1;
            edges.push_back(make_edge(verts[pairs[bit].first], verts[pairs[bit].second]));
        }
        return Graph::from_vertices_edges(verts, edges);
    }

    std::uint32_t neighbors_of(std::uint32_t emask, int v) const {
        std::uint32_t nb = 0;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((emask >> b) & 1u) {
                if (pairs[b].first == v) nb |= 1u << pairs[b].second;
                if (pairs[b].second == v) nb |= 1u << pairs[b].first;
            }
        return nb;
    }

    // edge mask of the graph after removing v, on m-1 relabeled vertices,
    // with extra_edge (in old indices) added when given
    std::uint32_t shrink(std::uint32_t emask, int v,
                         std::optional<std::pair<int, int>> extra_edge,
                         const SmallGraphCat& smaller) const {
        auto newidx = [&](int u) { return u < v ? u : u - 1; };
        std::uint32_t out = 0;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (!((emask >> b) & 1u)) continue;
            auto [a, c] = pairs[b];
            if (a == v || c == v) continue;
            int i = newidx(a), j = newidx(c);
            if (j < i) std::swap(i, j);
            for (std::size_t nb = 0; nb < smaller.pairs.size(); ++nb)
                if (smaller.pairs[nb] == std::make_pair(i, j)) out |= 1u << nb;
        }
        if (extra_edge) {
            int i = newidx(extra_edge->first), j = newidx(extra_edge->second);
            if (j < i) std::swap(i, j);
            for (std::size_t nb = 0; nb < smaller.pairs.size(); ++nb)
                if (smaller.pairs[nb] == std::make_pair(i, j)) out |= 1u << nb;
        }
        return out;
    }
};

}  // namespace

SuiteReport prop2_property_suite(int max_n) {
    if (max_n < 1 || max_n > 7)
        throw std::invalid_argument("prop2_property_suite supports 1 <= max_n <= 7");
    auto start = Clock::now();
    SuiteReport rep;

    std::vector<SmallGraphCat> cats;
    for (int m = 0; m <= max_n; ++m) cats.emplace_back(std::max(m, 1));

    std::map<std::pair<int, std::uint32_t>, std::pair<int, int>> values;  // (cwd, rwd)
    auto value_of = [&](int m, std::uint32_t emask) {
        std::uint32_t key = cats[m].canon(emask);
        auto it = values.find({m, key});
        if (it != values.end()) return it->second;
        Graph g = cats[m].to_graph(key);
        int cw = cwd_exact(g).value;
        int rw = rank_width_exact(g).value;
        values[{m, key}] = {cw, rw};
        return std::make_pair(cw, rw);
    };

    // per isomorphism class: (violations in one graph, steps in one graph)
    std::map<std::pair<int, std::uint32_t>, std::pair<std::size_t, std::size_t>> verdicts;
    for (int m = 1; m <= max_n; ++m) {
        const auto& cat = cats[m];
        const std::uint32_t total = 1u << cat.bits();
        for (std::uint32_t emask = 0; emask < total; ++emask) {
            std::uint32_t key = cat.canon(emask);
            auto it = verdicts.find({m, key});
            if (it == verdicts.end()) {
                std::size_t bad = 0, steps = 0;
                if (m >= 2) {
                    auto [cw, rw] = value_of(m, key);
                    int bound = (1 << (cw + 1)) - 1;
                    auto check_child = [&](std::uint32_t child) {
                        ++steps;
                        auto [ccw, crw] = value_of(m - 1, child);
                        if (crw > rw || ccw > bound) {
                            ++bad;
                            if (rep.findings.size() < 20)
                                rep.findings.push_back(
                                    "violation at m=" + std::to_string(m) + " emask=" +
                                    std::to_string(key) + ": child cwd=" + std::to_string(ccw) +
                                    " rwd=" + std::to_string(crw) + " vs cwd=" +
                                    std::to_string(cw) + " rwd=" + std::to_string(rw));
                        }
                    };
                    for (int v = 0; v < m; ++v) {
                        check_child(cat.shrink(key, v, std::nullopt, cats[m - 1]));
                        std::uint32_t nb = cat.neighbors_of(key, v);
                        if (std::popcount(nb) == 2) {
                            int y = std::countr_zero(nb);
                            int z = std::countr_zero(nb & (nb - 1));
                            check_child(cat.shrink(key, v, std::make_pair(y, z), cats[m - 1]));
                        }
                    }
                }
                it = verdicts.emplace(std::make_pair(m, key), std::make_pair(bad, steps)).first;
            }
            ++rep.graphs_checked;
            rep.steps_checked += it->second.second;
            rep.violations += it->second.first;
        }
    }
    rep.elapsed_ms = ms_since(start);
    return rep;
}

SuiteReport cograph_closure_check(int limit_n) {
    if (limit_n < 1 || limit_n > 7)
        throw std::invalid_argument("cograph_closure_check supports 1 <= limit_n <= 7");
    auto start = Clock::now();
    SuiteReport rep;
    for (int m = 1; m <= limit_n; ++m) {
        SmallGraphCat cat(m);
        const std::uint32_t total = 1u << cat.bits();
        // per class: (violations, contraction steps, is-cograph)
        std::map<std::uint32_t, std::tuple<std::size_t, std::size_t, bool>> verdicts;
        for (std::uint32_t emask = 0; emask < total; ++emask) {
            std::uint32_t key = cat.canon(emask);
            auto it = verdicts.find(key);
            if (it == verdicts.end()) {
                std::size_t bad = 0, steps = 0;
                Graph g = cat.to_graph(key);
                bool cg = is_cograph(g);
                if (cg) {
                    for (const auto& e : g.edge_set()) {
                        ++steps;
                        ContractionResult cr = contract_edges(g, {e});
                        if (!is_cograph(cr.graph)) {
                            ++bad;
                            if (rep.findings.size() < 20)
                                rep.findings.push_back("cograph closure violated at m=" +
                                                       std::to_string(m) + " emask=" +
                                                       std::to_string(key));
                        }
                    }
                }
                it = verdicts.emplace(key, std::make_tuple(bad, steps, cg)).first;
            }
            if (std::get<2>(it->second)) {
                ++rep.graphs_checked;
                rep.steps_checked += std::get<1>(it->second);
                rep.violations += std::get<0>(it->second);
            }
        }
    }
    rep.elapsed_ms = ms_since(start);
    return rep;
}

// ---- witness search ----

nlohmann::json SearchCheckpoint::to_json(bool timings) const {
    nlohmann::json j;
    j["version"] = version;
    j["n"] = n;
    j["cursor"] = cursor;
    j["candidates_examined"] = candidates_examined;
    j["matchings_seen"] = matchings_seen;
    j["exhausted"] = exhausted;
    if (witness) {
        nlohmann::json w;
        w["n"] = witness->n;
        w["f_set"] = nlohmann::json::array();
        for (const auto& e : witness->f_set) w["f_set"].push_back({e.first, e.second});
        w["removed_edge"] = {witness->removed_edge.first, witness->removed_edge.second};
        w["cwd_before"] = witness->cwd_before;
        w["cwd_after"] = witness->cwd_after;
        w["before_witness"] = witness->before_witness;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    if (timings) j["elapsed_ms"] = elapsed_ms;
    return j;
}

SearchCheckpoint SearchCheckpoint::from_json(const nlohmann::json& j) {
    SearchCheckpoint ck;
    ck.version = j.at("version").get<int>();
    if (ck.version != 1)
        throw std::runtime_error("unsupported checkpoint version " + std::to_string(ck.version));
    ck.n = j.at("n").get<int>();
    ck.cursor = j.at("cursor").get<std::vector<int>>();
    ck.candidates_examined = j.at("candidates_examined").get<std::uint64_t>();
    ck.matchings_seen = j.at("matchings_seen").get<std::uint64_t>();
    ck.exhausted = j.at("exhausted").get<bool>();
    if (j.contains("witness") && !j.at("witness").is_null()) {
        const auto& w = j.at("witness");
        WitnessCandidate wc;
        wc.n = w.at("n").get<int>();
        for (const auto& e : w.at("f_set"))
            wc.f_set.push_back(make_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>()));
        wc.removed_edge = make_edge(w.at("removed_edge").at(0).get<std::string>(),
                                    w.at("removed_edge").at(1).get<std::string>());
        wc.cwd_before = w.at("cwd_before").get<int>();
        wc.cwd_after = w.at("cwd_after").get<int>();
        wc.before_witness = w.at("before_witness").get<std::string>();
        ck.witness = wc;
    }
    if (j.contains("elapsed_ms")) ck.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return ck;
}

namespace {

struct HnContext {
    int n;
    Graph h;
    std::vector<Edge> edges;              // lexicographic order
    std::vector<std::uint32_t> edge_vtx;  // per edge: vertex index pair mask
    std::vector<int> edge_u, edge_v;      // vertex indices, u < v
    std::vector<std::vector<int>> autos;  // vertex permutations (index form)

    explicit HnContext(int nn) : n(nn), h(gen_H(nn)) {
        edges.assign(h.edge_set().begin(), h.edge_set().end());
        for (const auto& e : edges) {
            int u = static_cast<int>(h.index_of(e.first));
            int v = static_cast<int>(h.index_of(e.second));
            if (v < u) std::swap(u, v);
            edge_u.push_back(u);
            edge_v.push_back(v);
            edge_vtx.push_back((1u << u) | (1u << v));
        }
        build_automorphisms();
    }

    void build_automorphisms() {
        // group permutations always; per-group copy permutations only while
        // the group stays small enough to enumerate
        std::vector<std::vector<int>> s4;
        {
            std::vector<int> c{1, 2, 3, 4};
            do { s4.push_back(c); } while (std::next_permutation(c.begin(), c.end()));
        }
        double full_size = 1;
        for (int i = 0; i < n; ++i) full_size *= 24;
        bool per_group = full_size * std::tgamma(n + 1.0) <= 200000.0;

        std::vector<int> pi(static_cast<std::size_t>(n));
        std::iota(pi.begin(), pi.end(), 1);
        std::sort(pi.begin(), pi.end());
        do {
            auto emit = [&](const std::vector<int>& colsel) {
                std::vector<int> sigma(h.vertex_count());
                for (int i = 1; i <= n; ++i) {
                    sigma[h.index_of(x_name(i))] =
                        static_cast<int>(h.index_of(x_name(pi[i - 1])));
                    for (int c = 1; c <= 4; ++c)
                        sigma[h.index_of(y_name(i, c))] = static_cast<int>(
                            h.index_of(y_name(pi[i - 1], s4[colsel[i - 1]][c - 1])));
                }
                autos.push_back(std::move(sigma));
            };
            if (per_group) {
                std::vector<int> colsel(static_cast<std::size_t>(n), 0);
                while (true) {
                    emit(colsel);
                    int pos = 0;
                    while (pos < n && colsel[pos] == 23) colsel[pos++] = 0;
                    if (pos == n) break;
                    ++colsel[pos];
                }
            } else {
                for (int c = 0; c < 24; ++c)
                    emit(std::vector<int>(static_cast<std::size_t>(n), c));
            }
        } while (std::next_permutation(pi.begin(), pi.end()));
    }

    bool orbit_min(const std::vector<int>& f) const {
        std::vector<int> base, img;
        base.reserve(f.size());
        for (int idx : f) base.push_back(edge_u[idx] * 64 + edge_v[idx]);
        for (const auto& sigma : autos) {
            img.clear();
            for (int idx : f) {
                int a = sigma[edge_u[idx]], b = sigma[edge_v[idx]];
                if (b < a) std::swap(a, b);
                img.push_back(a * 64 + b);
            }
            std::sort(img.begin(), img.end());
            if (img < base) return false;
        }
        return true;
    }
};

enum class Walk { Continue, Stop };

// pre-order DFS over matchings (index sequences); emits only candidates
// strictly after the cursor
Walk enum_matchings(const HnContext& ctx, std::vector<int>& cur, std::uint32_t used,
                    int start, const std::vector<int>& cursor,
                    const std::function<Walk(const std::vector<int>&)>& visit) {
    for (int idx = start; idx < static_cast<int>(ctx.edges.size()); ++idx) {
        if (used & ctx.edge_vtx[idx]) continue;
        cur.push_back(idx);
        int rel = 1;  // -1 before cursor, 0 prefix-or-equal, 1 after
        for (std::size_t i = 0; i < cur.size() && i < cursor.size(); ++i) {
            if (cur[i] != cursor[i]) { rel = cur[i] < cursor[i] ? -1 : 1; break; }
            if (i + 1 == cur.size()) rel = cur.size() <= cursor.size() ? 0 : 1;
        }
        if (cursor.empty()) rel = 1;
        if (rel >= 0) {
            if (rel == 1 && visit(cur) == Walk::Stop) { cur.pop_back(); return Walk::Stop; }
            if (enum_matchings(ctx, cur, used | ctx.edge_vtx[idx], idx + 1, cursor, visit) ==
                Walk::Stop) {
                cur.pop_back();
                return Walk::Stop;
            }
        }
        cur.pop_back();
    }
    return Walk::Continue;
}

}  // namespace

SearchCheckpoint witness_search(const SearchBudget& budget, const SearchCheckpoint* resume,
                                std::function<bool(const Graph&)> cwd3_backend) {
    auto start = Clock::now();
    CwSolveOptions opts;
    opts.max_vertices = 16;
    if (!cwd3_backend)
        cwd3_backend = [&opts](const Graph& g) { return cwd_leq(g, 3, opts).has_value(); };

    SearchCheckpoint ck;
    if (resume) {
        ck = *resume;
        if (ck.witness || ck.exhausted) return ck;
    }
    std::int64_t base_elapsed = ck.elapsed_ms;

    auto over_time = [&]() {
        return budget.max_millis && ms_since(start) >= *budget.max_millis;
    };
    auto over_candidates = [&]() {
        return budget.max_candidates && ck.candidates_examined >= *budget.max_candidates;
    };

    for (; ck.n <= budget.n_max; ++ck.n, ck.cursor.clear()) {
        HnContext ctx(ck.n);
        std::vector<int> cur;
        std::vector<int> start_cursor = ck.cursor;
        auto visit = [&](const std::vector<int>& f) {
            bool minimal = ctx.orbit_min(f);
            if (minimal && (over_candidates() || over_time())) return Walk::Stop;
            ++ck.matchings_seen;
            ck.cursor = f;
            if (!minimal) return over_time() ? Walk::Stop : Walk::Continue;
            ++ck.candidates_examined;

            std::vector<Edge> f_edges;
            for (int idx : f) f_edges.push_back(ctx.edges[idx]);
            ContractionResult contracted = contract_edges(ctx.h, f_edges);
            if (cwd3_backend(contracted.graph)) return Walk::Continue;  // cwd(H/F) <= 3

            for (std::size_t drop = 0; drop < f_edges.size(); ++drop) {
                std::vector<Edge> rest;
                for (std::size_t i = 0; i < f_edges.size(); ++i)
                    if (i != drop) rest.push_back(f_edges[i]);
                Graph before = contract_edges(ctx.h, rest).graph;
                if (!cwd3_backend(before) || is_cograph(before)) continue;
                WitnessCandidate wc;
                wc.n = ck.n;
                wc.f_set = f_edges;
                wc.removed_edge = f_edges[drop];
                wc.cwd_before = 3;
                wc.before_witness = print_term(*cwd_leq(before, 3, opts));
                wc.cwd_after = -1;
                for (int kk = 4; kk <= 6; ++kk)
                    if (cwd_leq(contracted.graph, kk, opts)) { wc.cwd_after = kk; break; }
                ck.witness = wc;
                return Walk::Stop;
            }
            return Walk::Continue;
        };
        Walk w = enum_matchings(ctx, cur, 0, 0, start_cursor, visit);
        if (w == Walk::Stop) {
            ck.elapsed_ms = base_elapsed + ms_since(start);
            return ck;
        }
    }
    ck.n = budget.n_max;  // enumeration finished; keep a valid position
    ck.exhausted = true;
    ck.elapsed_ms = base_elapsed + ms_since(start);
    return ck;
}

}  // namespace gwl
