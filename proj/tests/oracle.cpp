#include "oracle.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace gwl_oracle {

namespace {

using gwl::DenseGraph;

struct Enc {
    // state = built-edge mask (low 16 bits) | labeling (3 bits per vertex)
    static std::uint64_t pack(std::uint32_t emask, const std::vector<int>& lab) {
        std::uint64_t code = 0;
        for (std::size_t v = 0; v < lab.size(); ++v)
            code |= static_cast<std::uint64_t>(lab[v]) << (3 * v);
        return emask | (code << 16);
    }
};

struct Oracle {
    DenseGraph d;
    int n;
    std::vector<std::pair<int, int>> gedges;   // edges of g, global bit index
    std::vector<std::vector<int>> ebit;        // vertex pair -> bit or -1
    std::uint32_t full_emask;

    explicit Oracle(const gwl::Graph& g) : d(DenseGraph::from(g)), n(d.n) {
        if (n > 6) throw std::invalid_argument("oracle supports at most 6 vertices");
        ebit.assign(n, std::vector<int>(n, -1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (d.edge(i, j)) {
                    ebit[i][j] = ebit[j][i] = static_cast<int>(gedges.size());
                    gedges.emplace_back(i, j);
                }
        full_emask = (gedges.empty() ? 0u : (1u << gedges.size()) - 1u);
    }

    // first-occurrence renumbering of labels over the vertices of s
    std::vector<int> canon(std::vector<int> lab, std::uint32_t s) const {
        std::vector<int> remap(8, -1);
        int next = 0;
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1u)) { lab[v] = 0; continue; }
            if (remap[lab[v]] < 0) remap[lab[v]] = next++;
            lab[v] = remap[lab[v]];
        }
        return lab;
    }

    std::vector<int> unpack_labels(std::uint64_t st) const {
        std::vector<int> lab(static_cast<std::size_t>(n));
        std::uint64_t code = st >> 16;
        for (int v = 0; v < n; ++v) lab[v] = static_cast<int>((code >> (3 * v)) & 7u);
        return lab;
    }

    bool feasible(int k, bool linear) const {
        std::vector<std::unordered_set<std::uint64_t>> layer(1u << n);
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
            std::vector<std::uint64_t> seeds;
            if (std::popcount(s) == 1) {
                seeds.push_back(Enc::pack(0, std::vector<int>(static_cast<std::size_t>(n), 0)));
            } else if (linear) {
                for (int v = 0; v < n; ++v) {
                    if (!((s >> v) & 1u)) continue;
                    std::uint32_t s1 = s & ~(1u << v);
                    for (std::uint64_t st1 : layer[s1]) {
                        std::vector<int> lab = unpack_labels(st1);
                        std::uint32_t emask = static_cast<std::uint32_t>(st1 & 0xffffu);
                        for (int l2 = 0; l2 < k; ++l2) {
                            lab[v] = l2;
                            seeds.push_back(Enc::pack(emask, canon(lab, s)));
                        }
                    }
                }
            } else {
                int low = std::countr_zero(s);
                std::uint32_t rest = s & ~(1u << low);
                // proper sub-splits with the lowest vertex on the left
                for (std::uint32_t sub = rest; ; sub = (sub - 1) & rest) {
                    std::uint32_t s1 = sub | (1u << low), s2 = s & ~s1;
                    if (s2 != 0) {
                        for (std::uint64_t st1 : layer[s1]) {
                            std::vector<int> lab1 = unpack_labels(st1);
                            for (std::uint64_t st2 : layer[s2]) {
                                std::vector<int> lab2 = unpack_labels(st2);
                                int c2 = 0;
                                for (int v = 0; v < n; ++v)
                                    if ((s2 >> v) & 1u) c2 = std::max(c2, lab2[v] + 1);
                                std::uint32_t emask =
                                    static_cast<std::uint32_t>((st1 | st2) & 0xffffu);
                                // injective maps of the right side's classes into 0..k-1
                                std::vector<int> map(static_cast<std::size_t>(c2), -1);
                                enumerate_maps(map, 0, k, [&](const std::vector<int>& m) {
                                    std::vector<int> lab = lab1;
                                    for (int v = 0; v < n; ++v)
                                        if ((s2 >> v) & 1u) lab[v] = m[lab2[v]];
                                    seeds.push_back(Enc::pack(emask, canon(lab, s)));
                                });
                            }
                        }
                    }
                    if (sub == 0) break;
                }
            }
            // closure under add-edges / relabel inside the layer
            auto& states = layer[s];
            std::deque<std::uint64_t> queue;
            for (std::uint64_t st : seeds)
                if (states.insert(st).second) queue.push_back(st);
            while (!queue.empty()) {
                std::uint64_t st = queue.front();
                queue.pop_front();
                std::vector<int> lab = unpack_labels(st);
                std::uint32_t emask = static_cast<std::uint32_t>(st & 0xffffu);
                int classes = 0;
                for (int v = 0; v < n; ++v)
                    if ((s >> v) & 1u) classes = std::max(classes, lab[v] + 1);
                for (int i = 0; i < classes; ++i)
                    for (int j = 0; j < classes; ++j) {
                        if (i == j) continue;
                        if (i < j) {
                            // add-edges(i,j): legal only if every cross pair is
                            // an edge of g (edges are never removable)
                            std::uint32_t add = 0;
                            bool ok = true;
                            for (int u = 0; u < n && ok; ++u) {
                                if (!((s >> u) & 1u) || lab[u] != i) continue;
                                for (int w = 0; w < n && ok; ++w) {
                                    if (!((s >> w) & 1u) || lab[w] != j) continue;
                                    if (ebit[u][w] < 0) ok = false;
                                    else add |= 1u << ebit[u][w];
                                }
                            }
                            if (ok && (add & ~emask)) {
                                std::uint64_t nxt = Enc::pack(emask | add, lab);
                                if (states.insert(nxt).second) queue.push_back(nxt);
                            }
                        }
                        // relabel(i -> j)
                        std::vector<int> rl = lab;
                        for (int v = 0; v < n; ++v)
                            if (((s >> v) & 1u) && rl[v] == i) rl[v] = j;
                        std::uint64_t nxt = Enc::pack(emask, canon(rl, s));
                        if (states.insert(nxt).second) queue.push_back(nxt);
                    }
            }
        }
        for (std::uint64_t st : layer[(1u << n) - 1])
            if ((st & 0xffffu) == full_emask) return true;
        return false;
    }

    template <typename Fn>
    static void enumerate_maps(std::vector<int>& map, std::size_t pos, int k, const Fn& fn) {
        if (pos == map.size()) {
            fn(map);
            return;
        }
        for (int l = 0; l < k; ++l) {
            bool used = false;
            for (std::size_t q = 0; q < pos; ++q)
                if (map[q] == l) used = true;
            if (used) continue;
            map[pos] = l;
            enumerate_maps(map, pos + 1, k, fn);
        }
        map[pos] = -1;
    }
};

}  // namespace

bool oracle_leq(const gwl::Graph& g, int k, bool linear) {
    if (g.vertex_count() == 0) throw std::invalid_argument("oracle needs a nonempty graph");
    return Oracle(g).feasible(k, linear);
}

int oracle_width(const gwl::Graph& g, bool linear, int max_k) {
    Oracle oracle(g);
    for (int k = 1; k <= max_k; ++k)
        if (oracle.feasible(k, linear)) return k;
    throw std::runtime_error("oracle exceeded max_k");
}

}  // namespace gwl_oracle
