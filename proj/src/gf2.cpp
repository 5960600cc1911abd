#include "gwl/gf2.hpp"

#include <stdexcept>

namespace gwl {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (cols > 64) throw std::invalid_argument("Gf2Matrix supports at most 64 columns");
    data_.assign(rows, 0);
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix index out of range");
    if (v) data_[r] |= std::uint64_t{1} << c;
    else data_[r] &= ~(std::uint64_t{1} << c);
}

std::size_t gf2_rank(Gf2Matrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        // swap and eliminate below
        std::uint64_t prow = m.row_bits(pivot);
        if (pivot != rank) {
            std::uint64_t tmp = m.row_bits(rank);
            for (std::size_t k = 0; k < m.cols(); ++k) {
                m.set(rank, k, (prow >> k) & 1u);
                m.set(pivot, k, (tmp >> k) & 1u);
            }
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != rank && m.get(r, c)) {
                std::uint64_t x = m.row_bits(r) ^ m.row_bits(rank);
                for (std::size_t k = 0; k < m.cols(); ++k) m.set(r, k, (x >> k) & 1u);
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t cut_rank(const Graph& g, const std::vector<std::string>& x) {
    for (const auto& v : x) g.require_vertex(v);
    DenseGraph d = DenseGraph::from(g);
    std::uint32_t xmask = 0;
    for (const auto& v : x) xmask |= 1u << g.index_of(v);
    return cut_rank(d, xmask);
}

std::size_t cut_rank(const DenseGraph& g, std::uint32_t xmask) {
    std::uint32_t full = g.n == 32 ? 0xffffffffu : (1u << g.n) - 1;
    std::uint32_t comp = full & ~xmask;
    // rows: vertices in X; columns: compacted V \ X; eliminate in place
    std::vector<std::uint32_t> rows;
    for (int v = 0; v < g.n; ++v)
        if ((xmask >> v) & 1u) rows.push_back(g.adj[v] & comp);
    std::size_t rank = 0;
    for (int c = 0; c < g.n && rank < rows.size(); ++c) {
        if (!((comp >> c) & 1u)) continue;
        std::size_t pivot = rank;
        while (pivot < rows.size() && !((rows[pivot] >> c) & 1u)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && ((rows[r] >> c) & 1u)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace gwl
