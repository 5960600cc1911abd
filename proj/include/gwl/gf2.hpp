#ifndef GWL_GF2_HPP
#define GWL_GF2_HPP

#include <cstdint>
#include <vector>

#include "gwl/graph.hpp"

namespace gwl {

/// Dense matrix over GF(2); rows packed into 64-bit words (at most 64 columns).
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return (data_[r] >> c) & 1u; }
    void set(std::size_t r, std::size_t c, bool v);
    std::uint64_t row_bits(std::size_t r) const { return data_[r]; }

private:
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> data_;
};

/// Rank over GF(2) by Gaussian elimination on packed rows.
std::size_t gf2_rank(Gf2Matrix m);

/// Rank of the X x (V \ X) bipartite adjacency submatrix over GF(2).
std::size_t cut_rank(const Graph& g, const std::vector<std::string>& x);

/// Fast path on the dense view; xmask selects the row side.
std::size_t cut_rank(const DenseGraph& g, std::uint32_t xmask);

}  // namespace gwl

#endif
