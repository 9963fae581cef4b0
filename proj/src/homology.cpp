#include "homology.hpp"

#include <cstdint>

namespace tda {

std::size_t rank_z2(const BoundaryMatrix& m) {
    if (m.rows == 0 || m.columns.empty()) return 0;
    const std::size_t words = (m.rows + 63) / 64;
    std::vector<std::vector<uint64_t>> cols;
    cols.reserve(m.columns.size());
    for (const auto& sparse : m.columns) {
        std::vector<uint64_t> bits(words, 0);
        for (uint32_t r : sparse) bits[r / 64] |= uint64_t{1} << (r % 64);
        cols.push_back(std::move(bits));
    }

    std::size_t rank = 0;
    for (std::size_t row = 0; row < m.rows && rank < cols.size(); ++row) {
        const std::size_t w = row / 64;
        const uint64_t mask = uint64_t{1} << (row % 64);
        std::size_t pivot = rank;
        while (pivot < cols.size() && !(cols[pivot][w] & mask)) ++pivot;
        if (pivot == cols.size()) continue;
        std::swap(cols[rank], cols[pivot]);
        for (std::size_t c = rank + 1; c < cols.size(); ++c)
            if (cols[c][w] & mask)
                for (std::size_t i = 0; i < words; ++i) cols[c][i] ^= cols[rank][i];
        ++rank;
    }
    return rank;
}

BettiVector betti_numbers(const SimplicialComplex& complex) {
    const int top = complex.max_dimension();
    BettiVector betti(static_cast<std::size_t>(top) + 1, 0);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k)
        ranks[static_cast<std::size_t>(k)] = rank_z2(boundary_matrix(complex, k));
    for (int k = 0; k <= top; ++k) {
        const std::size_t cycles = complex.count(k) - ranks[static_cast<std::size_t>(k)];
        betti[static_cast<std::size_t>(k)] = cycles - ranks[static_cast<std::size_t>(k) + 1];
    }
    return betti;
}

} // namespace tda
