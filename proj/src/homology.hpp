#ifndef TDA_HOMOLOGY_HPP
#define TDA_HOMOLOGY_HPP

#include <vector>

#include "simplex.hpp"

namespace tda {

// Betti numbers indexed by dimension, length max_dimension()+1.
using BettiVector = std::vector<std::size_t>;

// Rank of a sparse Z/2 matrix via dense bit-packed Gaussian elimination.
// Fine at static-homology scale; the persistence engine owns the sparse
// high-throughput path.
std::size_t rank_z2(const BoundaryMatrix& m);

// beta_k = (dim C_k - rank d_k) - rank d_{k+1}.
BettiVector betti_numbers(const SimplicialComplex& complex);

} // namespace tda

#endif
