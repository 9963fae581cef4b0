#ifndef TDA_DIAGRAM_HPP
#define TDA_DIAGRAM_HPP

#include <vector>

#include "persistence.hpp"

namespace tda {

// Birth/death points of one fixed homology dimension.
struct PersistenceDiagram {
    int k = 0;
    std::vector<std::pair<double, double>> points; // death may be +inf
};

PersistenceDiagram diagram_from_barcode(const Barcode& bc, int k);

// Bottleneck distance under the standard L-inf matching with diagonal
// projection: unmatched points pay half their persistence. Points with
// infinite death are matched among themselves by sorted birth; a count
// mismatch gives +inf. Exact via binary search over candidate costs with
// bipartite-matching feasibility checks.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

} // namespace tda

#endif
