#ifndef TDA_MAPPER_HPP
#define TDA_MAPPER_HPP

#include <string>
#include <vector>

#include "rips.hpp"

namespace tda {

enum class FilterKind { coordinate, eccentricity, density };

struct FilterSpec {
    FilterKind kind = FilterKind::coordinate;
    std::size_t axis = 0;      // coordinate
    double exponent = 1.0;     // eccentricity: 1 = mean distance, inf = max
    double bandwidth = 1.0;    // density (Gaussian kernel)
};

using FilterValues = std::vector<double>;

struct Cover {
    std::vector<std::pair<double, double>> intervals; // ordered by lo
    std::size_t r = 1;
    double overlap = 0.0;
    bool degenerate = false; // zero filter range collapsed to one interval
};

struct MapperNode {
    std::size_t id = 0;
    std::size_t interval = 0;
    std::vector<std::size_t> members; // point indices, sorted
};

struct MapperEdge {
    std::size_t a = 0, b = 0;
    std::size_t shared = 0;
};

struct MapperGraph {
    std::vector<MapperNode> nodes;
    std::vector<MapperEdge> edges;
};

FilterValues filter_values(const PointCloud& cloud, const DistanceMatrix& d, const FilterSpec& spec);

// r equal-length intervals with consecutive overlap fraction g of the
// interval length, together covering [min, max] exactly.
Cover uniform_cover(const FilterValues& values, std::size_t r, double g);

// Per-interval preimages (closed bounds) clustered by single linkage at
// cluster_epsilon; one node per cluster, edges between nodes sharing points.
// Node ids are canonical: sorted by (interval, smallest member).
MapperGraph mapper_graph(const DistanceMatrix& d, const FilterValues& values, const Cover& cover,
                         double cluster_epsilon);

std::string mapper_to_dot(const MapperGraph& g);
std::string mapper_to_json(const MapperGraph& g);

} // namespace tda

#endif
