#ifndef TDA_CROCKER_HPP
#define TDA_CROCKER_HPP

#include <string>
#include <vector>

#include "persistence.hpp"

namespace tda {

// Betti numbers beta_k(t, epsilon) over a time index and a scale grid;
// rows = time steps, columns = scales.
struct CrockerMatrix {
    int k = 0;
    std::vector<std::string> t_labels;
    std::vector<double> epsilon_grid;
    std::vector<std::vector<std::size_t>> values;
};

// One persistence computation per time step, sampled along the grid.
CrockerMatrix crocker(const std::vector<DistanceMatrix>& steps,
                      const std::vector<std::string>& labels, int k,
                      const std::vector<double>& epsilon_grid, int max_dim,
                      unsigned threads = 1);

// Entries above `cap` are bucketed to cap+1 so contour renderers can treat
// them as a single "noise" level.
CrockerMatrix crocker_noise_floor(const CrockerMatrix& m, std::size_t cap);

std::string crocker_to_csv(const CrockerMatrix& m);

std::vector<double> linear_grid(double lo, double hi, std::size_t count);

} // namespace tda

#endif
