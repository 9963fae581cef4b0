#ifndef TDA_RIPS_HPP
#define TDA_RIPS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pointcloud.hpp"

namespace tda {

// Symmetric, zero-diagonal, finite pairwise distances.
class DistanceMatrix {
  public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        d_[i * n_ + j] = v;
        d_[j * n_ + i] = v;
    }
    void validate() const;

  private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

DistanceMatrix euclidean_distances(const PointCloud& cloud);

DistanceMatrix distances_from_csv(const std::string& text, bool lower_triangular);
DistanceMatrix read_distances(const std::string& path, bool lower_triangular);

// Vietoris-Rips filtration, cells sorted by (value, dimension, lex vertices).
// Vertices enter at 0; a higher cell enters at the max pairwise distance of
// its vertex set (closed threshold, <= epsilon_max). The sort guarantees
// every face precedes its cofaces.
class FilteredComplex {
  public:
    int max_dimension = 0;   // max simplex dimension present
    double epsilon_max = 0.0;

    std::size_t num_cells() const { return values_.size(); }
    double value(std::size_t i) const { return values_[i]; }
    int dim(std::size_t i) const { return dims_[i]; }
    std::span<const uint32_t> cell_vertices(std::size_t i) const {
        return {verts_.data() + i * stride_, static_cast<std::size_t>(dims_[i]) + 1};
    }

    void push_cell(double value, std::span<const uint32_t> verts);
    void sort_cells();
    void set_stride(std::size_t s) { stride_ = s; }
    std::size_t stride() const { return stride_; }

    bool face_monotone() const;

  private:
    std::size_t stride_ = 0; // vertex slots per cell (max_dimension+1, padded)
    std::vector<double> values_;
    std::vector<int8_t> dims_;
    std::vector<uint32_t> verts_;
};

// Cliques of the epsilon_max-threshold graph up to dimension max_dim,
// enumerated by expansion over lower-neighbor lists.
FilteredComplex rips_complex(const DistanceMatrix& d, double epsilon_max, int max_dim);

} // namespace tda

#endif
