#ifndef TDA_PERSISTENCE_HPP
#define TDA_PERSISTENCE_HPP

#include <limits>
#include <vector>

#include "rips.hpp"

namespace tda {

struct PersistenceFeature {
    int dimension = 0;
    double birth = 0.0;
    double death = std::numeric_limits<double>::infinity();

    double persistence() const { return death - birth; }
    bool essential() const { return std::isinf(death); }
};

struct Barcode {
    std::vector<PersistenceFeature> features; // sorted by (dim, birth, death)
    double epsilon_max = 0.0;
    int max_dimension = 0; // top simplex dimension of the input filtration

    // Raw pivot pairing (creator cell, destroyer cell) by filtration index,
    // including zero-persistence pairs. Filled only on request.
    std::vector<std::pair<uint32_t, uint32_t>> raw_pairs;
};

struct PersistenceOptions {
    bool keep_zero_bars = false;
    bool record_pairs = false;
};

// Column reduction of the filtered Z/2 boundary matrix with the clearing
// (twist) optimization, dimensions processed top-down. Deaths past
// epsilon_max never occur by construction; unpaired creators are reported
// with death = +inf.
Barcode persistent_homology(const FilteredComplex& fc, const PersistenceOptions& opts = {});

// Number of dimension-k bars alive at scale epsilon: birth <= epsilon < death.
std::size_t betti_curve(const Barcode& bc, int k, double epsilon);

} // namespace tda

#endif
