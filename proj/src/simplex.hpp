#ifndef TDA_SIMPLEX_HPP
#define TDA_SIMPLEX_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "errors.hpp"

namespace tda {

// A k-simplex stored as its vertex ids in strictly increasing order.
// Canonical vertex order stands in for orientation; over Z/2 no sign
// bookkeeping is needed.
class Simplex {
  public:
    Simplex() = default;

    // Sorts the vertices; throws invalid_input on duplicates or empty input.
    static Simplex from_vertices(std::vector<uint32_t> verts);

    int dimension() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<uint32_t>& vertices() const { return verts_; }

    // The facet obtained by dropping vertex position i.
    Simplex facet(std::size_t omit) const;

    friend bool operator==(const Simplex& a, const Simplex& b) { return a.verts_ == b.verts_; }
    friend bool operator<(const Simplex& a, const Simplex& b) { return a.verts_ < b.verts_; }

  private:
    std::vector<uint32_t> verts_;
};

// Closure-closed collection of simplices, grouped by dimension.
// Within each dimension, simplices are kept sorted lexicographically so
// boundary matrices come out reproducible.
class SimplicialComplex {
  public:
    int max_dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Simplex>& simplices(int dim) const;
    std::size_t count(int dim) const { return simplices(dim).size(); }

    // Index of a simplex within its dimension's sorted list, or -1.
    long index_of(const Simplex& s) const;

    bool closure_holds() const;

    static SimplicialComplex from_maximal(const std::vector<std::vector<uint32_t>>& maximal);

  private:
    std::vector<std::vector<Simplex>> by_dim_;
    static const std::vector<Simplex> empty_;
};

// Sparse Z/2 boundary matrix of one dimension k. Rows are indexed by the
// (k-1)-simplices of the complex, columns by the k-simplices, both in
// lexicographic vertex order. Each column lists its nonzero row indices
// sorted ascending.
struct BoundaryMatrix {
    int k = 0;
    std::size_t rows = 0;
    std::vector<std::vector<uint32_t>> columns;
};

SimplicialComplex build_complex(const std::vector<std::vector<uint32_t>>& maximal_simplices);
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k);

} // namespace tda

#endif
