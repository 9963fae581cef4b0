#include "simplex.hpp"

#include <algorithm>
#include <set>

namespace tda {

const std::vector<Simplex> SimplicialComplex::empty_;

Simplex Simplex::from_vertices(std::vector<uint32_t> verts) {
    if (verts.empty()) throw invalid_input("simplex needs at least one vertex");
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw invalid_input("duplicate vertex in simplex");
    Simplex s;
    s.verts_ = std::move(verts);
    return s;
}

Simplex Simplex::facet(std::size_t omit) const {
    Simplex s;
    s.verts_.reserve(verts_.size() - 1);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (i != omit) s.verts_.push_back(verts_[i]);
    return s;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    if (dim < 0 || dim > max_dimension()) return empty_;
    return by_dim_[static_cast<std::size_t>(dim)];
}

long SimplicialComplex::index_of(const Simplex& s) const {
    const auto& level = simplices(s.dimension());
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || !(*it == s)) return -1;
    return static_cast<long>(it - level.begin());
}

bool SimplicialComplex::closure_holds() const {
    for (int d = 1; d <= max_dimension(); ++d)
        for (const Simplex& s : simplices(d))
            for (std::size_t i = 0; i + 1 <= s.vertices().size(); ++i)
                if (index_of(s.facet(i)) < 0) return false;
    return true;
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<uint32_t>>& maximal) {
    std::vector<std::set<Simplex>> levels;
    // Insert a simplex together with all of its faces.
    auto insert_closed = [&](const Simplex& top) {
        std::vector<Simplex> stack{top};
        while (!stack.empty()) {
            Simplex s = std::move(stack.back());
            stack.pop_back();
            int d = s.dimension();
            if (static_cast<int>(levels.size()) <= d) levels.resize(static_cast<std::size_t>(d) + 1);
            if (!levels[static_cast<std::size_t>(d)].insert(s).second) continue;
            for (std::size_t i = 0; d > 0 && i < s.vertices().size(); ++i)
                stack.push_back(s.facet(i));
        }
    };
    for (const auto& verts : maximal) insert_closed(Simplex::from_vertices(verts));

    SimplicialComplex out;
    out.by_dim_.reserve(levels.size());
    for (auto& level : levels)
        out.by_dim_.emplace_back(level.begin(), level.end());
    return out;
}

SimplicialComplex build_complex(const std::vector<std::vector<uint32_t>>& maximal_simplices) {
    return SimplicialComplex::from_maximal(maximal_simplices);
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
    if (k < 0 || k > complex.max_dimension())
        throw invalid_input("boundary dimension out of range");
    BoundaryMatrix m;
    m.k = k;
    m.rows = (k == 0) ? 0 : complex.count(k - 1);
    const auto& cols = complex.simplices(k);
    m.columns.reserve(cols.size());
    for (const Simplex& s : cols) {
        std::vector<uint32_t> col;
        if (k > 0) {
            col.reserve(s.vertices().size());
            for (std::size_t i = 0; i < s.vertices().size(); ++i)
                col.push_back(static_cast<uint32_t>(complex.index_of(s.facet(i))));
            std::sort(col.begin(), col.end());
        }
        m.columns.push_back(std::move(col));
    }
    return m;
}

} // namespace tda
