#include "persistence.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <unordered_map>

namespace tda {

namespace {

// Facet lookup for one dimension: packs up to three vert
// ids into a 64-bit key when they fit, otherwise falls back to an ordered
// map on the vertex vector.
class FacetIndex {
  public:
    FacetIndex(const FilteredComplex& fc, int dim) {
        uint32_t max_v = 0;
        for (std::size_t i = 0; i < fc.num_cells(); ++i)
            if (fc.dim(i) == dim)
                for (uint32_t v : fc.cell_vertices(i)) max_v = std::max(max_v, v);
        const std::size_t nverts = static_cast<std::size_t>(dim) + 1;
        packed_ok_ = nverts <= 3 && max_v < (uint32_t{1} << 21);
        for (std::size_t i = 0; i < fc.num_cells(); ++i) {
            if (fc.dim(i) != dim) continue;
            if (packed_ok_)
                packed_.emplace(pack(fc.cell_vertices(i)), static_cast<uint32_t>(i));
            else
                general_.emplace(std::vector<uint32_t>(fc.cell_vertices(i).begin(),
                                                       fc.cell_vertices(i).end()),
                                 static_cast<uint32_t>(i));
        }
    }

    // Index of the facet, or UINT32_MAX if absent.
    uint32_t find(std::span<const uint32_t> verts) const {
        if (packed_ok_) {
            auto it = packed_.find(pack(verts));
            return it == packed_.end() ? UINT32_MAX : it->second;
        }
        auto it = general_.find(std::vector<uint32_t>(verts.begin(), verts.end()));
        return it == general_.end() ? UINT32_MAX : it->second;
    }

  private:
    static uint64_t pack(std::span<const uint32_t> verts) {
        uint64_t key = 0;
        for (uint32_t v : verts) key = (key << 21) | (v + 1);
        return key;
    }

    bool packed_ok_ = false;
    std::unordered_map<uint64_t, uint32_t> packed_;
    std::map<std::vector<uint32_t>, uint32_t> general_;
};

// XOR (symmetric difference) of two ascending index lists into `out`.
void xor_columns(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                 std::vector<uint32_t>& out) {
    out.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

} // namespace

Barcode persistent_homology(const FilteredComplex& fc, const PersistenceOptions& opts) {
    if (!fc.face_monotone()) throw invalid_input("invalid filtration: values not face-monotone");

    const std::size_t m = fc.num_cells();
    Barcode bc;
    bc.epsilon_max = fc.epsilon_max;
    bc.max_dimension = fc.max_dimension;

    std::vector<char> cleared(m, 0);

    // Cells of each dimension in filtration order (global order restricted
    // to one dimension is already sorted by value).
    std::vector<std::vector<uint32_t>> cells_by_dim(static_cast<std::size_t>(fc.max_dimension) + 1);
    for (std::size_t i = 0; i < m; ++i)
        cells_by_dim[static_cast<std::size_t>(fc.dim(i))].push_back(static_cast<uint32_t>(i));

    auto emit = [&](int dim, double birth, double death, uint32_t creator, uint32_t destroyer) {
        if (opts.record_pairs && destroyer != UINT32_MAX)
            bc.raw_pairs.emplace_back(creator, destroyer);
        if (death == birth && !opts.keep_zero_bars) return;
        bc.features.push_back({dim, birth, death});
    };

    std::vector<uint32_t> scratch_a, scratch_b, tmp;
    for (int d = fc.max_dimension; d >= 1; --d) {
        FacetIndex facets(fc, d - 1);
        // pivot row -> reduced column of its destroyer
        std::unordered_map<uint32_t, std::vector<uint32_t>> reduced;
        std::unordered_map<uint32_t, uint32_t> low_owner;

        std::vector<uint32_t> verts_buf;
        for (uint32_t j : cells_by_dim[static_cast<std::size_t>(d)]) {
            if (cleared[j]) continue;
            auto vs = fc.cell_vertices(j);
            scratch_a.clear();
            verts_buf.assign(vs.begin(), vs.end());
            for (std::size_t omit = 0; omit < verts_buf.size(); ++omit) {
                tmp.clear();
                for (std::size_t t = 0; t < verts_buf.size(); ++t)
                    if (t != omit) tmp.push_back(verts_buf[t]);
                const uint32_t f = facets.find(tmp);
                if (f == UINT32_MAX || f >= j)
                    throw invalid_input("invalid filtration: facet missing or out of order");
                scratch_a.push_back(f);
            }
            std::sort(scratch_a.begin(), scratch_a.end());

            while (!scratch_a.empty()) {
                auto it = low_owner.find(scratch_a.back());
                if (it == low_owner.end()) break;
                xor_columns(scratch_a, reduced.at(scratch_a.back()), scratch_b);
                scratch_a.swap(scratch_b);
            }
            if (scratch_a.empty()) {
                // j creates a d-cycle; since the (d+1)-pass already ran and
                // did not clear it, the class never dies.
                emit(d, fc.value(j), std::numeric_limits<double>::infinity(), j, UINT32_MAX);
            } else {
                const uint32_t p = scratch_a.back();
                low_owner.emplace(p, j);
                reduced.emplace(p, scratch_a);
                cleared[p] = 1;
                emit(d - 1, fc.value(p), fc.value(j), p, j);
            }
        }
    }

    // Uncleared vertices are components that never merge.
    for (uint32_t v : cells_by_dim[0])
        if (!cleared[v])
            emit(0, fc.value(v), std::numeric_limits<double>::infinity(), v, UINT32_MAX);

    std::sort(bc.features.begin(), bc.features.end(), [](const auto& a, const auto& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    return bc;
}

std::size_t betti_curve(const Barcode& bc, int k, double epsilon) {
    std::size_t count = 0;
    for (const auto& f : bc.features)
        if (f.dimension == k && f.birth <= epsilon && epsilon < f.death) ++count;
    return count;
}

} // namespace tda
