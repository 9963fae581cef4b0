#include "rips.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace tda {

void DistanceMatrix::validate() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (d_[i * n_ + i] != 0.0) throw invalid_input("distance matrix diagonal must be zero");
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double v = d_[i * n_ + j];
            if (!std::isfinite(v) || v < 0.0)
                throw invalid_input("distances must be finite and non-negative");
            if (v != d_[j * n_ + i]) throw invalid_input("distance matrix must be symmetric");
        }
    }
}

DistanceMatrix euclidean_distances(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    DistanceMatrix d(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = 0;
            const double* a = cloud.point(i);
            const double* b = cloud.point(j);
            for (std::size_t k = 0; k < cloud.dim; ++k) {
                const double diff = a[k] - b[k];
                s += diff * diff;
            }
            d.set(i, j, std::sqrt(s));
        }
    return d;
}

namespace {

std::vector<std::vector<double>> parse_numeric_rows(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<double> vals;
        std::string field;
        std::istringstream ls(line);
        bool any = false;
        while (std::getline(ls, field, ',')) {
            const char* b = field.c_str();
            const char* e = b + field.size();
            while (b < e && (*b == ' ' || *b == '\t')) ++b;
            while (e > b && (e[-1] == ' ' || e[-1] == '\t')) --e;
            if (b == e) continue;
            double v;
            auto res = std::from_chars(b, e, v);
            if (res.ec != std::errc{} || res.ptr != e)
                throw parse_error("non-numeric field in distance CSV", lineno);
            vals.push_back(v);
            any = true;
        }
        if (any) rows.push_back(std::move(vals));
        ++lineno;
    }
    return rows;
}

} // namespace

DistanceMatrix distances_from_csv(const std::string& text, bool lower_triangular) {
    auto rows = parse_numeric_rows(text);
    if (lower_triangular) {
        // Row i (1-based point index) holds d(i,0..i-1); an optional empty
        // first row for point 0 is tolerated by the parser above.
        const std::size_t n = rows.size() + 1;
        DistanceMatrix d(n);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != i + 1)
                throw parse_error("lower-triangular row has wrong length", i);
            for (std::size_t j = 0; j <= i; ++j) d.set(i + 1, j, rows[i][j]);
        }
        d.validate();
        return d;
    }
    const std::size_t n = rows.size();
    DistanceMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw parse_error("distance matrix row is not square", i);
        for (std::size_t j = 0; j < n; ++j)
            if (j > i) d.set(i, j, rows[i][j]);
            else if (j < i && rows[i][j] != d(i, j))
                throw parse_error("distance matrix not symmetric", i);
            else if (j == i && rows[i][j] != 0.0)
                throw parse_error("distance matrix diagonal must be zero", i);
    }
    d.validate();
    return d;
}

DistanceMatrix read_distances(const std::string& path, bool lower_triangular) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return distances_from_csv(ss.str(), lower_triangular);
}

void FilteredComplex::push_cell(double value, std::span<const uint32_t> verts) {
    values_.push_back(value);
    dims_.push_back(static_cast<int8_t>(verts.size() - 1));
    const std::size_t base = verts_.size();
    verts_.resize(base + stride_, 0);
    std::copy(verts.begin(), verts.end(), verts_.begin() + static_cast<long>(base));
}

void FilteredComplex::sort_cells() {
    const std::size_t m = values_.size();
    std::vector<uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        if (values_[a] != values_[b]) return values_[a] < values_[b];
        if (dims_[a] != dims_[b]) return dims_[a] < dims_[b];
        return std::lexicographical_compare(
            verts_.begin() + a * stride_, verts_.begin() + a * stride_ + dims_[a] + 1,
            verts_.begin() + b * stride_, verts_.begin() + b * stride_ + dims_[b] + 1);
    });
    std::vector<double> values(m);
    std::vector<int8_t> dims(m);
    std::vector<uint32_t> verts(m * stride_);
    for (std::size_t i = 0; i < m; ++i) {
        const uint32_t src = order[i];
        values[i] = values_[src];
        dims[i] = dims_[src];
        std::copy(verts_.begin() + src * stride_, verts_.begin() + (src + 1) * stride_,
                  verts.begin() + static_cast<long>(i * stride_));
    }
    values_ = std::move(values);
    dims_ = std::move(dims);
    verts_ = std::move(verts);
}

bool FilteredComplex::face_monotone() const {
    // Cheap necessary conditions: values non-decreasing along the order and
    // vertices entering at 0. Facet presence/order is verified when the
    // persistence engine assembles boundary columns.
    for (std::size_t i = 1; i < num_cells(); ++i)
        if (value(i) < value(i - 1)) return false;
    for (std::size_t i = 0; i < num_cells(); ++i)
        if (dim(i) == 0 && value(i) != 0.0) return false;
    return true;
}

FilteredComplex rips_complex(const DistanceMatrix& d, double epsilon_max, int max_dim) {
    if (epsilon_max < 0.0) throw invalid_input("epsilon_max must be >= 0");
    if (max_dim < 0) throw invalid_input("max_dim must be >= 0");
    const std::size_t n = d.size();

    FilteredComplex fc;
    fc.epsilon_max = epsilon_max;
    fc.set_stride(static_cast<std::size_t>(max_dim) + 1);

    for (uint32_t v = 0; v < n; ++v) fc.push_cell(0.0, std::span<const uint32_t>(&v, 1));

    // Sorted lower-neighbor adjacency: nbr[i] = { j > i : d(i,j) <= eps }.
    std::vector<std::vector<uint32_t>> nbr(n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if (d(i, j) <= epsilon_max) nbr[i].push_back(j);

    int top = 0;
    if (max_dim >= 1) {
        std::vector<uint32_t> verts;
        std::vector<std::vector<uint32_t>> cand_stack;
        // Depth-first clique expansion from each edge.
        struct Frame {
            std::size_t cand_pos;
        };
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t j : nbr[i]) {
                verts.assign({i, j});
                double base_val = d(i, j);
                fc.push_cell(base_val, verts);
                top = std::max(top, 1);
                if (max_dim < 2) continue;
                // candidates: common neighbors beyond j
                std::vector<uint32_t> cand;
                std::set_intersection(nbr[i].begin(), nbr[i].end(), nbr[j].begin(), nbr[j].end(),
                                      std::back_inserter(cand));
                cand.erase(std::remove_if(cand.begin(), cand.end(), [&](uint32_t v) { return v <= j; }),
                           cand.end());
                // recursive expansion, iteratively
                std::vector<std::pair<std::vector<uint32_t>, double>> stack;
                for (uint32_t v : cand) {
                    double val = base_val;
                    for (uint32_t u : verts) val = std::max(val, d(u, v));
                    stack.emplace_back(std::vector<uint32_t>{v}, val);
                }
                // Each stack entry holds the extension path beyond {i,j}.
                while (!stack.empty()) {
                    auto [path, val] = std::move(stack.back());
                    stack.pop_back();
                    std::vector<uint32_t> cell = {i, j};
                    cell.insert(cell.end(), path.begin(), path.end());
                    fc.push_cell(val, cell);
                    top = std::max(top, static_cast<int>(cell.size()) - 1);
                    if (static_cast<int>(cell.size()) - 1 >= max_dim) continue;
                    const uint32_t last = path.back();
                    for (uint32_t v : cand) {
                        if (v <= last) continue;
                        bool ok = true;
                        double nval = val;
                        for (uint32_t u : path)
                            if (d(u, v) > epsilon_max) {
                                ok = false;
                                break;
                            } else {
                                nval = std::max(nval, d(u, v));
                            }
                        if (!ok) continue;
                        nval = std::max(nval, std::max(d(i, v), d(j, v)));
                        std::vector<uint32_t> npath = path;
                        npath.push_back(v);
                        stack.emplace_back(std::move(npath), nval);
                    }
                }
            }
        }
    }
    fc.max_dimension = top;
    fc.sort_cells();
    return fc;
}

} // namespace tda
