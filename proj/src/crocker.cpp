#include "crocker.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

namespace tda {

CrockerMatrix crocker(const std::vector<DistanceMatrix>& steps,
                      const std::vector<std::string>& labels, int k,
                      const std::vector<double>& epsilon_grid, int max_dim, unsigned threads) {
    if (steps.empty()) throw invalid_input("crocker: empty time series");
    if (epsilon_grid.empty()) throw invalid_input("crocker: empty scale grid");
    if (!std::is_sorted(epsilon_grid.begin(), epsilon_grid.end()) ||
        std::adjacent_find(epsilon_grid.begin(), epsilon_grid.end()) != epsilon_grid.end())
        throw invalid_input("crocker: scale grid must be strictly increasing");
    if (max_dim < k) throw invalid_input("crocker: max_dim must be >= k");

    CrockerMatrix m;
    m.k = k;
    m.epsilon_grid = epsilon_grid;
    for (std::size_t t = 0; t < steps.size(); ++t)
        m.t_labels.push_back(t < labels.size() ? labels[t] : std::to_string(t));
    m.values.assign(steps.size(), {});

    const double eps_max = epsilon_grid.back();
    auto run_step = [&](std::size_t t) {
        const Barcode bc = persistent_homology(rips_complex(steps[t], eps_max, max_dim + 1));
        std::vector<std::size_t> row;
        row.reserve(epsilon_grid.size());
        for (double eps : epsilon_grid) row.push_back(betti_curve(bc, k, eps));
        m.values[t] = std::move(row);
    };

    if (threads <= 1 || steps.size() == 1) {
        for (std::size_t t = 0; t < steps.size(); ++t) run_step(t);
    } else {
        // Time steps are independent; row order is fixed by index, so the
        // result does not depend on scheduling.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned nthreads = std::min<std::size_t>(threads, steps.size());
        for (unsigned w = 0; w < nthreads; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < steps.size(); t = next.fetch_add(1))
                    run_step(t);
            });
        for (auto& th : pool) th.join();
    }
    return m;
}

CrockerMatrix crocker_noise_floor(const CrockerMatrix& m, std::size_t cap) {
    if (cap < 1) throw invalid_input("crocker: noise cap must be >= 1");
    CrockerMatrix out = m;
    for (auto& row : out.values)
        for (auto& v : row)
            if (v > cap) v = cap + 1;
    return out;
}

std::string crocker_to_csv(const CrockerMatrix& m) {
    std::string out = "t\\epsilon";
    char buf[32];
    for (double e : m.epsilon_grid) {
        out.push_back(',');
        auto res = std::to_chars(buf, buf + sizeof buf, e);
        out.append(buf, res.ptr);
    }
    out.push_back('\n');
    for (std::size_t t = 0; t < m.values.size(); ++t) {
        out += m.t_labels[t];
        for (std::size_t c = 0; c < m.values[t].size(); ++c) {
            out.push_back(',');
            out += std::to_string(m.values[t][c]);
        }
        out.push_back('\n');
    }
    return out;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
    if (count == 0 || hi < lo) throw invalid_input("bad grid parameters");
    std::vector<double> g;
    g.reserve(count);
    if (count == 1) {
        g.push_back(lo);
        return g;
    }
    for (std::size_t i = 0; i < count; ++i)
        g.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    return g;
}

} // namespace tda
