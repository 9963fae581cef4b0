#include "mapper.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace tda {

FilterValues filter_values(const PointCloud& cloud, const DistanceMatrix& d,
                           const FilterSpec& spec) {
    const std::size_t n = d.size();
    FilterValues out(n, 0.0);
    switch (spec.kind) {
    case FilterKind::coordinate:
        if (spec.axis >= cloud.dim) throw invalid_input("filter axis out of range");
        for (std::size_t i = 0; i < n; ++i) out[i] = cloud.point(i)[spec.axis];
        break;
    case FilterKind::eccentricity:
        for (std::size_t i = 0; i < n; ++i) {
            if (std::isinf(spec.exponent)) {
                double mx = 0;
                for (std::size_t j = 0; j < n; ++j) mx = std::max(mx, d(i, j));
                out[i] = mx;
            } else {
                double sum = 0;
                for (std::size_t j = 0; j < n; ++j) sum += d(i, j);
                out[i] = n > 1 ? sum / static_cast<double>(n - 1) : 0.0;
            }
        }
        break;
    case FilterKind::density:
        if (spec.bandwidth <= 0) throw invalid_input("density bandwidth must be positive");
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const double x = d(i, j) / spec.bandwidth;
                sum += std::exp(-0.5 * x * x);
            }
            out[i] = -sum; // dense regions get low filter values
        }
        break;
    }
    return out;
}

Cover uniform_cover(const FilterValues& values, std::size_t r, double g) {
    if (values.empty()) throw invalid_input("cover: no filter values");
    if (r < 1) throw invalid_input("cover: need at least one interval");
    if (g <= 0.0 || g >= 1.0) throw invalid_input("cover: overlap must be in (0,1)");
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;

    Cover cover;
    cover.r = r;
    cover.overlap = g;
    if (hi == lo) {
        cover.intervals.emplace_back(lo, hi);
        cover.degenerate = r > 1;
        return cover;
    }
    if (r == 1) {
        cover.intervals.emplace_back(lo, hi);
        return cover;
    }
    const double len = (hi - lo) / (static_cast<double>(r) - static_cast<double>(r - 1) * g);
    const double step = len * (1.0 - g);
    for (std::size_t i = 0; i < r; ++i) {
        const double a = lo + step * static_cast<double>(i);
        cover.intervals.emplace_back(a, i + 1 == r ? hi : a + len);
    }
    return cover;
}

MapperGraph mapper_graph(const DistanceMatrix& d, const FilterValues& values, const Cover& cover,
                         double cluster_epsilon) {
    if (cluster_epsilon <= 0) throw invalid_input("mapper: cluster epsilon must be positive");
    if (values.size() != d.size()) throw invalid_input("mapper: filter/distance size mismatch");
    const std::size_t n = d.size();

    MapperGraph g;
    for (std::size_t iv = 0; iv < cover.intervals.size(); ++iv) {
        const auto [lo, hi] = cover.intervals[iv];
        std::vector<std::size_t> pre;
        for (std::size_t i = 0; i < n; ++i)
            if (values[i] >= lo && values[i] <= hi) pre.push_back(i);
        if (pre.empty()) continue;

        // single linkage at cluster_epsilon = components of the threshold
        // graph restricted to the preimage
        std::vector<std::size_t> parent(pre.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t a = 0; a < pre.size(); ++a)
            for (std::size_t b = a + 1; b < pre.size(); ++b)
                if (d(pre[a], pre[b]) <= cluster_epsilon) parent[find(a)] = find(b);

        std::map<std::size_t, std::vector<std::size_t>> clusters;
        for (std::size_t a = 0; a < pre.size(); ++a) clusters[find(a)].push_back(pre[a]);
        std::vector<MapperNode> nodes;
        for (auto& [root, members] : clusters) {
            MapperNode node;
            node.interval = iv;
            node.members = std::move(members);
            nodes.push_back(std::move(node));
        }
        std::sort(nodes.begin(), nodes.end(),
                  [](const MapperNode& a, const MapperNode& b) { return a.members[0] < b.members[0]; });
        for (auto& node : nodes) {
            node.id = g.nodes.size();
            g.nodes.push_back(std::move(node));
        }
    }

    for (std::size_t a = 0; a < g.nodes.size(); ++a)
        for (std::size_t b = a + 1; b < g.nodes.size(); ++b) {
            if (g.nodes[a].interval == g.nodes[b].interval) continue;
            std::vector<std::size_t> shared;
            std::set_intersection(g.nodes[a].members.begin(), g.nodes[a].members.end(),
                                  g.nodes[b].members.begin(), g.nodes[b].members.end(),
                                  std::back_inserter(shared));
            if (!shared.empty()) g.edges.push_back({a, b, shared.size()});
        }
    return g;
}

std::string mapper_to_dot(const MapperGraph& g) {
    std::ostringstream out;
    out << "graph mapper {\n";
    for (const auto& node : g.nodes)
        out << "  n" << node.id << " [label=\"" << node.id << " (" << node.members.size()
            << ")\" interval=" << node.interval << "];\n";
    for (const auto& edge : g.edges)
        out << "  n" << edge.a << " -- n" << edge.b << " [label=\"" << edge.shared << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string mapper_to_json(const MapperGraph& g) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& node : g.nodes)
        j["nodes"].push_back(
            {{"id", node.id}, {"interval", node.interval}, {"members", node.members}});
    j["edges"] = nlohmann::json::array();
    for (const auto& edge : g.edges)
        j["edges"].push_back({{"a", edge.a}, {"b", edge.b}, {"shared", edge.shared}});
    return j.dump(2) + "\n";
}

} // namespace tda
