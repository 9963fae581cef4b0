#include "diagram.hpp"

#include <algorithm>
#include <cmath>

namespace tda {

PersistenceDiagram diagram_from_barcode(const Barcode& bc, int k) {
    PersistenceDiagram d;
    d.k = k;
    for (const auto& f : bc.features)
        if (f.dimension == k) d.points.emplace_back(f.birth, f.death);
    return d;
}

namespace {

double diag_cost(const std::pair<double, double>& p) { return (p.second - p.first) / 2.0; }

double linf(const std::pair<double, double>& p, const std::pair<double, double>& q) {
    return std::max(std::abs(p.first - q.first), std::abs(p.second - q.second));
}

// Kuhn's augmenting-path matching on the augmented bipartite graph:
// left = finite points of a + diagonal slots for b's points,
// right = finite points of b + diagonal slots for a's points.
class Feasibility {
  public:
    Feasibility(const std::vector<std::pair<double, double>>& a,
                const std::vector<std::pair<double, double>>& b)
        : a_(a), b_(b), na_(a.size()), nb_(b.size()) {}

    bool feasible(double t) {
        t_ = t;
        const std::size_t left = na_ + nb_, right = nb_ + na_;
        match_right_.assign(right, SIZE_MAX);
        stamp_.assign(right, 0);
        round_ = 0;
        std::size_t matched = 0;
        for (std::size_t u = 0; u < left; ++u) {
            ++round_;
            if (try_match(u)) ++matched;
        }
        return matched == left;
    }

  private:
    bool edge(std::size_t u, std::size_t v) const {
        const bool u_pt = u < na_, v_pt = v < nb_;
        if (u_pt && v_pt) return linf(a_[u], b_[v]) <= t_;
        if (u_pt) return v == nb_ + u && diag_cost(a_[u]) <= t_;
        if (v_pt) return v == u - na_ && diag_cost(b_[v]) <= t_;
        return true; // diagonal slot to diagonal slot, free
    }

    bool try_match(std::size_t u) {
        const std::size_t right = nb_ + na_;
        for (std::size_t v = 0; v < right; ++v) {
            if (stamp_[v] == round_ || !edge(u, v)) continue;
            stamp_[v] = round_;
            if (match_right_[v] == SIZE_MAX || try_match(match_right_[v])) {
                match_right_[v] = u;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::pair<double, double>>& a_;
    const std::vector<std::pair<double, double>>& b_;
    std::size_t na_, nb_;
    double t_ = 0;
    std::vector<std::size_t> match_right_;
    std::vector<uint64_t> stamp_;
    uint64_t round_ = 0;
};

} // namespace

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    if (a.k != b.k) throw invalid_input("bottleneck: diagrams have different dimensions");

    std::vector<std::pair<double, double>> fa, fb;
    std::vector<double> ia, ib;
    for (const auto& p : a.points) {
        if (std::isinf(p.second)) ia.push_back(p.first);
        else fa.push_back(p);
    }
    for (const auto& p : b.points) {
        if (std::isinf(p.second)) ib.push_back(p.first);
        else fb.push_back(p);
    }

    // Essential classes must match essential classes.
    if (ia.size() != ib.size()) return std::numeric_limits<double>::infinity();
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    double inf_part = 0;
    for (std::size_t i = 0; i < ia.size(); ++i)
        inf_part = std::max(inf_part, std::abs(ia[i] - ib[i]));

    if (fa.empty() && fb.empty()) return inf_part;

    std::vector<double> candidates{0.0};
    for (const auto& p : fa) candidates.push_back(diag_cost(p));
    for (const auto& q : fb) candidates.push_back(diag_cost(q));
    for (const auto& p : fa)
        for (const auto& q : fb) candidates.push_back(linf(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    Feasibility check(fa, fb);
    std::size_t lo = 0, hi = candidates.size() - 1;
    // The max candidate (everything to the diagonal) is always feasible.
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (check.feasible(candidates[mid])) hi = mid;
        else lo = mid + 1;
    }
    return std::max(inf_part, candidates[lo]);
}

} // namespace tda
