#include "combwalk/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace combwalk {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

struct VertexHash {
    std::size_t operator()(const CombVertex& v) const noexcept {
        return static_cast<std::size_t>(
            hash3(static_cast<std::uint64_t>(v.x),
                  static_cast<std::uint64_t>(v.y), 0x636f6d62ULL));
    }
};

}  // namespace

std::int64_t comb_graph_distance(const CombVertex& u, const CombVertex& v) {
    if (u.x == v.x) return iabs(u.y - v.y);
    return iabs(u.y) + iabs(u.x - v.x) + iabs(v.y);
}

std::int64_t comb_graph_distance_bfs(const CombVertex& u, const CombVertex& v,
                                     std::int64_t radius_cap) {
    if (u == v) return 0;
    std::unordered_set<CombVertex, VertexHash> seen{u};
    std::deque<std::pair<CombVertex, std::int64_t>> frontier{{u, 0}};
    while (!frontier.empty()) {
        const auto [w, dist] = frontier.front();
        frontier.pop_front();
        if (dist >= radius_cap)
            throw std::length_error("comb_graph_distance_bfs: radius cap exceeded");
        for (const auto& nb : comb_neighbors(w)) {
            if (nb == v) return dist + 1;
            if (seen.insert(nb).second) frontier.emplace_back(nb, dist + 1);
        }
    }
    throw std::length_error("comb_graph_distance_bfs: radius cap exceeded");
}

double euclidean_distance(const ZdPoint& p, const ZdPoint& q) {
    if (p.dimension() != q.dimension())
        throw std::invalid_argument("euclidean_distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        const double d = static_cast<double>(p.coords[i] - q.coords[i]);
        s += d * d;
    }
    return std::sqrt(s);
}

double max_pairwise_distance(std::span<const ZdPoint> states) {
    if (states.size() < 2)
        throw std::invalid_argument("max_pairwise_distance: need K >= 2");
    double best = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            const double d = euclidean_distance(states[i], states[j]);
            if (d > best) best = d;
        }
    return best;
}

std::int64_t max_pairwise_comb_distance(std::span<const CombVertex> states) {
    if (states.size() < 2)
        throw std::invalid_argument("max_pairwise_comb_distance: need K >= 2");
    std::int64_t best = 0;
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            const std::int64_t d = comb_graph_distance(states[i], states[j]);
            if (d > best) best = d;
        }
    return best;
}

namespace {

template <class State, class Equal, class Record>
std::vector<CollisionEvent> detect_impl(
    std::span<const Trajectory<State>> walkers, CollisionMode mode,
    Equal equal, Record record) {
    if (walkers.size() < 2)
        throw std::invalid_argument("detect_collisions: need K >= 2 walkers");
    const std::size_t len = walkers[0].full_path.size();
    for (const auto& w : walkers) {
        if (!w.has_full_path())
            throw std::invalid_argument(
                "detect_collisions: walkers must carry full step records");
        if (w.full_path.size() != len)
            throw std::invalid_argument(
                "detect_collisions: walkers not synchronized");
    }
    std::vector<CollisionEvent> events;
    for (std::size_t t = 1; t < len; ++t) {
        if (mode == CollisionMode::full) {
            bool all = true;
            for (std::size_t i = 1; i < walkers.size(); ++i)
                if (!equal(walkers[i].full_path[t], walkers[0].full_path[t])) {
                    all = false;
                    break;
                }
            if (all) {
                CollisionEvent e;
                e.time = static_cast<std::int64_t>(t);
                e.kind = CollisionMode::full;
                record(e, walkers[0].full_path[t]);
                events.push_back(std::move(e));
            }
        } else {
            for (std::size_t i = 0; i < walkers.size(); ++i)
                for (std::size_t j = i + 1; j < walkers.size(); ++j)
                    if (equal(walkers[i].full_path[t], walkers[j].full_path[t])) {
                        CollisionEvent e;
                        e.time = static_cast<std::int64_t>(t);
                        e.kind = CollisionMode::pairwise;
                        e.walker_i = static_cast<std::int32_t>(i);
                        e.walker_j = static_cast<std::int32_t>(j);
                        record(e, walkers[i].full_path[t]);
                        events.push_back(std::move(e));
                    }
        }
    }
    return events;
}

}  // namespace

std::vector<CollisionEvent> detect_collisions(
    std::span<const Trajectory<CombVertex>> walkers, CollisionMode mode) {
    return detect_impl<CombVertex>(
        walkers, mode,
        [](const CombVertex& a, const CombVertex& b) { return a == b; },
        [](CollisionEvent& e, const CombVertex& v) { e.comb_location = v; });
}

std::vector<CollisionEvent> detect_collisions(
    std::span<const Trajectory<ZdPoint>> walkers, CollisionMode mode) {
    return detect_impl<ZdPoint>(
        walkers, mode,
        [](const ZdPoint& a, const ZdPoint& b) { return a.coords == b.coords; },
        [](CollisionEvent& e, const ZdPoint& v) { e.zd_location = v.coords; });
}

}  // namespace combwalk
