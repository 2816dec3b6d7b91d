// Distance and collision machinery for K-walker ensembles.
//
// Comb graph distance has a closed form: within one tooth it is the
// vertical gap; between different teeth every path is forced through the
// backbone, giving |u.y| + |u.x - v.x| + |v.y|. A BFS oracle over the comb
// adjacency guards the closed form in tests.

#ifndef COMBWALK_METRICS_HPP
#define COMBWALK_METRICS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "combwalk/lattice.hpp"
#include "combwalk/trajectory.hpp"

namespace combwalk {

/// K walker positions sharing one clock; the argument of D_K.
struct ZdEnsembleSnapshot {
    std::int64_t time = 0;
    std::vector<ZdPoint> states;
};

struct CombEnsembleSnapshot {
    std::int64_t time = 0;
    std::vector<CombVertex> states;
};

std::int64_t comb_graph_distance(const CombVertex& u, const CombVertex& v);

/// Exact shortest-path length by breadth-first search; throws
/// std::length_error once the search frontier exceeds radius_cap.
std::int64_t comb_graph_distance_bfs(const CombVertex& u, const CombVertex& v,
                                     std::int64_t radius_cap);

double euclidean_distance(const ZdPoint& p, const ZdPoint& q);

/// D_K on Z^d: max over pairs of Euclidean distances. Requires K >= 2.
double max_pairwise_distance(std::span<const ZdPoint> states);

/// D_K on the comb: max over pairs of graph distances (exact integer).
std::int64_t max_pairwise_comb_distance(std::span<const CombVertex> states);

inline double max_pairwise_distance(const ZdEnsembleSnapshot& snap) {
    return max_pairwise_distance(std::span<const ZdPoint>(snap.states));
}

inline std::int64_t max_pairwise_comb_distance(const CombEnsembleSnapshot& snap) {
    return max_pairwise_comb_distance(std::span<const CombVertex>(snap.states));
}

enum class CollisionMode { pairwise, full };

struct CollisionEvent {
    std::int64_t time;
    CollisionMode kind;
    std::int32_t walker_i = -1;  // set for pairwise events
    std::int32_t walker_j = -1;
    CombVertex comb_location{};  // valid for comb ensembles
    std::vector<std::int64_t> zd_location;  // valid for Z^d ensembles
};

/// Scans fully recorded synchronized trajectories and emits an event at
/// each time the mode predicate holds (all walkers share the clock).
std::vector<CollisionEvent> detect_collisions(
    std::span<const Trajectory<CombVertex>> walkers, CollisionMode mode);
std::vector<CollisionEvent> detect_collisions(
    std::span<const Trajectory<ZdPoint>> walkers, CollisionMode mode);

}  // namespace combwalk

#endif  // COMBWALK_METRICS_HPP
