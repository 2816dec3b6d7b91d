// Lattice positions and one-step moves for Z^d and the 2-d comb.
//
// The comb is Z^2 with every horizontal edge off the x-axis removed: the
// x-axis ("backbone") keeps degree 4, all other vertices ("teeth") have
// degree 2 and can only move vertically.

#ifndef COMBWALK_LATTICE_HPP
#define COMBWALK_LATTICE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "combwalk/rng.hpp"

namespace combwalk {

struct ZdPoint {
    std::vector<std::int64_t> coords;

    ZdPoint() = default;
    explicit ZdPoint(std::size_t d) : coords(d, 0) {}
    ZdPoint(std::initializer_list<std::int64_t> c) : coords(c) {}

    std::size_t dimension() const noexcept { return coords.size(); }
    bool operator==(const ZdPoint&) const = default;
};

/// Increment +/- e_axis produced by one simple-walk step.
struct ZdStep {
    std::uint32_t axis;
    std::int8_t direction;  // +1 or -1
};

/// One step of the simple symmetric walk on Z^d: each of the 2d signed
/// unit vectors with probability 1/(2d).
inline ZdStep zd_step(std::size_t d, RngStream& rng) {
    if (d == 0) throw std::invalid_argument("zd_step: dimension must be >= 1");
    const std::uint64_t r = rng.next_below(2 * d);
    return ZdStep{static_cast<std::uint32_t>(r >> 1),
                  static_cast<std::int8_t>((r & 1) ? -1 : +1)};
}

inline void apply_step(ZdPoint& p, const ZdStep& s) {
    p.coords[s.axis] += s.direction;
}

struct CombVertex {
    std::int64_t x = 0;  // backbone coordinate
    std::int64_t y = 0;  // tooth height; 0 means on the backbone

    bool operator==(const CombVertex&) const = default;
    auto operator<=>(const CombVertex&) const = default;
};

inline int comb_degree(const CombVertex& v) noexcept {
    return v.y == 0 ? 4 : 2;
}

inline std::vector<CombVertex> comb_neighbors(const CombVertex& v) {
    if (v.y != 0)
        return {{v.x, v.y - 1}, {v.x, v.y + 1}};
    return {{v.x - 1, 0}, {v.x + 1, 0}, {v.x, -1}, {v.x, 1}};
}

/// One step of the comb walk: uniform over the neighbors of v, i.e. the
/// degree-weighted kernel p(u,v) = 1/deg(u).
inline CombVertex comb_step_direct(const CombVertex& v, RngStream& rng) {
    if (v.y != 0) {
        return {v.x, v.y + ((rng.next_u64() & 1) ? 1 : -1)};
    }
    switch (rng.next_below(4)) {
        case 0: return {v.x - 1, 0};
        case 1: return {v.x + 1, 0};
        case 2: return {v.x, -1};
        default: return {v.x, 1};
    }
}

}  // namespace combwalk

#endif  // COMBWALK_LATTICE_HPP
