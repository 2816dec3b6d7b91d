// Walker state machines and trajectory generators.
//
// Two comb walkers are provided: the direct kernel walker (uniform over
// neighbors) and the interleaved construction that alternates geometric
// horizontal runs with excursions of an independent vertical driver walk.
// Both produce the same law; the equivalence is exercised by tests.

#ifndef COMBWALK_WALKERS_HPP
#define COMBWALK_WALKERS_HPP

#include <cstdint>
#include <stdexcept>

#include "combwalk/lattice.hpp"
#include "combwalk/rng.hpp"
#include "combwalk/trajectory.hpp"

namespace combwalk {

class ZdWalker {
public:
    explicit ZdWalker(std::size_t d, RngStream rng) : pos_(d), rng_(rng) {
        if (d == 0) throw std::invalid_argument("ZdWalker: dimension >= 1");
    }

    void step() {
        apply_step(pos_, zd_step(pos_.dimension(), rng_));
        ++steps_;
        bool origin = true;
        for (auto c : pos_.coords)
            if (c != 0) { origin = false; break; }
        if (origin) ++local_time_zero_;
        const std::int64_t ax =
            pos_.coords[0] < 0 ? -pos_.coords[0] : pos_.coords[0];
        if (ax > max_abs_first_) max_abs_first_ = ax;
    }

    const ZdPoint& position() const { return pos_; }
    std::int64_t steps() const { return steps_; }
    std::int64_t local_time_zero() const { return local_time_zero_; }
    std::int64_t max_abs_first_coord() const { return max_abs_first_; }

private:
    ZdPoint pos_;
    RngStream rng_;
    std::int64_t steps_ = 0;
    std::int64_t local_time_zero_ = 0;
    std::int64_t max_abs_first_ = 0;
};

class CombWalkerDirect {
public:
    explicit CombWalkerDirect(RngStream rng, CombVertex start = {0, 0})
        : pos_(start), rng_(rng) {}

    void step() {
        const bool on_backbone = pos_.y == 0;
        pos_ = comb_step_direct(pos_, rng_);
        ++steps_;
        if (on_backbone && pos_.y == 0) {
            ++horizontal_;
        } else {
            ++vertical_;
            if (pos_.y == 0) ++driver_local_time_;
        }
        const std::int64_t ax = pos_.x < 0 ? -pos_.x : pos_.x;
        if (ax > max_abs_x_) max_abs_x_ = ax;
    }

    const CombVertex& position() const { return pos_; }
    std::int64_t steps() const { return steps_; }
    std::int64_t horizontal_steps() const { return horizontal_; }
    std::int64_t vertical_steps() const { return vertical_; }
    std::int64_t driver_local_time() const { return driver_local_time_; }
    std::int64_t max_abs_x() const { return max_abs_x_; }

private:
    CombVertex pos_;
    RngStream rng_;
    std::int64_t steps_ = 0;
    std::int64_t horizontal_ = 0;
    std::int64_t vertical_ = 0;
    std::int64_t driver_local_time_ = 0;
    std::int64_t max_abs_x_ = 0;
};

/**
 * Comb walk built from two independent line walks and i.i.d. geometric
 * run lengths: after each zero visit of the vertical driver (including
 * time 0) the walker takes a fresh geometric number of horizontal steps,
 * then plays the driver's next excursion. The run in progress when the
 * horizon is reached is simply cut off. Driver excursions are generated
 * lazily, one step at a time.
 */
class CombWalkerConstructed {
public:
    CombWalkerConstructed(RngStream horizontal_rng, RngStream driver_rng,
                          RngStream run_rng)
        : s1_rng_(horizontal_rng), s2_rng_(driver_rng), g_rng_(run_rng) {
        start_new_run();
    }

    /// Convenience: derive the three independent sub-streams from one
    /// logical stream id.
    CombWalkerConstructed(std::uint64_t master_seed, std::uint64_t stream_id)
        : CombWalkerConstructed(
              RngStream(master_seed, derive_stream_id(stream_id, 0x68, 0)),
              RngStream(master_seed, derive_stream_id(stream_id, 0x76, 0)),
              RngStream(master_seed, derive_stream_id(stream_id, 0x67, 0))) {}

    void step() {
        if (remaining_run_ > 0) {
            --remaining_run_;
            x_ += (s1_rng_.next_u64() & 1) ? 1 : -1;
            ++horizontal_;
            const std::int64_t ax = x_ < 0 ? -x_ : x_;
            if (ax > max_abs_x_) max_abs_x_ = ax;
        } else {
            y_ += (s2_rng_.next_u64() & 1) ? 1 : -1;
            ++vertical_;
            if (y_ == 0) {
                ++driver_local_time_;
                clock_.returns.push_back(vertical_);
                start_new_run();
            }
        }
        ++steps_;
    }

    CombVertex position() const { return {x_, y_}; }
    std::int64_t steps() const { return steps_; }
    std::int64_t horizontal_steps() const { return horizontal_; }
    std::int64_t vertical_steps() const { return vertical_; }
    std::int64_t driver_local_time() const { return driver_local_time_; }
    std::int64_t max_abs_x() const { return max_abs_x_; }
    const ReturnClock& return_clock() const { return clock_; }

private:
    void start_new_run() {
        remaining_run_ = sample_geometric(g_rng_);
        clock_.run_lengths.push_back(remaining_run_);
    }

    RngStream s1_rng_, s2_rng_, g_rng_;
    std::int64_t x_ = 0, y_ = 0;
    std::int64_t remaining_run_ = 0;
    std::int64_t steps_ = 0;
    std::int64_t horizontal_ = 0;
    std::int64_t vertical_ = 0;
    std::int64_t driver_local_time_ = 0;
    std::int64_t max_abs_x_ = 0;
    ReturnClock clock_;
};

Trajectory<ZdPoint> simulate_zd(std::size_t d, std::int64_t n, RngStream rng,
                                const CheckpointSchedule& schedule = {});

Trajectory<CombVertex> simulate_comb_direct(
    std::int64_t n, RngStream rng, const CheckpointSchedule& schedule = {});

struct ConstructedRun {
    Trajectory<CombVertex> trajectory;
    ReturnClock clock;
};

ConstructedRun simulate_comb_constructed(
    std::int64_t n, std::uint64_t master_seed, std::uint64_t stream_id,
    const CheckpointSchedule& schedule = {});

/// Local time at zero of a fully recorded 1-d trajectory: the number of
/// times j in [1, n] with S(j) = 0. Rejects sparse (checkpoint-only)
/// records and dimensions other than 1.
std::int64_t local_time_zero(const Trajectory<ZdPoint>& traj);

/// First time a line walk from 0 reaches level r, capped at `horizon`
/// steps; returns -1 when the cap is hit first.
std::int64_t simulate_hitting_time(std::int64_t r, std::int64_t horizon,
                                   RngStream& rng);

}  // namespace combwalk

#endif  // COMBWALK_WALKERS_HPP
