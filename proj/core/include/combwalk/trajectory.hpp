// Trajectory records: checkpointed states plus the path counters used by
// the comb analysis (horizontal/vertical step counts, driver local time,
// running max of the backbone coordinate).

#ifndef COMBWALK_TRAJECTORY_HPP
#define COMBWALK_TRAJECTORY_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace combwalk {

struct CheckpointSchedule {
    bool dyadic = true;                // record at every power of two <= n
    std::vector<std::int64_t> extra;   // user-requested times
    bool record_full = false;          // keep the whole step-by-step path

    /// Sorted, deduplicated checkpoint times in [0, n]; always contains
    /// 0 and n.
    std::vector<std::int64_t> times(std::int64_t n) const {
        std::vector<std::int64_t> ts{0, n};
        if (dyadic)
            for (std::int64_t t = 1; t <= n && t > 0; t *= 2) ts.push_back(t);
        for (std::int64_t t : extra)
            if (t >= 0 && t <= n) ts.push_back(t);
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        return ts;
    }

    static CheckpointSchedule full() {
        CheckpointSchedule s;
        s.record_full = true;
        return s;
    }
};

template <class State>
struct TimedState {
    std::int64_t time;
    State state;
};

template <class State>
struct Trajectory {
    std::vector<TimedState<State>> checkpoints;
    std::vector<State> full_path;  // positions at times 0..n when recorded

    std::int64_t steps = 0;
    std::int64_t horizontal_steps = 0;   // H_n (comb walks)
    std::int64_t vertical_steps = 0;     // V_n (comb walks)
    std::int64_t local_time_zero = 0;    // driver local time at zero
    std::int64_t max_abs_horizontal = 0; // max |x| along the path

    bool has_full_path() const { return !full_path.empty(); }
};

/// Return times of the vertical driver and the geometric run lengths of
/// the interleaved construction. `returns` holds driver times of zero
/// visits; `run_lengths` holds every geometric draw in order (the run in
/// progress at the horizon may be only partially used).
struct ReturnClock {
    std::vector<std::int64_t> returns;
    std::vector<std::int64_t> run_lengths;

    std::int64_t total_run_length() const {
        std::int64_t s = 0;
        for (auto g : run_lengths) s += g;
        return s;
    }
};

}  // namespace combwalk

#endif  // COMBWALK_TRAJECTORY_HPP
