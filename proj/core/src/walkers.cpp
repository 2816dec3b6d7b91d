#include "combwalk/walkers.hpp"

#include <stdexcept>

namespace combwalk {

namespace {

template <class Walker, class State>
void record_walk(std::int64_t n, Walker& walker,
                 const CheckpointSchedule& schedule,
                 Trajectory<State>& out, const State& start,
                 State (*current)(const Walker&)) {
    if (n < 0) throw std::invalid_argument("simulate: n must be >= 0");
    const auto times = schedule.times(n);
    std::size_t next_time = 0;
    if (schedule.record_full) out.full_path.push_back(start);
    if (!times.empty() && times[0] == 0) {
        out.checkpoints.push_back({0, start});
        ++next_time;
    }
    for (std::int64_t t = 1; t <= n; ++t) {
        walker.step();
        const State s = current(walker);
        if (schedule.record_full) out.full_path.push_back(s);
        if (next_time < times.size() && times[next_time] == t) {
            out.checkpoints.push_back({t, s});
            ++next_time;
        }
    }
    out.steps = n;
}

}  // namespace

Trajectory<ZdPoint> simulate_zd(std::size_t d, std::int64_t n, RngStream rng,
                                const CheckpointSchedule& schedule) {
    ZdWalker walker(d, rng);
    Trajectory<ZdPoint> traj;
    record_walk<ZdWalker, ZdPoint>(
        n, walker, schedule, traj, ZdPoint(d),
        +[](const ZdWalker& w) { return w.position(); });
    traj.local_time_zero = walker.local_time_zero();
    traj.max_abs_horizontal = walker.max_abs_first_coord();
    return traj;
}

Trajectory<CombVertex> simulate_comb_direct(std::int64_t n, RngStream rng,
                                            const CheckpointSchedule& schedule) {
    CombWalkerDirect walker(rng);
    Trajectory<CombVertex> traj;
    record_walk<CombWalkerDirect, CombVertex>(
        n, walker, schedule, traj, CombVertex{0, 0},
        +[](const CombWalkerDirect& w) { return w.position(); });
    traj.horizontal_steps = walker.horizontal_steps();
    traj.vertical_steps = walker.vertical_steps();
    traj.local_time_zero = walker.driver_local_time();
    traj.max_abs_horizontal = walker.max_abs_x();
    return traj;
}

ConstructedRun simulate_comb_constructed(std::int64_t n,
                                         std::uint64_t master_seed,
                                         std::uint64_t stream_id,
                                         const CheckpointSchedule& schedule) {
    CombWalkerConstructed walker(master_seed, stream_id);
    ConstructedRun run;
    record_walk<CombWalkerConstructed, CombVertex>(
        n, walker, schedule, run.trajectory, CombVertex{0, 0},
        +[](const CombWalkerConstructed& w) { return w.position(); });
    run.trajectory.horizontal_steps = walker.horizontal_steps();
    run.trajectory.vertical_steps = walker.vertical_steps();
    run.trajectory.local_time_zero = walker.driver_local_time();
    run.trajectory.max_abs_horizontal = walker.max_abs_x();
    run.clock = walker.return_clock();
    return run;
}

std::int64_t local_time_zero(const Trajectory<ZdPoint>& traj) {
    if (!traj.has_full_path())
        throw std::invalid_argument(
            "local_time_zero: trajectory has no full step record");
    if (traj.full_path.front().dimension() != 1)
        throw std::invalid_argument("local_time_zero: requires a 1-d walk");
    std::int64_t count = 0;
    for (std::size_t j = 1; j < traj.full_path.size(); ++j)
        if (traj.full_path[j].coords[0] == 0) ++count;
    return count;
}

std::int64_t simulate_hitting_time(std::int64_t r, std::int64_t horizon,
                                   RngStream& rng) {
    if (r < 1) throw std::invalid_argument("simulate_hitting_time: r >= 1");
    std::int64_t pos = 0;
    for (std::int64_t t = 1; t <= horizon; ++t) {
        pos += (rng.next_u64() & 1) ? 1 : -1;
        if (pos == r) return t;
    }
    return -1;
}

}  // namespace combwalk
