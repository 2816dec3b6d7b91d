// Exact n-step transition distributions on the comb by dynamic
// programming.
//
// State is stored as one backbone row plus two triangular banks of tooth
// columns (y > 0 and y < 0). Each step rewrites only cells of the live
// parity class inside the reachable ball, reading from the previous
// buffer; with ping-pong buffers the off-parity cells stay exactly zero.
// Total work for an n-step table is O(n^3), memory O(n^2).

#ifndef COMBWALK_KERNEL_HPP
#define COMBWALK_KERNEL_HPP

#include <cstdint>
#include <vector>

#include "combwalk/lattice.hpp"

namespace combwalk {

struct KernelEntry {
    std::int64_t x;
    std::int64_t y;
    double p;
};

/// Sparse exact n-step distribution; entries sorted by (x, y).
struct KernelTable {
    CombVertex start;
    std::int64_t steps = 0;
    std::vector<KernelEntry> entries;
    double total_mass = 0.0;  // compensated sum of entries

    double prob_at(const CombVertex& v) const;

    /// Golden-file format: one line per vertex, "x y p" with 17
    /// significant digits, sorted by (x, y).
    std::string to_text() const;
    static KernelTable from_text(const std::string& text);
};

class CombKernelDp {
public:
    /// Budget guard: max_steps must be <= kStepGuard (the O(n^3) sweep
    /// and O(n^2) tables get impractical beyond it).
    static constexpr std::int64_t kStepGuard = 8192;

    CombKernelDp(CombVertex start, std::int64_t max_steps, unsigned threads = 1);

    void step();
    void run_to(std::int64_t t);

    std::int64_t current_step() const { return t_; }
    const CombVertex& start() const { return start_; }

    double prob_at(const CombVertex& v) const;
    /// Total mass currently on the backbone, i.e. P(C_2(t) = 0).
    double backbone_mass() const;
    /// Compensated sum over all cells; 1 up to accumulated rounding.
    double total_mass() const;

    KernelTable table() const;

private:
    struct Bank {
        std::vector<double> backbone;            // index x - x0 + R + 1
        std::vector<std::vector<double>> up;     // [ix][y-1], y >= 1
        std::vector<std::vector<double>> down;   // [ix][-y-1], y <= -1
    };

    std::int64_t tooth_limit_up(std::int64_t dx, std::int64_t t) const;
    std::int64_t tooth_limit_down(std::int64_t dx, std::int64_t t) const;
    void sweep_column(std::int64_t ix, const Bank& src, Bank& dst,
                      std::int64_t t) const;

    CombVertex start_;
    std::int64_t radius_;
    std::int64_t t_ = 0;
    unsigned threads_;
    bool y_symmetric_;  // backbone start: store only the y > 0 bank
    Bank a_, b_;
    Bank* cur_;
    Bank* nxt_;
};

/// One-shot exact n-step table from `start`.
KernelTable comb_kernel_dp(CombVertex start, std::int64_t n,
                           unsigned threads = 1);

/// |deg(u) p(u,v,n) - deg(v) p(v,u,n)|, from two independent DP runs.
/// Defined as 0 when n + d(u,v) is odd (both sides vanish).
double reversibility_defect(const CombVertex& u, const CombVertex& v,
                            std::int64_t n, unsigned threads = 1);

/// P(C_2(n) = 0) for the walk from (0,0): backbone mass of the n-step
/// table.
double backbone_return_prob(std::int64_t n, unsigned threads = 1);

struct VerticalProfile {
    std::int64_t n = 0;
    std::vector<std::int64_t> ks;      // parity-admissible k in [0, k_max]
    std::vector<double> scaled_probs;  // n^{3/4} p((0,0),(0,k),n)
    double sup = 0.0;
    std::int64_t arg_sup = 0;
};

/// sup over 0 <= k <= k_max of n^{3/4} p((0,0),(0,k),n); requires
/// k_max <= n^{0.45}.
VerticalProfile vertical_profile_bound(std::int64_t n, std::int64_t k_max,
                                       unsigned threads = 1);

/**
 * Exact-rational kernel sweep for small n: cell masses are integers
 * scaled by 4^t (unsigned 128-bit), so every table entry is an exact
 * dyadic rational. Intended for golden files and as an oracle for the
 * floating-point DP; guarded at 60 steps.
 */
class CombKernelExact {
public:
    static constexpr std::int64_t kStepGuard = 60;

    explicit CombKernelExact(CombVertex start);

    void step();
    void run_to(std::int64_t t);
    std::int64_t current_step() const { return t_; }

    /// Numerator of p(start, v, t) over 4^t (0 when unreachable).
    unsigned __int128 numerator_at(const CombVertex& v) const;
    /// p as long double (64-bit mantissa holds numerators exactly).
    long double prob_at(const CombVertex& v) const;

    std::vector<std::pair<CombVertex, unsigned __int128>> cells() const;

private:
    CombVertex start_;
    std::int64_t t_ = 0;
    std::vector<std::pair<CombVertex, unsigned __int128>> cells_;
};

}  // namespace combwalk

#endif  // COMBWALK_KERNEL_HPP
