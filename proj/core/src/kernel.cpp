#include "combwalk/kernel.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "combwalk/accum.hpp"
#include "combwalk/errors.hpp"
#include "combwalk/metrics.hpp"
#include "combwalk/parallel.hpp"

namespace combwalk {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

int parity(std::int64_t v) { return static_cast<int>(v & 1); }

}  // namespace

double KernelTable::prob_at(const CombVertex& v) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), v,
        [](const KernelEntry& e, const CombVertex& w) {
            return std::pair(e.x, e.y) < std::pair(w.x, w.y);
        });
    if (it != entries.end() && it->x == v.x && it->y == v.y) return it->p;
    return 0.0;
}

std::string KernelTable::to_text() const {
    std::string out;
    char line[96];
    for (const auto& e : entries) {
        std::snprintf(line, sizeof line, "%" PRId64 " %" PRId64 " %.17g\n",
                      e.x, e.y, e.p);
        out += line;
    }
    return out;
}

KernelTable KernelTable::from_text(const std::string& text) {
    KernelTable t;
    std::istringstream in(text);
    KernelEntry e;
    while (in >> e.x >> e.y >> e.p) t.entries.push_back(e);
    NeumaierSum total;
    for (const auto& entry : t.entries) total.add(entry.p);
    t.total_mass = total.value();
    return t;
}

// Cells of the wrong parity class hold exact zeros: every source feeding
// them is itself off-parity, so plain sweeps keep them at 0.0 without any
// explicit parity bookkeeping. When the start lies on the backbone the
// distribution is symmetric in y and only the y > 0 bank is stored.

CombKernelDp::CombKernelDp(CombVertex start, std::int64_t max_steps,
                           unsigned threads)
    : start_(start),
      radius_(max_steps),
      threads_(resolve_threads(threads)),
      y_symmetric_(start.y == 0) {
    if (max_steps < 0)
        throw std::invalid_argument("CombKernelDp: max_steps must be >= 0");
    if (max_steps > kStepGuard)
        throw ResourceGuardError("CombKernelDp: step budget exceeded (max " +
                                 std::to_string(kStepGuard) + ")");
    const std::int64_t R = radius_;
    const std::int64_t ay0 = iabs(start_.y);
    for (Bank* bank : {&a_, &b_}) {
        bank->backbone.assign(static_cast<std::size_t>(2 * R + 3), 0.0);
        bank->up.resize(static_cast<std::size_t>(2 * R + 1));
        if (!y_symmetric_) bank->down.resize(static_cast<std::size_t>(2 * R + 1));
        for (std::int64_t ix = 0; ix <= 2 * R; ++ix) {
            const std::int64_t axd = iabs(ix - R);
            const std::int64_t h =
                (axd == 0) ? R + ay0 + 2
                           : std::max<std::int64_t>(2, R - axd - ay0 + 2);
            bank->up[static_cast<std::size_t>(ix)].assign(
                static_cast<std::size_t>(h), 0.0);
            if (!y_symmetric_)
                bank->down[static_cast<std::size_t>(ix)].assign(
                    static_cast<std::size_t>(h), 0.0);
        }
    }
    cur_ = &a_;
    nxt_ = &b_;
    if (start_.y == 0)
        a_.backbone[static_cast<std::size_t>(R + 1)] = 1.0;
    else if (start_.y > 0)
        a_.up[static_cast<std::size_t>(R)][static_cast<std::size_t>(start_.y - 1)] = 1.0;
    else
        a_.down[static_cast<std::size_t>(R)][static_cast<std::size_t>(-start_.y - 1)] = 1.0;
}

std::int64_t CombKernelDp::tooth_limit_up(std::int64_t dx, std::int64_t t) const {
    if (dx == 0 && start_.y > 0) return start_.y + t;
    return t - iabs(dx) - iabs(start_.y);
}

std::int64_t CombKernelDp::tooth_limit_down(std::int64_t dx, std::int64_t t) const {
    if (dx == 0 && start_.y < 0) return -start_.y + t;
    return t - iabs(dx) - iabs(start_.y);
}

void CombKernelDp::sweep_column(std::int64_t ix, const Bank& src, Bank& dst,
                                std::int64_t t) const {
    const std::int64_t R = radius_;
    const std::int64_t dx = ix - R;
    const std::int64_t axd = iabs(dx);
    const std::int64_t ay0 = iabs(start_.y);
    const auto uix = static_cast<std::size_t>(ix);

    const double* sb = src.backbone.data();
    const double* su = src.up[uix].data();
    double* du = dst.up[uix].data();

    const std::int64_t up_max = std::min<std::int64_t>(
        tooth_limit_up(dx, t),
        static_cast<std::int64_t>(src.up[uix].size()) - 2);
    if (up_max >= 1) {
        du[0] = 0.25 * sb[uix + 1] + 0.5 * su[1];
        for (std::int64_t y = 2; y <= up_max; ++y)
            du[y - 1] = 0.5 * (su[y - 2] + su[y]);
    }

    double tooth_base;  // mass flowing from height 1 onto the backbone
    if (y_symmetric_) {
        tooth_base = su[0];  // both teeth contribute 0.5 * su[0]
    } else {
        const double* sd = src.down[uix].data();
        double* dd = dst.down[uix].data();
        const std::int64_t dn_max = std::min<std::int64_t>(
            tooth_limit_down(dx, t),
            static_cast<std::int64_t>(src.down[uix].size()) - 2);
        if (dn_max >= 1) {
            dd[0] = 0.25 * sb[uix + 1] + 0.5 * sd[1];
            for (std::int64_t y = 2; y <= dn_max; ++y)
                dd[y - 1] = 0.5 * (sd[y - 2] + sd[y]);
        }
        tooth_base = 0.5 * (su[0] + sd[0]);
    }

    if (axd + ay0 <= t)
        dst.backbone[uix + 1] =
            0.25 * (sb[uix] + sb[uix + 2]) + tooth_base;
}

void CombKernelDp::step() {
    if (t_ >= radius_)
        throw ResourceGuardError("CombKernelDp: step budget exceeded");
    const std::int64_t t = t_ + 1;
    const std::int64_t R = radius_;
    const Bank& src = *cur_;
    Bank& dst = *nxt_;
    const unsigned active = (t >= 1024) ? threads_ : 1;
    parallel_for(R - t, R + t + 1, active,
                 [&](std::int64_t ix) { sweep_column(ix, src, dst, t); });
    std::swap(cur_, nxt_);
    t_ = t;
}

void CombKernelDp::run_to(std::int64_t t) {
    while (t_ < t) step();
}

double CombKernelDp::prob_at(const CombVertex& v) const {
    const std::int64_t dx = v.x - start_.x;
    if (iabs(dx) > radius_) return 0.0;
    const auto uix = static_cast<std::size_t>(dx + radius_);
    if (v.y == 0) return cur_->backbone[uix + 1];
    const auto& tooth =
        (v.y > 0 || y_symmetric_) ? cur_->up[uix] : cur_->down[uix];
    const auto idx = static_cast<std::size_t>(iabs(v.y) - 1);
    return idx < tooth.size() ? tooth[idx] : 0.0;
}

double CombKernelDp::backbone_mass() const {
    NeumaierSum sum;
    const std::int64_t R = radius_;
    for (std::int64_t ix = R - t_; ix <= R + t_; ++ix)
        sum.add(cur_->backbone[static_cast<std::size_t>(ix + 1)]);
    return sum.value();
}

double CombKernelDp::total_mass() const {
    NeumaierSum sum;
    const std::int64_t R = radius_;
    for (std::int64_t ix = std::max<std::int64_t>(0, R - t_);
         ix <= std::min<std::int64_t>(2 * R, R + t_); ++ix) {
        const auto uix = static_cast<std::size_t>(ix);
        if (y_symmetric_) {
            for (double v : cur_->up[uix]) sum.add(2.0 * v);
        } else {
            for (double v : cur_->down[uix]) sum.add(v);
            for (double v : cur_->up[uix]) sum.add(v);
        }
        sum.add(cur_->backbone[uix + 1]);
    }
    return sum.value();
}

KernelTable CombKernelDp::table() const {
    KernelTable out;
    out.start = start_;
    out.steps = t_;
    NeumaierSum total;
    const std::int64_t R = radius_;
    for (std::int64_t ix = R - t_; ix <= R + t_; ++ix) {
        const auto uix = static_cast<std::size_t>(ix);
        const std::int64_t x = start_.x + ix - R;
        const auto& dn = y_symmetric_ ? cur_->up[uix] : cur_->down[uix];
        for (std::size_t idx = dn.size(); idx-- > 0;) {
            if (dn[idx] != 0.0) {
                out.entries.push_back(
                    {x, -static_cast<std::int64_t>(idx) - 1, dn[idx]});
                total.add(dn[idx]);
            }
        }
        if (cur_->backbone[uix + 1] != 0.0) {
            out.entries.push_back({x, 0, cur_->backbone[uix + 1]});
            total.add(cur_->backbone[uix + 1]);
        }
        const auto& up = cur_->up[uix];
        for (std::size_t idx = 0; idx < up.size(); ++idx) {
            if (up[idx] != 0.0) {
                out.entries.push_back(
                    {x, static_cast<std::int64_t>(idx) + 1, up[idx]});
                total.add(up[idx]);
            }
        }
    }
    out.total_mass = total.value();
    return out;
}

KernelTable comb_kernel_dp(CombVertex start, std::int64_t n, unsigned threads) {
    CombKernelDp dp(start, n, threads);
    dp.run_to(n);
    return dp.table();
}

double reversibility_defect(const CombVertex& u, const CombVertex& v,
                            std::int64_t n, unsigned threads) {
    if (parity(n + comb_graph_distance(u, v)) != 0) return 0.0;
    CombKernelDp from_u(u, n, threads);
    from_u.run_to(n);
    CombKernelDp from_v(v, n, threads);
    from_v.run_to(n);
    const double lhs = comb_degree(u) * from_u.prob_at(v);
    const double rhs = comb_degree(v) * from_v.prob_at(u);
    return std::abs(lhs - rhs);
}

double backbone_return_prob(std::int64_t n, unsigned threads) {
    CombKernelDp dp({0, 0}, n, threads);
    dp.run_to(n);
    return dp.backbone_mass();
}

VerticalProfile vertical_profile_bound(std::int64_t n, std::int64_t k_max,
                                       unsigned threads) {
    if (k_max < 0 || static_cast<double>(k_max) > std::pow(n, 0.45))
        throw std::invalid_argument(
            "vertical_profile_bound: requires 0 <= k_max <= n^0.45");
    CombKernelDp dp({0, 0}, n, threads);
    dp.run_to(n);
    VerticalProfile prof;
    prof.n = n;
    const double scale = std::pow(static_cast<double>(n), 0.75);
    for (std::int64_t k = parity(n); k <= k_max; k += 2) {
        const double v = scale * dp.prob_at({0, k});
        prof.ks.push_back(k);
        prof.scaled_probs.push_back(v);
        if (v > prof.sup) {
            prof.sup = v;
            prof.arg_sup = k;
        }
    }
    return prof;
}

CombKernelExact::CombKernelExact(CombVertex start) : start_(start) {
    cells_.emplace_back(start, static_cast<unsigned __int128>(1));
}

void CombKernelExact::step() {
    if (t_ >= kStepGuard)
        throw ResourceGuardError("CombKernelExact: step budget exceeded");
    std::map<CombVertex, unsigned __int128> next;
    for (const auto& [v, q] : cells_) {
        if (v.y != 0) {
            next[{v.x, v.y - 1}] += 2 * q;
            next[{v.x, v.y + 1}] += 2 * q;
        } else {
            next[{v.x - 1, 0}] += q;
            next[{v.x + 1, 0}] += q;
            next[{v.x, -1}] += q;
            next[{v.x, 1}] += q;
        }
    }
    cells_.assign(next.begin(), next.end());
    ++t_;
}

void CombKernelExact::run_to(std::int64_t t) {
    while (t_ < t) step();
}

unsigned __int128 CombKernelExact::numerator_at(const CombVertex& v) const {
    auto it = std::lower_bound(
        cells_.begin(), cells_.end(), v,
        [](const auto& cell, const CombVertex& w) { return cell.first < w; });
    if (it != cells_.end() && it->first == v) return it->second;
    return 0;
}

long double CombKernelExact::prob_at(const CombVertex& v) const {
    return std::ldexp(static_cast<long double>(numerator_at(v)),
                      static_cast<int>(-2 * t_));
}

std::vector<std::pair<CombVertex, unsigned __int128>> CombKernelExact::cells()
    const {
    return cells_;
}

}  // namespace combwalk
