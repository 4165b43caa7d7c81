#pragma once

#include <cmath>

#include "rtstdma/errors.hpp"
#include "rtstdma/timing.hpp"

namespace rtstdma {

namespace detail {

inline void require_timing(double tau_i_ms, double tau_t_ms, double tau_c_ms) {
    if (!(tau_c_ms > 0.0)) throw validation_error("degenerate timing: tau_c_ms must be positive");
    if (!(tau_i_ms > 0.0)) throw validation_error("degenerate timing: tau_i_ms must be positive");
    if (!(tau_t_ms > tau_c_ms))
        throw validation_error("degenerate timing: tau_t_ms must exceed tau_c_ms");
}

}  // namespace detail

/// Continuous slot-count ratio N_c/N_I implied by the frame budget:
/// tau_t/tau_c - (tau_t/tau_c + 1) * n_t*tau_i/t_frame. Above 1, the scheme
/// has more contention slots than the baseline and wins on throughput.
inline double slot_ratio(const timing_config& cfg) {
    cfg.validate();
    const double r = cfg.tau_t_ms / cfg.tau_c_ms;
    return r - (r + 1.0) * (cfg.n_t * cfg.tau_i_ms / cfg.t_frame_ms);
}

/// Vehicle count at which the two slot budgets meet for a fixed frame
/// duration (with n_t tied to the vehicle count).
inline double critical_mmax(double t_frame_ms, double tau_i_ms, double tau_t_ms,
                            double tau_c_ms) {
    detail::require_timing(tau_i_ms, tau_t_ms, tau_c_ms);
    if (!(t_frame_ms > 0.0)) throw validation_error("t_frame_ms must be positive");
    return (t_frame_ms / tau_i_ms) * ((tau_t_ms - tau_c_ms) / (tau_t_ms + tau_c_ms));
}

/// Frame duration at which the two slot budgets meet for a fixed vehicle
/// count. Always exceeds m_max * tau_i. Inverse of critical_mmax.
inline double critical_tframe(double m_max, double tau_i_ms, double tau_t_ms,
                              double tau_c_ms) {
    detail::require_timing(tau_i_ms, tau_t_ms, tau_c_ms);
    if (!(m_max > 0.0)) throw validation_error("m_max must be positive");
    return m_max * tau_i_ms * (tau_t_ms + tau_c_ms) / (tau_t_ms - tau_c_ms);
}

/// Limiting load M_max / N_I* = (tau_t - tau_c) / (tau_t + tau_c): how close
/// the offered population sits to the baseline's slot budget at the critical
/// frame duration. Approaches 1 as tau_c shrinks, which is why both schemes
/// collapse together in the congested regime.
inline double critical_load(double tau_t_ms, double tau_c_ms) {
    detail::require_timing(tau_t_ms, tau_t_ms, tau_c_ms);
    return (tau_t_ms - tau_c_ms) / (tau_t_ms + tau_c_ms);
}

/// The three critical points for one geometry. m_max_star uses cfg.t_frame_ms;
/// t_f_star uses cfg.n_t as the fixed vehicle count.
struct critical_points {
    double m_max_star = 0.0;
    double t_f_star = 0.0;
    double load_star = 0.0;
};

inline critical_points compute_critical_points(const timing_config& cfg) {
    cfg.validate();
    critical_points p;
    p.m_max_star = critical_mmax(cfg.t_frame_ms, cfg.tau_i_ms, cfg.tau_t_ms, cfg.tau_c_ms);
    p.t_f_star = critical_tframe(static_cast<double>(cfg.n_t), cfg.tau_i_ms, cfg.tau_t_ms,
                                 cfg.tau_c_ms);
    p.load_star = critical_load(cfg.tau_t_ms, cfg.tau_c_ms);
    return p;
}

/// Largest n_t (= vehicle population, one CTP slot per vehicle) for which the
/// discrete budgets still satisfy n_c > n_i. This integer threshold, not the
/// real-valued critical point, is where simulated curves actually pivot.
inline int mmax_feasibility_threshold(const timing_config& base) {
    base.validate();
    const long long n_i = base.csa_slot_count();
    const auto n_c_at = [&](int n_t) {
        timing_config cfg = base;
        cfg.n_t = n_t;
        return cfg.mini_slot_count();
    };
    if (n_c_at(0) <= n_i) return -1;  // even an empty CTP cannot beat the baseline
    // n_c is strictly decreasing in n_t; bisect for the last n_t with n_c > n_i.
    int lo = 0;
    int hi = 1;
    while (n_c_at(hi) > n_i) {
        lo = hi;
        if (hi > (1 << 29)) throw validation_error("no feasibility threshold in range");
        hi *= 2;
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (n_c_at(mid) > n_i)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace rtstdma
