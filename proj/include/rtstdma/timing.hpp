#pragma once

#include <cmath>
#include <string>

#include "rtstdma/errors.hpp"

namespace rtstdma {

namespace detail {

/// Durations are interpreted at 1 ns resolution; slot counts are derived in
/// integer nanoseconds so that exact budget boundaries floor exactly.
inline long long ms_to_ns(double ms) { return std::llround(ms * 1e6); }

inline long long floor_div(long long a, long long b) {
    const long long q = a / b;
    const long long r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace detail

/// Frame geometry: one frame = contention access phase (n_c mini-slots of
/// tau_c each) + broadcast feedback phase (n_t ID fields of tau_c each) +
/// contention-free phase (n_t time slots of tau_t each). The baseline scheme
/// divides the same frame into slots of tau_i = tau_t.
struct timing_config {
    double t_frame_ms = 100.0;
    double tau_c_ms = 0.02;
    double tau_t_ms = 0.5;
    double tau_i_ms = 0.5;
    int n_t = 150;

    void validate() const {
        if (!(t_frame_ms > 0.0) || detail::ms_to_ns(t_frame_ms) < 1)
            throw validation_error("t_frame_ms must be positive (>= 1 ns)");
        if (!(tau_c_ms > 0.0) || detail::ms_to_ns(tau_c_ms) < 1)
            throw validation_error("tau_c_ms must be positive (>= 1 ns)");
        if (!(tau_t_ms > 0.0) || detail::ms_to_ns(tau_t_ms) < 1)
            throw validation_error("tau_t_ms must be positive (>= 1 ns)");
        if (!(tau_i_ms > 0.0) || detail::ms_to_ns(tau_i_ms) < 1)
            throw validation_error("tau_i_ms must be positive (>= 1 ns)");
        if (!(tau_c_ms < tau_t_ms))
            throw validation_error("tau_c_ms must be smaller than tau_t_ms");
        if (detail::ms_to_ns(tau_i_ms) != detail::ms_to_ns(tau_t_ms))
            throw validation_error("tau_i_ms must equal tau_t_ms");
        if (n_t < 0) throw validation_error("n_t must be non-negative");
    }

    /// Feedback phase duration: one ID field of tau_c per CTP slot.
    double bfp_ms() const { return n_t * tau_c_ms; }

    /// Mini-slot budget floor((t_frame - bfp - n_t*tau_t) / tau_c).
    /// Zero or negative means the frame cannot host a contention phase.
    long long mini_slot_count() const {
        const long long tau_c = detail::ms_to_ns(tau_c_ms);
        const long long budget = detail::ms_to_ns(t_frame_ms) - n_t * tau_c -
                                 n_t * detail::ms_to_ns(tau_t_ms);
        return detail::floor_div(budget, tau_c);
    }

    /// Slot budget of the baseline scheme: floor(t_frame / tau_i).
    long long csa_slot_count() const {
        return detail::floor_div(detail::ms_to_ns(t_frame_ms), detail::ms_to_ns(tau_i_ms));
    }

    bool feasible() const { return mini_slot_count() >= 1; }
};

}  // namespace rtstdma
