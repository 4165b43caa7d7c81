#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "rtstdma/cap_instance.hpp"
#include "rtstdma/degree_distribution.hpp"
#include "rtstdma/errors.hpp"
#include "rtstdma/random.hpp"
#include "rtstdma/sic_decoder.hpp"
#include "rtstdma/timing.hpp"

namespace rtstdma {

enum class scheme_kind { rts_tdma, csa };

inline const char* to_string(scheme_kind s) {
    return s == scheme_kind::rts_tdma ? "rts_tdma" : "csa";
}

/// Outcome of one simulated frame: the vehicles that got to transmit a
/// safety packet. Grants are contention-free and the channel ideal, so every
/// granted vehicle succeeds; everyone else waits for the next frame.
struct frame_result {
    scheme_kind scheme = scheme_kind::rts_tdma;
    int offered = 0;                  // vehicles contending this frame
    std::vector<vehicle_id> granted;  // grant order; position k = slot k
    int successes() const { return static_cast<int>(granted.size()); }
};

/// Realizes one contention phase: vehicles 1..m each draw a repetition rate
/// from dist (clamped to n_c, since copies go to distinct slots) and place
/// their copies uniformly without replacement over the n_c mini-slots.
inline cap_instance run_cap(int m, long long n_c, const degree_distribution& dist,
                            rng_engine& rng) {
    if (m < 0) throw validation_error("vehicle count must be non-negative");
    if (n_c < 1) throw validation_error("infeasible config: mini-slot count below 1");
    if (n_c > std::numeric_limits<int>::max())
        throw validation_error("mini-slot count exceeds supported range");
    cap_instance cap;
    cap.mini_slot_count = static_cast<int>(n_c);
    cap.transmissions.reserve(static_cast<std::size_t>(m));
    for (int id = 1; id <= m; ++id) {
        const int degree = std::min<int>(dist.sample_degree(rng), cap.mini_slot_count);
        request_transmission tx;
        tx.vehicle = static_cast<vehicle_id>(id);
        tx.copy_slots = sample_without_replacement(rng, cap.mini_slot_count, degree);
        cap.transmissions.push_back(std::move(tx));
    }
    return cap;
}

/// Truncated slot assignment: CTP slot k goes to the kth extracted vehicle,
/// and vehicles beyond the n_t available slots get nothing this frame.
inline std::vector<vehicle_id> assign_slots(const decode_outcome& outcome, int n_t) {
    if (n_t < 0) throw validation_error("n_t must be non-negative");
    const std::size_t granted =
        std::min<std::size_t>(outcome.extracted.size(), static_cast<std::size_t>(n_t));
    return {outcome.extracted.begin(), outcome.extracted.begin() + static_cast<long>(granted)};
}

/// Scores an already-realized contention phase: decode, then grant the first
/// n_t extracted vehicles.
inline frame_result run_frame_rts(const cap_instance& cap, int n_t) {
    frame_result res;
    res.scheme = scheme_kind::rts_tdma;
    res.offered = static_cast<int>(cap.transmissions.size());
    res.granted = assign_slots(peel(cap), n_t);
    return res;
}

/// One full frame: contention access, decoding, feedback (ideal broadcast,
/// modeled only through the time budget), contention-free transmission.
inline frame_result run_frame_rts(int m, const timing_config& cfg,
                                  const degree_distribution& dist, rng_engine& rng) {
    cfg.validate();
    return run_frame_rts(run_cap(m, cfg.mini_slot_count(), dist, rng), cfg.n_t);
}

/// Scores an injected baseline frame: every decoded vehicle transmitted its
/// payload in the contention slots, so all extracted IDs count.
inline frame_result run_frame_csa(const cap_instance& cap) {
    frame_result res;
    res.scheme = scheme_kind::csa;
    res.offered = static_cast<int>(cap.transmissions.size());
    res.granted = peel(cap).extracted;
    return res;
}

/// One baseline frame: the same contention machinery over n_i slots carrying
/// full safety packets. No feedback phase, no grant truncation.
inline frame_result run_frame_csa(int m, long long n_i, const degree_distribution& dist,
                                  rng_engine& rng) {
    if (n_i < 1) throw validation_error("infeasible config: slot count below 1");
    return run_frame_csa(run_cap(m, n_i, dist, rng));
}

}  // namespace rtstdma
