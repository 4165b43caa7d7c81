#pragma once

#include "rtstdma/degree_distribution.hpp"
#include "rtstdma/frame.hpp"

namespace rtstdma {

/// The coded-slotted-ALOHA baseline, named and configured on its own so the
/// comparison stays honest: same repetition-rate law and the same peeling
/// decoder as the contention phase, but payloads contend directly over n_i
/// full-size slots. Pointer overhead is not charged to the baseline.
struct csa_config {
    long long n_i = 0;
    degree_distribution dist;

    void validate() const {
        if (n_i < 1) throw validation_error("csa slot count n_i must be at least 1");
    }
};

inline frame_result csa_frame(int m, const csa_config& cfg, rng_engine& rng) {
    cfg.validate();
    return run_frame_csa(m, cfg.n_i, cfg.dist, rng);
}

/// Scores an injected baseline frame.
inline frame_result csa_frame(const cap_instance& cap) { return run_frame_csa(cap); }

}  // namespace rtstdma
