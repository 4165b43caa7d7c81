#pragma once

#include <cstddef>
#include <vector>

#include "rtstdma/cap_instance.hpp"

namespace rtstdma {

/// Result of iterative interference cancellation on one contention phase.
/// Extraction order is what the feedback phase hands out slots by, so it is
/// part of the contract, not a detail.
struct decode_outcome {
    std::vector<vehicle_id> extracted;  // in extraction order
    int iterations = 0;                 // scan passes performed, including the final empty one
    std::vector<int> residual_slots;    // ascending; each still holds >= 2 undecoded copies
};

/// One extraction event: the slot whose lone remaining copy was decoded and
/// the other slots from which that vehicle's copies were then cancelled.
struct trace_step {
    int iteration = 0;
    int slot = 0;
    vehicle_id vehicle = 0;
    std::vector<int> cancelled_slots;
};

namespace detail {

/// Peeling core. Each pass scans mini-slots in ascending index order; a slot
/// holding exactly one undecoded copy yields that copy's vehicle, whose
/// remaining copies are cancelled immediately (later slots in the same pass
/// see the effect). Stops when a pass extracts nothing or every vehicle is
/// out. Cancellation is ideal: a decoded copy vanishes from its slots.
inline decode_outcome peel_impl(const cap_instance& cap, std::vector<trace_step>* trace) {
    cap.validate();
    const std::vector<request_transmission>& txs = cap.transmissions;
    const std::size_t n_slots = static_cast<std::size_t>(cap.mini_slot_count);

    // slot -> indices of transmissions with a copy there
    std::vector<std::vector<int>> members(n_slots + 1);
    std::vector<int> live(n_slots + 1, 0);
    for (std::size_t t = 0; t < txs.size(); ++t) {
        for (int s : txs[t].copy_slots) {
            members[static_cast<std::size_t>(s)].push_back(static_cast<int>(t));
            ++live[static_cast<std::size_t>(s)];
        }
    }

    decode_outcome out;
    std::vector<char> decoded(txs.size(), 0);
    std::size_t remaining = txs.size();

    while (remaining > 0) {
        ++out.iterations;
        int extracted_this_pass = 0;
        for (std::size_t slot = 1; slot <= n_slots; ++slot) {
            if (live[slot] != 1) continue;
            int tx_index = -1;
            for (int t : members[slot]) {
                if (!decoded[static_cast<std::size_t>(t)]) {
                    tx_index = t;
                    break;
                }
            }
            const request_transmission& tx = txs[static_cast<std::size_t>(tx_index)];
            decoded[static_cast<std::size_t>(tx_index)] = 1;
            out.extracted.push_back(tx.vehicle);
            --remaining;
            ++extracted_this_pass;
            if (trace) {
                trace_step step;
                step.iteration = out.iterations;
                step.slot = static_cast<int>(slot);
                step.vehicle = tx.vehicle;
                for (int s : tx.copy_slots)
                    if (s != static_cast<int>(slot)) step.cancelled_slots.push_back(s);
                trace->push_back(std::move(step));
            }
            for (int s : tx.copy_slots) --live[static_cast<std::size_t>(s)];
        }
        if (extracted_this_pass == 0) break;
    }

    for (std::size_t slot = 1; slot <= n_slots; ++slot)
        if (live[slot] >= 2) out.residual_slots.push_back(static_cast<int>(slot));
    return out;
}

}  // namespace detail

/// Runs the peeling decoder on one contention phase.
inline decode_outcome peel(const cap_instance& cap) { return detail::peel_impl(cap, nullptr); }

/// Same peeling run, but records every extraction. Replaying the steps
/// against the instance reproduces peel()'s outcome.
inline std::vector<trace_step> decode_trace(const cap_instance& cap) {
    std::vector<trace_step> steps;
    detail::peel_impl(cap, &steps);
    return steps;
}

}  // namespace rtstdma
