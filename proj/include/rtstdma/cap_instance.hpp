#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "rtstdma/degree_distribution.hpp"
#include "rtstdma/errors.hpp"

namespace rtstdma {

using vehicle_id = std::uint32_t;

/// One vehicle's contention attempt: the mini-slots carrying its copies.
/// Every copy carries pointers to the others, so decoding any one copy
/// reveals the whole set.
struct request_transmission {
    vehicle_id vehicle = 0;
    std::vector<int> copy_slots;  // strictly increasing, 1-based
};

/// A realized contention access phase.
struct cap_instance {
    int mini_slot_count = 0;
    std::vector<request_transmission> transmissions;

    /// Throws validation_error naming the first violated invariant.
    void validate(int max_degree = default_max_degree) const {
        if (mini_slot_count < 0)
            throw validation_error("mini_slot_count must be non-negative");
        std::unordered_set<vehicle_id> seen;
        for (const request_transmission& tx : transmissions) {
            if (tx.vehicle == 0)
                throw validation_error("vehicle id must be positive");
            if (!seen.insert(tx.vehicle).second)
                throw validation_error("duplicate vehicle id " + std::to_string(tx.vehicle));
            const std::size_t copies = tx.copy_slots.size();
            if (copies < 1 || copies > static_cast<std::size_t>(max_degree))
                throw validation_error("vehicle " + std::to_string(tx.vehicle) + " has " +
                                       std::to_string(copies) + " copies, expected 1.." +
                                       std::to_string(max_degree));
            int prev = 0;
            for (int s : tx.copy_slots) {
                if (s <= prev)
                    throw validation_error("copy slots of vehicle " + std::to_string(tx.vehicle) +
                                           " are not strictly increasing");
                if (s > mini_slot_count)
                    throw validation_error("copy slot " + std::to_string(s) + " of vehicle " +
                                           std::to_string(tx.vehicle) + " exceeds mini_slot_count " +
                                           std::to_string(mini_slot_count));
                prev = s;
            }
        }
    }
};

}  // namespace rtstdma
