#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "rtstdma/cap_instance.hpp"
#include "rtstdma/errors.hpp"
#include "rtstdma/sic_decoder.hpp"

namespace rtstdma {

/// Reads a contention instance:
///
///     n_c=8
///     1: 3,5,6
///     2: 1,3
///
/// First content line declares the mini-slot count; every further line maps a
/// vehicle ID to its copy slots, which must be strictly increasing. '#'
/// starts a comment. Malformed input is reported, never repaired.
inline cap_instance parse_instance(std::istream& in) {
    cap_instance cap;
    bool have_header = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto fail = [line_no](const std::string& why) -> validation_error {
            return validation_error("instance line " + std::to_string(line_no) + ": " + why);
        };
        std::string text;
        {
            const auto b = line.find_first_not_of(" \t\r\n");
            if (b == std::string::npos) continue;
            const auto e = line.find_last_not_of(" \t\r\n");
            text = line.substr(b, e - b + 1);
        }
        if (!have_header) {
            if (text.rfind("n_c=", 0) != 0) throw fail("expected header n_c=<count>");
            std::size_t pos = 0;
            try {
                cap.mini_slot_count = std::stoi(text.substr(4), &pos);
            } catch (const std::exception&) {
                throw fail("bad mini-slot count");
            }
            if (pos != text.size() - 4 || cap.mini_slot_count < 1)
                throw fail("bad mini-slot count");
            have_header = true;
            continue;
        }
        const auto colon = text.find(':');
        if (colon == std::string::npos) throw fail("expected '<id>: <slot,slot,...>'");
        request_transmission tx;
        try {
            std::size_t pos = 0;
            const long id = std::stol(text.substr(0, colon), &pos);
            if (text.substr(0, colon).find_first_not_of(" \t", pos) != std::string::npos || id < 1)
                throw std::invalid_argument("id");
            tx.vehicle = static_cast<vehicle_id>(id);
        } catch (const std::exception&) {
            throw fail("bad vehicle id");
        }
        std::istringstream slots(text.substr(colon + 1));
        std::string item;
        while (std::getline(slots, item, ',')) {
            try {
                std::size_t pos = 0;
                const int s = std::stoi(item, &pos);
                if (item.find_first_not_of(" \t", pos) != std::string::npos)
                    throw std::invalid_argument(item);
                tx.copy_slots.push_back(s);
            } catch (const std::exception&) {
                throw fail("bad slot list");
            }
        }
        if (tx.copy_slots.empty()) throw fail("empty slot list");
        cap.transmissions.push_back(std::move(tx));
    }
    if (!have_header) throw validation_error("instance file has no n_c=<count> header");
    cap.validate();
    return cap;
}

inline cap_instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open instance file '" + path + "'");
    return parse_instance(in);
}

namespace detail {

inline void append_joined(std::string& out, const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(xs[i]);
    }
}

}  // namespace detail

/// Renders a decode trace, one line per extraction, closed by the residual
/// slot list:
///
///     iter=1 slot=4 vehicle=3 cancelled=1
///     residual=6,8
inline std::string format_trace(const std::vector<trace_step>& steps,
                                const decode_outcome& outcome) {
    std::string out;
    for (const trace_step& step : steps) {
        out += "iter=" + std::to_string(step.iteration);
        out += " slot=" + std::to_string(step.slot);
        out += " vehicle=" + std::to_string(step.vehicle);
        out += " cancelled=";
        detail::append_joined(out, step.cancelled_slots);
        out += '\n';
    }
    out += "residual=";
    detail::append_joined(out, outcome.residual_slots);
    out += '\n';
    return out;
}

}  // namespace rtstdma
