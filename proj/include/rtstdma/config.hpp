#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rtstdma/degree_distribution.hpp"
#include "rtstdma/errors.hpp"
#include "rtstdma/sweep.hpp"
#include "rtstdma/timing.hpp"

namespace rtstdma {

/// Parsed harness configuration. Field defaults are the reference setup:
/// 100 ms frames, 0.02 ms mini-slots, 0.5 ms time slots, the 0.5/0.28/0.22
/// repetition law capped at degree 8, 500 frames per point, seed 1.
struct harness_config {
    double t_frame_ms = 100.0;
    double tau_c_ms = 0.02;
    double tau_t_ms = 0.5;
    double tau_i_ms = 0.5;
    std::string distribution = "2:0.5,3:0.28,8:0.22";
    int frames = 500;
    std::uint64_t seed = 1;
    int m_max = 150;
    std::vector<double> mmax_values = {50, 75, 100, 125, 150, 160, 170, 180, 190, 200};
    std::vector<double> tframe_values_ms = {75, 80, 85, 90, 95, 100, 105, 110, 115, 120};

    degree_distribution make_distribution() const { return degree_distribution::parse(distribution); }

    /// Timing with n_t sized to admit the whole population (n_t = m_max).
    timing_config make_timing() const {
        timing_config cfg;
        cfg.t_frame_ms = t_frame_ms;
        cfg.tau_c_ms = tau_c_ms;
        cfg.tau_t_ms = tau_t_ms;
        cfg.tau_i_ms = tau_i_ms;
        cfg.n_t = m_max;
        return cfg;
    }

    sweep_spec make_sweep(sweep_kind kind) const {
        sweep_spec spec{kind,
                        kind == sweep_kind::mmax ? mmax_values : tframe_values_ms,
                        make_timing(),
                        frames,
                        seed,
                        make_distribution()};
        spec.validate();
        return spec;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

inline double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw validation_error(key + ": bad number '" + value + "'");
    }
    if (pos != value.size()) throw validation_error(key + ": bad number '" + value + "'");
    return v;
}

inline std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_double(key, trim(item)));
    if (out.empty()) throw validation_error(key + ": empty list");
    return out;
}

inline double parse_positive_duration(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    if (!(v > 0.0)) throw validation_error(key + " must be positive, got '" + value + "'");
    return v;
}

}  // namespace detail

/// Reads "key = value" lines ('#' starts a comment). Unknown and duplicate
/// keys are rejected; missing keys keep the reference defaults. The returned
/// config is fully validated.
inline harness_config parse_config(std::istream& in) {
    harness_config cfg;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw validation_error("config line " + std::to_string(line_no) +
                                   ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw validation_error("config line " + std::to_string(line_no) +
                                   ": expected key = value");
        if (!seen.insert(key).second)
            throw validation_error("config line " + std::to_string(line_no) + ": duplicate key '" +
                                   key + "'");
        if (key == "t_frame_ms") {
            cfg.t_frame_ms = detail::parse_positive_duration(key, value);
        } else if (key == "tau_c_ms") {
            cfg.tau_c_ms = detail::parse_positive_duration(key, value);
        } else if (key == "tau_t_ms") {
            cfg.tau_t_ms = detail::parse_positive_duration(key, value);
        } else if (key == "tau_i_ms") {
            cfg.tau_i_ms = detail::parse_positive_duration(key, value);
        } else if (key == "distribution") {
            cfg.distribution = value;
        } else if (key == "frames") {
            const double v = detail::parse_double(key, value);
            if (v < 1.0 || v != static_cast<double>(static_cast<int>(v)))
                throw validation_error("frames must be a positive integer");
            cfg.frames = static_cast<int>(v);
        } else if (key == "seed") {
            try {
                std::size_t pos = 0;
                cfg.seed = std::stoull(value, &pos);
                if (pos != value.size()) throw std::invalid_argument(value);
            } catch (const std::exception&) {
                throw validation_error("seed: bad unsigned integer '" + value + "'");
            }
        } else if (key == "m_max") {
            const double v = detail::parse_double(key, value);
            if (v < 1.0 || v != static_cast<double>(static_cast<int>(v)))
                throw validation_error("m_max must be a positive integer");
            cfg.m_max = static_cast<int>(v);
        } else if (key == "mmax_values") {
            cfg.mmax_values = detail::parse_double_list(key, value);
        } else if (key == "tframe_values_ms") {
            cfg.tframe_values_ms = detail::parse_double_list(key, value);
        } else {
            throw validation_error("config line " + std::to_string(line_no) + ": unknown key '" +
                                   key + "'");
        }
    }
    cfg.make_distribution();        // rejects an invalid law
    cfg.make_timing().validate();   // rejects degenerate durations
    return cfg;
}

inline harness_config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file '" + path + "'");
    return parse_config(in);
}

}  // namespace rtstdma
