#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rtstdma/csa.hpp"
#include "rtstdma/degree_distribution.hpp"
#include "rtstdma/errors.hpp"
#include "rtstdma/frame.hpp"
#include "rtstdma/random.hpp"
#include "rtstdma/timing.hpp"

namespace rtstdma {

enum class sweep_kind { mmax, tframe };

/// Everything needed to reproduce one throughput sweep. Per-frame seeds are
/// derived from (seed, point index, scheme, frame index), so results do not
/// depend on execution order and extending frames_per_point keeps the
/// earlier frames' outcomes.
struct sweep_spec {
    sweep_kind kind = sweep_kind::mmax;
    std::vector<double> values;  // ascending; vehicle counts or frame durations (ms)
    timing_config base;          // fixed fields; the swept field is overwritten per point
    int frames_per_point = 500;
    std::uint64_t seed = 1;
    degree_distribution dist;

    void validate() const {
        if (values.empty()) throw validation_error("sweep_values must not be empty");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0 && !(values[i - 1] < values[i]))
                throw validation_error("sweep_values must be strictly ascending");
            if (kind == sweep_kind::mmax) {
                if (values[i] < 1.0 || values[i] != std::floor(values[i]))
                    throw validation_error("m_max sweep values must be positive integers");
            } else if (!(values[i] > 0.0)) {
                throw validation_error("t_frame sweep values must be positive");
            }
        }
        if (frames_per_point < 1) throw validation_error("frames_per_point must be at least 1");
        timing_config probe = base;
        if (kind == sweep_kind::mmax)
            probe.n_t = static_cast<int>(values.front());
        else
            probe.t_frame_ms = values.front();
        probe.validate();
    }

    /// Geometry at one sweep point. The vehicle population always equals n_t:
    /// every vehicle in the zone contends each frame and the CTP is sized to
    /// admit all of them.
    timing_config point_config(std::size_t point_index) const {
        timing_config cfg = base;
        if (kind == sweep_kind::mmax)
            cfg.n_t = static_cast<int>(values.at(point_index));
        else
            cfg.t_frame_ms = values.at(point_index);
        return cfg;
    }
};

struct sweep_row {
    double sweep_value = 0.0;
    scheme_kind scheme = scheme_kind::rts_tdma;
    double mean_throughput = 0.0;
    double std_error = 0.0;
    int frames = 0;
    std::uint64_t seed = 0;
    long long n_c = 0;
    long long n_i = 0;
    bool feasible = false;
};

struct sweep_report {
    std::vector<sweep_row> rows;
};

/// Per-frame success counts for one (point, scheme). Frame k depends only on
/// (spec.seed, point_index, scheme, k).
inline std::vector<int> point_successes(const sweep_spec& spec, std::size_t point_index,
                                        scheme_kind scheme) {
    const timing_config cfg = spec.point_config(point_index);
    const int m = cfg.n_t;
    const std::uint64_t scheme_tag = scheme == scheme_kind::rts_tdma ? 0 : 1;
    std::vector<int> successes;
    successes.reserve(static_cast<std::size_t>(spec.frames_per_point));
    for (int frame = 0; frame < spec.frames_per_point; ++frame) {
        rng_engine rng(derive_seed(spec.seed, point_index, scheme_tag,
                                   static_cast<std::uint64_t>(frame)));
        const frame_result res = scheme == scheme_kind::rts_tdma
                                     ? run_frame_rts(m, cfg, spec.dist, rng)
                                     : run_frame_csa(m, cfg.csa_slot_count(), spec.dist, rng);
        successes.push_back(res.successes());
    }
    return successes;
}

namespace detail {

inline void mean_and_std_error(const std::vector<int>& xs, double& mean, double& se) {
    mean = 0.0;
    se = 0.0;
    if (xs.empty()) return;
    double sum = 0.0;
    for (int x : xs) sum += x;
    mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) return;
    double ss = 0.0;
    for (int x : xs) ss += (x - mean) * (x - mean);
    const double variance = ss / static_cast<double>(xs.size() - 1);
    se = std::sqrt(variance / static_cast<double>(xs.size()));
}

inline sweep_report run_sweep(const sweep_spec& spec) {
    spec.validate();
    sweep_report report;
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        const timing_config cfg = spec.point_config(i);
        const long long n_c = cfg.mini_slot_count();
        const long long n_i = cfg.csa_slot_count();
        for (scheme_kind scheme : {scheme_kind::rts_tdma, scheme_kind::csa}) {
            sweep_row row;
            row.sweep_value = spec.values[i];
            row.scheme = scheme;
            row.seed = spec.seed;
            row.n_c = n_c;
            row.n_i = n_i;
            row.feasible = scheme == scheme_kind::rts_tdma ? n_c >= 1 : n_i >= 1;
            if (row.feasible) {
                const std::vector<int> xs = point_successes(spec, i, scheme);
                row.frames = static_cast<int>(xs.size());
                mean_and_std_error(xs, row.mean_throughput, row.std_error);
            }
            report.rows.push_back(row);
        }
    }
    return report;
}

inline std::string format_real(double v) {
    std::ostringstream out;
    out << std::setprecision(6) << v;
    return out.str();
}

}  // namespace detail

/// Throughput vs. vehicle population at fixed frame duration. Infeasible
/// points (no room for a contention phase) keep their row with
/// feasible=false; the baseline is simulated at every point.
inline sweep_report sweep_mmax(const sweep_spec& spec) {
    if (spec.kind != sweep_kind::mmax)
        throw validation_error("sweep_mmax requires kind == mmax");
    return detail::run_sweep(spec);
}

/// Throughput vs. frame duration at fixed vehicle population.
inline sweep_report sweep_tframe(const sweep_spec& spec) {
    if (spec.kind != sweep_kind::tframe)
        throw validation_error("sweep_tframe requires kind == tframe");
    return detail::run_sweep(spec);
}

/// CSV schema: one row per (point, scheme), points ascending, rts_tdma
/// before csa; reals carry 6 significant digits.
inline void write_csv(const sweep_report& report, std::ostream& out) {
    out << "sweep_value,scheme,mean_throughput,std_error,frames,seed,n_c,n_i,feasible\n";
    for (const sweep_row& row : report.rows) {
        out << detail::format_real(row.sweep_value) << ',' << to_string(row.scheme) << ','
            << detail::format_real(row.mean_throughput) << ','
            << detail::format_real(row.std_error) << ',' << row.frames << ',' << row.seed << ','
            << row.n_c << ',' << row.n_i << ',' << (row.feasible ? "true" : "false") << '\n';
    }
}

inline void write_csv(const sweep_report& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    write_csv(report, out);
    out.flush();
    if (!out) throw io_error("failed writing '" + path + "'");
}

}  // namespace rtstdma
