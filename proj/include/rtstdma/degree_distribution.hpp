#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rtstdma/errors.hpp"
#include "rtstdma/random.hpp"

namespace rtstdma {

/// Default cap on the repetition rate. Each copy carries pointers to all
/// other copies, so the cap bounds the pointer payload of a request packet.
inline constexpr int default_max_degree = 8;

/// Absolute tolerance on the total probability mass.
inline constexpr double mass_tolerance = 1e-9;

struct degree_entry {
    int degree = 0;
    double probability = 0.0;
};

/// Probability law of the repetition rate: how many copies of its request
/// packet a contending vehicle transmits.
///
/// Immutable once constructed, so one instance can be shared across
/// concurrent trials (each trial owns its own rng_engine). Sampling maps a
/// uniform variate through the inverse CDF with entries in ascending degree
/// order, so a fixed seed always yields the same draw sequence.
class degree_distribution {
public:
    /// Validates and normalizes entry order. Throws validation_error if the
    /// entries have duplicate degrees, a degree outside [1, max_degree], a
    /// non-positive probability, or mass that is not 1 within mass_tolerance.
    explicit degree_distribution(std::vector<degree_entry> entries,
                                 int max_degree = default_max_degree)
        : entries_(std::move(entries)), max_degree_(max_degree) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const degree_entry& a, const degree_entry& b) { return a.degree < b.degree; });
        validate();
        cdf_.reserve(entries_.size());
        double acc = 0.0;
        for (const degree_entry& e : entries_) {
            acc += e.probability;
            cdf_.push_back(acc);
        }
    }

    /// Parses the comma-separated "l:p" config form, e.g. "2:0.5,3:0.28,8:0.22".
    static degree_distribution parse(const std::string& text, int max_degree = default_max_degree) {
        std::vector<degree_entry> entries;
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw validation_error("distribution entry '" + item + "' is not of the form l:p");
            entries.push_back({parse_degree(item.substr(0, colon)),
                               parse_probability(item.substr(colon + 1))});
        }
        if (entries.empty()) throw validation_error("distribution string is empty");
        return degree_distribution(std::move(entries), max_degree);
    }

    /// One draw of the repetition rate; always a degree present in the support.
    int sample_degree(rng_engine& rng) const {
        const double u = unit_double(rng);
        for (std::size_t i = 0; i < cdf_.size(); ++i)
            if (u < cdf_[i]) return entries_[i].degree;
        return entries_.back().degree;  // u beyond accumulated mass by rounding
    }

    /// Expected repetition rate, i.e. the average number of copies per request.
    double mean_degree() const {
        double m = 0.0;
        for (const degree_entry& e : entries_) m += e.degree * e.probability;
        return m;
    }

    int max_degree() const { return max_degree_; }
    const std::vector<degree_entry>& entries() const { return entries_; }

private:
    void validate() const {
        if (entries_.empty()) throw validation_error("distribution has no entries");
        double mass = 0.0;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const degree_entry& e = entries_[i];
            if (e.degree < 1 || e.degree > max_degree_)
                throw validation_error("degree " + std::to_string(e.degree) +
                                       " out of range [1, " + std::to_string(max_degree_) + "]");
            if (i > 0 && entries_[i - 1].degree == e.degree)
                throw validation_error("duplicate degree " + std::to_string(e.degree));
            if (!(e.probability > 0.0))
                throw validation_error("non-positive probability for degree " +
                                       std::to_string(e.degree));
            mass += e.probability;
        }
        if (std::abs(mass - 1.0) > mass_tolerance)
            throw validation_error("probabilities sum to " + std::to_string(mass) +
                                   ", expected 1 within 1e-9");
    }

    static int parse_degree(const std::string& s) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw validation_error("bad degree '" + s + "'");
        }
        if (s.find_first_not_of(" \t", pos) != std::string::npos)
            throw validation_error("bad degree '" + s + "'");
        return v;
    }

    static double parse_probability(const std::string& s) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw validation_error("bad probability '" + s + "'");
        }
        if (s.find_first_not_of(" \t", pos) != std::string::npos)
            throw validation_error("bad probability '" + s + "'");
        return v;
    }

    std::vector<degree_entry> entries_;  // ascending degree
    std::vector<double> cdf_;
    int max_degree_;
};

}  // namespace rtstdma
