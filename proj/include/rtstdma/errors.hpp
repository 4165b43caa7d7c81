#pragma once

#include <stdexcept>
#include <string>

namespace rtstdma {

/// Thrown when a value or configuration violates one of its invariants.
/// The message names the violated invariant.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a file cannot be read or written.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rtstdma
