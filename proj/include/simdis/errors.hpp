#ifndef SIMDIS_ERRORS_HPP
#define SIMDIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simdis {

// Malformed geometry input (non-finite coordinates, out-of-range
// coordinates, broken ring topology).
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (iteration depth, piece count) was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace simdis

#endif
