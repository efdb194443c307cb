#pragma once

#include <stdexcept>
#include <string>

namespace subdyn {

// Malformed input: bad letters, non-reduced prefixes, invalid tables, ...
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested radius/depth exceeds the configured resource envelope,
// or a certificate failed to stabilize within it.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A window is too small to certify the requested computation
// (insufficient radius, degenerate determined region, escaping support).
struct window_error : std::runtime_error {
    explicit window_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace subdyn
