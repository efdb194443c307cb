#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "subdyn/common.hpp"
#include "subdyn/free_group.hpp"
#include "subdyn/wreath.hpp"

namespace subdyn {

inline constexpr std::int8_t kUnknown = 127;

enum class Alphabet { binary, signs };  // {0,1} vs {-1,0,1}

// A configuration restricted to the interval [-radius, radius] of Z.
// Positions outside the declared alphabet are marked unknown.
struct PointWindow {
    Alphabet alphabet = Alphabet::signs;
    int radius = 0;
    std::vector<std::int8_t> vals;  // size 2*radius+1, index n + radius

    static PointWindow unknown_window(Alphabet a, int radius);
    static PointWindow constant(Alphabet a, int radius, std::int8_t v);

    std::int8_t at(int n) const { return vals[static_cast<std::size_t>(n + radius)]; }
    void set(int n, std::int8_t v);
    bool known(int n) const { return at(n) != kUnknown; }
    bool fully_known() const;
    int size() const { return 2 * radius + 1; }

    bool operator==(const PointWindow&) const = default;
};

// The wreath action (g omega)(n) = k(n) * omega(n + m) for g = (k, m),
// restricted to the window; positions whose source falls outside the
// window come back unknown.  Throws window_error when nothing is determined.
PointWindow wr_act(const WreathElement& g, const PointWindow& omega);

// Positions n in [-radius, radius] where both omega and wr_act(g, omega)
// are determined, i.e. n and n + m lie in the window.
std::vector<int> determined_region(const WreathElement& g, const PointWindow& omega);

// Sign decoration of a binary pattern: 0 exactly where theta = 1, the given
// sign where theta = 0.  `signs` must be defined exactly on the zero set.
PointWindow tilde_point(const PointWindow& theta, const std::map<int, std::int8_t>& signs);

// A {0,1}-configuration restricted to the F2 ball of the given radius.
struct F2PointWindow {
    int radius = 0;
    std::map<FreeWord, std::int8_t> vals;

    bool operator==(const F2PointWindow&) const = default;
};

// Canonical serialization: values in f2_ball(radius) order.
std::string f2_window_pattern(const F2PointWindow& w);

std::string format_point_window(const PointWindow& w);  // e.g. "(1,0,-1)" with ? for unknown
PointWindow parse_point_window(Alphabet a, const std::string& s);

}  // namespace subdyn
