#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "subdyn/common.hpp"
#include "subdyn/free_group.hpp"

namespace subdyn {

// An element (k, m) of the lamplighter group {1,-1} wr Z in normal form:
// `lamps` is the sorted support {n : k(n) = -1}, `shift` is m.
struct WreathElement {
    std::vector<long long> lamps;
    long long shift = 0;

    int lamp_at(long long n) const;  // +1 or -1
    bool is_identity() const { return lamps.empty() && shift == 0; }

    auto operator<=>(const WreathElement&) const = default;
};

WreathElement wr_identity();
WreathElement wr_e1();     // lamp at 1, no shift
WreathElement wr_sigma();  // shift by 1

// (l,m)(k,m') has lamps(n) = l(n) * k(n + m) and shift m + m'.
WreathElement wr_mul(const WreathElement& x, const WreathElement& y);
WreathElement wr_inv(const WreathElement& x);

// Word length with respect to the generating set {e1, sigma, sigma^{-1}}.
// Flipping the lamp at position p requires cursor 1 - p, so the length is
// |lamps| plus the shortest walk from 0 through {1 - p : p in lamps} to shift.
long long wr_word_length(const WreathElement& x);

// BFS enumeration of the word-length ball, normal-form deduplicated.
// Deterministic order: by word length, then normal-form comparison.
std::vector<WreathElement> lamplighter_ball(int n);

// Interchange format "L{n1,n2,...}S{m}", identity = "L{}S{0}".
std::string format_wreath(const WreathElement& x);
WreathElement parse_wreath(std::string_view s);

// A homomorphism F2 -> lamplighter given by generator images.
struct GroupHom {
    WreathElement image_a;
    WreathElement image_b;
};

// The surjection with a -> e1, b -> sigma.
GroupHom eta_hom();

WreathElement hom_eval(const GroupHom& h, const FreeWord& w);

}  // namespace subdyn
