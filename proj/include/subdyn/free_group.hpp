#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "subdyn/common.hpp"

namespace subdyn {

// Letters of F2 = <a,b>: 'a','b' and their inverses 'A','B'.
bool is_f2_letter(char c);
char inverse_letter(char c);

// A reduced word over {a,A,b,B}. The empty word is the identity.
struct FreeWord {
    std::string letters;

    std::size_t length() const { return letters.size(); }
    bool is_identity() const { return letters.empty(); }

    auto operator<=>(const FreeWord&) const = default;
};

// Free reduction of a raw letter sequence. Throws input_error on bad letters.
FreeWord reduce(std::string_view raw);

FreeWord fw_mul(const FreeWord& u, const FreeWord& v);
FreeWord fw_inv(const FreeWord& u);

// All reduced words of length <= n.  |B_n| = 1 + 2(3^n - 1) for n >= 1.
// Deterministic order: by length, then lexicographic.
std::vector<FreeWord> f2_ball(int n);

long long f2_ball_size(int n);

// Interchange format: the letter string, identity rendered as "e".
std::string format_free_word(const FreeWord& w);
FreeWord parse_free_word(std::string_view s);  // requires reduced input

}  // namespace subdyn
