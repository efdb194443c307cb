#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "subdyn/common.hpp"
#include "subdyn/point_window.hpp"

namespace subdyn {

// Generator of a subshift's pattern language: the full shift, a primitive
// substitution system over {0,1} (or a sub-alphabet), or the F2 boundary
// subshift given by first-letter indicators of infinite reduced words.
struct SubshiftSpec {
    enum class Kind { full_shift, substitution, boundary_f2 };

    Kind kind = Kind::full_shift;
    std::string alphabet = "01";
    std::map<char, std::string> rules;  // substitution only

    static SubshiftSpec full_shift(std::string alphabet = "01");
    static SubshiftSpec substitution(std::map<char, std::string> rules);
    static SubshiftSpec thue_morse();
    static SubshiftSpec fibonacci();
    static SubshiftSpec boundary_f2();
};

// Structured-text format:
//   kind=full-shift|substitution|boundary-f2
//   alphabet=01
//   0->01
//   1->10
std::string format_spec(const SubshiftSpec& spec);
SubshiftSpec parse_spec(std::string_view text);
SubshiftSpec load_spec(const std::string& path);

// Throws input_error on erasing or non-primitive substitutions.
void validate_spec(const SubshiftSpec& spec);

// Iterated substitution expansion, at least `min_len` symbols.
std::string expand_substitution(const SubshiftSpec& spec, std::size_t min_len);

// Expansion length used for window-size-w certificates.
std::size_t certificate_length(int w);

// The length-(2w+1) factors, deduplicated, sorted.  For boundary-f2 the
// patterns are {0,1}-values over the F2 ball B_w in canonical ball order,
// one per boundary prefix.
std::vector<std::string> generate_patterns(const SubshiftSpec& spec, int w);

// Number of distinct length-n factors (Z subshifts only).
long long complexity(const SubshiftSpec& spec, int n);

// Syndeticity bound: every length-w factor recurs with start-position gap
// <= R in any expansion window.  Certified by agreement of the bound at
// expansion lengths L and 2L; throws resource_error if not stabilized.
long long recurrence_gap(const SubshiftSpec& spec, int w);

// psi(z)(g) = 1 iff the reduced word g*z begins with 'a'.  Requires
// |z| >= w + 1 so every value is determined.
F2PointWindow psi_boundary(const FreeWord& z, int w);

}  // namespace subdyn
