#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subdyn/chabauty.hpp"
#include "subdyn/common.hpp"
#include "subdyn/point_window.hpp"
#include "subdyn/subshifts.hpp"

namespace subdyn {

// The indicator of the zero set: theta(n) = 1 iff omega(n) = 0.
// Unknown positions propagate.
PointWindow phi_factor(const PointWindow& omega);

// Brute-force window stabilizer: all g in the lamplighter ball B_n whose
// action agrees with omega on the determined overlap.  A certified superset
// of the true stabilizer intersected with B_n.
SubgroupWindow<LampOps> stabilizer_window(const PointWindow& omega, int n);

namespace ref {
// Serial reference, independent of the parallel sweep.
SubgroupWindow<LampOps> stabilizer_window(const PointWindow& omega, int n);
}  // namespace ref

// The analytic stabilizer: lamp-only elements supported in the zero set
// A(omega), truncated to B_n.  Extension-stable: these fix every
// configuration extending the window.
SubgroupWindow<LampOps> analytic_stabilizer(const PointWindow& omega, int n);

// No m-shift with |m| <= max_shift carries the zero-set pattern onto itself
// on the window overlap.  On such windows no element with a nonzero shift
// can fix the window, so brute force and the analytic formula agree.
bool is_zero_set_aperiodic(const PointWindow& omega, int max_shift);

struct StabilityReport {
    PointWindow point;
    SubgroupWindow<LampOps> stabilizer;
    bool continuity = false;   // true when the stabilizer is extension-stable
    int witness_radius = 0;
};

StabilityReport stability_report(const PointWindow& omega, int n);

// One entry per base pattern of length 2w+1: the (decoration-independent)
// certified stabilizer window at ball radius n, plus the verdict that the
// map pattern -> window is a bijection onto its image and that every sign
// decoration of the pattern produced the same window.
struct StabilitySystemEntry {
    std::string base_pattern;
    SubgroupWindow<LampOps> stabilizer;
};

struct StabilitySystemResult {
    std::vector<StabilitySystemEntry> entries;
    bool bijection = false;
    bool decorations_consistent = false;
};

StabilitySystemResult stability_system(const SubshiftSpec& base, int w, int n);

namespace ref {
StabilitySystemResult stability_system(const SubshiftSpec& base, int w, int n);
}  // namespace ref

// Thm-style pullback along eta: {v in B_n(F2) : eta(v) has zero shift and
// lamp support inside A(omega)}.  Lamp support escaping the known window
// raises window_error.
SubgroupWindow<F2Ops> pullback_stabilizer(const PointWindow& omega, int n);

// Search the sign decorations of the base patterns for a point whose brute
// stabilizer at radius n is trivial.  Deterministic in the seed.
std::optional<PointWindow> find_free_point(const SubshiftSpec& base, int w, int n,
                                           std::uint64_t seed);

// Largest r such that the windows of sigma^t omega and sigma^t (k omega)
// are both determined and equal on [-r, r]; -1 if they disagree at 0.
int proximality_agreement_radius(const PointWindow& omega, const WreathElement& lamp, int t);

}  // namespace subdyn
