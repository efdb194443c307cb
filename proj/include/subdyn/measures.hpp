#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "subdyn/common.hpp"
#include "subdyn/point_window.hpp"
#include "subdyn/rational.hpp"

namespace subdyn {

// ---- boundary measure eta on the space of infinite reduced words ----

bool is_reduced_prefix(const std::string& prefix);

// eta(C(e1,...,en)) = 1 / (4 * 3^{n-1}).  Throws input_error on a
// non-reduced prefix (empty cylinder) and on n = 0.
Rational eta_cylinder(const std::string& prefix);

// The set s^{-1} C(prefix) decomposed as a disjoint union of cylinders.
// Three cases: prefixing (one deeper cylinder), full cancellation into a
// co-cylinder (three depth-1 cylinders), partial cancellation (one
// shallower cylinder).
std::vector<std::string> shift_cylinder_decomposition(char s, const std::string& prefix);

// A finitely supported step law on the F2 generators.
struct StepLaw {
    std::map<char, Rational> atoms;  // keys among a,A,b,B

    static StepLaw uniform();  // 1/4 each
};

// (m * eta)(C) = sum_s m(s) eta(s^{-1} C), by exact cylinder decomposition.
Rational convolved_eta(const StepLaw& m, const std::string& prefix);

struct StationarityRow {
    std::string cylinder;
    Rational convolved;
    Rational eta;
};

// All reduced cylinders of depth 1..depth (depth 0 = whole space is the
// trivial row both sides 1, emitted first).
std::vector<StationarityRow> convolve_check(const StepLaw& m, int depth);

namespace ref {
// Serial reference sweep, kept independent of the parallel kernel.
std::vector<StationarityRow> convolve_check(const StepLaw& m, int depth);
}  // namespace ref

// ---- Haar fiber measures over a base {0,1} window ----

// A cylinder on {-1,0,1}^Z described by finitely many pinned coordinates.
using Cylinder = std::map<int, std::int8_t>;

// lambda_theta of a +-1 cylinder: 2^{-#constraints} if the support avoids
// {theta = 1}, else 0.  Constraints at unknown theta positions raise
// window_error; a 0-constraint is outside the fiber group and rejected.
Rational haar_fiber(const PointWindow& theta, const Cylinder& cylinder);

// Pullback of a cylinder under g: {omega : g omega in C}.  Constraint
// (n, s) becomes (n + m, lamp(n) * s); a 0 stays 0.
Cylinder act_inverse_cylinder(const WreathElement& g, const Cylinder& cylinder);

// Shift part of g acting on the base window: (g theta)(n) = theta(n + m).
PointWindow base_act(const WreathElement& g, const PointWindow& theta);

// Exact check of g_* lambda_theta = lambda_{g theta} on all +-1 cylinders
// supported in [-depth, depth].
bool rim_equivariance_check(const WreathElement& g, const PointWindow& theta, int depth);

// ---- lifted measures ----

// A product base measure on {0,1}^Z.
struct BernoulliBase {
    Rational p0{1, 2};  // probability of symbol 0
    Rational p1{1, 2};
};

struct CylinderMeasure {
    enum class Kind { product, boundary_eta, haar_fiber, lifted };
    Kind kind;
    std::string label;
};

// lifted(C) = prod over pinned coordinates: 0 -> p1, +-1 -> p0 / 2.
Rational lift_measure(const BernoulliBase& base, const Cylinder& cylinder);

// Invariance of the lifted measure: lifted(g^{-1} C) = lifted(C) for all
// cylinders (over {-1,0,1}) supported in [-depth, depth].
bool lift_invariance_check(const BernoulliBase& base, const WreathElement& g, int depth);

// All cylinders with support exactly a subset of [-depth, depth] and values
// drawn from the given symbol list; deterministic order.
std::vector<Cylinder> enumerate_cylinders(int depth, const std::vector<std::int8_t>& symbols);

}  // namespace subdyn
