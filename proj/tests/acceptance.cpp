// Acceptance suite: one line per criterion, nonzero exit on any failure.
// All checks are exact (rational or set identities) unless stated.

#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "subdyn/measures.hpp"
#include "subdyn/realization.hpp"
#include "subdyn/stability.hpp"
#include "subdyn/subshifts.hpp"

using namespace subdyn;

namespace {

int failures = 0;

void report(const char* name, bool ok) {
    std::printf("%-34s %s\n", name, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
}

PointWindow seeded_signs_window(std::mt19937_64& rng, int radius) {
    PointWindow w = PointWindow::unknown_window(Alphabet::signs, radius);
    for (int n = -radius; n <= radius; ++n)
        w.set(n, static_cast<std::int8_t>(static_cast<int>(rng() % 3) - 1));
    return w;
}

PointWindow seeded_aperiodic_window(std::mt19937_64& rng, int radius, int max_shift) {
    for (;;) {
        auto w = seeded_signs_window(rng, radius);
        if (is_zero_set_aperiodic(w, max_shift)) return w;
    }
}

PointWindow seeded_binary_window(std::mt19937_64& rng, int radius) {
    PointWindow w = PointWindow::unknown_window(Alphabet::binary, radius);
    for (int n = -radius; n <= radius; ++n)
        w.set(n, static_cast<std::int8_t>(rng() % 2));
    return w;
}

// 1. brute-force stabilizer over B_6 == analytic lamp window, 100 windows
bool stabilizer_oracle_equivalence() {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        auto omega = seeded_aperiodic_window(rng, 8, 6);
        if (stabilizer_window(omega, 6) != analytic_stabilizer(omega, 6)) return false;
    }
    return true;
}

// 2. phi(g omega) == g phi(omega) on the determined region, g in B_4
bool factor_map_equivariance() {
    std::mt19937_64 rng(102);
    const auto ball = lamplighter_ball(4);
    for (int i = 0; i < 100; ++i) {
        auto omega = seeded_signs_window(rng, 8);
        for (const auto& g : ball) {
            auto lhs = phi_factor(wr_act(g, omega));
            auto rhs = base_act(g, phi_factor(omega));
            for (int n = -8; n <= 8; ++n)
                if (lhs.known(n) && rhs.known(n) && lhs.at(n) != rhs.at(n)) return false;
        }
    }
    return true;
}

// 3. full-shift stability system: 32 length-5 patterns <-> 32 windows
bool full_shift_stability_system() {
    auto res = stability_system(SubshiftSpec::full_shift(), 2, 7);
    return res.entries.size() == 32 && res.bijection && res.decorations_consistent;
}

// 4. m * eta == eta on every reduced cylinder of depth <= 6
bool stationarity() {
    if (eta_cylinder("a") != Rational(1, 4)) return false;
    auto rows = convolve_check(StepLaw::uniform(), 6);
    long long deepest = 0;
    for (const auto& r : rows) {
        if (r.convolved != r.eta) return false;
        if (r.cylinder.size() == 6) ++deepest;
    }
    return deepest == 4 * 3 * 3 * 3 * 3 * 3;
}

// 5. g_* lambda_theta == lambda_{g theta} for g in {e1, sigma}
bool rim_equivariance() {
    std::mt19937_64 rng(105);
    for (int i = 0; i < 50; ++i) {
        auto theta = seeded_binary_window(rng, 6);
        for (const auto& g : {wr_e1(), wr_sigma()})
            for (int depth = 1; depth <= 4; ++depth)
                if (!rim_equivariance_check(g, theta, depth)) return false;
    }
    return true;
}

// 6. lifting Bernoulli(1/2) gives the {1/4,1/2,1/4} product measure,
//    cross-checked by integrating the fiber measures over the base
bool measure_lift() {
    const BernoulliBase base;
    for (const auto& c : enumerate_cylinders(5, {std::int8_t{-1}, std::int8_t{0}, std::int8_t{1}})) {
        if (c.size() > 5) continue;
        Rational product(1);
        for (const auto& [n, v] : c) {
            (void)n;
            product *= v == 0 ? Rational(1, 2) : Rational(1, 4);
        }
        if (lift_measure(base, c) != product) return false;
        // integration oracle: sum base-weighted fiber measures over all
        // theta patterns on the support of c
        std::vector<int> supp;
        for (const auto& [n, v] : c) {
            (void)v;
            supp.push_back(n);
        }
        Rational integral(0);
        for (std::uint32_t mask = 0; mask < (1u << supp.size()); ++mask) {
            PointWindow theta = PointWindow::unknown_window(Alphabet::binary, 5);
            Rational weight(1);
            for (std::size_t j = 0; j < supp.size(); ++j) {
                std::int8_t bit = (mask >> j) & 1;
                theta.set(supp[j], bit);
                weight *= Rational(1, 2);
            }
            Cylinder signs;
            bool compatible = true;
            for (const auto& [n, v] : c) {
                if (v == 0) {
                    if (theta.at(n) != 1) compatible = false;  // omega(n)=0 forces theta(n)=1
                } else {
                    signs[n] = v;
                }
            }
            if (compatible) integral += weight * haar_fiber(theta, signs);
        }
        if (integral != product) return false;
    }
    for (const auto& g : {wr_e1(), wr_sigma()})
        if (!lift_invariance_check(base, g, 4)) return false;
    return true;
}

// 7. pullback along eta vs direct-action fixing, all 1457 words of B_6
bool pullback_agreement() {
    std::mt19937_64 rng(107);
    const auto eta = eta_hom();
    const auto ball = f2_ball(6);
    if (ball.size() != 1457) return false;
    for (int i = 0; i < 20; ++i) {
        auto omega = seeded_aperiodic_window(rng, 8, 6);
        auto pulled = pullback_stabilizer(omega, 6);
        for (const auto& v : ball) {
            auto acted = wr_act(hom_eval(eta, v), omega);
            bool fixes = true;
            for (int n = -8; n <= 8; ++n)
                if (acted.known(n) && omega.known(n) && acted.at(n) != omega.at(n)) fixes = false;
            if (pulled.contains(v) != fixes) return false;
        }
    }
    return true;
}

// 8. recurrence gaps finite and stable for w <= 16; complexities separate
bool minimality_certificates() {
    auto tm = SubshiftSpec::thue_morse();
    auto fib = SubshiftSpec::fibonacci();
    try {
        long long prev_tm = 0, prev_fib = 0;
        for (int w = 1; w <= 16; ++w) {
            long long gtm = recurrence_gap(tm, w), gfib = recurrence_gap(fib, w);
            if (gtm <= 0 || gfib <= 0 || gtm < prev_tm || gfib < prev_fib) return false;
            prev_tm = gtm;
            prev_fib = gfib;
        }
    } catch (const resource_error&) {
        return false;
    }
    for (int n = 1; n <= 4; ++n)
        if (complexity(tm, n) != complexity(fib, n)) return true;
    return false;
}

// 9. finite realization: parity table and a non-normal index-3 table
bool finite_realization() {
    auto parity = realize_finite(parity_table(), 6);
    if (parity.orbit.size() != 2 || !parity.sandwich_holds) return false;
    for (const auto& g : f2_ball(6))
        if (parity.base_stabilizer.contains(g) != (g.length() % 2 == 0)) return false;

    auto idx3 = realize_finite(index3_nonnormal_table(), 6);
    return idx3.stability_system.size() == 3 && idx3.stability_matches_conjugates &&
           idx3.sandwich_holds;
}

// 10. fell-convergent sequences of property windows have property limits
bool closedness() {
    std::mt19937_64 rng(110);
    const auto abelian = PropertyTag::make_abelian();
    const auto exp2 = PropertyTag::make_exponent(2);
    for (int i = 0; i < 50; ++i) {
        // cyclic subgroup windows of F2 are abelian
        FreeWord g;
        do {
            auto ball = f2_ball(3);
            g = ball[rng() % ball.size()];
        } while (g.is_identity());
        SubgroupWindow<F2Ops> limit{6, {}};
        for (const FreeWord& step : {g, fw_inv(g)}) {
            FreeWord p;  // powers of step within the window
            while (p.length() <= 6) {
                limit.members.insert(p);
                p = fw_mul(p, step);
            }
        }
        Rational last(2);
        for (int k = 2; k <= 6; ++k) {
            auto wk = truncate_window(limit, k);
            auto d = fell_window_distance(wk, limit);
            if (d > last) return false;  // not converging
            last = d;
        }
        if (!check_property(limit, abelian)) return false;

        // lamp subgroup windows of the lamplighter group have exponent 2
        std::set<long long> supp;
        for (int p2 = -3; p2 <= 3; ++p2)
            if (rng() % 2) supp.insert(p2);
        SubgroupWindow<LampOps> lamp_limit{8, {}};
        for (const auto& e : lamplighter_ball(8)) {
            if (e.shift != 0) continue;
            bool inside = true;
            for (long long q : e.lamps)
                if (!supp.count(q)) inside = false;
            if (inside) lamp_limit.members.insert(e);
        }
        last = Rational(2);
        for (int k = 2; k <= 8; k += 2) {
            auto wk = truncate_window(lamp_limit, k);
            auto d = fell_window_distance(wk, lamp_limit);
            if (d > last) return false;
            last = d;
        }
        if (!check_property(lamp_limit, exp2)) return false;
    }
    return true;
}

// 11. sigma^t omega and sigma^t (k omega) agree on radii growing with t
bool proximality() {
    std::mt19937_64 rng(111);
    for (int i = 0; i < 20; ++i) {
        auto omega = seeded_signs_window(rng, 24);
        for (std::uint32_t mask = 1; mask < 128; ++mask) {
            WreathElement lamp{{}, 0};
            for (int p = -3; p <= 3; ++p)
                if ((mask >> (p + 3)) & 1) lamp.lamps.push_back(p);
            for (int t = 5; t <= 10; ++t)
                if (proximality_agreement_radius(omega, lamp, t) < t - 4) return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    report("1 stabilizer oracle equivalence", stabilizer_oracle_equivalence());
    report("2 factor map equivariance", factor_map_equivariance());
    report("3 full-shift stability system", full_shift_stability_system());
    report("4 stationarity of eta", stationarity());
    report("5 RIM equivariance", rim_equivariance());
    report("6 measure lift", measure_lift());
    report("7 pullback agreement", pullback_agreement());
    report("8 minimality certificates", minimality_certificates());
    report("9 finite realization", finite_realization());
    report("10 closedness of properties", closedness());
    report("11 proximality", proximality());
    return failures == 0 ? 0 : 1;
}
