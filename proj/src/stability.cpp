#include "subdyn/stability.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

namespace subdyn {

PointWindow phi_factor(const PointWindow& omega) {
    if (omega.alphabet != Alphabet::signs) throw input_error("phi_factor needs a {-1,0,1} window");
    PointWindow theta = PointWindow::unknown_window(Alphabet::binary, omega.radius);
    for (int n = -omega.radius; n <= omega.radius; ++n) {
        std::int8_t v = omega.at(n);
        if (v == kUnknown) continue;
        theta.set(n, v == 0 ? 1 : 0);
    }
    return theta;
}

namespace {

// g agrees with omega on the determined overlap
bool fixes_window(const WreathElement& g, const PointWindow& omega) {
    for (int n = -omega.radius; n <= omega.radius; ++n) {
        if (!omega.known(n)) continue;
        long long src = n + g.shift;
        if (src < -omega.radius || src > omega.radius) continue;
        std::int8_t v = omega.at(static_cast<int>(src));
        if (v == kUnknown) continue;
        if (static_cast<std::int8_t>(g.lamp_at(n) * v) != omega.at(n)) return false;
    }
    return true;
}

}  // namespace

SubgroupWindow<LampOps> stabilizer_window(const PointWindow& omega, int n) {
    if (omega.alphabet != Alphabet::signs) throw input_error("stabilizer needs a {-1,0,1} window");
    if (n > omega.radius) throw window_error("ball radius exceeds window radius");
    const auto ball = lamplighter_ball(n);
    std::vector<char> keep(ball.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(ball.size()); ++i)
        keep[static_cast<std::size_t>(i)] = fixes_window(ball[static_cast<std::size_t>(i)], omega);
    SubgroupWindow<LampOps> out{n, {}};
    for (std::size_t i = 0; i < ball.size(); ++i)
        if (keep[i]) out.members.insert(ball[i]);
    return out;
}

namespace ref {

SubgroupWindow<LampOps> stabilizer_window(const PointWindow& omega, int n) {
    if (omega.alphabet != Alphabet::signs) throw input_error("stabilizer needs a {-1,0,1} window");
    if (n > omega.radius) throw window_error("ball radius exceeds window radius");
    SubgroupWindow<LampOps> out{n, {}};
    for (const auto& g : lamplighter_ball(n))
        if (fixes_window(g, omega)) out.members.insert(g);
    return out;
}

}  // namespace ref

SubgroupWindow<LampOps> analytic_stabilizer(const PointWindow& omega, int n) {
    if (n > omega.radius) throw window_error("ball radius exceeds window radius");
    SubgroupWindow<LampOps> out{n, {}};
    for (const auto& g : lamplighter_ball(n)) {
        if (g.shift != 0) continue;
        bool inside = true;
        for (long long p : g.lamps) {
            if (p < -omega.radius || p > omega.radius || !omega.known(static_cast<int>(p)) ||
                omega.at(static_cast<int>(p)) != 0) {
                inside = false;
                break;
            }
        }
        if (inside) out.members.insert(g);
    }
    return out;
}

bool is_zero_set_aperiodic(const PointWindow& omega, int max_shift) {
    for (int m = 1; m <= max_shift; ++m) {
        for (int sgn : {1, -1}) {
            const int shift = sgn * m;
            bool witness = false;
            for (int n = -omega.radius; n <= omega.radius; ++n) {
                int src = n + shift;
                if (src < -omega.radius || src > omega.radius) continue;
                if (!omega.known(n) || !omega.known(src)) continue;
                if ((omega.at(n) == 0) != (omega.at(src) == 0)) {
                    witness = true;
                    break;
                }
            }
            if (!witness) return false;
        }
    }
    return true;
}

StabilityReport stability_report(const PointWindow& omega, int n) {
    StabilityReport rep{omega, stabilizer_window(omega, n), false, 0};
    if (is_zero_set_aperiodic(omega, n) && rep.stabilizer == analytic_stabilizer(omega, n)) {
        rep.continuity = true;
        rep.witness_radius = omega.radius;
    }
    return rep;
}

namespace {

std::vector<int> zero_sign_sites(const std::string& pattern, int w) {
    std::vector<int> sites;
    for (int n = -w; n <= w; ++n)
        if (pattern[static_cast<std::size_t>(n + w)] == '0') sites.push_back(n);
    return sites;
}

PointWindow theta_from_pattern(const std::string& pattern, int w) {
    PointWindow theta = PointWindow::unknown_window(Alphabet::binary, w);
    for (int n = -w; n <= w; ++n) {
        char c = pattern[static_cast<std::size_t>(n + w)];
        if (c != '0' && c != '1') throw input_error("base pattern must be over {0,1}");
        theta.set(n, static_cast<std::int8_t>(c - '0'));
    }
    return theta;
}

PointWindow decorate(const PointWindow& theta, const std::vector<int>& sites, std::uint32_t mask) {
    std::map<int, std::int8_t> signs;
    for (std::size_t i = 0; i < sites.size(); ++i)
        signs[sites[i]] = (mask >> i) & 1 ? std::int8_t{-1} : std::int8_t{1};
    return tilde_point(theta, signs);
}

PointWindow pad_to_radius(const PointWindow& omega, int radius) {
    if (radius <= omega.radius) return omega;
    PointWindow out = PointWindow::unknown_window(omega.alphabet, radius);
    for (int n = -omega.radius; n <= omega.radius; ++n)
        if (omega.known(n)) out.set(n, omega.at(n));
    return out;
}

// certified stabilizer entry for one base pattern, sweeping all decorations
bool pattern_entry(const std::string& pattern, int w, int n, StabilitySystemEntry& entry) {
    const PointWindow theta = theta_from_pattern(pattern, w);
    const auto sites = zero_sign_sites(pattern, w);
    if (sites.size() > 25) throw resource_error("too many sign sites in one pattern");
    bool consistent = true;
    entry.base_pattern = pattern;
    for (std::uint32_t mask = 0; mask < (1u << sites.size()); ++mask) {
        PointWindow omega = pad_to_radius(decorate(theta, sites, mask), n);
        auto certified = analytic_stabilizer(omega, n);
        // every decoration must give the same certified window, and the
        // brute window stabilizer must contain it
        if (mask == 0)
            entry.stabilizer = certified;
        else if (certified != entry.stabilizer)
            consistent = false;
        auto brute = stabilizer_window(omega, n);
        for (const auto& g : certified.members)
            if (!brute.contains(g)) consistent = false;
    }
    return consistent;
}

StabilitySystemResult stability_system_impl(const SubshiftSpec& base, int w, int n, bool parallel) {
    if (w < 0 || n < 0) throw input_error("stability_system needs w, n >= 0");
    for (char c : base.alphabet)
        if (c != '0' && c != '1') throw input_error("base spec must be over {0,1}");
    const auto patterns = generate_patterns(base, w);
    StabilitySystemResult result;
    result.entries.resize(patterns.size());
    std::vector<char> consistent(patterns.size(), 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < static_cast<long long>(patterns.size()); ++i)
        consistent[static_cast<std::size_t>(i)] =
            pattern_entry(patterns[static_cast<std::size_t>(i)], w, n,
                          result.entries[static_cast<std::size_t>(i)]);
    result.decorations_consistent =
        std::all_of(consistent.begin(), consistent.end(), [](char c) { return c != 0; });
    std::set<std::vector<WreathElement>> distinct;
    for (const auto& e : result.entries)
        distinct.emplace(e.stabilizer.members.begin(), e.stabilizer.members.end());
    result.bijection = distinct.size() == result.entries.size();
    return result;
}

}  // namespace

StabilitySystemResult stability_system(const SubshiftSpec& base, int w, int n) {
    return stability_system_impl(base, w, n, true);
}

namespace ref {

StabilitySystemResult stability_system(const SubshiftSpec& base, int w, int n) {
    return stability_system_impl(base, w, n, false);
}

}  // namespace ref

SubgroupWindow<F2Ops> pullback_stabilizer(const PointWindow& omega, int n) {
    if (omega.alphabet != Alphabet::signs) throw input_error("pullback needs a {-1,0,1} window");
    const GroupHom eta = eta_hom();
    SubgroupWindow<F2Ops> out{n, {}};
    for (const auto& v : f2_ball(n)) {
        WreathElement g = hom_eval(eta, v);
        if (g.shift != 0) continue;
        bool member = true;
        for (long long p : g.lamps) {
            if (p < -omega.radius || p > omega.radius || !omega.known(static_cast<int>(p)))
                throw window_error("lamp support escapes the known window");
            if (omega.at(static_cast<int>(p)) != 0) {
                member = false;
                break;
            }
        }
        if (member) out.members.insert(v);
    }
    return out;
}

std::optional<PointWindow> find_free_point(const SubshiftSpec& base, int w, int n,
                                           std::uint64_t seed) {
    const SubgroupWindow<LampOps> trivial{n, {wr_identity()}};
    std::mt19937_64 rng(seed);
    for (const auto& pattern : generate_patterns(base, w)) {
        const PointWindow theta = theta_from_pattern(pattern, w);
        const auto sites = zero_sign_sites(pattern, w);
        const std::uint32_t total =
            sites.size() >= 16 ? 0 : (1u << sites.size());  // 0 = sample instead
        const int attempts = total ? static_cast<int>(total) : 256;
        for (int i = 0; i < attempts; ++i) {
            std::uint32_t mask = total ? static_cast<std::uint32_t>(i)
                                       : static_cast<std::uint32_t>(rng());
            PointWindow omega = decorate(theta, sites, mask);
            if (stabilizer_window(omega, n) == trivial) return omega;
        }
    }
    return std::nullopt;
}

int proximality_agreement_radius(const PointWindow& omega, const WreathElement& lamp, int t) {
    if (lamp.shift != 0) throw input_error("proximality witness needs a lamp element");
    WreathElement shift{{}, t};
    PointWindow a = wr_act(shift, omega);
    PointWindow b = wr_act(shift, wr_act(lamp, omega));
    int r = -1;
    while (r + 1 <= omega.radius) {
        int next = r + 1;
        bool ok = true;
        for (int n : {-next, next}) {
            if (!a.known(n) || !b.known(n) || a.at(n) != b.at(n)) {
                ok = false;
                break;
            }
        }
        if (!ok) break;
        r = next;
    }
    // require agreement at the center too
    if (!a.known(0) || !b.known(0) || a.at(0) != b.at(0)) return -1;
    return r;
}

}  // namespace subdyn
