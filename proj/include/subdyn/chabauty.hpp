#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "subdyn/common.hpp"
#include "subdyn/free_group.hpp"
#include "subdyn/rational.hpp"
#include "subdyn/wreath.hpp"

namespace subdyn {

// Group operation bundles for the two shipped groups.  A SubgroupWindow is
// parameterized over one of these, so conjugation / distance / property
// checks are written once.

struct F2Ops {
    using Elem = FreeWord;
    static constexpr const char* tag = "F2";
    static Elem identity() { return FreeWord{}; }
    static Elem mul(const Elem& x, const Elem& y) { return fw_mul(x, y); }
    static Elem inv(const Elem& x) { return fw_inv(x); }
    static long long length(const Elem& x) { return static_cast<long long>(x.length()); }
    static std::vector<Elem> ball(int n) { return f2_ball(n); }
    static std::string format(const Elem& x) { return format_free_word(x); }
    static Elem parse(std::string_view s) { return parse_free_word(s); }
};

struct LampOps {
    using Elem = WreathElement;
    static constexpr const char* tag = "lamplighter";
    static Elem identity() { return wr_identity(); }
    static Elem mul(const Elem& x, const Elem& y) { return wr_mul(x, y); }
    static Elem inv(const Elem& x) { return wr_inv(x); }
    static long long length(const Elem& x) { return wr_word_length(x); }
    static std::vector<Elem> ball(int n) { return lamplighter_ball(n); }
    static std::string format(const Elem& x) { return format_wreath(x); }
    static Elem parse(std::string_view s) { return parse_wreath(s); }
};

// A subgroup truncated to the word-metric ball of the given radius:
// the finite avatar of a point of S(G).
template <class Ops>
struct SubgroupWindow {
    using Elem = typename Ops::Elem;

    int radius = 0;
    std::set<Elem> members;

    bool contains(const Elem& e) const { return members.count(e) > 0; }
    bool operator==(const SubgroupWindow&) const = default;
};

template <class Ops>
SubgroupWindow<Ops> truncate_window(const SubgroupWindow<Ops>& w, int radius) {
    if (radius > w.radius) throw window_error("cannot grow a subgroup window");
    SubgroupWindow<Ops> out{radius, {}};
    for (const auto& e : w.members)
        if (Ops::length(e) <= radius) out.members.insert(e);
    return out;
}

// Sanity check of the window invariants: identity, inverse closure,
// partial product closure.
template <class Ops>
bool window_consistent(const SubgroupWindow<Ops>& w) {
    if (!w.contains(Ops::identity())) return false;
    for (const auto& e : w.members) {
        if (Ops::length(e) > w.radius) return false;
        if (!w.contains(Ops::inv(e))) return false;
    }
    for (const auto& x : w.members)
        for (const auto& y : w.members) {
            auto p = Ops::mul(x, y);
            if (Ops::length(p) <= w.radius && !w.contains(p)) return false;
        }
    return true;
}

// g H g^{-1} certified on the ball of radius W.radius - 2|g|.
template <class Ops>
SubgroupWindow<Ops> conjugate_window(const typename Ops::Elem& g, const SubgroupWindow<Ops>& w) {
    const long long lg = Ops::length(g);
    const long long certified = w.radius - 2 * lg;
    if (certified < 0) throw window_error("conjugator too long for window radius");
    SubgroupWindow<Ops> out{static_cast<int>(certified), {}};
    const auto gi = Ops::inv(g);
    for (const auto& h : w.members) {
        auto c = Ops::mul(Ops::mul(g, h), gi);
        if (Ops::length(c) <= certified) out.members.insert(std::move(c));
    }
    return out;
}

// 2^{-r} where r is the largest radius on which the member sets coincide;
// 0 iff the windows are identical at the common radius.
template <class Ops>
Rational fell_window_distance(const SubgroupWindow<Ops>& w1, const SubgroupWindow<Ops>& w2) {
    const int common = std::min(w1.radius, w2.radius);
    long long min_diff = -1;
    auto scan = [&](const SubgroupWindow<Ops>& x, const SubgroupWindow<Ops>& y) {
        for (const auto& e : x.members) {
            long long l = Ops::length(e);
            if (l > common) continue;
            if (!y.contains(e) && (min_diff < 0 || l < min_diff)) min_diff = l;
        }
    };
    scan(w1, w2);
    scan(w2, w1);
    if (min_diff < 0) return Rational(0);
    return pow2_inverse(static_cast<int>(min_diff) - 1);
}

struct PropertyTag {
    enum Kind { abelian, exponent } kind = abelian;
    long long q = 0;  // exponent only, q >= 2

    static PropertyTag make_abelian() { return PropertyTag{abelian, 0}; }
    static PropertyTag make_exponent(long long q) {
        if (q < 2) throw input_error("exponent must be >= 2");
        return PropertyTag{exponent, q};
    }
};

// Exact ambient-group arithmetic on the members (not window-truncated).
template <class Ops>
bool check_property(const SubgroupWindow<Ops>& w, const PropertyTag& p) {
    if (p.kind == PropertyTag::abelian) {
        for (const auto& x : w.members)
            for (const auto& y : w.members)
                if (Ops::mul(x, y) != Ops::mul(y, x)) return false;
        return true;
    }
    for (const auto& x : w.members) {
        auto acc = Ops::identity();
        for (long long i = 0; i < p.q; ++i) acc = Ops::mul(acc, x);
        if (acc != Ops::identity()) return false;
    }
    return true;
}

// Superset-certified normalizer: all g in B_n whose conjugate of W is
// consistent with W at the certified radius.
template <class Ops>
std::vector<typename Ops::Elem> normalizer_window(const SubgroupWindow<Ops>& w, int n) {
    if (2 * n > w.radius) throw window_error("normalizer radius exceeds W.radius / 2");
    std::vector<typename Ops::Elem> out;
    for (const auto& g : Ops::ball(n)) {
        auto conj = conjugate_window(g, w);
        if (conj == truncate_window(w, conj.radius)) out.push_back(g);
    }
    return out;
}

// Canonical fingerprint (FNV-1a over the sorted member list) for CSV rows.
template <class Ops>
std::string window_fingerprint(const SubgroupWindow<Ops>& w) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    for (const auto& e : w.members) mix(Ops::format(e));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

// File format: header "group=<tag> radius=<n>", one member normal form per line.
template <class Ops>
void write_window(std::ostream& os, const SubgroupWindow<Ops>& w) {
    os << "group=" << Ops::tag << " radius=" << w.radius << '\n';
    for (const auto& e : w.members) os << Ops::format(e) << '\n';
}

template <class Ops>
SubgroupWindow<Ops> read_window(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw input_error("empty subgroup window file");
    std::istringstream hs(header);
    std::string gtok, rtok;
    if (!(hs >> gtok >> rtok) || gtok.rfind("group=", 0) != 0 || rtok.rfind("radius=", 0) != 0)
        throw input_error("bad subgroup window header: " + header);
    if (gtok.substr(6) != Ops::tag)
        throw input_error("group tag mismatch: " + gtok.substr(6));
    SubgroupWindow<Ops> w;
    w.radius = std::stoi(rtok.substr(7));
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto e = Ops::parse(line);
        if (Ops::length(e) > w.radius) throw input_error("member outside window radius: " + line);
        w.members.insert(std::move(e));
    }
    if (!w.contains(Ops::identity())) throw input_error("subgroup window missing identity");
    return w;
}

}  // namespace subdyn
