#include "subdyn/measures.hpp"

#include <algorithm>

#include "subdyn/free_group.hpp"

namespace subdyn {

bool is_reduced_prefix(const std::string& prefix) {
    for (char c : prefix)
        if (!is_f2_letter(c)) return false;
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
        if (prefix[i + 1] == inverse_letter(prefix[i])) return false;
    return true;
}

Rational eta_cylinder(const std::string& prefix) {
    if (prefix.empty()) throw input_error("eta cylinder needs depth >= 1");
    if (!is_reduced_prefix(prefix)) throw input_error("cylinder prefix not reduced: " + prefix);
    Rational out(1, 4);
    for (std::size_t i = 1; i < prefix.size(); ++i) out /= 3;
    return out;
}

std::vector<std::string> shift_cylinder_decomposition(char s, const std::string& prefix) {
    if (!is_f2_letter(s)) throw input_error(std::string("invalid step letter: ") + s);
    if (prefix.empty()) throw input_error("cylinder prefix must be nonempty");
    if (!is_reduced_prefix(prefix)) throw input_error("cylinder prefix not reduced: " + prefix);
    if (s != prefix[0]) {
        // s^{-1} prepends without cancellation
        return {inverse_letter(s) + prefix};
    }
    if (prefix.size() >= 2) {
        // first letter cancels, the rest survives
        return {prefix.substr(1)};
    }
    // s^{-1} C(s) is the co-cylinder {first letter != s^{-1}}
    std::vector<std::string> out;
    for (char c : {'A', 'B', 'a', 'b'})
        if (c != inverse_letter(s)) out.emplace_back(1, c);
    return out;
}

StepLaw StepLaw::uniform() {
    StepLaw m;
    for (char c : {'a', 'A', 'b', 'B'}) m.atoms[c] = Rational(1, 4);
    return m;
}

Rational convolved_eta(const StepLaw& m, const std::string& prefix) {
    Rational total(0);
    Rational mass(0);
    for (const auto& [s, p] : m.atoms) {
        if (p < Rational(0)) throw input_error("negative step-law atom");
        mass += p;
        if (prefix.empty()) {
            total += p;  // whole space
            continue;
        }
        Rational part(0);
        for (const auto& piece : shift_cylinder_decomposition(s, prefix)) part += eta_cylinder(piece);
        total += p * part;
    }
    if (mass != Rational(1)) throw input_error("step law does not sum to 1");
    return total;
}

namespace {

std::vector<std::string> reduced_prefixes_up_to(int depth) {
    std::vector<std::string> out{""};
    std::vector<std::string> frontier{""};
    for (int d = 1; d <= depth; ++d) {
        std::vector<std::string> next;
        for (const auto& p : frontier)
            for (char c : {'A', 'B', 'a', 'b'})
                if (p.empty() || c != inverse_letter(p.back())) next.push_back(p + c);
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<StationarityRow> convolve_check(const StepLaw& m, int depth) {
    if (depth < 0) throw input_error("negative depth");
    if (depth > 9) throw resource_error("stationarity depth beyond resource bound");
    const auto prefixes = reduced_prefixes_up_to(depth);
    std::vector<StationarityRow> rows(prefixes.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(prefixes.size()); ++i) {
        const auto& p = prefixes[static_cast<std::size_t>(i)];
        rows[static_cast<std::size_t>(i)] =
            StationarityRow{p, convolved_eta(m, p), p.empty() ? Rational(1) : eta_cylinder(p)};
    }
    return rows;
}

namespace ref {

std::vector<StationarityRow> convolve_check(const StepLaw& m, int depth) {
    if (depth < 0) throw input_error("negative depth");
    std::vector<StationarityRow> rows;
    for (const auto& p : reduced_prefixes_up_to(depth))
        rows.push_back(StationarityRow{p, convolved_eta(m, p), p.empty() ? Rational(1) : eta_cylinder(p)});
    return rows;
}

}  // namespace ref

Rational haar_fiber(const PointWindow& theta, const Cylinder& cylinder) {
    if (theta.alphabet != Alphabet::binary) throw input_error("haar_fiber needs a {0,1} base window");
    int constraints = 0;
    for (const auto& [n, v] : cylinder) {
        if (n < -theta.radius || n > theta.radius)
            throw window_error("cylinder support escapes the base window");
        std::int8_t t = theta.at(n);
        if (t == kUnknown) throw window_error("cylinder touches an unknown base position");
        if (v != 1 && v != -1) throw input_error("haar_fiber cylinders pin +-1 values only");
        if (t == 1) return Rational(0);  // fiber forces symbol 0 there
        ++constraints;
    }
    return pow2_inverse(constraints);
}

Cylinder act_inverse_cylinder(const WreathElement& g, const Cylinder& cylinder) {
    Cylinder out;
    for (const auto& [n, v] : cylinder) {
        long long pos = n + g.shift;
        std::int8_t moved = v == 0 ? std::int8_t{0} : static_cast<std::int8_t>(g.lamp_at(n) * v);
        out[static_cast<int>(pos)] = moved;
    }
    return out;
}

PointWindow base_act(const WreathElement& g, const PointWindow& theta) {
    if (theta.alphabet != Alphabet::binary) throw input_error("base_act needs a {0,1} window");
    PointWindow out = PointWindow::unknown_window(Alphabet::binary, theta.radius);
    for (int n = -theta.radius; n <= theta.radius; ++n) {
        long long src = n + g.shift;
        if (src < -theta.radius || src > theta.radius) continue;
        std::int8_t v = theta.at(static_cast<int>(src));
        if (v != kUnknown) out.set(n, v);
    }
    return out;
}

std::vector<Cylinder> enumerate_cylinders(int depth, const std::vector<std::int8_t>& symbols) {
    if (depth < 0) throw input_error("negative depth");
    const int span = 2 * depth + 1;
    const std::size_t choices = symbols.size() + 1;  // unpinned + each symbol
    std::size_t total = 1;
    for (int i = 0; i < span; ++i) {
        total *= choices;
        if (total > (1u << 22)) throw resource_error("cylinder enumeration too large");
    }
    std::vector<Cylinder> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        Cylinder c;
        std::size_t rest = code;
        for (int n = -depth; n <= depth; ++n) {
            std::size_t digit = rest % choices;
            rest /= choices;
            if (digit > 0) c[n] = symbols[digit - 1];
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool rim_equivariance_check(const WreathElement& g, const PointWindow& theta, int depth) {
    if (theta.radius < depth + static_cast<int>(std::llabs(g.shift)))
        throw window_error("base window too small for rim check");
    const PointWindow moved = base_act(g, theta);
    const auto cylinders = enumerate_cylinders(depth, {std::int8_t{-1}, std::int8_t{1}});
    bool ok = true;
#pragma omp parallel for schedule(dynamic, 256)
    for (long long i = 0; i < static_cast<long long>(cylinders.size()); ++i) {
        if (!ok) continue;
        const auto& c = cylinders[static_cast<std::size_t>(i)];
        // g_* lambda_theta (C) = lambda_theta({omega : g omega in C})
        Rational lhs = haar_fiber(theta, act_inverse_cylinder(g, c));
        Rational rhs = haar_fiber(moved, c);
        if (lhs != rhs) ok = false;
    }
    return ok;
}

Rational lift_measure(const BernoulliBase& base, const Cylinder& cylinder) {
    if (base.p0 + base.p1 != Rational(1) || base.p0 < Rational(0) || base.p1 < Rational(0))
        throw input_error("base measure is not a probability vector");
    Rational out(1);
    for (const auto& [n, v] : cylinder) {
        (void)n;
        if (v == 0)
            out *= base.p1;
        else if (v == 1 || v == -1)
            out *= base.p0 / 2;
        else
            throw input_error("lifted cylinders pin {-1,0,1} values only");
    }
    return out;
}

bool lift_invariance_check(const BernoulliBase& base, const WreathElement& g, int depth) {
    for (const auto& c : enumerate_cylinders(depth, {std::int8_t{-1}, std::int8_t{0}, std::int8_t{1}})) {
        if (lift_measure(base, act_inverse_cylinder(g, c)) != lift_measure(base, c)) return false;
    }
    return true;
}

}  // namespace subdyn
