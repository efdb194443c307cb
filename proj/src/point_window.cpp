#include "subdyn/point_window.hpp"

#include <sstream>

namespace subdyn {

namespace {

bool in_alphabet(Alphabet a, std::int8_t v) {
    if (v == kUnknown) return true;
    if (a == Alphabet::binary) return v == 0 || v == 1;
    return v == -1 || v == 0 || v == 1;
}

}  // namespace

PointWindow PointWindow::unknown_window(Alphabet a, int radius) {
    if (radius < 0) throw input_error("negative window radius");
    return PointWindow{a, radius, std::vector<std::int8_t>(2 * radius + 1, kUnknown)};
}

PointWindow PointWindow::constant(Alphabet a, int radius, std::int8_t v) {
    PointWindow w = unknown_window(a, radius);
    for (auto& x : w.vals) x = v;
    if (!in_alphabet(a, v)) throw input_error("symbol outside alphabet");
    return w;
}

void PointWindow::set(int n, std::int8_t v) {
    if (n < -radius || n > radius) throw input_error("position outside window");
    if (!in_alphabet(alphabet, v)) throw input_error("symbol outside alphabet");
    vals[static_cast<std::size_t>(n + radius)] = v;
}

bool PointWindow::fully_known() const {
    for (auto v : vals)
        if (v == kUnknown) return false;
    return true;
}

PointWindow wr_act(const WreathElement& g, const PointWindow& omega) {
    if (omega.alphabet != Alphabet::signs) throw input_error("wr_act needs a {-1,0,1} window");
    PointWindow out = PointWindow::unknown_window(Alphabet::signs, omega.radius);
    bool any = false;
    for (int n = -omega.radius; n <= omega.radius; ++n) {
        long long src = n + g.shift;
        if (src < -omega.radius || src > omega.radius) continue;
        std::int8_t v = omega.at(static_cast<int>(src));
        if (v == kUnknown) continue;
        out.set(n, static_cast<std::int8_t>(g.lamp_at(n) * v));
        any = true;
    }
    if (!any) throw window_error("action leaves no determined position");
    return out;
}

std::vector<int> determined_region(const WreathElement& g, const PointWindow& omega) {
    std::vector<int> region;
    for (int n = -omega.radius; n <= omega.radius; ++n) {
        long long src = n + g.shift;
        if (src < -omega.radius || src > omega.radius) continue;
        if (omega.known(n) && omega.known(static_cast<int>(src))) region.push_back(n);
    }
    return region;
}

PointWindow tilde_point(const PointWindow& theta, const std::map<int, std::int8_t>& signs) {
    if (theta.alphabet != Alphabet::binary) throw input_error("tilde_point needs a {0,1} base window");
    PointWindow omega = PointWindow::unknown_window(Alphabet::signs, theta.radius);
    std::size_t used = 0;
    for (int n = -theta.radius; n <= theta.radius; ++n) {
        std::int8_t t = theta.at(n);
        if (t == kUnknown) {
            if (signs.count(n)) throw input_error("sign given at unknown base position");
            continue;
        }
        if (t == 1) {
            if (signs.count(n)) throw input_error("sign given at a base-1 position");
            omega.set(n, 0);
        } else {
            auto it = signs.find(n);
            if (it == signs.end()) throw input_error("missing sign at a base-0 position");
            if (it->second != 1 && it->second != -1) throw input_error("sign must be +1 or -1");
            omega.set(n, it->second);
            ++used;
        }
    }
    if (used != signs.size()) throw input_error("sign map domain mismatch");
    return omega;
}

std::string f2_window_pattern(const F2PointWindow& w) {
    std::string out;
    for (const auto& g : f2_ball(w.radius)) {
        auto it = w.vals.find(g);
        if (it == w.vals.end() || it->second == kUnknown)
            out.push_back('?');
        else
            out.push_back(static_cast<char>('0' + it->second));
    }
    return out;
}

std::string format_point_window(const PointWindow& w) {
    std::ostringstream os;
    os << '(';
    for (int n = -w.radius; n <= w.radius; ++n) {
        if (n > -w.radius) os << ',';
        std::int8_t v = w.at(n);
        if (v == kUnknown)
            os << '?';
        else
            os << static_cast<int>(v);
    }
    os << ')';
    return os.str();
}

PointWindow parse_point_window(Alphabet a, const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw input_error("bad point window: " + s);
    std::vector<std::int8_t> vals;
    std::string body = s.substr(1, s.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok == "?")
            vals.push_back(kUnknown);
        else if (tok == "1")
            vals.push_back(1);
        else if (tok == "0")
            vals.push_back(0);
        else if (tok == "-1")
            vals.push_back(-1);
        else
            throw input_error("bad point window symbol: " + tok);
    }
    if (vals.empty() || vals.size() % 2 == 0) throw input_error("point window needs odd length");
    PointWindow w{a, static_cast<int>(vals.size() / 2), std::move(vals)};
    for (auto v : w.vals)
        if (!in_alphabet(a, v)) throw input_error("symbol outside alphabet: " + s);
    return w;
}

}  // namespace subdyn
