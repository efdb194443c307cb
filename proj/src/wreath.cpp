#include "subdyn/wreath.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

namespace subdyn {

int WreathElement::lamp_at(long long n) const {
    return std::binary_search(lamps.begin(), lamps.end(), n) ? -1 : 1;
}

WreathElement wr_identity() { return WreathElement{}; }
WreathElement wr_e1() { return WreathElement{{1}, 0}; }
WreathElement wr_sigma() { return WreathElement{{}, 1}; }

namespace {

std::vector<long long> symmetric_difference(const std::vector<long long>& a,
                                            const std::vector<long long>& b) {
    std::vector<long long> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

}  // namespace

WreathElement wr_mul(const WreathElement& x, const WreathElement& y) {
    std::vector<long long> shifted;
    shifted.reserve(y.lamps.size());
    for (long long p : y.lamps) shifted.push_back(p - x.shift);
    return WreathElement{symmetric_difference(x.lamps, shifted), x.shift + y.shift};
}

WreathElement wr_inv(const WreathElement& x) {
    std::vector<long long> lamps;
    lamps.reserve(x.lamps.size());
    for (long long p : x.lamps) lamps.push_back(p + x.shift);
    std::sort(lamps.begin(), lamps.end());
    return WreathElement{std::move(lamps), -x.shift};
}

long long wr_word_length(const WreathElement& x) {
    const long long m = x.shift;
    if (x.lamps.empty()) return std::llabs(m);
    // cursor positions to visit
    const long long vlo = 1 - x.lamps.back();
    const long long vhi = 1 - x.lamps.front();
    const long long left_first = std::llabs(vlo) + (vhi - vlo) + std::llabs(vhi - m);
    const long long right_first = std::llabs(vhi) + (vhi - vlo) + std::llabs(m - vlo);
    return static_cast<long long>(x.lamps.size()) + std::min(left_first, right_first);
}

std::vector<WreathElement> lamplighter_ball(int n) {
    if (n < 0) throw input_error("negative ball radius");
    if (n > 14) throw resource_error("lamplighter ball radius beyond resource bound");
    const WreathElement gens[3] = {wr_e1(), wr_sigma(), wr_inv(wr_sigma())};
    std::map<WreathElement, int> depth;
    std::vector<WreathElement> ball{wr_identity()};
    depth[wr_identity()] = 0;
    std::size_t frontier_begin = 0;
    for (int len = 1; len <= n; ++len) {
        std::size_t frontier_end = ball.size();
        std::vector<WreathElement> next;
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const auto& g : gens) {
                WreathElement e = wr_mul(ball[i], g);
                if (depth.emplace(e, len).second) next.push_back(std::move(e));
            }
        }
        std::sort(next.begin(), next.end());
        for (auto& e : next) ball.push_back(std::move(e));
        frontier_begin = frontier_end;
    }
    return ball;
}

std::string format_wreath(const WreathElement& x) {
    std::ostringstream os;
    os << "L{";
    for (std::size_t i = 0; i < x.lamps.size(); ++i) {
        if (i) os << ',';
        os << x.lamps[i];
    }
    os << "}S{" << x.shift << "}";
    return os.str();
}

namespace {

long long parse_int(std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw input_error("bad integer in wreath element: " + std::string(s));
    return v;
}

}  // namespace

WreathElement parse_wreath(std::string_view s) {
    if (s.substr(0, 2) != "L{") throw input_error("bad wreath element: " + std::string(s));
    auto close = s.find('}');
    if (close == std::string_view::npos) throw input_error("bad wreath element: " + std::string(s));
    std::string_view lamp_part = s.substr(2, close - 2);
    std::string_view rest = s.substr(close + 1);
    if (rest.substr(0, 2) != "S{" || rest.back() != '}')
        throw input_error("bad wreath element: " + std::string(s));
    std::string_view shift_part = rest.substr(2, rest.size() - 3);

    WreathElement e;
    while (!lamp_part.empty()) {
        auto comma = lamp_part.find(',');
        std::string_view tok = lamp_part.substr(0, comma);
        e.lamps.push_back(parse_int(tok));
        lamp_part = comma == std::string_view::npos ? std::string_view{} : lamp_part.substr(comma + 1);
    }
    if (!std::is_sorted(e.lamps.begin(), e.lamps.end()) ||
        std::adjacent_find(e.lamps.begin(), e.lamps.end()) != e.lamps.end())
        throw input_error("wreath lamp support not sorted/unique: " + std::string(s));
    e.shift = parse_int(shift_part);
    return e;
}

GroupHom eta_hom() { return GroupHom{wr_e1(), wr_sigma()}; }

WreathElement hom_eval(const GroupHom& h, const FreeWord& w) {
    WreathElement acc = wr_identity();
    for (char c : w.letters) {
        switch (c) {
            case 'a': acc = wr_mul(acc, h.image_a); break;
            case 'A': acc = wr_mul(acc, wr_inv(h.image_a)); break;
            case 'b': acc = wr_mul(acc, h.image_b); break;
            case 'B': acc = wr_mul(acc, wr_inv(h.image_b)); break;
            default: throw input_error(std::string("invalid F2 letter: ") + c);
        }
    }
    return acc;
}

}  // namespace subdyn
