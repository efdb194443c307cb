#include "subdyn/free_group.hpp"

#include <algorithm>

namespace subdyn {

bool is_f2_letter(char c) { return c == 'a' || c == 'A' || c == 'b' || c == 'B'; }

char inverse_letter(char c) {
    switch (c) {
        case 'a': return 'A';
        case 'A': return 'a';
        case 'b': return 'B';
        case 'B': return 'b';
    }
    throw input_error(std::string("invalid F2 letter: ") + c);
}

FreeWord reduce(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (!is_f2_letter(c)) throw input_error(std::string("invalid F2 letter: ") + c);
        if (!out.empty() && out.back() == inverse_letter(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return FreeWord{std::move(out)};
}

FreeWord fw_mul(const FreeWord& u, const FreeWord& v) {
    std::string out = u.letters;
    for (char c : v.letters) {
        if (!out.empty() && out.back() == inverse_letter(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return FreeWord{std::move(out)};
}

FreeWord fw_inv(const FreeWord& u) {
    std::string out(u.letters.rbegin(), u.letters.rend());
    for (char& c : out) c = inverse_letter(c);
    return FreeWord{std::move(out)};
}

std::vector<FreeWord> f2_ball(int n) {
    if (n < 0) throw input_error("negative ball radius");
    if (n > 12) throw resource_error("F2 ball radius beyond resource bound");
    static constexpr char kLetters[4] = {'A', 'B', 'a', 'b'};  // lex order
    std::vector<FreeWord> ball;
    ball.push_back(FreeWord{});
    std::size_t sphere_begin = 0;
    for (int len = 1; len <= n; ++len) {
        std::size_t sphere_end = ball.size();
        for (std::size_t i = sphere_begin; i < sphere_end; ++i) {
            for (char c : kLetters) {
                const std::string& w = ball[i].letters;
                if (!w.empty() && w.back() == inverse_letter(c)) continue;
                FreeWord ext{w + c};
                ball.push_back(std::move(ext));
            }
        }
        std::sort(ball.begin() + static_cast<long>(sphere_end), ball.end(),
                  [](const FreeWord& x, const FreeWord& y) { return x.letters < y.letters; });
        sphere_begin = sphere_end;
    }
    return ball;
}

long long f2_ball_size(int n) {
    if (n < 0) throw input_error("negative ball radius");
    if (n == 0) return 1;
    long long p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return 1 + 2 * (p - 1);
}

std::string format_free_word(const FreeWord& w) {
    return w.is_identity() ? std::string("e") : w.letters;
}

FreeWord parse_free_word(std::string_view s) {
    if (s == "e" || s.empty()) return FreeWord{};
    FreeWord r = reduce(s);
    if (r.letters != s) throw input_error("free word not reduced: " + std::string(s));
    return r;
}

}  // namespace subdyn
