#include "subdyn/subshifts.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace subdyn {

SubshiftSpec SubshiftSpec::full_shift(std::string alphabet) {
    SubshiftSpec s;
    s.kind = Kind::full_shift;
    s.alphabet = std::move(alphabet);
    if (s.alphabet.empty()) throw input_error("empty alphabet");
    return s;
}

SubshiftSpec SubshiftSpec::substitution(std::map<char, std::string> rules) {
    SubshiftSpec s;
    s.kind = Kind::substitution;
    s.alphabet.clear();
    for (const auto& [sym, _] : rules) s.alphabet.push_back(sym);
    s.rules = std::move(rules);
    validate_spec(s);
    return s;
}

SubshiftSpec SubshiftSpec::thue_morse() { return substitution({{'0', "01"}, {'1', "10"}}); }
SubshiftSpec SubshiftSpec::fibonacci() { return substitution({{'0', "01"}, {'1', "0"}}); }

SubshiftSpec SubshiftSpec::boundary_f2() {
    SubshiftSpec s;
    s.kind = Kind::boundary_f2;
    s.alphabet = "01";
    return s;
}

std::string format_spec(const SubshiftSpec& spec) {
    std::ostringstream os;
    switch (spec.kind) {
        case SubshiftSpec::Kind::full_shift: os << "kind=full-shift\n"; break;
        case SubshiftSpec::Kind::substitution: os << "kind=substitution\n"; break;
        case SubshiftSpec::Kind::boundary_f2: os << "kind=boundary-f2\n"; break;
    }
    os << "alphabet=" << spec.alphabet << '\n';
    for (const auto& [sym, img] : spec.rules) os << sym << "->" << img << '\n';
    return os.str();
}

SubshiftSpec parse_spec(std::string_view text) {
    SubshiftSpec spec;
    bool saw_kind = false;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("kind=", 0) == 0) {
            std::string k = line.substr(5);
            if (k == "full-shift")
                spec.kind = SubshiftSpec::Kind::full_shift;
            else if (k == "substitution")
                spec.kind = SubshiftSpec::Kind::substitution;
            else if (k == "boundary-f2")
                spec.kind = SubshiftSpec::Kind::boundary_f2;
            else
                throw input_error("unknown subshift kind: " + k);
            saw_kind = true;
        } else if (line.rfind("alphabet=", 0) == 0) {
            spec.alphabet = line.substr(9);
        } else if (auto arrow = line.find("->"); arrow != std::string::npos) {
            if (arrow != 1) throw input_error("bad substitution rule: " + line);
            spec.rules[line[0]] = line.substr(arrow + 2);
        } else {
            throw input_error("bad subshift spec line: " + line);
        }
    }
    if (!saw_kind) throw input_error("subshift spec missing kind");
    if (spec.alphabet.empty()) throw input_error("subshift spec missing alphabet");
    validate_spec(spec);
    return spec;
}

SubshiftSpec load_spec(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open subshift spec: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_spec(ss.str());
}

void validate_spec(const SubshiftSpec& spec) {
    std::set<char> alpha(spec.alphabet.begin(), spec.alphabet.end());
    if (alpha.size() != spec.alphabet.size()) throw input_error("duplicate alphabet symbol");
    if (spec.kind != SubshiftSpec::Kind::substitution) {
        if (!spec.rules.empty()) throw input_error("rules given for a non-substitution spec");
        return;
    }
    if (spec.rules.size() != alpha.size()) throw input_error("substitution must have one rule per symbol");
    for (const auto& [sym, img] : spec.rules) {
        if (!alpha.count(sym)) throw input_error(std::string("rule for unknown symbol: ") + sym);
        if (img.empty()) throw input_error("erasing substitution rule");
        for (char c : img)
            if (!alpha.count(c)) throw input_error(std::string("rule image uses unknown symbol: ") + c);
    }
    // primitivity: some power of the incidence relation is all-positive
    const std::size_t k = spec.alphabet.size();
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    auto idx = [&](char c) { return spec.alphabet.find(c); };
    for (std::size_t i = 0; i < k; ++i)
        for (char c : spec.rules.at(spec.alphabet[i])) reach[i][idx(c)] = true;
    auto all_positive = [&](const std::vector<std::vector<bool>>& m) {
        for (const auto& row : m)
            for (bool b : row)
                if (!b) return false;
        return true;
    };
    auto step = [&](const std::vector<std::vector<bool>>& m) {
        std::vector<std::vector<bool>> out(k, std::vector<bool>(k, false));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (m[i][j])
                    for (std::size_t l = 0; l < k; ++l)
                        if (reach[j][l]) out[i][l] = true;
        return out;
    };
    auto power = reach;
    for (std::size_t iter = 0; iter < 4 * k * k + 4; ++iter) {
        if (all_positive(power)) return;
        power = step(power);
    }
    throw input_error("substitution is not primitive");
}

std::string expand_substitution(const SubshiftSpec& spec, std::size_t min_len) {
    if (spec.kind != SubshiftSpec::Kind::substitution)
        throw input_error("expansion requires a substitution spec");
    std::string cur(1, spec.alphabet[0]);
    while (cur.size() < min_len) {
        std::string next;
        next.reserve(2 * cur.size());
        for (char c : cur) next += spec.rules.at(c);
        if (next == cur) throw input_error("substitution does not expand");
        cur = std::move(next);
    }
    return cur;
}

std::size_t certificate_length(int w) {
    return std::max<std::size_t>(10000, 100 * static_cast<std::size_t>(2 * w + 1));
}

namespace {

std::vector<std::string> factors_of(const std::string& text, std::size_t len) {
    std::set<std::string> out;
    if (text.size() >= len)
        for (std::size_t i = 0; i + len <= text.size(); ++i) out.insert(text.substr(i, len));
    return {out.begin(), out.end()};
}

}  // namespace

std::vector<std::string> generate_patterns(const SubshiftSpec& spec, int w) {
    if (w < 0) throw input_error("negative window size");
    const std::size_t len = static_cast<std::size_t>(2 * w + 1);
    switch (spec.kind) {
        case SubshiftSpec::Kind::full_shift: {
            std::vector<std::string> out{""};
            for (std::size_t i = 0; i < len; ++i) {
                if (out.size() * spec.alphabet.size() > (1u << 20))
                    throw resource_error("full-shift pattern enumeration too large");
                std::vector<std::string> next;
                next.reserve(out.size() * spec.alphabet.size());
                for (const auto& p : out)
                    for (char c : spec.alphabet) next.push_back(p + c);
                out = std::move(next);
            }
            return out;
        }
        case SubshiftSpec::Kind::substitution:
            return factors_of(expand_substitution(spec, certificate_length(w)), len);
        case SubshiftSpec::Kind::boundary_f2: {
            std::set<std::string> out;
            for (const auto& z : f2_ball(w + 1))
                if (static_cast<int>(z.length()) == w + 1)
                    out.insert(f2_window_pattern(psi_boundary(z, w)));
            return {out.begin(), out.end()};
        }
    }
    throw input_error("unknown subshift kind");
}

long long complexity(const SubshiftSpec& spec, int n) {
    if (n < 0) throw input_error("negative factor length");
    if (n == 0) return 1;
    switch (spec.kind) {
        case SubshiftSpec::Kind::full_shift: {
            long long out = 1;
            for (int i = 0; i < n; ++i) {
                out *= static_cast<long long>(spec.alphabet.size());
                if (out > (1ll << 40)) throw resource_error("complexity overflow");
            }
            return out;
        }
        case SubshiftSpec::Kind::substitution: {
            auto text = expand_substitution(
                spec, std::max(certificate_length(0), 100 * static_cast<std::size_t>(n)));
            return static_cast<long long>(factors_of(text, static_cast<std::size_t>(n)).size());
        }
        case SubshiftSpec::Kind::boundary_f2:
            throw input_error("complexity is defined for Z subshifts only");
    }
    throw input_error("unknown subshift kind");
}

namespace {

// max start-position gap between consecutive occurrences, over all factors
long long max_gap(const std::string& text, std::size_t w) {
    std::map<std::string, std::size_t> last;
    std::map<std::string, long long> gap;
    for (std::size_t i = 0; i + w <= text.size(); ++i) {
        std::string f = text.substr(i, w);
        auto it = last.find(f);
        if (it != last.end()) {
            long long g = static_cast<long long>(i - it->second);
            auto& cur = gap[f];
            cur = std::max(cur, g);
            it->second = i;
        } else {
            last[f] = i;
            gap[f] = 0;
        }
    }
    long long out = 0;
    for (const auto& [_, g] : gap) out = std::max(out, g);
    return out;
}

}  // namespace

long long recurrence_gap(const SubshiftSpec& spec, int w) {
    if (spec.kind != SubshiftSpec::Kind::substitution)
        throw input_error("recurrence certificates require a substitution (minimal) spec");
    if (w < 1) throw input_error("window size must be >= 1");
    const std::size_t len = certificate_length(w);
    const auto text1 = expand_substitution(spec, len);
    const auto text2 = expand_substitution(spec, 2 * text1.size());
    long long r1 = max_gap(text1, static_cast<std::size_t>(w));
    long long r2 = max_gap(text2, static_cast<std::size_t>(w));
    if (r1 != r2) throw resource_error("recurrence gap did not stabilize under doubling");
    return r1;
}

F2PointWindow psi_boundary(const FreeWord& z, int w) {
    if (w < 0) throw input_error("negative window radius");
    if (static_cast<int>(z.length()) < w + 1)
        throw window_error("boundary prefix too short for requested window");
    F2PointWindow out;
    out.radius = w;
    for (const auto& g : f2_ball(w)) {
        FreeWord moved = fw_mul(g, z);
        out.vals[g] = static_cast<std::int8_t>(!moved.is_identity() && moved.letters[0] == 'a');
    }
    return out;
}

}  // namespace subdyn
