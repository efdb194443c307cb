#include "subdyn/realization.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace subdyn {

int CosetTable::act_letter(char c, int coset) const {
    switch (c) {
        case 'a': return perm_a[static_cast<std::size_t>(coset)];
        case 'b': return perm_b[static_cast<std::size_t>(coset)];
        case 'A':
            for (int x = 0; x < degree; ++x)
                if (perm_a[static_cast<std::size_t>(x)] == coset) return x;
            break;
        case 'B':
            for (int x = 0; x < degree; ++x)
                if (perm_b[static_cast<std::size_t>(x)] == coset) return x;
            break;
    }
    throw input_error(std::string("invalid letter for coset action: ") + c);
}

int CosetTable::act_word(const FreeWord& w, int coset) const {
    int c = coset;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) c = act_letter(*it, c);
    return c;
}

CosetTable make_coset_table(int degree, std::vector<int> perm_a, std::vector<int> perm_b) {
    if (degree < 1) throw input_error("coset table degree must be >= 1");
    auto check_perm = [degree](const std::vector<int>& p, const char* name) {
        if (static_cast<int>(p.size()) != degree)
            throw input_error(std::string("permutation size mismatch for ") + name);
        std::vector<bool> seen(static_cast<std::size_t>(degree), false);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
                throw input_error(std::string("not a permutation: ") + name);
            seen[static_cast<std::size_t>(v)] = true;
        }
    };
    check_perm(perm_a, "a");
    check_perm(perm_b, "b");
    CosetTable t{degree, std::move(perm_a), std::move(perm_b)};
    // transitivity
    std::vector<bool> reached(static_cast<std::size_t>(degree), false);
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (char s : {'a', 'A', 'b', 'B'}) {
            int d = t.act_letter(s, c);
            if (!reached[static_cast<std::size_t>(d)]) {
                reached[static_cast<std::size_t>(d)] = true;
                stack.push_back(d);
            }
        }
    }
    if (!std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }))
        throw input_error("coset action is not transitive");
    return t;
}

namespace {

std::vector<int> parse_perm_line(const std::string& body, int degree) {
    std::string trimmed;
    for (char c : body)
        if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed.push_back(c);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    std::vector<int> perm(static_cast<std::size_t>(degree));
    if (!trimmed.empty() && trimmed[0] == '(') {
        // cycle notation
        std::iota(perm.begin(), perm.end(), 0);
        std::size_t i = 0;
        while (i < trimmed.size()) {
            if (trimmed[i] != '(') throw input_error("bad cycle notation: " + body);
            std::size_t close = trimmed.find(')', i);
            if (close == std::string::npos) throw input_error("unclosed cycle: " + body);
            std::istringstream cs(trimmed.substr(i + 1, close - i - 1));
            std::vector<int> cyc;
            int v;
            while (cs >> v) cyc.push_back(v);
            for (std::size_t j = 0; j < cyc.size(); ++j) {
                int from = cyc[j];
                int to = cyc[(j + 1) % cyc.size()];
                if (from < 0 || from >= degree || to < 0 || to >= degree)
                    throw input_error("cycle entry out of range: " + body);
                perm[static_cast<std::size_t>(from)] = to;
            }
            i = close + 1;
            while (i < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[i]))) ++i;
        }
    } else {
        std::istringstream is(trimmed);
        for (auto& v : perm)
            if (!(is >> v)) throw input_error("bad image notation: " + body);
        int extra;
        if (is >> extra) throw input_error("too many images: " + body);
    }
    return perm;
}

}  // namespace

CosetTable parse_coset_table(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int degree = -1;
    std::vector<int> pa, pb;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("degree=", 0) == 0) {
            degree = std::stoi(line.substr(7));
        } else if (line.rfind("a:", 0) == 0) {
            if (degree < 1) throw input_error("coset table: degree line must come first");
            pa = parse_perm_line(line.substr(2), degree);
        } else if (line.rfind("b:", 0) == 0) {
            if (degree < 1) throw input_error("coset table: degree line must come first");
            pb = parse_perm_line(line.substr(2), degree);
        } else {
            throw input_error("bad coset table line: " + line);
        }
    }
    if (degree < 1 || pa.empty() || pb.empty())
        throw input_error("coset table missing degree or generator lines");
    return make_coset_table(degree, std::move(pa), std::move(pb));
}

CosetTable load_coset_table(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open coset table: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_coset_table(ss.str());
}

CosetTable parity_table() { return make_coset_table(2, {1, 0}, {1, 0}); }

// a = (0 1), b = (1 2): the image is S3 and Stab(0) is an order-2 point
// stabilizer, so H has three distinct conjugates
CosetTable index3_nonnormal_table() { return make_coset_table(3, {1, 0, 2}, {0, 2, 1}); }

bool membership(const CosetTable& t, const FreeWord& w) { return t.act_word(w, 0) == 0; }

std::vector<FreeWord> coset_representatives(const CosetTable& t) {
    std::vector<FreeWord> reps(static_cast<std::size_t>(t.degree));
    std::vector<bool> have(static_cast<std::size_t>(t.degree), false);
    have[0] = true;
    std::vector<int> queue{0};
    std::size_t head = 0;
    while (head < queue.size()) {
        int c = queue[head++];
        for (char s : {'a', 'A', 'b', 'B'}) {
            int d = t.act_letter(s, c);
            if (!have[static_cast<std::size_t>(d)]) {
                have[static_cast<std::size_t>(d)] = true;
                reps[static_cast<std::size_t>(d)] =
                    fw_mul(FreeWord{std::string(1, s)}, reps[static_cast<std::size_t>(c)]);
                queue.push_back(d);
            }
        }
    }
    return reps;
}

std::vector<FreeWord> schreier_generators(const CosetTable& t) {
    const auto reps = coset_representatives(t);
    std::vector<FreeWord> gens;
    for (int c = 0; c < t.degree; ++c) {
        for (char s : {'a', 'b'}) {
            int d = t.act_letter(s, c);
            FreeWord g = fw_mul(fw_inv(reps[static_cast<std::size_t>(d)]),
                                fw_mul(FreeWord{std::string(1, s)}, reps[static_cast<std::size_t>(c)]));
            if (!g.is_identity()) gens.push_back(std::move(g));
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

bool in_normalizer(const CosetTable& t, const FreeWord& g) {
    const FreeWord gi = fw_inv(g);
    for (const auto& h : schreier_generators(t))
        if (!membership(t, fw_mul(g, fw_mul(h, gi)))) return false;
    // also g^{-1} H g <= H, i.e. conjugation is onto (finite index: both
    // inclusions hold together, but check symmetrically)
    for (const auto& h : schreier_generators(t))
        if (!membership(t, fw_mul(gi, fw_mul(h, g)))) return false;
    return true;
}

namespace {

// class label per coset: cosets with equal point stabilizers
std::vector<int> conjugate_classes(const CosetTable& t) {
    const auto reps = coset_representatives(t);
    std::vector<int> label(static_cast<std::size_t>(t.degree), -1);
    int next = 0;
    for (int c = 0; c < t.degree; ++c) {
        if (label[static_cast<std::size_t>(c)] != -1) continue;
        label[static_cast<std::size_t>(c)] = next;
        for (int d = c + 1; d < t.degree; ++d) {
            if (label[static_cast<std::size_t>(d)] != -1) continue;
            // Stab(c) = Stab(d) iff u_d^{-1} u_c normalizes H = Stab(0)
            FreeWord rel = fw_mul(fw_inv(reps[static_cast<std::size_t>(d)]),
                                  reps[static_cast<std::size_t>(c)]);
            if (in_normalizer(t, rel)) label[static_cast<std::size_t>(d)] = next;
        }
        ++next;
    }
    return label;
}

SubgroupWindow<F2Ops> point_stabilizer_window(const CosetTable& t, int coset, int n) {
    SubgroupWindow<F2Ops> w{n, {}};
    for (const auto& g : f2_ball(n))
        if (t.act_word(g, coset) == coset) w.members.insert(g);
    return w;
}

}  // namespace

std::vector<SubgroupWindow<F2Ops>> conjugate_orbit(const CosetTable& t, int n) {
    const auto label = conjugate_classes(t);
    const int classes = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<SubgroupWindow<F2Ops>> out;
    for (int k = 0; k < classes; ++k) {
        int c = static_cast<int>(std::find(label.begin(), label.end(), k) - label.begin());
        out.push_back(point_stabilizer_window(t, c, n));
    }
    return out;
}

RealizationResult realize_finite(const CosetTable& t, int n) {
    RealizationResult res;
    const auto label = conjugate_classes(t);
    const auto reps = coset_representatives(t);
    res.conjugates = conjugate_orbit(t, n);

    // BFS orbit of x0 = (H, H); the coset coordinate determines the point
    std::vector<bool> seen(static_cast<std::size_t>(t.degree), false);
    std::vector<int> queue{0};
    seen[0] = true;
    std::size_t head = 0;
    while (head < queue.size()) {
        int c = queue[head++];
        res.orbit.push_back(FiniteSystemPoint{label[static_cast<std::size_t>(c)], c});
        for (char s : {'a', 'A', 'b', 'B'}) {
            int d = t.act_letter(s, c);
            if (!seen[static_cast<std::size_t>(d)]) {
                seen[static_cast<std::size_t>(d)] = true;
                queue.push_back(d);
            }
        }
    }

    res.base_stabilizer = SubgroupWindow<F2Ops>{n, {}};
    for (const auto& g : f2_ball(n))
        if (membership(t, g)) res.base_stabilizer.members.insert(g);

    std::vector<std::set<FreeWord>> distinct;
    res.sandwich_holds = true;
    for (const auto& pt : res.orbit) {
        auto w = point_stabilizer_window(t, pt.coset, n);
        // sandwich H_c <= G_x <= N(H_c): membership and normalizer checks
        // routed through the conjugated coset table word u_c^{-1} g u_c
        const FreeWord& u = reps[static_cast<std::size_t>(pt.coset)];
        const FreeWord ui = fw_inv(u);
        for (const auto& g : f2_ball(n)) {
            FreeWord conj = fw_mul(ui, fw_mul(g, u));
            bool in_h = membership(t, conj);
            bool fixes = w.contains(g);
            bool normalizes = in_normalizer(t, conj);
            if (in_h && !fixes) res.sandwich_holds = false;
            if (fixes && !normalizes) res.sandwich_holds = false;
        }
        if (std::find_if(distinct.begin(), distinct.end(),
                         [&](const std::set<FreeWord>& s) { return s == w.members; }) ==
            distinct.end()) {
            distinct.push_back(w.members);
            res.stability_system.push_back(std::move(w));
        }
    }

    // stability system must equal the conjugate orbit as a set of windows
    auto key = [](const SubgroupWindow<F2Ops>& w) {
        return std::vector<FreeWord>(w.members.begin(), w.members.end());
    };
    std::vector<std::vector<FreeWord>> lhs, rhs;
    for (const auto& w : res.stability_system) lhs.push_back(key(w));
    for (const auto& w : res.conjugates) rhs.push_back(key(w));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    res.stability_matches_conjugates = lhs == rhs;
    return res;
}

std::vector<std::string> fixed_point_window(const SubgroupWindow<F2Ops>& w, int pattern_radius) {
    long long longest = 0;
    for (const auto& m : w.members) longest = std::max(longest, static_cast<long long>(m.length()));
    if (w.radius < pattern_radius + longest)
        throw window_error("subgroup window too small for pattern radius");
    const auto ball = f2_ball(pattern_radius);
    std::map<FreeWord, std::size_t> index;
    for (std::size_t i = 0; i < ball.size(); ++i) index[ball[i]] = i;

    std::vector<std::size_t> parent(ball.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < ball.size(); ++i) {
        for (const auto& m : w.members) {
            FreeWord y = fw_mul(m, ball[i]);
            auto it = index.find(y);
            if (it == index.end()) continue;
            std::size_t a = find(i), b = find(it->second);
            if (a != b) parent[a] = b;
        }
    }
    std::map<std::size_t, int> class_id;
    for (std::size_t i = 0; i < ball.size(); ++i) {
        std::size_t r = find(i);
        if (!class_id.count(r)) class_id[r] = static_cast<int>(class_id.size());
    }
    const int k = static_cast<int>(class_id.size());
    if (k > 20) throw resource_error("too many orbit classes for pattern enumeration");

    std::vector<std::string> out;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::string pattern(ball.size(), '0');
        for (std::size_t i = 0; i < ball.size(); ++i)
            if ((mask >> class_id[find(i)]) & 1) pattern[i] = '1';
        out.push_back(std::move(pattern));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace subdyn
