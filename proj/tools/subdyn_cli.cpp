// subdyn: command-line front end for the subgroup-dynamics toolkit.
//
// Exit codes: 0 = all invariants verified, 1 = mathematical counterexample,
// 2 = input or resource error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subdyn/measures.hpp"
#include "subdyn/realization.hpp"
#include "subdyn/stability.hpp"
#include "subdyn/subshifts.hpp"

namespace {

using namespace subdyn;
using nlohmann::json;

struct Output {
    std::vector<std::string> columns;
    json rows = json::array();

    void add(std::initializer_list<std::pair<const char*, json>> fields) {
        json row = json::object();
        for (const auto& [k, v] : fields) row[k] = v;
        rows.push_back(std::move(row));
    }

    void write(const std::string& path, const std::string& format) const {
        std::ostringstream body;
        if (format == "json") {
            body << rows.dump(2) << '\n';
        } else {
            for (std::size_t i = 0; i < columns.size(); ++i)
                body << (i ? "," : "") << columns[i];
            body << '\n';
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < columns.size(); ++i) {
                    const json& v = row.at(columns[i]);
                    std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
                    if (cell.find(',') != std::string::npos) cell = '"' + cell + '"';
                    body << (i ? "," : "") << cell;
                }
                body << '\n';
            }
        }
        if (path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(path);
            if (!out) throw input_error("cannot open output file: " + path);
            out << body.str();
        }
    }
};

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

int cmd_stability(const std::string& spec_path, int w, int n, const std::string& out,
                  const std::string& format) {
    const SubshiftSpec spec = load_spec(spec_path);
    validate_spec(spec);
    auto result = stability_system(spec, w, n);
    Output o;
    o.columns = {"pattern", "fingerprint"};
    for (const auto& e : result.entries)
        o.add({{"pattern", e.base_pattern}, {"fingerprint", window_fingerprint(e.stabilizer)}});
    const bool ok = result.bijection && result.decorations_consistent;
    o.add({{"pattern", "bijection"}, {"fingerprint", ok ? "true" : "false"}});
    o.write(out, format);
    return ok ? 0 : 1;
}

int cmd_stationarity(int depth, const std::string& out, const std::string& format) {
    auto rows = convolve_check(StepLaw::uniform(), depth);
    Output o;
    o.columns = {"cylinder", "convolved", "eta"};
    bool ok = true;
    for (const auto& r : rows) {
        o.add({{"cylinder", r.cylinder},
               {"convolved", format_rational(r.convolved)},
               {"eta", format_rational(r.eta)}});
        if (r.convolved != r.eta) ok = false;
    }
    o.write(out, format);
    return ok ? 0 : 1;
}

int cmd_pullback(int n, int radius, int count, std::uint64_t seed, const std::string& out,
                 const std::string& format) {
    if (radius < n + 2) throw input_error("window radius must be at least ball radius + 2");
    const auto eta = eta_hom();
    const auto ball = f2_ball(n);
    std::mt19937_64 rng(seed);
    Output o;
    o.columns = {"window", "checked", "mismatches"};
    bool ok = true;
    for (int i = 0; i < count; ++i) {
        auto omega = seeded_aperiodic_window(rng, radius, n);
        auto pulled = pullback_stabilizer(omega, n);
        long long mismatches = 0;
        for (const auto& v : ball) {
            auto g = hom_eval(eta, v);
            auto acted = wr_act(g, omega);
            bool fixes = true;
            for (int p = -radius; p <= radius; ++p)
                if (acted.known(p) && omega.known(p) && acted.at(p) != omega.at(p)) fixes = false;
            if (pulled.contains(v) != fixes) ++mismatches;
        }
        if (mismatches) ok = false;
        o.add({{"window", format_point_window(omega)},
               {"checked", static_cast<long long>(ball.size())},
               {"mismatches", mismatches}});
    }
    o.write(out, format);
    return ok ? 0 : 1;
}

int cmd_realize(const std::string& table_path, int n, const std::string& out,
                const std::string& format) {
    auto table = load_coset_table(table_path);
    auto res = realize_finite(table, n);
    Output o;
    o.columns = {"conjugate", "coset", "stabilizer"};
    for (const auto& pt : res.orbit) {
        // the stability system is indexed by conjugate class
        o.add({{"conjugate", pt.conjugate},
               {"coset", pt.coset},
               {"stabilizer", window_fingerprint(res.conjugates[static_cast<std::size_t>(
                                  pt.conjugate)])}});
    }
    o.write(out, format);
    return res.sandwich_holds && res.stability_matches_conjugates ? 0 : 1;
}

int cmd_recurrence(const std::string& spec_path, int maxw, const std::string& out,
                   const std::string& format) {
    const SubshiftSpec spec = load_spec(spec_path);
    validate_spec(spec);
    Output o;
    o.columns = {"w", "gap"};
    bool ok = true;
    long long prev = 0;
    for (int w = 1; w <= maxw; ++w) {
        long long gap = recurrence_gap(spec, w);
        if (gap < prev) ok = false;  // R(w) must be monotone
        prev = gap;
        o.add({{"w", w}, {"gap", gap}});
    }
    o.write(out, format);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subgroup dynamics toolkit"};
    app.require_subcommand(1);

    std::string spec_path, table_path, out_path;
    std::string format = "csv";
    int window = 2, ball = 7, depth = 6, maxw = 16, count = 20, radius = 8, pull_ball = 6;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* stab = app.add_subcommand("stability", "stability system of a base subshift");
    stab->add_option("--spec", spec_path, "subshift spec file")->required();
    stab->add_option("--window", window, "base pattern radius w");
    stab->add_option("--ball", ball, "lamplighter ball radius n");
    add_common(stab);

    auto* stat = app.add_subcommand("stationarity", "exact stationarity of the boundary measure");
    stat->add_option("--depth", depth, "maximum cylinder depth");
    add_common(stat);

    auto* pull = app.add_subcommand("pullback", "pullback stabilizer vs direct action");
    pull->add_option("--ball", pull_ball, "free group ball radius");
    pull->add_option("--window", radius, "point window radius");
    pull->add_option("--count", count, "number of seeded windows");
    pull->add_option("--seed", seed, "RNG seed");
    add_common(pull);

    auto* real = app.add_subcommand("realize", "finite realization from a coset table");
    real->add_option("--table", table_path, "coset table file")->required();
    real->add_option("--ball", ball, "free group ball radius");
    add_common(real);

    auto* recur = app.add_subcommand("recurrence", "recurrence gaps of a substitution subshift");
    recur->add_option("--spec", spec_path, "subshift spec file")->required();
    recur->add_option("--window", maxw, "maximum factor length");
    add_common(recur);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (stab->parsed()) return cmd_stability(spec_path, window, ball, out_path, format);
        if (stat->parsed()) return cmd_stationarity(depth, out_path, format);
        if (pull->parsed()) return cmd_pullback(pull_ball, radius, count, seed, out_path, format);
        if (real->parsed()) return cmd_realize(table_path, ball, out_path, format);
        if (recur->parsed()) return cmd_recurrence(spec_path, maxw, out_path, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
