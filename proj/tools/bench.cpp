// Compares the parallel kernels against their serial reference
// implementations on identical inputs.

#include <chrono>
#include <cstdio>
#include <random>

#include "subdyn/measures.hpp"
#include "subdyn/stability.hpp"

using namespace subdyn;

namespace {

template <class F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

PointWindow seeded_window(std::mt19937_64& rng, int radius) {
    PointWindow w = PointWindow::unknown_window(Alphabet::signs, radius);
    for (int n = -radius; n <= radius; ++n)
        w.set(n, static_cast<std::int8_t>(static_cast<int>(rng() % 3) - 1));
    return w;
}

}  // namespace

int main() {
    std::mt19937_64 rng(1);
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial/ms", "openmp/ms", "speedup");

    {
        auto omega = seeded_window(rng, 16);
        SubgroupWindow<LampOps> a, b;
        double ts = time_ms([&] { a = ref::stabilizer_window(omega, 12); });
        double tp = time_ms([&] { b = stabilizer_window(omega, 12); });
        if (a != b) {
            std::fprintf(stderr, "stabilizer sweep mismatch\n");
            return 1;
        }
        std::printf("%-28s %10.1f %10.1f %7.2fx\n", "stabilizer sweep B12", ts, tp, ts / tp);
    }

    {
        std::vector<StationarityRow> a, b;
        double ts = time_ms([&] { a = ref::convolve_check(StepLaw::uniform(), 9); });
        double tp = time_ms([&] { b = convolve_check(StepLaw::uniform(), 9); });
        if (a.size() != b.size()) {
            std::fprintf(stderr, "stationarity sweep mismatch\n");
            return 1;
        }
        std::printf("%-28s %10.1f %10.1f %7.2fx\n", "stationarity depth 9", ts, tp, ts / tp);
    }

    {
        auto fs = SubshiftSpec::full_shift();
        StabilitySystemResult a, b;
        double ts = time_ms([&] { a = ref::stability_system(fs, 2, 7); });
        double tp = time_ms([&] { b = stability_system(fs, 2, 7); });
        if (a.bijection != b.bijection || a.entries.size() != b.entries.size()) {
            std::fprintf(stderr, "stability system mismatch\n");
            return 1;
        }
        std::printf("%-28s %10.1f %10.1f %7.2fx\n", "stability system (2,7)", ts, tp, ts / tp);
    }

    return 0;
}
