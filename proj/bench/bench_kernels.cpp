// Timing harness for the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cct/transfer.hpp"

using namespace cct;

namespace {

template <typename F>
double time_seconds(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel and serial paths are identical\n");
#endif

    const ModelParams dispersive{1.0, -600.0, 65.0, 1.0};

    {
        constexpr int kPoints = 2'000'000;
        volatile double sink = 0.0;
        const double serial = time_seconds([&] {
            sink = population_trajectory_serial(dispersive, 200.0, kPoints).u6.back();
        });
        const double parallel = time_seconds([&] {
            sink = population_trajectory(dispersive, 200.0, kPoints).u6.back();
        });
        (void)sink;
        std::printf("trajectory      %9d pts  serial %7.3fs  parallel %7.3fs  speedup %.2fx\n",
                    kPoints, serial, parallel, serial / parallel);
    }

    {
        std::vector<double> grid;
        for (double d = -700.0; d <= -500.0; d += 25.0) {
            grid.push_back(d);
        }
        double serial = 0.0;
        {
            // Same work as design_search, point by point.
            const double t0 = time_seconds([&] {
                for (double d : grid) {
                    ModelParams p{1.0, d, 65.0, 1.0};
                    (void)find_transfer_time(p, {150.0, 250.0}, 1e-4);
                }
            });
            serial = t0;
        }
        const double parallel = time_seconds([&] {
            (void)design_search(65.0, 1.0, grid, 1.0, {150.0, 250.0});
        });
        std::printf("design search   %9zu pts  serial %7.3fs  parallel %7.3fs  speedup %.2fx\n",
                    grid.size(), serial, parallel, serial / parallel);
    }

    return 0;
}
