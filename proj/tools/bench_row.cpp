// Times the OpenMP Burnside kernel against the serial reference and checks
// they produce identical rows.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbits/orbit_count.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"benchmark: serial vs OpenMP row computation"};
    unsigned n = 5;
    bool force = false;
    std::vector<int> thread_counts;
    app.add_option("--n", n, "group degree (default 5)");
    app.add_flag("--force", force, "allow n=8");
    app.add_option("--threads", thread_counts, "thread counts to try (default 1,2,max)");
    CLI11_PARSE(app, argc, argv);

    if (thread_counts.empty()) {
        thread_counts = {1, 2, omp_get_max_threads()};
    }

    orbits::RowCache reference;
    double serial_ms = time_ms([&] { reference = orbits::compute_row_serial(n, force); });
    std::printf("impl,threads,ms\n");
    std::printf("serial,1,%.1f\n", serial_ms);

    for (int t : thread_counts) {
        if (t < 1) continue;
        omp_set_num_threads(t);
        orbits::RowCache parallel;
        double ms = time_ms([&] { parallel = orbits::compute_row(n, force); });
        if (parallel.row != reference.row) {
            std::fprintf(stderr, "FATAL: parallel row differs from serial reference at %d threads\n",
                         t);
            return 1;
        }
        std::printf("openmp,%d,%.1f\n", t, ms);
    }
    return 0;
}
