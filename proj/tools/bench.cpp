// Benchmark: identical sweep through the serial and OpenMP-parallel run
// paths, reporting wall time and verifying the result sets match.
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "hcn/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Serial vs parallel sweep benchmark"};
    int seeds = 5;
    int d2d = 10;
    int cu = 5;
    std::vector<int> values{1, 3, 5};
    app.add_option("--seeds", seeds, "Repetitions per cell")->capture_default_str();
    app.add_option("--cu", cu, "Fixed cellular users")->capture_default_str();
    app.add_option("--d2d", d2d, "Fixed D2D pairs")->capture_default_str();
    app.add_option("--values", values, "Cellular-user axis values")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    hcn::ExperimentSpec spec;
    spec.axis = hcn::SweepAxis::kCellularUsers;
    spec.axis_values = values;
    spec.fixed_cellular = cu;
    spec.fixed_d2d = d2d;
    spec.seeds = seeds;
    spec.schemes = {hcn::SchemeId::kPa};

    const auto run = [&](hcn::RunMode mode) {
        const auto t0 = std::chrono::steady_clock::now();
        auto records = hcn::run_sweep(spec, mode);
        const auto t1 = std::chrono::steady_clock::now();
        return std::pair{std::chrono::duration<double>(t1 - t0).count(), std::move(records)};
    };

    const auto [t_serial, serial] = run(hcn::RunMode::kSerial);
    const auto [t_parallel, parallel] = run(hcn::RunMode::kParallel);

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i) {
        identical = serial[i].axis_value == parallel[i].axis_value &&
                    serial[i].scheme == parallel[i].scheme &&
                    serial[i].seed_index == parallel[i].seed_index &&
                    serial[i].sum_rate_bps == parallel[i].sum_rate_bps &&
                    serial[i].iterations == parallel[i].iterations &&
                    serial[i].feasible == parallel[i].feasible;
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "runs:            " << serial.size() << "\n";
    std::cout << "threads:         " << threads << "\n";
    std::cout << "serial time:     " << t_serial << " s\n";
    std::cout << "parallel time:   " << t_parallel << " s\n";
    std::cout << "speedup:         " << t_serial / t_parallel << "x\n";
    std::cout << "results match:   " << (identical ? "yes" : "NO") << "\n";
    return identical ? 0 : 1;
}
