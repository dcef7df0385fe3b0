// Benchmarks the verification suites: serial reference runner vs the
// OpenMP trial-parallel runner, checking that both produce identical reports.
//
//   bench_verify [trials] [seed]

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "lamcalc/verify.hpp"

int main(int argc, char** argv) {
    const int trials = argc > 1 ? std::atoi(argv[1]) : 200;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;

    lamcalc::TruncationConfig cfg;
    std::printf("verify benchmark: %d trials/suite, seed %llu, %d OpenMP threads\n",
                trials, static_cast<unsigned long long>(seed), omp_get_max_threads());
    std::printf("%-10s %12s %12s %9s\n", "suite", "serial[s]", "parallel[s]", "speedup");

    bool all_match = true;
    bool all_pass = true;
    double total_serial = 0, total_parallel = 0;
    for (const auto& name : lamcalc::suite_names()) {
        const std::vector<std::string> one = {name};

        double t0 = omp_get_wtime();
        const auto serial =
            lamcalc::run_verification(one, trials, seed, cfg, lamcalc::RunMode::serial);
        double t1 = omp_get_wtime();
        const auto parallel =
            lamcalc::run_verification(one, trials, seed, cfg, lamcalc::RunMode::parallel);
        double t2 = omp_get_wtime();

        const double ts = t1 - t0, tp = t2 - t1;
        total_serial += ts;
        total_parallel += tp;
        std::printf("%-10s %12.4f %12.4f %8.2fx\n", name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0);
        if (serial.str() != parallel.str()) {
            std::printf("  MISMATCH: serial and parallel reports differ!\n");
            all_match = false;
        }
        if (!serial.all_passed()) all_pass = false;
    }
    std::printf("%-10s %12.4f %12.4f %8.2fx\n", "total", total_serial, total_parallel,
                total_parallel > 0 ? total_serial / total_parallel : 0.0);
    std::printf("reports identical: %s, all suites pass: %s\n",
                all_match ? "yes" : "NO", all_pass ? "yes" : "NO");
    return all_match && all_pass ? 0 : 1;
}
