// Benchmark: serial reference path vs OpenMP frame-parallel path of the
// Monte Carlo harness, verifying that both produce identical estimates.

#include <chrono>
#include <cstdio>
#include <string>

#include "rsasd/sim.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rsasd;

namespace {
double run_timed(const SimConfig& cfg, SimResult& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = run_simulation(cfg);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}
} // namespace

int main(int argc, char** argv) {
    SimConfig cfg;
    cfg.N = 31;
    cfg.K = 25;
    cfg.m = 5;
    cfg.channel = ChannelKind::Awgn;
    cfg.grid = {5.0};
    cfg.decoder = DecoderKind::Bgmd;
    cfg.M = 2;
    cfg.trials = argc > 1 ? std::stoll(argv[1]) : 2000;
    cfg.stop_at = 0;
    cfg.seed = 42;

#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::printf("bgmd RS(%d,%d) awgn %.1f dB, %lld frames, %d threads available\n", cfg.N,
                cfg.K, cfg.grid[0], (long long)cfg.trials, threads);

    SimConfig serial_cfg = cfg;
    serial_cfg.serial = true;
    SimResult serial_res, parallel_res;
    double ts = run_timed(serial_cfg, serial_res);
    double tp = run_timed(cfg, parallel_res);

    std::printf("serial:   %8.3f s  (%.1f frames/s)  errors=%lld\n", ts,
                double(serial_res.points[0].frames) / ts,
                (long long)serial_res.points[0].frame_errors);
    std::printf("parallel: %8.3f s  (%.1f frames/s)  errors=%lld\n", tp,
                double(parallel_res.points[0].frames) / tp,
                (long long)parallel_res.points[0].frame_errors);
    std::printf("speedup:  %.2fx\n", ts / tp);

    bool same = serial_res.points[0].frames == parallel_res.points[0].frames &&
                serial_res.points[0].frame_errors == parallel_res.points[0].frame_errors;
    std::printf("estimates identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
