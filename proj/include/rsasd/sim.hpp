#ifndef RSASD_SIM_HPP
#define RSASD_SIM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsasd/asd.hpp"
#include "rsasd/bounds.hpp"
#include "rsasd/regions.hpp"
#include "rsasd/rscode.hpp"

namespace rsasd {

enum class ChannelKind { Bec, Bsc, Qec, Awgn };
enum class DecoderKind {
    Bm,            // hard-decision bounded-distance
    Gmd,           // symbol-level GMD over bounded-distance trials
    Bgmd,          // bit-level GMD over ASD with the half-half assignment
    AsdPmas,       // one-shot ASD with proportional multiplicities
    PmasPredicate, // certainly-decodable predicate only (erasure channels)
};

struct SimConfig {
    int N = 15, K = 11, m = 4;
    std::optional<uint32_t> prim_poly;

    ChannelKind channel = ChannelKind::Awgn;
    std::vector<double> grid; // epsilon / crossover / snr_db per channel kind
    int qec_u = 1;            // symbol width for the 2^u-ary erasure channel

    DecoderKind decoder = DecoderKind::Bm;
    int M = 2;                            // multiplicity parameter
    int64_t budget = kDefaultInterpolationBudget;

    int64_t trials = 100000;
    int64_t stop_at = 100; // early stop after this many frame errors (0 = never)
    uint64_t seed = 42;

    bool serial = false; // force the serial reference path
    int block = 2048;    // frames per parallel block (does not affect results)
};

struct SimPoint {
    double param = 0;
    int64_t frames = 0;
    int64_t frame_errors = 0;
    double fer = 0, ci_low = 0, ci_high = 0;
};

struct SimResult {
    SimConfig config;
    std::vector<SimPoint> points;
};

// Eb/N0 in dB to one-sided noise density with unit-energy BPSK: N0 = 1/(R 10^(dB/10)).
double snr_db_to_n0(double snr_db, double rate);

// 95% Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(int64_t errors, int64_t frames);

// Monte Carlo FER over the configured grid. Deterministic for a given seed:
// frame t of grid point g always uses the RNG stream keyed by (seed, g, t),
// and results do not depend on thread count or serial/parallel mode.
SimResult run_simulation(const SimConfig& cfg);

// Decode one frame; exposed for tests and the benchmark. Returns frame-error flag.
bool simulate_frame(const SimConfig& cfg, const CodeSpec& spec, double param,
                    uint64_t stream);

std::string sim_csv(const SimResult& res);
std::string region_csv(const DecodingRegion& reg);
std::string bounds_csv(const BoundCurve& curve);

} // namespace rsasd

#endif
