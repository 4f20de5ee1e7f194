#include "rsasd/sim.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

#include "rsasd/channels.hpp"
#include "rsasd/decoders.hpp"
#include "rsasd/mas.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsasd {

namespace {
std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}
} // namespace

double snr_db_to_n0(double snr_db, double rate) {
    return 1.0 / (rate * std::pow(10.0, snr_db / 10.0));
}

std::pair<double, double> wilson_interval(int64_t errors, int64_t frames) {
    if (frames <= 0) return {0.0, 1.0};
    const double z = 1.959963984540054; // 97.5% normal quantile
    const double n = double(frames), p = double(errors) / n;
    const double z2n = z * z / n;
    const double center = (p + z2n / 2) / (1 + z2n);
    const double half = z / (1 + z2n) * std::sqrt(p * (1 - p) / n + z2n / (4 * n));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

bool simulate_frame(const SimConfig& cfg, const CodeSpec& spec, double param,
                    uint64_t stream) {
    std::mt19937_64 rng = make_stream_rng(cfg.seed, stream);

    std::vector<uint32_t> msg(size_t(spec.K));
    std::uniform_int_distribution<uint32_t> sym(0, spec.field.q() - 1);
    for (auto& s : msg) s = sym(rng);
    Codeword cw = encode(msg, spec);
    std::vector<int> bits = binary_image(cw, spec);

    SoftObservation obs;
    switch (cfg.channel) {
    case ChannelKind::Bec: obs = bec_transmit(bits, param, rng); break;
    case ChannelKind::Bsc: obs = bsc_transmit(bits, param, rng); break;
    case ChannelKind::Qec: obs = qec_transmit(bits, cfg.qec_u, param, rng); break;
    case ChannelKind::Awgn:
        obs = awgn_bpsk_transmit(bits, snr_db_to_n0(param, spec.rate()), rng);
        break;
    }

    switch (cfg.decoder) {
    case DecoderKind::Bm: {
        HardDecision hd = hard_decision(obs, spec);
        auto r = bm_decode(hd.word, hd.erasures, spec);
        return !r || *r != cw;
    }
    case DecoderKind::Gmd: {
        DecodeResult r = gmd_decode(obs, spec);
        return r.failed() || *r.selected != cw;
    }
    case DecoderKind::Bgmd: {
        try {
            BgmdConfig bc;
            bc.M = cfg.M;
            bc.budget = cfg.budget;
            DecodeResult r = bgmd_decode(obs, spec, bc);
            return r.failed() || *r.selected != cw;
        } catch (const InterpolationBudgetError&) {
            return true;
        }
    }
    case DecoderKind::AsdPmas: {
        try {
            ReliabilityMatrix pi = reliability_matrix(obs, spec);
            MultiplicityMatrix mm = pmas(pi, double(cfg.M));
            DecodeResult r = asd_decode(mm, spec, obs, cfg.budget);
            return r.failed() || *r.selected != cw;
        } catch (const InterpolationBudgetError&) {
            return true;
        }
    }
    case DecoderKind::PmasPredicate: {
        TypeHistogram hist = type_histogram(obs, spec, bits, TypeKind::ErasedBits);
        return !certainly_decodable_asymptotic(bec_pmas_coeffs(hist), spec.K);
    }
    }
    throw std::logic_error("unknown decoder kind");
}

SimResult run_simulation(const SimConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.grid.empty()) throw std::invalid_argument("parameter grid is empty");
    CodeSpec spec = make_narrow_sense(cfg.N, cfg.K, cfg.m, cfg.prim_poly);

    SimResult res;
    res.config = cfg;
    for (size_t g = 0; g < cfg.grid.size(); ++g) {
        const double param = cfg.grid[g];
        int64_t frames = 0, errors = 0;
        while (frames < cfg.trials) {
            // block size is part of the early-stop semantics; it is identical in
            // serial and parallel mode so both produce the same estimates
            const int64_t block = std::min<int64_t>(cfg.block, cfg.trials - frames);
            int64_t block_err = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : block_err) schedule(dynamic, 16) if (!cfg.serial)
#endif
            for (int64_t t = 0; t < block; ++t) {
                uint64_t stream = (uint64_t(g) << 40) | uint64_t(frames + t);
                if (simulate_frame(cfg, spec, param, stream)) ++block_err;
            }
            frames += block;
            errors += block_err;
            if (cfg.stop_at > 0 && errors >= cfg.stop_at) break;
        }
        SimPoint pt;
        pt.param = param;
        pt.frames = frames;
        pt.frame_errors = errors;
        pt.fer = frames ? double(errors) / double(frames) : 0.0;
        std::tie(pt.ci_low, pt.ci_high) = wilson_interval(errors, frames);
        res.points.push_back(pt);
    }
    return res;
}

std::string sim_csv(const SimResult& res) {
    std::string out = "param,frames,frame_errors,fer,ci_low,ci_high\n";
    for (const SimPoint& p : res.points) {
        out += fmt_double(p.param) + "," + std::to_string(p.frames) + "," +
               std::to_string(p.frame_errors) + "," + fmt_double(p.fer) + "," +
               fmt_double(p.ci_low) + "," + fmt_double(p.ci_high) + "\n";
    }
    return out;
}

std::string region_csv(const DecodingRegion& reg) {
    std::string out = "f,e_max,strategy,M\n";
    for (size_t f = 0; f < reg.e_max.size(); ++f) {
        out += std::to_string(f) + "," + std::to_string(reg.e_max[f]) + "," + reg.strategy +
               "," + std::to_string(reg.M) + "\n";
    }
    return out;
}

std::string bounds_csv(const BoundCurve& curve) {
    std::string out = "param,fer_bound,kind,strategy,M\n";
    for (const BoundPoint& p : curve.points) {
        out += fmt_double(p.param) + "," + fmt_double(p.fer) + "," + curve.kind + "," +
               curve.strategy + "," + std::to_string(curve.M) + "\n";
    }
    return out;
}

} // namespace rsasd
