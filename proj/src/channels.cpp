#include "rsasd/channels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rsasd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}
} // namespace

std::mt19937_64 make_stream_rng(uint64_t seed, uint64_t stream) {
    // Counter-based derivation: mix (seed, stream) into one 64-bit state.
    uint64_t s = splitmix64(seed ^ splitmix64(stream + 1));
    return std::mt19937_64(s);
}

SoftObservation bec_transmit(const std::vector<int>& bits, double eps, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SoftObservation obs;
    obs.llr.resize(bits.size());
    for (size_t j = 0; j < bits.size(); ++j) {
        if (u(rng) < eps)
            obs.llr[j] = 0.0;
        else
            obs.llr[j] = bits[j] ? -kInf : kInf;
    }
    return obs;
}

SoftObservation bsc_transmit(const std::vector<int>& bits, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double mag = (p <= 0.0) ? kInf : (p >= 1.0 ? 0.0 : std::log((1.0 - p) / p));
    SoftObservation obs;
    obs.llr.resize(bits.size());
    for (size_t j = 0; j < bits.size(); ++j) {
        int b = bits[j] ^ (u(rng) < p ? 1 : 0);
        obs.llr[j] = b ? -mag : mag;
    }
    return obs;
}

SoftObservation qec_transmit(const std::vector<int>& bits, int u_bits, double eps,
                             std::mt19937_64& rng) {
    if (u_bits < 1 || bits.size() % size_t(u_bits) != 0)
        throw std::invalid_argument("tuple size must divide the bit length");
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SoftObservation obs;
    obs.llr.resize(bits.size());
    for (size_t g = 0; g < bits.size() / size_t(u_bits); ++g) {
        bool erase = u(rng) < eps;
        for (int b = 0; b < u_bits; ++b) {
            size_t j = g * size_t(u_bits) + size_t(b);
            obs.llr[j] = erase ? 0.0 : (bits[j] ? -kInf : kInf);
        }
    }
    return obs;
}

SoftObservation awgn_bpsk_transmit(const std::vector<int>& bits, double N0, std::mt19937_64& rng) {
    if (!(N0 > 0)) throw std::invalid_argument("N0 must be positive");
    std::normal_distribution<double> g(0.0, std::sqrt(N0 / 2.0));
    SoftObservation obs;
    obs.llr.resize(bits.size());
    for (size_t j = 0; j < bits.size(); ++j) {
        double s = bits[j] ? -1.0 : 1.0;
        double r = s + g(rng);
        obs.llr[j] = 4.0 * r / N0;
    }
    return obs;
}

ReliabilityMatrix reliability_matrix(const SoftObservation& obs, const CodeSpec& spec) {
    if (int(obs.llr.size()) != spec.n())
        throw std::invalid_argument("observation length must equal N*m");
    const int m = spec.m();
    const int q = int(spec.field.q());
    ReliabilityMatrix pi;
    pi.q = q;
    pi.N = spec.N;
    pi.p.assign(size_t(q) * spec.N, 0.0);
    for (int j = 0; j < spec.N; ++j) {
        // p0[b] = P(bit b of symbol j is 0 | y)
        std::vector<double> p0(m);
        for (int b = 0; b < m; ++b) {
            double L = obs.llr[size_t(j) * m + b];
            if (L == kInf)
                p0[b] = 1.0;
            else if (L == -kInf)
                p0[b] = 0.0;
            else
                p0[b] = 1.0 / (1.0 + std::exp(-L));
        }
        for (int v = 0; v < q; ++v) {
            double prod = 1.0;
            for (int b = 0; b < m; ++b)
                prod *= ((v >> b) & 1) ? (1.0 - p0[b]) : p0[b];
            pi.at(v, j) = prod;
        }
    }
    return pi;
}

PatternObservation worst_case_pattern(const CodeSpec& spec, int e, int f) {
    const int m = spec.m();
    if (e < 0 || f < 0) throw std::invalid_argument("e and f must be nonnegative");
    if (e > spec.N) throw std::invalid_argument("more errors than symbols");
    if (f > m * (spec.N - e))
        throw std::invalid_argument("erasures do not fit in the erasure-free symbols' complement");

    PatternObservation out;
    out.tx_bits.assign(size_t(spec.n()), 0); // all-zero codeword
    out.obs.llr.assign(size_t(spec.n()), 1.0);

    // e single-bit flips, one per symbol, in the first e symbols
    for (int j = 0; j < e; ++j)
        out.obs.llr[size_t(j) * m] = -1.0;

    // f erasures over the remaining N-e symbols, round-robin so the counts
    // per symbol differ by at most one
    const int rem = spec.N - e;
    for (int r = 0; r < f; ++r) {
        int sym = e + (r % rem);
        int bit = r / rem;
        out.obs.llr[size_t(sym) * m + bit] = 0.0;
    }
    return out;
}

TypeHistogram type_histogram(const SoftObservation& obs, const CodeSpec& spec,
                             const std::vector<int>& truth_bits, TypeKind kind) {
    const int m = spec.m();
    if (int(obs.llr.size()) != spec.n() || int(truth_bits.size()) != spec.n())
        throw std::invalid_argument("length mismatch");
    TypeHistogram hist(size_t(m) + 1, 0);
    for (int j = 0; j < spec.N; ++j) {
        int type = 0;
        for (int b = 0; b < m; ++b) {
            size_t idx = size_t(j) * m + b;
            if (kind == TypeKind::ErasedBits) {
                if (obs.erased(idx)) ++type;
            } else {
                if (!obs.erased(idx) && obs.hard_bit(idx) != truth_bits[idx]) ++type;
            }
        }
        ++hist[size_t(type)];
    }
    return hist;
}

} // namespace rsasd
