#ifndef RSASD_CHANNELS_HPP
#define RSASD_CHANNELS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rsasd/rscode.hpp"

namespace rsasd {

/// Per-bit soft observation of a transmitted binary image.
/// Sign convention: llr[j] = log P(c_j=0|y) / P(c_j=1|y), so llr > 0 favors 0.
/// llr == 0 encodes an erased bit; +/-inf encodes a perfectly known bit.
struct SoftObservation {
    std::vector<double> llr; // length n = N*m

    int hard_bit(size_t j) const { return llr[j] > 0 ? 0 : 1; }
    bool erased(size_t j) const { return llr[j] == 0.0; }
};

/// q x N column-stochastic symbol posterior matrix.
struct ReliabilityMatrix {
    int q = 0;
    int N = 0;
    std::vector<double> p; // column-major: p[j*q + i] = pi_{i,j}

    double& at(int i, int j) { return p[size_t(j) * q + i]; }
    double at(int i, int j) const { return p[size_t(j) * q + i]; }
};

/// Counts a_i of symbols of type i, i = 0..m; sum a_i = N.
using TypeHistogram = std::vector<int64_t>;

// Per-frame RNG stream: independent, reproducible given (seed, stream).
std::mt19937_64 make_stream_rng(uint64_t seed, uint64_t stream);

SoftObservation bec_transmit(const std::vector<int>& bits, double eps, std::mt19937_64& rng);
SoftObservation bsc_transmit(const std::vector<int>& bits, double p, std::mt19937_64& rng);
// u-bit tuples erased together; u must divide m (callers pass bits of whole symbols).
SoftObservation qec_transmit(const std::vector<int>& bits, int u, double eps, std::mt19937_64& rng);
// BPSK over AWGN: 0 -> +1, r = s + n with n ~ N(0, N0/2), LLR = 4 r / N0.
SoftObservation awgn_bpsk_transmit(const std::vector<int>& bits, double N0, std::mt19937_64& rng);

ReliabilityMatrix reliability_matrix(const SoftObservation& obs, const CodeSpec& spec);

struct PatternObservation {
    SoftObservation obs;
    std::vector<int> tx_bits; // ground truth (all-zero codeword image)
};

// Worst-case (e, f) placement: e single-bit flips in e distinct symbols,
// f bit erasures spread as evenly as possible over the remaining N-e symbols.
// Throws if the pattern is not placeable.
PatternObservation worst_case_pattern(const CodeSpec& spec, int e, int f);

enum class TypeKind { ErasedBits, BitErrors };

// ErasedBits: type = number of erased bits in the symbol.
// BitErrors: type = Hamming distance of the hard decision to the truth
// (erased bits do not count).
TypeHistogram type_histogram(const SoftObservation& obs, const CodeSpec& spec,
                             const std::vector<int>& truth_bits, TypeKind kind);

} // namespace rsasd

#endif
