#ifndef RSASD_MAS_HPP
#define RSASD_MAS_HPP

#include <cstdint>
#include <vector>

#include "rsasd/asd.hpp"
#include "rsasd/channels.hpp"

namespace rsasd {

enum class MasStrategy { Pmas, Proposed, BscOptimal, FlipOrErase };

struct MasParams {
    MasStrategy strategy = MasStrategy::Pmas;
    double M = 0;                 // multiplicity parameter (even integer for Proposed)
    double t = 0;                 // BscOptimal coefficient (= x0)
    double t1 = 0, t2 = 0;        // FlipOrErase coefficients
};

// Entrywise floor of pi * M.
MultiplicityMatrix pmas(const ReliabilityMatrix& pi, double M);

// Asymptotic PMAS coefficients for a given reliability profile and truth:
// s = sum_j pi_{truth_j, j},  c = (1/2) sum_{i,j} pi_{i,j}^2.
AsymptoticScoreCost pmas_asymptotic(const ReliabilityMatrix& pi, const Codeword& truth);

// M on the hard decision of erasure-free symbols, M/2 on both candidates of
// 1-bit-erased symbols, zero columns for symbols with >= 2 erased bits.
// M must be even and >= 2.
MultiplicityMatrix proposed_mas(const SoftObservation& obs, const CodeSpec& spec, int M);

struct BscOptimalResult {
    double t = 0;          // optimal multiplicity coefficient x0
    int64_t e_max = 0;     // bit-level decoding radius
    bool all_correctable = false; // low-rate branch: every pattern decodes
};

// Asymptotically optimal coefficient and radius for the 1-bit-flipped BSC
// (optimal for the BSC proper when e_max <= N and t <= 1/2).
BscOptimalResult bsc_optimal(int N, int K, int m);

struct FlipOrEraseResult {
    double t1 = 0, t2 = 0;
    int64_t e_max = 0;            // max errors for the given f (N - f when all_correctable)
    bool all_correctable = false; // every e with e + f <= N decodes
};

// Optimal coefficients over the 1-bit flipped-or-erased channel with f
// bit erasures; outer bound for the mixed channel when e + f <= N.
FlipOrEraseResult flip_or_erase_optimal(int N, int K, int m, int f);

// (s, c) coefficients for the asymptotic sufficient condition.
// BEC PMAS: s = eta = sum a_i 2^{-i}, c = eta/2.
AsymptoticScoreCost bec_pmas_coeffs(const TypeHistogram& hist);
// BEC, arbitrary per-type coefficients m_i: s = sum a_i m_i, c = (1/2) sum a_i 2^i m_i^2.
AsymptoticScoreCost bec_coeffs(const TypeHistogram& hist, const std::vector<double>& mi);
// Proposed MAS over an erasure-type histogram (error-free word).
AsymptoticScoreCost proposed_coeffs(const TypeHistogram& hist);
// 1-bit-flipped BSC with coefficient t: s = (N-e) + e t, c = N(1 + m t^2)/2.
AsymptoticScoreCost bsc_coeffs(int N, int64_t e, double t, int m);
// 1-bit flipped-or-erased channel: s = (N-e-f) + e t1 + f t2,
// c = ((N-f)(1 + m t1^2) + 2 f t2^2)/2.
AsymptoticScoreCost flip_or_erase_coeffs(int N, int64_t e, int64_t f, double t1, double t2, int m);

// Dispatcher over a type histogram (erasure types for Pmas/Proposed,
// bit-error types for BscOptimal).
AsymptoticScoreCost strategy_score_cost(const TypeHistogram& hist, const MasParams& params, int m);

} // namespace rsasd

#endif
