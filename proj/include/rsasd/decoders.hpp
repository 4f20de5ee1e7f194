#ifndef RSASD_DECODERS_HPP
#define RSASD_DECODERS_HPP

#include <optional>
#include <vector>

#include "rsasd/asd.hpp"
#include "rsasd/channels.hpp"
#include "rsasd/rscode.hpp"

namespace rsasd {

/// Bit-wise hard decision with erased symbols called out explicitly.
struct HardDecision {
    std::vector<uint32_t> word;  // hard symbol per position (arbitrary where erased)
    std::vector<int> erasures;   // positions containing at least one erased bit
};

HardDecision hard_decision(const SoftObservation& obs, const CodeSpec& spec);

// Errors-and-erasures bounded-distance decoding (Berlekamp-Massey locator,
// Chien search, Forney values). Narrow-sense codes only. Succeeds iff
// 2 * errors + erasures <= N - K for the decoded pattern.
std::optional<Codeword> bm_decode(const std::vector<uint32_t>& word,
                                  const std::vector<int>& erasures, const CodeSpec& spec);

// Generalized minimum distance decoding: bounded-distance trials erasing the
// s least reliable symbols (s = 0, 2, 4, ... up to N - K), most likely
// candidate selected by the bit-level metric.
DecodeResult gmd_decode(const SoftObservation& obs, const CodeSpec& spec);

struct BgmdConfig {
    int M = 2;             // proposed-MAS multiplicity (even, >= 2)
    int max_rounds = -1;   // cap on erased-bit count per round; -1 = n - k
    int64_t budget = kDefaultInterpolationBudget;
};

// Bit-level GMD: round i erases the i least reliable bits (ties broken by
// index), applies the half-half multiplicity assignment and algebraic
// soft-decision decoding, and keeps iterating while the all-erasure point
// (e, f) = (0, i) stays inside the finite-M guarantee region. The most
// likely accumulated candidate wins.
DecodeResult bgmd_decode(const SoftObservation& obs, const CodeSpec& spec,
                         const BgmdConfig& cfg = {});

} // namespace rsasd

#endif
