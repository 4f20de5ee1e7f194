#ifndef RSASD_REGIONS_HPP
#define RSASD_REGIONS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsasd {

// The tabulated regions are worst-case guarantees (errors in distinct
// erasure-free symbols, erasures spread evenly); patterns with overlapping
// errors and erasures may decode outside them.
struct DecodingRegion {
    std::string strategy;
    int64_t M = 0; // 0 = asymptotic
    int N = 0, K = 0, m = 0;
    std::vector<int64_t> e_max; // e_max[f], f = 0..f_ceiling; -1 = empty
};

struct InapplicableRate : std::runtime_error {
    explicit InapplicableRate(const std::string& what) : std::runtime_error(what) {}
};

// Hard-decision list radius N - 1 - floor(sqrt((K-1)N)) and BM radius.
int64_t gs_radius(int N, int K);
int64_t bm_radius(int N, int K);

// Largest f such that every f-bit-erasure pattern is certainly decodable
// under PMAS with infinite cost. K = 1 returns n = N*m (everything erasable).
int64_t bec_radius(int N, int K, int m);

// 2(N-K)+1; valid for R >= 1/2 + 3/(4N), else throws InapplicableRate.
int64_t bec_nondecodable_threshold(int N, int K);

// Largest number of 2^u-ary symbol erasures certainly decodable;
// requires R >= 2^-u + (1 + 2^-2u - 2^-u)/N.
int64_t qec_radius(int N, int K, int u);

// e < N - f/2 - sqrt((K-1)(N - f/2)), largest integer (possibly -1).
int64_t mixed_region_infinite(int N, int K, int f);

// Finite-M region for the proposed MAS (M even >= 2), exact integer arithmetic.
int64_t mixed_region_finite(int N, int K, int M, int f);

// M = 2 closed form e < (N-K+1)/2 - f/3.
int64_t m2_region(int N, int K, int f);

// True iff the (e, f) pattern is provably outside the proposed-MAS region:
// f >= 2(N - (K-1) - e).
bool nondecodable_outer(int N, int K, int e, int f);

// Boundary table e_max(f) for f = 0 .. largest f with a nonempty region.
DecodingRegion region_table_finite(int N, int K, int m, int M);
DecodingRegion region_table_infinite(int N, int K, int m);

} // namespace rsasd

#endif
