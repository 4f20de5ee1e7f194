#include "rsasd/regions.hpp"

#include <cmath>
#include <stdexcept>

namespace rsasd {

namespace {
int64_t isqrt64(int64_t v) {
    if (v < 0) throw std::domain_error("isqrt of negative");
    int64_t r = int64_t(std::sqrt(double(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}
} // namespace

int64_t gs_radius(int N, int K) { return N - 1 - isqrt64(int64_t(K - 1) * N); }

int64_t bm_radius(int N, int K) { return (N - K) / 2; }

int64_t bec_radius(int N, int K, int m) {
    if (K < 1) throw std::invalid_argument("K must be >= 1");
    if (K == 1) return int64_t(N) * m; // always on the list under PMAS
    for (int i = 1; i <= m; ++i) {
        // band: 2^-i N + 1 - 2^-(i+1) <= K < 2^-(i-1) N + 1 - 2^-i, integerized
        const int64_t p = int64_t(1) << i;
        bool lower = 2 * p * K >= 2 * int64_t(N) + 2 * p - 1;
        bool upper = p * K < 2 * int64_t(N) + p - 1;
        if (i == 1) upper = true; // top band is open above
        if (lower && upper) return int64_t(i + 1) * N - p * (K - 1) - 1;
    }
    throw InapplicableRate("rate below every erasure-radius band");
}

int64_t bec_nondecodable_threshold(int N, int K) {
    if (4 * int64_t(K) < 2 * int64_t(N) + 3)
        throw InapplicableRate("requires R >= 1/2 + 3/(4N)");
    return 2 * int64_t(N - K) + 1;
}

int64_t qec_radius(int N, int K, int u) {
    const int64_t p = int64_t(1) << u;
    if (K * p * p < int64_t(N) * p + p * p - p + 1)
        throw InapplicableRate("requires R >= 2^-u + (1 + 2^-2u - 2^-u)/N");
    const int64_t num = p * (N - K + 1);
    const int64_t den = p - 1;
    return (num - 1) / den; // largest f with f (1 - 2^-u) < N - K + 1
}

int64_t mixed_region_infinite(int N, int K, int f) {
    if (f < 0) throw std::invalid_argument("f must be >= 0");
    // e < A/2 - sqrt((K-1) A / 2) with A = 2N - f; compare by squaring
    const int64_t A = 2 * int64_t(N) - f;
    if (A <= 0) return -1;
    const int64_t r = isqrt64(2 * int64_t(K - 1) * A);
    const int64_t num = A - r - 1; // 2e <= num regardless of perfect squareness
    return num >= 0 ? num / 2 : -1;
}

int64_t mixed_region_finite(int N, int K, int M, int f) {
    if (K < 2) throw std::invalid_argument("K must be >= 2");
    if (M < 2 || M % 2 != 0) throw std::invalid_argument("M must be even and >= 2");
    if (f < 0 || f > N) throw std::invalid_argument("need 0 <= f <= N");
    const int64_t half = M / 2;
    const int64_t C = int64_t(N - f) * M * (M + 1) / 2 + int64_t(f) * half * (half + 1);
    // largest a with a(a+1)(K-1) <= 2C
    int64_t a = 0;
    while ((a + 1) * (a + 2) * int64_t(K - 1) <= 2 * C) ++a;
    const int64_t X = (2 * int64_t(N) - f) * M * (a + 1) - (a * (a + 1) * int64_t(K - 1) + 2 * C);
    const int64_t Y = 2 * int64_t(M) * (a + 1);
    return X >= 1 ? (X - 1) / Y : -1;
}

int64_t m2_region(int N, int K, int f) {
    const int64_t X = 3 * int64_t(N - K + 1) - 2 * int64_t(f);
    return X >= 1 ? (X - 1) / 6 : -1;
}

bool nondecodable_outer(int N, int K, int e, int f) {
    return int64_t(f) >= 2 * (int64_t(N) - (K - 1) - e);
}

DecodingRegion region_table_finite(int N, int K, int m, int M) {
    DecodingRegion reg;
    reg.strategy = "proposed";
    reg.M = M;
    reg.N = N;
    reg.K = K;
    reg.m = m;
    for (int f = 0; f <= N; ++f) {
        int64_t e = mixed_region_finite(N, K, M, f);
        if (e < 0) break;
        reg.e_max.push_back(e);
    }
    return reg;
}

DecodingRegion region_table_infinite(int N, int K, int m) {
    DecodingRegion reg;
    reg.strategy = "proposed-asymptotic";
    reg.M = 0;
    reg.N = N;
    reg.K = K;
    reg.m = m;
    for (int f = 0; f <= 2 * N; ++f) {
        int64_t e = mixed_region_infinite(N, K, f);
        if (e < 0) break;
        reg.e_max.push_back(e);
    }
    return reg;
}

} // namespace rsasd
