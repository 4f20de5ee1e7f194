#include "doctest.h"

#include <stdexcept>
#include <utility>

#include "rsasd/asd.hpp"
#include "rsasd/regions.hpp"

using namespace rsasd;

namespace {
// Direct predicate oracle: worst-case score/cost for (e, f) under the
// half-half assignment, checked against the piecewise-linear threshold.
bool worst_case_decodable(int N, int K, int M, int e, int f) {
    int64_t S = int64_t(M) * (2 * int64_t(N) - 2 * e - f) / 2;
    int64_t half = M / 2;
    int64_t C = int64_t(N - f) * M * (M + 1) / 2 + int64_t(f) * half * (half + 1);
    return certainly_decodable_finite(S, C, K);
}

int64_t e_max_oracle(int N, int K, int M, int f) {
    int64_t best = -1;
    for (int e = 0; e + f <= 2 * N; ++e) {
        if (worst_case_decodable(N, K, M, e, f))
            best = e;
        else
            break;
    }
    return best;
}
} // namespace

TEST_CASE("hard-decision radii") {
    CHECK(gs_radius(255, 239) == 8);
    CHECK(gs_radius(255, 223) == 17);
    CHECK(gs_radius(255, 167) == 49);
    CHECK(gs_radius(255, 55) == 137);
    CHECK(gs_radius(255, 30) == 169);
    CHECK(gs_radius(7, 3) == 3);
    CHECK(bm_radius(255, 239) == 8);
    CHECK(bm_radius(255, 223) == 16);
    CHECK(bm_radius(15, 11) == 2);
}

TEST_CASE("bit-erasure radius bands") {
    CHECK(bec_radius(255, 239, 8) == 33);
    CHECK(bec_radius(255, 100, 8) == 368);
    // K = 1 sentinel: everything can be erased
    CHECK(bec_radius(255, 1, 8) == 255 * 8);
    // top band f_max = 2(N - K + 1) - 1
    CHECK(bec_radius(255, 239, 8) == 2 * (255 - 239 + 1) - 1);
    CHECK(bec_radius(15, 11, 4) == 2 * 5 - 1);
}

TEST_CASE("erasure thresholds and 2^u-ary radius") {
    CHECK(bec_nondecodable_threshold(255, 239) == 33);
    CHECK(bec_nondecodable_threshold(255, 129) == 2 * 126 + 1);
    CHECK_THROWS_AS(bec_nondecodable_threshold(255, 100), InapplicableRate);

    CHECK(qec_radius(255, 239, 4) == 18);
    // u = 1: f < 2(N - K + 1)
    CHECK(qec_radius(255, 239, 1) == 2 * 17 - 1);
    CHECK_THROWS_AS(qec_radius(255, 10, 4), InapplicableRate);
}

TEST_CASE("mixed-channel regions: pinned anchors") {
    CHECK(mixed_region_finite(255, 239, 2, 0) == 8);
    CHECK(mixed_region_infinite(255, 239, 10) == 6);
    // e = 0 boundary of the infinite region recovers f < 2(N - K + 1)
    int64_t f_edge = 0;
    while (mixed_region_infinite(255, 239, int(f_edge)) >= 0) ++f_edge;
    CHECK(f_edge == 2 * (255 - 239 + 1) - 1 + 1);

    // M = 2 closed form: f ceiling 25 = about 1.5x the bounded-distance radius
    CHECK(m2_region(255, 239, 25) >= 0);
    CHECK(m2_region(255, 239, 26) == -1);
    CHECK(m2_region(255, 239, 0) == 8);
}

TEST_CASE("M = 2 closed form: exact at high rate, achievable below") {
    // exact for R >= 2/3 + 1/N
    for (int f = 0; f <= 60; ++f)
        CHECK(mixed_region_finite(255, 239, 2, f) == m2_region(255, 239, f));
    // at lower rates the closed form is only an inner (achievable) region
    for (int f = 0; f <= 60; ++f)
        CHECK(m2_region(63, 23, f) <= mixed_region_finite(63, 23, 2, f));
}

TEST_CASE("finite-M region equals the direct threshold oracle") {
    for (int M : {2, 4, 6}) {
        for (int f = 0; f <= 40; ++f) {
            CHECK(mixed_region_finite(255, 239, M, f) == e_max_oracle(255, 239, M, f));
            CHECK(mixed_region_finite(63, 23, M, f) == e_max_oracle(63, 23, M, f));
            if (f <= 15) CHECK(mixed_region_finite(15, 11, M, f) == e_max_oracle(15, 11, M, f));
        }
    }
    CHECK_THROWS_AS(mixed_region_finite(255, 239, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(mixed_region_finite(255, 239, 0, 0), std::invalid_argument);
}

TEST_CASE("regions grow with the multiplicity parameter and approach the limit") {
    const std::pair<int, int> codes[] = {{255, 239}, {63, 23}, {15, 11}};
    for (auto [N, K] : codes) {
        for (int M = 2; M <= 16; M += 2) {
            for (int f = 0; f <= N; ++f) {
                int64_t a = mixed_region_finite(N, K, M, f);
                int64_t b = mixed_region_finite(N, K, M + 2, f);
                CHECK(a <= b); // region(M) within region(M+2)
            }
        }
        for (int f = 0; f <= N; ++f) {
            int64_t fin = mixed_region_finite(N, K, 256, f);
            int64_t inf = mixed_region_infinite(N, K, f);
            CHECK(fin <= inf);
            CHECK(inf - fin <= 1);
        }
    }
}

TEST_CASE("nesting: finite region within infinite region within outer bound") {
    const int N = 255, K = 239;
    for (int f = 0; f <= 40; ++f) {
        int64_t fin = mixed_region_finite(N, K, 4, f);
        int64_t inf = mixed_region_infinite(N, K, f);
        CHECK(fin <= inf);
        if (inf >= 0 && f + inf <= N)
            CHECK(!nondecodable_outer(N, K, int(inf), f)); // region point not provably bad
    }
    CHECK(nondecodable_outer(255, 239, 0, 34));
    CHECK(!nondecodable_outer(255, 239, 8, 0));
}

TEST_CASE("region tables") {
    DecodingRegion fin = region_table_finite(255, 239, 8, 2);
    REQUIRE(fin.e_max.size() == 26); // f = 0..25
    CHECK(fin.e_max[0] == 8);
    CHECK(fin.e_max[25] == 0);
    for (size_t f = 1; f < fin.e_max.size(); ++f) CHECK(fin.e_max[f] <= fin.e_max[f - 1]);

    DecodingRegion inf = region_table_infinite(255, 239, 8);
    CHECK(inf.e_max.size() >= fin.e_max.size());
    for (size_t f = 0; f < fin.e_max.size(); ++f) CHECK(fin.e_max[f] <= inf.e_max[f]);
}
