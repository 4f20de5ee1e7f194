#include "doctest.h"

#include <cmath>
#include <tuple>
#include <random>
#include <stdexcept>

#include "rsasd/mas.hpp"

using namespace rsasd;

TEST_CASE("proportional assignment floors pi * M") {
    ReliabilityMatrix pi;
    pi.q = 4;
    pi.N = 2;
    pi.p = {0.5, 0.25, 0.125, 0.125, 1.0, 0.0, 0.0, 0.0};
    MultiplicityMatrix mm = pmas(pi, 8);
    CHECK(mm.at(0, 0) == 4);
    CHECK(mm.at(1, 0) == 2);
    CHECK(mm.at(2, 0) == 1);
    CHECK(mm.at(3, 0) == 1);
    CHECK(mm.at(0, 1) == 8);
    CHECK(mm.at(1, 1) == 0);
    CHECK_THROWS_AS(pmas(pi, 0), std::invalid_argument);
}

TEST_CASE("proportional assignment maximizes the asymptotic figure of merit") {
    // Over an erasure-type histogram the proportional rule (m_i = 2^-i) has
    // figure of merit s/sqrt(2c) = sqrt(eta); by Cauchy-Schwarz no other
    // per-type coefficient vector can beat it.
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int64_t> cnt(0, 50);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    const int m = 8;
    for (int profile = 0; profile < 1000; ++profile) {
        TypeHistogram hist(size_t(m) + 1);
        for (auto& a : hist) a = cnt(rng);
        AsymptoticScoreCost best = bec_pmas_coeffs(hist);
        if (best.c <= 0) continue;
        const double best_ratio = best.s / std::sqrt(2 * best.c);
        for (int alt = 0; alt < 1000; ++alt) {
            std::vector<double> mi(size_t(m) + 1);
            for (auto& v : mi) v = u(rng);
            AsymptoticScoreCost sc = bec_coeffs(hist, mi);
            if (sc.c <= 0) continue;
            CHECK(sc.s / std::sqrt(2 * sc.c) <= best_ratio + 1e-9);
        }
    }
}

TEST_CASE("half-half assignment per erased-bit count") {
    CodeSpec spec = make_narrow_sense(7, 3, 3);
    SoftObservation obs;
    obs.llr.assign(21, 1.0);
    // symbol 0: no erasure, hard value 0b101 = 5
    obs.llr[0] = -1.0;
    obs.llr[2] = -1.0;
    // symbol 1: one erased bit (bit 1), hard bits 0b001
    obs.llr[3] = -1.0;
    obs.llr[4] = 0.0;
    // symbol 2: two erased bits
    obs.llr[6] = 0.0;
    obs.llr[7] = 0.0;
    MultiplicityMatrix mm = proposed_mas(obs, spec, 4);
    CHECK(mm.at(5, 0) == 4);
    CHECK(mm.at(1, 1) == 2);
    CHECK(mm.at(3, 1) == 2);
    for (int i = 0; i < 8; ++i) CHECK(mm.at(i, 2) == 0);
    for (int j = 3; j < 7; ++j) {
        CHECK(mm.at(0, j) == 4);
        for (int i = 1; i < 8; ++i) CHECK(mm.at(i, j) == 0);
    }
    CHECK_THROWS_AS(proposed_mas(obs, spec, 3), std::invalid_argument);
    CHECK_THROWS_AS(proposed_mas(obs, spec, 0), std::invalid_argument);
}

TEST_CASE("optimal bit-flip coefficients reproduce the pinned radii") {
    CHECK(bsc_optimal(7, 3, 3).e_max == 4);
    CHECK(bsc_optimal(255, 223, 8).e_max == 17);
    CHECK(bsc_optimal(255, 167, 8).e_max == 50);
    CHECK(bsc_optimal(255, 55, 8).e_max == 150);
    CHECK(bsc_optimal(255, 30, 8).e_max == 214);
    // low-rate regime: every pattern is certainly decodable with t = 1
    BscOptimalResult low = bsc_optimal(255, 20, 8);
    CHECK(low.all_correctable);
    CHECK(low.t == doctest::Approx(1.0));
}

TEST_CASE("bit-flip radius certifies decodability exactly up to e_max") {
    const std::tuple<int, int, int> cases[] = {{255, 223, 8}, {255, 167, 8}, {31, 25, 5}};
    for (auto [N, K, m] : cases) {
        BscOptimalResult r = bsc_optimal(N, K, m);
        AsymptoticScoreCost at = bsc_coeffs(N, r.e_max, r.t, m);
        AsymptoticScoreCost beyond = bsc_coeffs(N, r.e_max + 1, r.t, m);
        CHECK(certainly_decodable_asymptotic(at, K));
        CHECK(!certainly_decodable_asymptotic(beyond, K));
    }
}

TEST_CASE("no coefficient beats the closed-form bit-flip optimum (grid oracle)") {
    const int N = 255, K = 223, m = 8;
    BscOptimalResult r = bsc_optimal(N, K, m);
    int64_t best_grid = -1;
    for (int ti = 1; ti <= 1000; ++ti) {
        double t = ti / 1000.0;
        // largest e with s(e)^2 > 2(K-1) c under coefficients (1, t)
        int64_t lo = 0, hi = N;
        int64_t emax = -1;
        for (int64_t e = lo; e <= hi; ++e) {
            if (certainly_decodable_asymptotic(bsc_coeffs(N, e, t, m), K))
                emax = e;
            else
                break;
        }
        best_grid = std::max(best_grid, emax);
    }
    CHECK(best_grid == r.e_max);
}

TEST_CASE("flip-or-erase optimum: consistency, reduction at f = 0, grid oracle") {
    const int N = 255, K = 239, m = 8;
    FlipOrEraseResult r0 = flip_or_erase_optimal(N, K, m, 0);
    BscOptimalResult b = bsc_optimal(N, K, m);
    CHECK(r0.e_max == b.e_max);
    CHECK(r0.t1 == doctest::Approx(b.t));

    const int f = 10;
    FlipOrEraseResult r = flip_or_erase_optimal(N, K, m, f);
    // the returned pair certifies its own radius
    CHECK(certainly_decodable_asymptotic(flip_or_erase_coeffs(N, r.e_max, f, r.t1, r.t2, m), K));
    CHECK(!certainly_decodable_asymptotic(
        flip_or_erase_coeffs(N, r.e_max + 1, f, r.t1, r.t2, m), K));

    // no grid pair achieves a larger radius
    int64_t best_grid = -1;
    for (int i1 = 1; i1 <= 100; ++i1) {
        double t1 = i1 / 100.0;
        for (int i2 = 1; i2 <= 300; ++i2) {
            double t2 = i2 / 100.0;
            int64_t emax = -1;
            for (int64_t e = 0; e <= N - f; ++e) {
                if (certainly_decodable_asymptotic(
                        flip_or_erase_coeffs(N, e, f, t1, t2, m), K))
                    emax = e;
                else
                    break;
            }
            best_grid = std::max(best_grid, emax);
        }
    }
    CHECK(best_grid <= r.e_max);

    // many erasures relative to the rate: everything up to e + f = N decodes
    FlipOrEraseResult all = flip_or_erase_optimal(255, 100, 8, 2 * 99);
    CHECK(all.all_correctable);
    CHECK(all.e_max == 255 - 198);
}

TEST_CASE("type-histogram score/cost coefficients") {
    // BEC with proportional multiplicities: s = eta, c = eta / 2
    TypeHistogram hist = {10, 4, 2, 0};
    AsymptoticScoreCost sc = bec_pmas_coeffs(hist);
    double eta = 10 + 4 * 0.5 + 2 * 0.25;
    CHECK(sc.s == doctest::Approx(eta));
    CHECK(sc.c == doctest::Approx(eta / 2));

    // generic per-type coefficients m_i reduce to the same values at m_i = 2^-i
    AsymptoticScoreCost gen = bec_coeffs(hist, {1.0, 0.5, 0.25, 0.125});
    CHECK(gen.s == doctest::Approx(sc.s));
    CHECK(gen.c == doctest::Approx(sc.c));

    // half-half strategy on the same histogram
    AsymptoticScoreCost prop = proposed_coeffs(hist);
    CHECK(prop.s == doctest::Approx(10 + 4 * 0.5));
    CHECK(prop.c == doctest::Approx(10 * 0.5 + 4 * 0.25));

    MasParams params;
    params.strategy = MasStrategy::Pmas;
    AsymptoticScoreCost d1 = strategy_score_cost(hist, params, 3);
    CHECK(d1.s == doctest::Approx(sc.s));
    params.strategy = MasStrategy::FlipOrErase;
    CHECK_THROWS_AS(strategy_score_cost(hist, params, 3), std::invalid_argument);
}

TEST_CASE("flip-or-erase coefficients formula") {
    AsymptoticScoreCost sc = flip_or_erase_coeffs(100, 5, 8, 0.4, 1.5, 4);
    CHECK(sc.s == doctest::Approx((100 - 5 - 8) + 5 * 0.4 + 8 * 1.5));
    CHECK(sc.c == doctest::Approx(0.5 * ((100 - 8) * (1 + 4 * 0.16) + 2 * 8 * 2.25)));
}
