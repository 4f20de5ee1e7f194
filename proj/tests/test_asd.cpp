#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rsasd/asd.hpp"
#include "rsasd/channels.hpp"

using namespace rsasd;

namespace {

int64_t max_weighted_degree(const BivariatePoly& p, int wy) {
    int64_t best = -1;
    for (size_t j = 0; j < p.c.size(); ++j)
        for (size_t i = 0; i < p.c[j].size(); ++i)
            if (p.c[j][i]) best = std::max(best, int64_t(i) + int64_t(wy) * int64_t(j));
    return best;
}

int64_t mono_count(int64_t delta, int wy) {
    int64_t cnt = 0;
    for (int64_t j = 0; j * wy <= delta; ++j) cnt += delta - j * wy + 1;
    return cnt;
}

// (Y - g(X)) as a bivariate polynomial
BivariatePoly y_minus(const std::vector<uint32_t>& g) {
    BivariatePoly p;
    p.c.resize(2);
    p.c[0] = g;
    p.c[1] = {1};
    return p;
}

BivariatePoly bi_mul(const BivariatePoly& a, const BivariatePoly& b, const FieldTables& t) {
    BivariatePoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, {});
    for (size_t ja = 0; ja < a.c.size(); ++ja)
        for (size_t jb = 0; jb < b.c.size(); ++jb) {
            if (a.c[ja].empty() || b.c[jb].empty()) continue;
            auto& dst = r.c[ja + jb];
            size_t len = a.c[ja].size() + b.c[jb].size() - 1;
            if (dst.size() < len) dst.resize(len, 0);
            for (size_t ia = 0; ia < a.c[ja].size(); ++ia) {
                if (!a.c[ja][ia]) continue;
                for (size_t ib = 0; ib < b.c[jb].size(); ++ib)
                    if (b.c[jb][ib]) dst[ia + ib] ^= gf_mul(a.c[ja][ia], b.c[jb][ib], t);
            }
        }
    return r;
}

} // namespace

TEST_CASE("score and cost") {
    MultiplicityMatrix mm(8, 3);
    mm.at(1, 0) = 2;
    mm.at(5, 1) = 3;
    mm.at(0, 2) = 1;
    CHECK(cost(mm) == 3 + 6 + 1);
    CHECK(score(mm, {1, 5, 0}) == 6);
    CHECK(score(mm, {1, 4, 0}) == 3);
}

TEST_CASE("threshold T(S) equals the upper envelope of its line family") {
    for (int K : {2, 3, 11, 239}) {
        for (int64_t S = 1; S <= 600; S += 7) {
            int64_t best = 0;
            for (int64_t a = 0; a <= 2 * S; ++a)
                best = std::max(best, (a + 1) * (2 * S - a * int64_t(K - 1)));
            CHECK(t2_of_s(S, K) == best);
            CHECK(t_of_s(S, K) == doctest::Approx(double(best) / 2));
        }
        CHECK(t2_of_s(0, K) == 0);
    }
}

TEST_CASE("threshold inequality used by the convexity argument") {
    // a * T((a+1) x) >= (a+2) * T(a x) whenever x >= K-1
    for (int K : {3, 11, 25}) {
        for (int64_t a = 1; a <= 20; ++a)
            for (int64_t x = K - 1; x <= K + 200; x += 3)
                CHECK(a * t2_of_s((a + 1) * x, K) >= (a + 2) * t2_of_s(a * x, K));
    }
}

TEST_CASE("sufficient-condition predicates") {
    // K=3: S=5 gives T = 9 (a=2): decodable iff C < 9
    CHECK(certainly_decodable_finite(5, 8, 3));
    CHECK(!certainly_decodable_finite(5, 9, 3));
    CHECK(!certainly_decodable_finite(0, 0, 3));

    CHECK(certainly_decodable_asymptotic({3.0, 1.0}, 3));   // 9 > 4
    CHECK(!certainly_decodable_asymptotic({2.0, 1.0}, 3));  // 4 > 4 is false (strict)
    CHECK(!certainly_decodable_asymptotic({0.0, 0.0}, 3));
}

TEST_CASE("interpolation satisfies all constraints at minimal weighted degree bound") {
    CodeSpec spec = make_narrow_sense(7, 3, 3);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dm(0, 3), dv(0, 7);
    for (int trial = 0; trial < 40; ++trial) {
        MultiplicityMatrix mm(8, 7);
        for (int j = 0; j < 7; ++j)
            for (int reps = 0; reps < 2; ++reps) mm.at(dv(rng), j) = dm(rng);
        const int64_t C = cost(mm);
        if (C == 0) continue;
        BivariatePoly q = interpolate(mm, spec);
        CHECK(!q.is_zero());
        for (int j = 0; j < 7; ++j)
            for (int i = 0; i < 8; ++i)
                if (mm.at(i, j) > 0)
                    CHECK(passes_through(q, spec.eval_points[size_t(j)], uint32_t(i),
                                         mm.at(i, j), spec));
        // the solution never needs more monomials than constraints + 1
        int64_t delta = 0;
        while (mono_count(delta, spec.K - 1) <= C) ++delta;
        CHECK(max_weighted_degree(q, spec.K - 1) <= delta);
    }
}

TEST_CASE("interpolation budget is enforced") {
    CodeSpec spec = make_narrow_sense(7, 3, 3);
    MultiplicityMatrix mm(8, 7);
    mm.at(0, 0) = 3;
    CHECK_THROWS_AS(interpolate(mm, spec, 5), InterpolationBudgetError);
}

TEST_CASE("factorization recovers planted roots") {
    CodeSpec spec = make_narrow_sense(7, 3, 3);
    const FieldTables& t = spec.field;
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<uint32_t> dv(0, 7);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<uint32_t> g1{dv(rng), dv(rng), dv(rng)};
        std::vector<uint32_t> g2{dv(rng), dv(rng), dv(rng)};
        BivariatePoly q = bi_mul(y_minus(g1), y_minus(g2), t);
        // multiply by a nontrivial X-only factor
        BivariatePoly h;
        h.c = {{dv(rng), 1}};
        q = bi_mul(q, h, t);
        auto roots = factorize(q, spec);
        auto trimmed = [](std::vector<uint32_t> v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
            v.resize(3, 0);
            return v;
        };
        CHECK(std::find(roots.begin(), roots.end(), trimmed(g1)) != roots.end());
        CHECK(std::find(roots.begin(), roots.end(), trimmed(g2)) != roots.end());
        for (const auto& g : roots) CHECK(divides(q, g, spec));
    }
}

TEST_CASE("factorization handles repeated and nested prefixes") {
    CodeSpec spec = make_narrow_sense(7, 3, 3);
    const FieldTables& t = spec.field;
    // roots sharing a constant term: g1 = 3, g2 = 3 + x, g3 = 3 + x + x^2
    std::vector<std::vector<uint32_t>> gs = {{3, 0, 0}, {3, 1, 0}, {3, 1, 1}};
    BivariatePoly q = y_minus(gs[0]);
    q = bi_mul(q, y_minus(gs[1]), t);
    q = bi_mul(q, y_minus(gs[2]), t);
    auto roots = factorize(q, spec);
    for (const auto& g : gs)
        CHECK(std::find(roots.begin(), roots.end(), g) != roots.end());
}

TEST_CASE("hard-decision list decoding on RS(7,3): all 2-error patterns decode") {
    CodeSpec spec = make_narrow_sense(7, 3, 3);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<uint32_t> dv(0, 7), dnz(1, 7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<uint32_t> msg{dv(rng), dv(rng), dv(rng)};
        Codeword cw = encode(msg, spec);
        for (int p1 = 0; p1 < 7; ++p1)
            for (int p2 = p1 + 1; p2 < 7; ++p2) {
                Codeword word = cw;
                word[size_t(p1)] ^= dnz(rng);
                word[size_t(p2)] ^= dnz(rng);
                MultiplicityMatrix mm(8, 7);
                for (int j = 0; j < 7; ++j) mm.at(int(word[size_t(j)]), j) = 1;
                BivariatePoly q = interpolate(mm, spec);
                auto roots = factorize(q, spec);
                bool found = false;
                for (const auto& g : roots)
                    if (encode(g, spec) == cw) found = true;
                CHECK(found);
            }
    }
}

TEST_CASE("metric and maximum-likelihood selection") {
    CodeSpec spec = make_narrow_sense(7, 3, 3);
    Codeword zero(7, 0);
    SoftObservation obs;
    obs.llr.assign(21, 2.0);
    CHECK(llr_metric(zero, obs, spec) == doctest::Approx(42.0));

    Codeword one = encode({1, 0, 0}, spec); // all-ones codeword
    // each symbol contributes one mismatched bit (value 1 = bit 0 set)
    CHECK(llr_metric(one, obs, spec) == doctest::Approx(42.0 - 4.0 * 7));

    obs.llr[0] = std::numeric_limits<double>::infinity();
    CHECK(llr_metric(one, obs, spec) == -std::numeric_limits<double>::infinity());
    // a matched perfectly-known bit contributes nothing (keeps metrics comparable)
    CHECK(llr_metric(zero, obs, spec) == doctest::Approx(40.0));

    obs.llr.assign(21, 2.0);
    obs.llr[3] = 0.0; // erased bit contributes nothing
    CHECK(llr_metric(zero, obs, spec) == doctest::Approx(40.0));

    // full pipeline picks the transmitted word under a clean observation
    MultiplicityMatrix mm(8, 7);
    for (int j = 0; j < 7; ++j) mm.at(int(one[size_t(j)]), j) = 2;
    SoftObservation clean;
    clean.llr.assign(21, 0.0);
    std::vector<int> bits = binary_image(one, spec);
    for (size_t i = 0; i < bits.size(); ++i) clean.llr[i] = bits[i] ? -3.0 : 3.0;
    DecodeResult res = asd_decode(mm, spec, clean);
    REQUIRE(!res.failed());
    CHECK(*res.selected == one);
}

TEST_CASE("polynomial dump is stable") {
    BivariatePoly p;
    p.c = {{0, 5}, {1}};
    CHECK(dump_poly(p) == "1 0 5\n0 1 1\n");
}
