#include "rsasd/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rsasd/mas.hpp"
#include "rsasd/regions.hpp"

namespace rsasd {

namespace {

using Poly = std::vector<uint32_t>; // coefficient i of x^i

int poly_deg(const Poly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (p[size_t(i)]) return i;
    return -1;
}

uint32_t poly_eval(const Poly& p, uint32_t x, const FieldTables& ft) {
    uint32_t acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = gf_add(gf_mul(acc, x, ft), p[i]);
    return acc;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, size_t cap, const FieldTables& ft) {
    Poly out(std::min(cap, a.size() + b.size() - 1), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size() && i + j < cap; ++j)
            out[i + j] ^= gf_mul(a[i], b[j], ft);
    }
    return out;
}

// Formal derivative; in characteristic 2 only odd-degree terms survive.
Poly poly_deriv(const Poly& p) {
    Poly d(p.size() > 1 ? p.size() - 1 : 1, 0);
    for (size_t i = 1; i < p.size(); i += 2) d[i - 1] = p[i];
    return d;
}

} // namespace

HardDecision hard_decision(const SoftObservation& obs, const CodeSpec& spec) {
    HardDecision hd;
    hd.word.assign(size_t(spec.N), 0);
    const int m = spec.m();
    for (int j = 0; j < spec.N; ++j) {
        bool erased = false;
        uint32_t v = 0;
        for (int b = 0; b < m; ++b) {
            size_t idx = size_t(j) * m + b;
            if (obs.erased(idx)) erased = true;
            else if (obs.hard_bit(idx)) v |= 1u << b;
        }
        hd.word[size_t(j)] = v;
        if (erased) hd.erasures.push_back(j);
    }
    return hd;
}

std::optional<Codeword> bm_decode(const std::vector<uint32_t>& word,
                                  const std::vector<int>& erasures, const CodeSpec& spec) {
    if (!spec.narrow_sense())
        throw std::invalid_argument("bounded-distance decoding requires a narrow-sense code");
    const FieldTables& ft = spec.field;
    const int nk = spec.N - spec.K;
    const int f = int(erasures.size());
    if (f > nk) return std::nullopt;

    std::vector<uint32_t> synd = syndrome(word, spec); // S_1 .. S_{N-K}
    bool all_zero = std::all_of(synd.begin(), synd.end(), [](uint32_t s) { return s == 0; });
    if (all_zero && f == 0) return word;

    // Erasure locator Gamma(x) = prod (1 - X_l x), X_l = gamma_{j_l}.
    Poly gamma{1};
    for (int pos : erasures) {
        uint32_t X = spec.eval_points[size_t(pos)];
        Poly factor{1, X}; // characteristic 2: 1 + X x
        gamma = poly_mul_mod(gamma, factor, size_t(nk) + 1, ft);
    }

    // Berlekamp-Massey seeded with the erasure locator.
    Poly lambda = gamma, B = gamma;
    int L = f;
    for (int k = f + 1; k <= nk; ++k) {
        uint32_t delta = 0;
        for (int i = 0; i <= std::min(k - 1, int(lambda.size()) - 1); ++i)
            delta ^= gf_mul(lambda[size_t(i)], synd[size_t(k - 1 - i)], ft);
        B.insert(B.begin(), 0); // B <- x B
        if (delta != 0) {
            Poly t = lambda;
            t.resize(std::max(t.size(), B.size()), 0);
            for (size_t i = 0; i < B.size(); ++i) t[i] ^= gf_mul(delta, B[i], ft);
            if (2 * L <= k + f - 1) {
                uint32_t dinv = gf_inv(delta, ft);
                B = lambda;
                for (auto& c : B) c = gf_mul(c, dinv, ft);
                L = k - L + f;
            }
            lambda = std::move(t);
        }
    }

    int nu = L - f; // claimed error count
    if (2 * nu + f > nk) return std::nullopt;
    if (poly_deg(lambda) != L) return std::nullopt;

    // Chien search over the evaluation points.
    std::vector<int> positions;
    for (int j = 0; j < spec.N; ++j) {
        uint32_t Xinv = gf_inv(spec.eval_points[size_t(j)], ft);
        if (poly_eval(lambda, Xinv, ft) == 0) positions.push_back(j);
    }
    if (int(positions.size()) != L) return std::nullopt;

    // Forney: Omega = S(x) Lambda(x) mod x^{N-K}, value = Omega(X^-1)/Lambda'(X^-1).
    Poly S(synd.begin(), synd.end());
    Poly omega = poly_mul_mod(S, lambda, size_t(nk), ft);
    Poly dlambda = poly_deriv(lambda);

    Codeword out = word;
    for (int j : positions) {
        uint32_t Xinv = gf_inv(spec.eval_points[size_t(j)], ft);
        uint32_t den = poly_eval(dlambda, Xinv, ft);
        if (den == 0) return std::nullopt;
        out[size_t(j)] ^= gf_div(poly_eval(omega, Xinv, ft), den, ft);
    }
    if (!is_codeword(out, spec)) return std::nullopt;
    return out;
}

DecodeResult gmd_decode(const SoftObservation& obs, const CodeSpec& spec) {
    const int m = spec.m();
    HardDecision hd = hard_decision(obs, spec);
    std::vector<char> forced(size_t(spec.N), 0);
    for (int pos : hd.erasures) forced[size_t(pos)] = 1;

    // Symbol reliability: sum of |LLR| over its bits (erased bits add 0).
    std::vector<int> order;
    std::vector<double> rel(size_t(spec.N), 0.0);
    for (int j = 0; j < spec.N; ++j) {
        for (int b = 0; b < m; ++b) {
            double l = std::abs(obs.llr[size_t(j) * m + b]);
            if (std::isfinite(l)) rel[size_t(j)] += l;
            else rel[size_t(j)] = std::numeric_limits<double>::infinity();
        }
        if (!forced[size_t(j)]) order.push_back(j);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rel[size_t(a)] < rel[size_t(b)]; });

    DecodeResult res;
    const int nk = spec.N - spec.K;
    for (int s = 0; int(hd.erasures.size()) + s <= nk; s += 2) {
        std::vector<int> erasures = hd.erasures;
        erasures.insert(erasures.end(), order.begin(), order.begin() + s);
        auto cand = bm_decode(hd.word, erasures, spec);
        if (cand && std::find(res.list.begin(), res.list.end(), *cand) == res.list.end())
            res.list.push_back(*cand);
        if (s >= int(order.size())) break;
    }

    double best = -std::numeric_limits<double>::infinity();
    for (const Codeword& c : res.list) {
        double metric = llr_metric(c, obs, spec);
        if (metric > best || (metric == best && res.selected && c < *res.selected)) {
            best = metric;
            res.selected = c;
        }
    }
    return res;
}

DecodeResult bgmd_decode(const SoftObservation& obs, const CodeSpec& spec,
                         const BgmdConfig& cfg) {
    if (int(obs.llr.size()) != spec.n()) throw std::invalid_argument("observation length mismatch");
    const int n = spec.n(), k = spec.k();
    const int cap = cfg.max_rounds < 0 ? n - k : cfg.max_rounds;

    std::vector<int> order(static_cast<size_t>(n), 0);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(obs.llr[size_t(a)]) < std::abs(obs.llr[size_t(b)]);
    });

    DecodeResult res;
    SoftObservation trial = obs;
    for (int i = 0; i <= cap; ++i) {
        // stop once (e, f) = (0, i) leaves the guaranteed region
        if (i > spec.N || mixed_region_finite(spec.N, spec.K, cfg.M, i) < 0) break;
        if (i > 0) trial.llr[size_t(order[size_t(i - 1)])] = 0.0;
        MultiplicityMatrix mm = proposed_mas(trial, spec, cfg.M);
        DecodeResult round = asd_decode(mm, spec, obs, cfg.budget);
        for (const Codeword& c : round.list)
            if (std::find(res.list.begin(), res.list.end(), c) == res.list.end())
                res.list.push_back(c);
    }

    double best = -std::numeric_limits<double>::infinity();
    for (const Codeword& c : res.list) {
        double metric = llr_metric(c, obs, spec);
        if (metric > best || (metric == best && res.selected && c < *res.selected)) {
            best = metric;
            res.selected = c;
        }
    }
    return res;
}

} // namespace rsasd
