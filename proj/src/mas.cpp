#include "rsasd/mas.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rsasd {

namespace {
// Largest integer strictly below x.
int64_t floor_strict(double x) {
    int64_t f = int64_t(std::floor(x));
    return double(f) == x ? f - 1 : f;
}
} // namespace

MultiplicityMatrix pmas(const ReliabilityMatrix& pi, double M) {
    if (!(M > 0)) throw std::invalid_argument("M must be positive");
    MultiplicityMatrix mm(pi.q, pi.N);
    for (int j = 0; j < pi.N; ++j)
        for (int i = 0; i < pi.q; ++i)
            mm.at(i, j) = int(std::floor(pi.at(i, j) * M));
    return mm;
}

AsymptoticScoreCost pmas_asymptotic(const ReliabilityMatrix& pi, const Codeword& truth) {
    AsymptoticScoreCost sc;
    for (int j = 0; j < pi.N; ++j) {
        sc.s += pi.at(int(truth[size_t(j)]), j);
        for (int i = 0; i < pi.q; ++i) sc.c += 0.5 * pi.at(i, j) * pi.at(i, j);
    }
    return sc;
}

MultiplicityMatrix proposed_mas(const SoftObservation& obs, const CodeSpec& spec, int M) {
    if (M < 2 || M % 2 != 0)
        throw std::invalid_argument("proposed MAS requires an even multiplicity parameter M >= 2");
    if (int(obs.llr.size()) != spec.n()) throw std::invalid_argument("observation length mismatch");
    const int m = spec.m();
    MultiplicityMatrix mm(int(spec.field.q()), spec.N);
    for (int j = 0; j < spec.N; ++j) {
        int erased = 0, erased_bit = -1;
        uint32_t hard = 0;
        for (int b = 0; b < m; ++b) {
            size_t idx = size_t(j) * m + b;
            if (obs.erased(idx)) {
                ++erased;
                erased_bit = b;
            } else if (obs.hard_bit(idx)) {
                hard |= 1u << b;
            }
        }
        if (erased == 0) {
            mm.at(int(hard), j) = M;
        } else if (erased == 1) {
            mm.at(int(hard), j) = M / 2;
            mm.at(int(hard | (1u << erased_bit)), j) = M / 2;
        }
        // >= 2 erased bits: zero column
    }
    return mm;
}

BscOptimalResult bsc_optimal(int N, int K, int m) {
    if (K < 2 || K > N) throw std::invalid_argument("need 2 <= K <= N");
    BscOptimalResult r;
    const double km1 = K - 1;
    if (double(K - 1) * (1 + m) < N) {
        // low rate: with t = 1 the sufficient condition holds for every e
        r.t = 1.0;
        r.e_max = N;
        r.all_correctable = true;
        return r;
    }
    double x0;
    if (m * (K - 1) == N) {
        // removable singularity: the quadratic degenerates to a linear equation
        x0 = double(N - K + 1) / (2.0 * m * km1);
    } else {
        double delta = (m * km1) * (m * km1) +
                       double(N - K + 1) * (double(m) * m * km1 - double(m) * N);
        x0 = (-m * km1 + std::sqrt(delta)) / (m * (m * km1 - N));
    }
    r.t = x0;
    r.e_max = floor_strict(double(N) * m * x0 / (1.0 + m * x0));
    return r;
}

FlipOrEraseResult flip_or_erase_optimal(int N, int K, int m, int f) {
    if (K < 2 || K > N) throw std::invalid_argument("need 2 <= K <= N");
    if (f < 0 || f > N) throw std::invalid_argument("need 0 <= f <= N");
    FlipOrEraseResult r;
    if (f == 0) {
        BscOptimalResult b = bsc_optimal(N, K, m);
        r.t1 = b.t;
        r.t2 = 0;
        r.e_max = std::min<int64_t>(b.e_max, N);
        r.all_correctable = b.all_correctable;
        return r;
    }
    if (f >= 2 * (K - 1)) {
        // arbitrarily large t2 recovers e + f = N
        r.t1 = 1.0;
        r.t2 = std::numeric_limits<double>::infinity();
        r.e_max = N - f;
        r.all_correctable = true;
        return r;
    }
    if (m > 1 &&
        double(f) > 2.0 * (K - 1) + (4.0 * (K - 1) - 2.0 * N) / double(m - 1)) {
        r.t1 = 1.0;
        r.t2 = std::sqrt(double(N - f) * (1.0 + m) / (4.0 * (K - 1) - 2.0 * f));
        r.e_max = N - f;
        r.all_correctable = true;
        return r;
    }
    const double B2 = double(N - f) / (double(K - 1) - f / 2.0);
    double t1;
    if (std::abs(double(m) - B2) < 1e-12) {
        t1 = (B2 - 1.0) / (2.0 * m); // limit of the quadratic root
    } else {
        t1 = (-m + std::sqrt(double(m) * m + m * (m - B2) * (B2 - 1.0))) /
             (m * (m - B2));
    }
    r.t1 = t1;
    r.t2 = std::sqrt(double(N - f) * (1.0 + m * t1 * t1) / (4.0 * (K - 1) - 2.0 * f));
    double J = double(N - f) * m * t1 / (m * t1 + 1.0);
    r.e_max = floor_strict(J);
    return r;
}

AsymptoticScoreCost bec_pmas_coeffs(const TypeHistogram& hist) {
    double eta = 0;
    for (size_t i = 0; i < hist.size(); ++i) eta += double(hist[i]) * std::ldexp(1.0, -int(i));
    return {eta, eta / 2.0};
}

AsymptoticScoreCost bec_coeffs(const TypeHistogram& hist, const std::vector<double>& mi) {
    if (mi.size() < hist.size()) throw std::invalid_argument("need a coefficient per type");
    AsymptoticScoreCost sc;
    for (size_t i = 0; i < hist.size(); ++i) {
        sc.s += double(hist[i]) * mi[i];
        sc.c += 0.5 * double(hist[i]) * std::ldexp(1.0, int(i)) * mi[i] * mi[i];
    }
    return sc;
}

AsymptoticScoreCost proposed_coeffs(const TypeHistogram& hist) {
    AsymptoticScoreCost sc;
    if (!hist.empty()) {
        sc.s += double(hist[0]);
        sc.c += 0.5 * double(hist[0]);
    }
    if (hist.size() > 1) {
        sc.s += 0.5 * double(hist[1]);
        sc.c += 0.25 * double(hist[1]);
    }
    return sc;
}

AsymptoticScoreCost bsc_coeffs(int N, int64_t e, double t, int m) {
    return {double(N - e) + double(e) * t, double(N) * (1.0 + m * t * t) / 2.0};
}

AsymptoticScoreCost flip_or_erase_coeffs(int N, int64_t e, int64_t f, double t1, double t2,
                                         int m) {
    AsymptoticScoreCost sc;
    sc.s = double(N - e - f) + double(e) * t1 + double(f) * t2;
    sc.c = 0.5 * (double(N - f) * (1.0 + m * t1 * t1) + 2.0 * double(f) * t2 * t2);
    return sc;
}

AsymptoticScoreCost strategy_score_cost(const TypeHistogram& hist, const MasParams& params,
                                        int m) {
    const int64_t N = std::accumulate(hist.begin(), hist.end(), int64_t(0));
    switch (params.strategy) {
    case MasStrategy::Pmas:
        return bec_pmas_coeffs(hist);
    case MasStrategy::Proposed:
        return proposed_coeffs(hist);
    case MasStrategy::BscOptimal: {
        // hist holds bit-error types; only types 0 and 1 carry multiplicity
        double s = double(hist.empty() ? 0 : hist[0]) +
                   double(hist.size() > 1 ? hist[1] : 0) * params.t;
        return {s, double(N) * (1.0 + m * params.t * params.t) / 2.0};
    }
    case MasStrategy::FlipOrErase:
        throw std::invalid_argument("use flip_or_erase_coeffs with explicit (e, f)");
    }
    throw std::logic_error("unknown strategy");
}

} // namespace rsasd
