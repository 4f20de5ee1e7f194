#include "rsasd/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rsasd/regions.hpp"

namespace rsasd {

namespace {

double log_binom(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// a * logv with the convention 0 * (-inf) = 0.
double mul_log(double a, double logv) { return a == 0 ? 0.0 : a * logv; }

// log(1 - e^v) for v <= 0.
double log1mexp(double v) {
    if (v >= 0) return -std::numeric_limits<double>::infinity();
    return v > -0.6931471805599453 ? std::log(-std::expm1(v)) : std::log1p(-std::exp(v));
}

double logsumexp(const std::vector<double>& v) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double x : v) mx = std::max(mx, x);
    if (!std::isfinite(mx)) return mx;
    double s = 0;
    for (double x : v) s += std::exp(x - mx);
    return mx + std::log(s);
}

// P(Binomial(n, p) >= k0)
double binom_tail(int n, int k0, double p) {
    if (k0 <= 0) return 1.0;
    if (k0 > n) return 0.0;
    if (p <= 0) return 0.0;
    if (p >= 1) return 1.0;
    const double lp = std::log(p), lq = std::log1p(-p);
    std::vector<double> terms;
    terms.reserve(size_t(n - k0 + 1));
    for (int i = k0; i <= n; ++i) terms.push_back(log_binom(n, i) + i * lp + (n - i) * lq);
    return std::min(1.0, std::exp(logsumexp(terms)));
}

struct Quad {
    double tol;
    int max_depth = 60;

    template <typename F>
    double simpson(const F& f, double a, double b, double fa, double fm, double fb) const {
        return (b - a) / 6.0 * (fa + 4 * fm + fb);
    }

    template <typename F>
    double recurse(const F& f, double a, double b, double fa, double fm, double fb,
                   double whole, int depth) const {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        double flm = f(lm), frm = f(rm);
        double left = simpson(f, a, m, fa, flm, fm);
        double right = simpson(f, m, b, fm, frm, fb);
        if (depth >= max_depth || std::abs(left + right - whole) <= 15 * tol)
            return left + right + (left + right - whole) / 15.0;
        return recurse(f, a, m, fa, flm, fm, left, depth + 1) +
               recurse(f, m, b, fm, frm, fb, right, depth + 1);
    }

    template <typename F>
    double integrate(const F& f, double a, double b) const {
        double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
        double whole = simpson(f, a, b, fa, fm, fb);
        return recurse(f, a, b, fa, fm, fb, whole, 0);
    }
};

} // namespace

double q_tail(double x, double N0) {
    if (!(N0 > 0)) throw std::invalid_argument("N0 must be positive");
    return 0.5 * std::erfc(x / std::sqrt(N0));
}

double log_q_tail(double x, double N0) {
    if (!(N0 > 0)) throw std::invalid_argument("N0 must be positive");
    double z = x / std::sqrt(N0);
    if (z < 20) return std::log(0.5 * std::erfc(z));
    // asymptotic series for the far tail where erfc underflows
    double z2 = z * z;
    return -z2 - std::log(z) - 0.5 * std::log(M_PI) +
           std::log1p(-0.5 / z2 + 0.75 / (z2 * z2));
}

BecFer bec_fer(int N, int K, int m, double eps) {
    if (eps < 0 || eps > 1) throw std::invalid_argument("eps must be in [0, 1]");
    BecFer out;

    // exact: lattice convolution of 2^{m - B_j} in units of 2^{-m}
    const int64_t unit_total = int64_t(N) << m;
    const int64_t threshold = int64_t(K - 1) << m;
    std::vector<double> w(size_t(m) + 1);
    for (int b = 0; b <= m; ++b)
        w[size_t(b)] = std::exp(log_binom(m, b) + mul_log(b, std::log(eps)) +
                                mul_log(m - b, std::log1p(-eps)));
    std::vector<double> dist(size_t(unit_total) + 1, 0.0), next(size_t(unit_total) + 1, 0.0);
    dist[0] = 1.0;
    int64_t reach = 0;
    for (int j = 0; j < N; ++j) {
        std::fill(next.begin(), next.begin() + std::min<int64_t>(reach + (1 << m), unit_total) + 1, 0.0);
        for (int64_t t = 0; t <= reach; ++t) {
            double p = dist[size_t(t)];
            if (p == 0) continue;
            for (int b = 0; b <= m; ++b)
                next[size_t(t + (int64_t(1) << (m - b)))] += p * w[size_t(b)];
        }
        reach += int64_t(1) << m;
        dist.swap(next);
    }
    double acc = 0;
    for (int64_t t = 0; t <= std::min(threshold, unit_total); ++t) acc += dist[size_t(t)];
    out.exact = std::min(1.0, acc);

    const int64_t f_max = bec_radius(N, K, m);
    out.upper = binom_tail(N * m, int(std::min<int64_t>(f_max + 1, int64_t(N) * m + 1)), eps);
    const int64_t nd = bec_nondecodable_threshold(N, K);
    double p_sym = -std::expm1(m * std::log1p(-eps));
    out.lower = binom_tail(N, int(std::min<int64_t>(nd + 1, N + 1)), p_sym);
    return out;
}

double order_stat_event(int n, int i, int j, int l, double N0) {
    if (j < 1 || j > i || i > n || l < 1 || l > n - i)
        throw std::invalid_argument("order_stat_event index constraints violated");
    const double lq1 = log_q_tail(1, N0);           // log P_b
    const double l1mq1 = log1mexp(lq1);             // log(1 - P_b)
    const double lnorm = -0.5 * std::log(M_PI * N0); // log of the Gaussian pdf prefactor
    const double lcoef = std::lgamma(n - i + 1.0) - std::lgamma(double(l)) -
                         std::lgamma(n - i - l + 1.0);

    auto integrand = [&](double x) -> double {
        // gamma_l density (l-th largest of n-i correct reliabilities)
        double lqc = log_q_tail(x - 1, N0) - l1mq1;   // log(1 - F_c)
        if (lqc > 0) lqc = 0;
        double lFc = log1mexp(lqc);
        double lfc = lnorm - (x - 1) * (x - 1) / N0 - l1mq1;
        double lg = lcoef + mul_log(l - 1, lqc) + lfc + mul_log(n - i - l, lFc);
        if (!std::isfinite(lg)) return 0.0;

        // P(beta_j(i) >= x): at least j of i error reliabilities exceed x
        double lqe = log_q_tail(x + 1, N0) - lq1;     // log(1 - F_e)
        if (lqe > 0) lqe = 0;
        double lFe = log1mexp(lqe);
        std::vector<double> terms;
        terms.reserve(size_t(i - j + 1));
        for (int r = j; r <= i; ++r)
            terms.push_back(log_binom(i, r) + mul_log(r, lqe) + mul_log(i - r, lFe));
        double ls = logsumexp(terms);
        if (ls > 0) ls = 0;
        double v = lg + ls;
        return std::isfinite(v) ? std::exp(v) : 0.0;
    };

    double X = 1.0 + std::sqrt(N0 * (std::log(double(n) + 1.0) + 80.0));
    // composite panels so the coarse first pass cannot step over the density
    // peak; each panel is then refined adaptively
    const int panels = 64;
    Quad q{1e-12 / panels};
    double res = 0;
    for (int p = 0; p < panels; ++p)
        res += q.integrate(integrand, X * p / panels, X * (p + 1) / panels);
    return std::clamp(res, 0.0, 1.0);
}

double bgmd_awgn_upper(const CodeSpec& spec, int M, double N0, bool literal_form) {
    const int n = spec.n();
    const double lpb = log_q_tail(1, N0);
    const double l1mpb = log1mexp(lpb);

    std::vector<int64_t> e_of_f;
    for (int f = 0; f <= spec.N; ++f) {
        int64_t e = mixed_region_finite(spec.N, spec.K, M, f);
        if (e < 0) break;
        e_of_f.push_back(e);
    }
    if (e_of_f.empty()) return 1.0;
    const int64_t e_max0 = e_of_f[0];
    const int f_max = int(e_of_f.size()) - 1;

    double total = 0;
    for (int i = int(e_max0) + 1; i <= f_max; ++i) {
        double lterm = (literal_form ? 0.0 : log_binom(n, i)) + i * lpb + (n - i) * l1mpb;
        double minp = 1.0;
        for (int f = 0; f <= f_max; ++f) {
            int e = int(e_of_f[size_t(f)]);
            int jj = e + 1, ll = n - e - f;
            if (jj > i) continue;
            if (ll < 1 || ll > n - i) continue; // needs i <= e + f <= n - 1
            minp = std::min(minp, order_stat_event(n, i, jj, ll, N0));
        }
        total += std::exp(lterm) * minp;
    }

    // every frame with more than f_max bit errors is counted as lost
    if (literal_form) {
        std::vector<double> terms;
        for (int i = f_max + 1; i <= n; ++i) terms.push_back(i * lpb + (n - i) * l1mpb);
        if (!terms.empty()) total += std::exp(logsumexp(terms));
    } else {
        total += binom_tail(n, f_max + 1, std::exp(lpb));
    }
    return std::min(total, 1.0);
}

double bm_awgn_fer(const CodeSpec& spec, double N0) {
    double pb = q_tail(1, N0);
    double ps = -std::expm1(spec.m() * std::log1p(-pb));
    return binom_tail(spec.N, (spec.N - spec.K) / 2 + 1, ps);
}

} // namespace rsasd
