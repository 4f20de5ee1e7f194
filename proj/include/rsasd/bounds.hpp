#ifndef RSASD_BOUNDS_HPP
#define RSASD_BOUNDS_HPP

#include <string>
#include <vector>

#include "rsasd/rscode.hpp"

namespace rsasd {

struct BoundPoint {
    double param = 0; // epsilon or snr_db, per curve
    double fer = 0;
};

struct BoundCurve {
    std::string kind;     // "upper" | "lower" | "exact-predicate"
    std::string strategy;
    int M = 0;
    int N = 0, K = 0, m = 0;
    std::vector<BoundPoint> points;
};

// Upper tail P(X >= x) of a zero-mean Gaussian with variance N0/2.
double q_tail(double x, double N0);
// log q_tail, stable far into the tail.
double log_q_tail(double x, double N0);

struct BecFer {
    double exact = 0; // P(sum_j 2^{-B_j} <= K-1), B_j ~ Binomial(m, eps) i.i.d.
    double upper = 0; // P(Binomial(Nm, eps) > bit-erasure radius)
    double lower = 0; // P(Binomial(N, 1-(1-eps)^m) > 2(N-K))
};

// Frame-error probability of the certainly-decodable predicate on a
// bit-erasure channel under proportional multiplicities with infinite cost.
// exact is computed by lattice convolution in units of 2^-m.
BecFer bec_fer(int N, int K, int m, double eps);

// P(beta_j(i) >= gamma_l(n-i)): j-th largest reliability among i erroneous
// bits vs l-th largest among n-i correct bits, BPSK over AWGN with noise
// variance N0/2. Adaptive log-domain quadrature.
double order_stat_event(int n, int i, int j, int l, double N0);

// Order-statistics upper bound on the bit-level GMD frame error rate.
// literal_form drops the C(n, i) binomial factors, reproducing a common
// shorthand of the bound; the default is the proper binomial mixture.
double bgmd_awgn_upper(const CodeSpec& spec, int M, double N0, bool literal_form = false);

// Analytic FER of symbol-level bounded-distance decoding over BPSK/AWGN:
// P(Binomial(N, 1-(1-P_b)^m) > floor((N-K)/2)).
double bm_awgn_fer(const CodeSpec& spec, double N0);

} // namespace rsasd

#endif
