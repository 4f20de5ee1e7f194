#ifndef RSASD_ASD_HPP
#define RSASD_ASD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rsasd/channels.hpp"
#include "rsasd/rscode.hpp"

namespace rsasd {

/// q x N nonnegative integer multiplicities; row index = field element value.
struct MultiplicityMatrix {
    int q = 0;
    int N = 0;
    std::vector<int> mm; // column-major

    MultiplicityMatrix() = default;
    MultiplicityMatrix(int q_, int N_) : q(q_), N(N_), mm(size_t(q_) * N_, 0) {}
    int& at(int i, int j) { return mm[size_t(j) * q + i]; }
    int at(int i, int j) const { return mm[size_t(j) * q + i]; }
};

/// A(X,Y) = sum c[j][i] X^i Y^j over GF(q).
struct BivariatePoly {
    std::vector<std::vector<uint32_t>> c; // c[j] = X-coefficients of Y^j

    bool is_zero() const;
};

/// Strategy-level score/cost in units of M and M^2 (cost -> c*M^2 as M -> inf).
struct AsymptoticScoreCost {
    double s = 0; // score coefficient
    double c = 0; // cost coefficient
};

struct DecodeResult {
    std::vector<Codeword> list;
    std::optional<Codeword> selected;
    bool failed() const { return !selected.has_value(); }
};

struct InterpolationBudgetError : std::runtime_error {
    int64_t cost;
    int64_t budget;
    InterpolationBudgetError(int64_t cost_, int64_t budget_)
        : std::runtime_error("interpolation cost " + std::to_string(cost_) +
                             " exceeds budget " + std::to_string(budget_)),
          cost(cost_), budget(budget_) {}
};

int64_t score(const MultiplicityMatrix& mm, const Codeword& c);
int64_t cost(const MultiplicityMatrix& mm);

// Piecewise linear threshold: T(S) = (a+1)(S - a(K-1)/2) on a(K-1) < S <= (a+1)(K-1).
// Exact (value is a half-integer).
double t_of_s(int64_t S, int K);
// 2*T(S) as an exact integer, used for fencepost-free comparisons.
int64_t t2_of_s(int64_t S, int K);

// Finite cost: T(S) > C.
bool certainly_decodable_finite(int64_t S, int64_t C, int K);
// Infinite cost, on strategy coefficients: s > sqrt(2(K-1)c)
// (equivalently s^2 > 2(K-1)c; strict so that the BEC condition reads eta > K-1).
bool certainly_decodable_asymptotic(const AsymptoticScoreCost& sc, int K);

constexpr int64_t kDefaultInterpolationBudget = 1'000'000;

// Minimal (1, K-1)-weighted-degree polynomial passing through every
// (gamma_j, alpha_i) with multiplicity >= M_{i,j} (Koetter iteration).
// Throws InterpolationBudgetError when cost(mm) > budget.
BivariatePoly interpolate(const MultiplicityMatrix& mm, const CodeSpec& spec,
                          int64_t budget = kDefaultInterpolationBudget);

// All Hasse derivatives of order < mult vanish at (x, y).
bool passes_through(const BivariatePoly& poly, uint32_t x, uint32_t y, int mult,
                    const CodeSpec& spec);

// All message polynomials g with deg g < K and (Y - g(X)) | poly.
std::vector<std::vector<uint32_t>> factorize(const BivariatePoly& poly, const CodeSpec& spec);

// Exact check that (Y - g(X)) divides poly.
bool divides(const BivariatePoly& poly, const std::vector<uint32_t>& g, const CodeSpec& spec);

// Full pipeline: interpolate, factorize, re-encode, pick the most likely
// candidate under obs (ties broken by lexicographically smallest symbols).
DecodeResult asd_decode(const MultiplicityMatrix& mm, const CodeSpec& spec,
                        const SoftObservation& obs,
                        int64_t budget = kDefaultInterpolationBudget);

// Sum over bits of sign-matched |LLR|; erased bits contribute 0; a mismatch
// on an infinitely reliable bit gives -inf.
double llr_metric(const Codeword& c, const SoftObservation& obs, const CodeSpec& spec);

// Text dump of the interpolation polynomial as (i, j, coefficient) triples.
std::string dump_poly(const BivariatePoly& poly);

} // namespace rsasd

#endif
