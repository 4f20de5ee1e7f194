#include "rsasd/asd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rsasd {

namespace {

// C(n, k) mod 2 via Lucas.
inline bool binom_odd(int n, int k) { return (n & k) == k; }

struct Monomial {
    int64_t wdeg = -1;
    int ydeg = 0;
};

// Order: weighted degree, ties broken by lower Y-degree.
inline bool mono_less(const Monomial& a, const Monomial& b) {
    if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg;
    return a.ydeg < b.ydeg;
}

Monomial leading_monomial(const BivariatePoly& p, int wy) {
    Monomial lm;
    for (int j = 0; j < int(p.c.size()); ++j) {
        const auto& row = p.c[j];
        for (int i = int(row.size()) - 1; i >= 0; --i) {
            if (row[i]) {
                Monomial m{int64_t(i) + int64_t(wy) * j, j};
                if (lm.wdeg < 0 || mono_less(lm, m)) lm = m;
                break;
            }
        }
    }
    return lm;
}

// Hasse derivative D_{r,s} p evaluated at (x, y); xp/yp are power tables.
uint32_t hasse_eval(const BivariatePoly& p, int r, int s,
                    const std::vector<uint32_t>& xp, const std::vector<uint32_t>& yp,
                    const FieldTables& t) {
    uint32_t acc = 0;
    for (int j = s; j < int(p.c.size()); ++j) {
        if (!binom_odd(j, s)) continue;
        const auto& row = p.c[j];
        uint32_t inner = 0;
        for (int i = r; i < int(row.size()); ++i) {
            if (row[i] && binom_odd(i, r)) inner ^= gf_mul(row[i], xp[size_t(i - r)], t);
        }
        if (inner) acc ^= gf_mul(inner, yp[size_t(j - s)], t);
    }
    return acc;
}

// p <- a*p + b*q
void axpby(BivariatePoly& p, uint32_t a, const BivariatePoly& q, uint32_t b,
           const FieldTables& t) {
    if (q.c.size() > p.c.size()) p.c.resize(q.c.size());
    for (size_t j = 0; j < p.c.size(); ++j) {
        auto& pr = p.c[j];
        const std::vector<uint32_t>* qr = j < q.c.size() ? &q.c[j] : nullptr;
        size_t len = std::max(pr.size(), qr ? qr->size() : 0);
        pr.resize(len, 0);
        for (size_t i = 0; i < len; ++i) {
            uint32_t pv = pr[i] ? gf_mul(a, pr[i], t) : 0;
            uint32_t qv = (qr && i < qr->size() && (*qr)[i]) ? gf_mul(b, (*qr)[i], t) : 0;
            pr[i] = pv ^ qv;
        }
    }
}

// p <- (X + x) * p   (in place; new[e] = old[e-1] + x*old[e])
void mul_by_x_plus(BivariatePoly& p, uint32_t x, const FieldTables& t) {
    for (auto& row : p.c) {
        row.push_back(0);
        for (size_t e = row.size() - 1; e >= 1; --e)
            row[e] = row[e - 1] ^ (x && row[e] ? gf_mul(x, row[e], t) : 0);
        row[0] = x && row[0] ? gf_mul(x, row[0], t) : 0;
    }
}

// Evaluate univariate GF poly at x (Horner).
uint32_t poly_eval(const std::vector<uint32_t>& p, uint32_t x, const FieldTables& t) {
    uint32_t acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = gf_mul(acc, x, t) ^ p[i];
    return acc;
}

void trim(std::vector<uint32_t>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<uint32_t> poly_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                               const FieldTables& t) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) r[i + j] ^= gf_mul(a[i], b[j], t);
    }
    return r;
}

// Strip the largest power of X dividing all coefficients.
void strip_x(BivariatePoly& p) {
    size_t s = SIZE_MAX;
    for (const auto& row : p.c) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i]) {
                s = std::min(s, i);
                break;
            }
        }
    }
    if (s == SIZE_MAX || s == 0) return;
    for (auto& row : p.c)
        row.erase(row.begin(), row.begin() + std::min(s, row.size()));
}

// Q(X, X*Y + y)
BivariatePoly shift_substitute(const BivariatePoly& q, uint32_t y, const FieldTables& t) {
    BivariatePoly out;
    out.c.assign(q.c.size(), {});
    for (int j = 0; j < int(q.c.size()); ++j) {
        if (q.c[j].empty()) continue;
        for (int u = 0; u <= j; ++u) {
            if (!binom_odd(j, u)) continue;
            uint32_t yk = gf_pow(y, j - u, t);
            if (j > u && yk == 0) continue;
            // contributes q_j(X) * y^{j-u} * X^u to the Y^u coefficient
            auto& dst = out.c[u];
            size_t need = q.c[j].size() + size_t(u);
            if (dst.size() < need) dst.resize(need, 0);
            for (size_t i = 0; i < q.c[j].size(); ++i)
                if (q.c[j][i]) dst[i + size_t(u)] ^= gf_mul(q.c[j][i], yk, t);
        }
    }
    return out;
}

void rr_dfs(const BivariatePoly& q, int depth, std::vector<uint32_t>& prefix,
            const CodeSpec& spec, std::vector<std::vector<uint32_t>>& out) {
    const FieldTables& t = spec.field;
    if (depth == spec.K) return;
    // roots of q(0, Y) by exhaustive scan over GF(q)
    std::vector<uint32_t> u(q.c.size());
    for (size_t j = 0; j < q.c.size(); ++j) u[j] = q.c[j].empty() ? 0 : q.c[j][0];
    for (uint32_t y = 0; y < t.q(); ++y) {
        uint32_t v = 0;
        for (size_t j = u.size(); j-- > 0;) v = gf_mul(v, y, t) ^ u[j];
        if (v != 0) continue;
        prefix.push_back(y);
        BivariatePoly next = shift_substitute(q, y, t);
        strip_x(next);
        // a vanished Y-free part means prefix (zero-padded) is already a root;
        // deeper roots sharing the prefix may still exist, so keep recursing
        bool y_free_zero = next.c.empty() || next.c[0].empty() ||
                           std::all_of(next.c[0].begin(), next.c[0].end(),
                                       [](uint32_t c) { return c == 0; });
        if (y_free_zero) {
            std::vector<uint32_t> g = prefix;
            g.resize(size_t(spec.K), 0);
            out.push_back(std::move(g));
        }
        rr_dfs(next, depth + 1, prefix, spec, out);
        prefix.pop_back();
    }
}

} // namespace

bool BivariatePoly::is_zero() const {
    for (const auto& row : c)
        for (uint32_t v : row)
            if (v) return false;
    return true;
}

int64_t score(const MultiplicityMatrix& mm, const Codeword& c) {
    int64_t s = 0;
    for (int j = 0; j < mm.N; ++j) s += mm.at(int(c[size_t(j)]), j);
    return s;
}

int64_t cost(const MultiplicityMatrix& mm) {
    int64_t c = 0;
    for (int v : mm.mm) c += int64_t(v) * (v + 1) / 2;
    return c;
}

int64_t t2_of_s(int64_t S, int K) {
    if (S <= 0) return 0;
    if (K == 1) return std::numeric_limits<int64_t>::max() / 2; // message degree unconstrained
    int64_t km1 = K - 1;
    int64_t a = (S + km1 - 1) / km1 - 1; // a(K-1) < S <= (a+1)(K-1)
    return (a + 1) * (2 * S - a * km1);
}

double t_of_s(int64_t S, int K) { return double(t2_of_s(S, K)) / 2.0; }

bool certainly_decodable_finite(int64_t S, int64_t C, int K) {
    return S > 0 && t2_of_s(S, K) > 2 * C;
}

bool certainly_decodable_asymptotic(const AsymptoticScoreCost& sc, int K) {
    if (sc.s <= 0) return false;
    return sc.s * sc.s > 2.0 * double(K - 1) * sc.c;
}

BivariatePoly interpolate(const MultiplicityMatrix& mm, const CodeSpec& spec, int64_t budget) {
    const FieldTables& t = spec.field;
    const int K = spec.K;
    if (K < 2) throw std::invalid_argument("interpolation requires K >= 2");
    if (mm.q != int(t.q()) || mm.N != spec.N)
        throw std::invalid_argument("multiplicity matrix dimensions do not match the code");

    const int64_t C = cost(mm);
    if (C > budget) throw InterpolationBudgetError(C, budget);

    if (C == 0) {
        BivariatePoly one;
        one.c = {{1}};
        return one;
    }

    // Smallest Delta whose monomial count {i + (K-1)j <= Delta} exceeds C
    // guarantees a nonzero solution; L is the max Y-degree at that Delta.
    const int64_t wy = K - 1;
    int64_t delta = 0;
    auto mono_count = [&](int64_t d) {
        int64_t cnt = 0;
        for (int64_t j = 0; j * wy <= d; ++j) cnt += d - j * wy + 1;
        return cnt;
    };
    while (mono_count(delta) <= C) ++delta;
    const int L = int(delta / wy);

    std::vector<BivariatePoly> basis(size_t(L) + 1);
    for (int j = 0; j <= L; ++j) {
        basis[size_t(j)].c.assign(size_t(j) + 1, {});
        basis[size_t(j)].c[size_t(j)] = {1};
    }

    const int maxXPow = int(C) + 2;
    std::vector<uint32_t> xp(size_t(maxXPow) + 1), yp(size_t(L) + 1);
    std::vector<uint32_t> d(basis.size());

    for (int j = 0; j < mm.N; ++j) {
        const uint32_t x = spec.eval_points[size_t(j)];
        for (int i = 0; i < mm.q; ++i) {
            const int M = mm.at(i, j);
            if (M <= 0) continue;
            const uint32_t y = uint32_t(i);
            xp[0] = 1;
            for (int e = 1; e <= maxXPow; ++e) xp[size_t(e)] = gf_mul(xp[size_t(e) - 1], x, t);
            yp[0] = 1;
            for (int e = 1; e <= L; ++e) yp[size_t(e)] = gf_mul(yp[size_t(e) - 1], y, t);

            // constraints in nondecreasing Hasse order so earlier ones stay satisfied
            for (int order = 0; order < M; ++order) {
                for (int r = 0; r <= order; ++r) {
                    const int s = order - r;
                    if (s > L) continue;
                    int best = -1;
                    Monomial best_lm;
                    for (size_t b = 0; b < basis.size(); ++b) {
                        d[b] = hasse_eval(basis[b], r, s, xp, yp, t);
                        if (d[b]) {
                            Monomial lm = leading_monomial(basis[b], int(wy));
                            if (best < 0 || mono_less(lm, best_lm)) {
                                best = int(b);
                                best_lm = lm;
                            }
                        }
                    }
                    if (best < 0) continue;
                    BivariatePoly pivot = basis[size_t(best)];
                    const uint32_t dstar = d[size_t(best)];
                    for (size_t b = 0; b < basis.size(); ++b) {
                        if (int(b) == best || !d[b]) continue;
                        axpby(basis[b], dstar, pivot, d[b], t);
                    }
                    mul_by_x_plus(basis[size_t(best)], x, t);
                }
            }
        }
    }

    int best = -1;
    Monomial best_lm;
    for (size_t b = 0; b < basis.size(); ++b) {
        if (basis[b].is_zero()) continue;
        Monomial lm = leading_monomial(basis[b], int(wy));
        if (best < 0 || mono_less(lm, best_lm)) {
            best = int(b);
            best_lm = lm;
        }
    }
    return basis[size_t(best)];
}

bool passes_through(const BivariatePoly& poly, uint32_t x, uint32_t y, int mult,
                    const CodeSpec& spec) {
    const FieldTables& t = spec.field;
    size_t maxX = 0;
    for (const auto& row : poly.c) maxX = std::max(maxX, row.size());
    std::vector<uint32_t> xp(maxX + 1), yp(poly.c.size() + 1);
    xp[0] = 1;
    for (size_t e = 1; e <= maxX; ++e) xp[e] = gf_mul(xp[e - 1], x, t);
    yp[0] = 1;
    for (size_t e = 1; e <= poly.c.size(); ++e) yp[e] = gf_mul(yp[e - 1], y, t);
    for (int order = 0; order < mult; ++order)
        for (int r = 0; r <= order; ++r)
            if (hasse_eval(poly, r, order - r, xp, yp, t) != 0) return false;
    return true;
}

std::vector<std::vector<uint32_t>> factorize(const BivariatePoly& poly, const CodeSpec& spec) {
    if (poly.is_zero()) throw std::invalid_argument("factorize requires a nonzero polynomial");
    BivariatePoly q = poly;
    strip_x(q);
    std::vector<std::vector<uint32_t>> raw;
    std::vector<uint32_t> prefix;
    rr_dfs(q, 0, prefix, spec, raw);
    // exact divisibility filter + dedupe
    std::vector<std::vector<uint32_t>> out;
    for (auto& g : raw) {
        if (std::find(out.begin(), out.end(), g) != out.end()) continue;
        if (divides(poly, g, spec)) out.push_back(g);
    }
    return out;
}

bool divides(const BivariatePoly& poly, const std::vector<uint32_t>& g, const CodeSpec& spec) {
    const FieldTables& t = spec.field;
    // (Y - g(X)) | A iff A(X, g(X)) == 0 as a polynomial
    std::vector<uint32_t> gp = g;
    trim(gp);
    std::vector<uint32_t> acc;    // A(X, g(X))
    std::vector<uint32_t> pw{1};  // g(X)^j
    for (size_t j = 0; j < poly.c.size(); ++j) {
        if (j > 0) pw = poly_mul(pw, gp, t);
        if (poly.c[j].empty()) continue;
        std::vector<uint32_t> term = poly_mul(poly.c[j], pw, t);
        if (acc.size() < term.size()) acc.resize(term.size(), 0);
        for (size_t i = 0; i < term.size(); ++i) acc[i] ^= term[i];
    }
    trim(acc);
    return acc.empty();
}

double llr_metric(const Codeword& c, const SoftObservation& obs, const CodeSpec& spec) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<int> bits = binary_image(c, spec);
    double metric = 0;
    for (size_t j = 0; j < bits.size(); ++j) {
        double L = obs.llr[j];
        if (L == 0.0) continue;
        int fav = L > 0 ? 0 : 1;
        double mag = std::abs(L);
        if (mag == inf) {
            if (bits[j] != fav) return -inf;
            continue;
        }
        metric += bits[j] == fav ? mag : -mag;
    }
    return metric;
}

DecodeResult asd_decode(const MultiplicityMatrix& mm, const CodeSpec& spec,
                        const SoftObservation& obs, int64_t budget) {
    DecodeResult res;
    BivariatePoly poly = interpolate(mm, spec, budget);
    if (poly.is_zero()) return res;
    for (const auto& g : factorize(poly, spec)) {
        Codeword c = encode(g, spec);
        if (std::find(res.list.begin(), res.list.end(), c) == res.list.end())
            res.list.push_back(std::move(c));
    }
    if (res.list.empty()) return res;
    const Codeword* best = nullptr;
    double best_metric = 0;
    for (const auto& c : res.list) {
        double metric = llr_metric(c, obs, spec);
        if (!best || metric > best_metric || (metric == best_metric && c < *best)) {
            best = &c;
            best_metric = metric;
        }
    }
    res.selected = *best;
    return res;
}

std::string dump_poly(const BivariatePoly& poly) {
    std::ostringstream os;
    for (size_t j = 0; j < poly.c.size(); ++j)
        for (size_t i = 0; i < poly.c[j].size(); ++i)
            if (poly.c[j][i]) os << i << " " << j << " " << poly.c[j][i] << "\n";
    return os.str();
}

} // namespace rsasd
