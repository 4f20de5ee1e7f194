#ifndef RSASD_GALOIS_HPP
#define RSASD_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace rsasd {

/// Exp/log tables for GF(2^m), polynomial basis, alpha primitive.
/// Immutable after construction; all operations are pure.
struct FieldTables {
    int m = 0;                       // extension degree, 1..16
    uint32_t prim_poly = 0;          // bit-packed, degree m
    std::vector<uint32_t> exp_table; // size q-1, exp_table[i] = alpha^i
    std::vector<int> log_table;      // size q, log_table[0] = -1

    uint32_t q() const { return 1u << m; }
    uint32_t order() const { return q() - 1; }
};

// Throws std::invalid_argument if m is out of range or the polynomial is
// not primitive of degree m.
FieldTables build_field(int m, std::optional<uint32_t> prim_poly = std::nullopt);

uint32_t default_primitive_poly(int m);

inline uint32_t gf_add(uint32_t a, uint32_t b) { return a ^ b; }

inline uint32_t gf_mul(uint32_t a, uint32_t b, const FieldTables& t) {
    if (a == 0 || b == 0) return 0;
    uint32_t s = uint32_t(t.log_table[a]) + uint32_t(t.log_table[b]);
    if (s >= t.order()) s -= t.order();
    return t.exp_table[s];
}

// a != 0
uint32_t gf_inv(uint32_t a, const FieldTables& t);

inline uint32_t gf_div(uint32_t a, uint32_t b, const FieldTables& t) {
    return gf_mul(a, gf_inv(b, t), t);
}

// alpha^e for any integer e (reduced mod q-1)
uint32_t gf_pow_alpha(int64_t e, const FieldTables& t);

// a^e, a in field
uint32_t gf_pow(uint32_t a, int64_t e, const FieldTables& t);

} // namespace rsasd

#endif
