#include "rsasd/galois.hpp"

#include <stdexcept>
#include <string>

namespace rsasd {

uint32_t default_primitive_poly(int m) {
    // x^m + ... + 1, primitive over GF(2), fixed so golden values are stable.
    static const uint32_t polys[17] = {
        0,
        0b11,                // m=1:  x+1
        0b111,               // m=2:  x^2+x+1
        0b1011,              // m=3:  x^3+x+1
        0b10011,             // m=4:  x^4+x+1
        0b100101,            // m=5:  x^5+x^2+1
        0b1000011,           // m=6:  x^6+x+1
        0b10001001,          // m=7:  x^7+x^3+1
        0b100011101,         // m=8:  x^8+x^4+x^3+x^2+1
        0b1000010001,        // m=9:  x^9+x^4+1
        0b10000001001,       // m=10: x^10+x^3+1
        0b100000000101,      // m=11: x^11+x^2+1
        0b1000001010011,     // m=12
        0b10000000011011,    // m=13
        0b100010001000011,   // m=14
        0b1000000000000011,  // m=15: x^15+x+1
        0b10001000000001011, // m=16
    };
    if (m < 1 || m > 16) throw std::invalid_argument("field degree must be in [1,16]");
    return polys[m];
}

FieldTables build_field(int m, std::optional<uint32_t> prim_poly) {
    if (m < 1 || m > 16) throw std::invalid_argument("field degree must be in [1,16]");
    uint32_t poly = prim_poly.value_or(default_primitive_poly(m));
    if ((poly >> m) != 1u)
        throw std::invalid_argument("polynomial " + std::to_string(poly) +
                                    " does not have degree " + std::to_string(m));

    FieldTables t;
    t.m = m;
    t.prim_poly = poly;
    const uint32_t q = 1u << m;
    t.exp_table.assign(q - 1, 0);
    t.log_table.assign(q, -1);

    // Generate powers of alpha = x, reducing by the polynomial.
    uint32_t v = 1;
    for (uint32_t i = 0; i < q - 1; ++i) {
        if (t.log_table[v] != -1)
            throw std::invalid_argument("polynomial is not primitive: alpha has order < 2^m-1");
        t.exp_table[i] = v;
        t.log_table[v] = int(i);
        v <<= 1;
        if (v & q) v ^= poly;
    }
    if (v != 1)
        throw std::invalid_argument("polynomial is not primitive");
    return t;
}

uint32_t gf_inv(uint32_t a, const FieldTables& t) {
    if (a == 0) throw std::domain_error("inverse of zero");
    int l = t.log_table[a];
    return l == 0 ? 1u : t.exp_table[t.order() - uint32_t(l)];
}

uint32_t gf_pow_alpha(int64_t e, const FieldTables& t) {
    int64_t o = t.order();
    int64_t r = e % o;
    if (r < 0) r += o;
    return t.exp_table[size_t(r)];
}

uint32_t gf_pow(uint32_t a, int64_t e, const FieldTables& t) {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("0 to a negative power");
        return 0;
    }
    return gf_pow_alpha(int64_t(t.log_table[a]) * e, t);
}

} // namespace rsasd
