#include "rsasd/rscode.hpp"

#include <set>
#include <stdexcept>

namespace rsasd {

bool CodeSpec::narrow_sense() const {
    if (N != int(field.order())) return false;
    for (int j = 0; j < N; ++j)
        if (eval_points[j] != field.exp_table[j]) return false;
    return true;
}

CodeSpec make_narrow_sense(int N, int K, int m, std::optional<uint32_t> prim_poly) {
    FieldTables field = build_field(m, prim_poly);
    if (N != int(field.order()))
        throw std::invalid_argument("narrow-sense code requires N = 2^m - 1");
    if (K < 1 || K > N) throw std::invalid_argument("K must be in [1, N]");
    CodeSpec spec;
    spec.N = N;
    spec.K = K;
    spec.eval_points.assign(field.exp_table.begin(), field.exp_table.end());
    spec.field = std::move(field);
    return spec;
}

CodeSpec make_code(int K, FieldTables field, std::vector<uint32_t> eval_points) {
    const int N = int(eval_points.size());
    if (N < 1 || N > int(field.q()))
        throw std::invalid_argument("need 1 <= N <= 2^m evaluation points");
    if (K < 1 || K > N) throw std::invalid_argument("K must be in [1, N]");
    std::set<uint32_t> distinct(eval_points.begin(), eval_points.end());
    if (int(distinct.size()) != N)
        throw std::invalid_argument("evaluation points must be distinct");
    CodeSpec spec;
    spec.N = N;
    spec.K = K;
    spec.field = std::move(field);
    spec.eval_points = std::move(eval_points);
    return spec;
}

Codeword encode(const std::vector<uint32_t>& message, const CodeSpec& spec) {
    if (int(message.size()) != spec.K)
        throw std::invalid_argument("message length must equal K");
    const FieldTables& t = spec.field;
    Codeword c(spec.N);
    for (int j = 0; j < spec.N; ++j) {
        // Horner evaluation of g at gamma_j
        uint32_t x = spec.eval_points[j];
        uint32_t acc = 0;
        for (int i = spec.K - 1; i >= 0; --i)
            acc = gf_add(gf_mul(acc, x, t), message[i]);
        c[j] = acc;
    }
    return c;
}

std::vector<int> binary_image(const Codeword& c, const CodeSpec& spec) {
    if (int(c.size()) != spec.N) throw std::invalid_argument("codeword length must equal N");
    std::vector<int> bits(spec.n());
    for (int j = 0; j < spec.N; ++j)
        for (int b = 0; b < spec.m(); ++b)
            bits[j * spec.m() + b] = int((c[j] >> b) & 1u);
    return bits;
}

Codeword from_bits(const std::vector<int>& bits, const CodeSpec& spec) {
    if (int(bits.size()) != spec.n())
        throw std::invalid_argument("bit vector length must equal N*m");
    Codeword c(spec.N, 0);
    for (int j = 0; j < spec.N; ++j)
        for (int b = 0; b < spec.m(); ++b)
            if (bits[j * spec.m() + b]) c[j] |= 1u << b;
    return c;
}

std::vector<uint32_t> syndrome(const std::vector<uint32_t>& word, const CodeSpec& spec) {
    if (!spec.narrow_sense())
        throw std::invalid_argument("syndrome requires the narrow-sense evaluation point set");
    if (int(word.size()) != spec.N) throw std::invalid_argument("word length must equal N");
    const FieldTables& t = spec.field;
    std::vector<uint32_t> syn(spec.N - spec.K);
    for (int i = 1; i <= spec.N - spec.K; ++i) {
        uint32_t acc = 0;
        for (int j = 0; j < spec.N; ++j)
            if (word[j]) acc ^= gf_mul(word[j], gf_pow_alpha(int64_t(i) * j, t), t);
        syn[i - 1] = acc;
    }
    return syn;
}

bool is_codeword(const std::vector<uint32_t>& word, const CodeSpec& spec) {
    for (uint32_t s : syndrome(word, spec))
        if (s != 0) return false;
    return true;
}

} // namespace rsasd
