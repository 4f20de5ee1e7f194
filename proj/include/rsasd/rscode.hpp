#ifndef RSASD_RSCODE_HPP
#define RSASD_RSCODE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rsasd/galois.hpp"

namespace rsasd {

/// RS(N, K) code in evaluation form: codewords are evaluations of message
/// polynomials of degree < K at the N distinct points of eval_points.
struct CodeSpec {
    int N = 0;
    int K = 0;
    FieldTables field;
    std::vector<uint32_t> eval_points; // ordered, pairwise distinct, size N

    int m() const { return field.m; }
    int n() const { return N * field.m; } // bit-level length
    int k() const { return K * field.m; }
    int d_min() const { return N - K + 1; }
    double rate() const { return double(K) / double(N); }
    bool narrow_sense() const;
};

// Gamma = (alpha^0, ..., alpha^{N-1}) with N = 2^m - 1.
CodeSpec make_narrow_sense(int N, int K, int m,
                           std::optional<uint32_t> prim_poly = std::nullopt);

// Arbitrary evaluation point set (points must be distinct).
CodeSpec make_code(int K, FieldTables field, std::vector<uint32_t> eval_points);

using Codeword = std::vector<uint32_t>;

Codeword encode(const std::vector<uint32_t>& message, const CodeSpec& spec);

// Polynomial basis, LSB first: symbol value v maps to bits (v>>0&1, ..., v>>(m-1)&1).
std::vector<int> binary_image(const Codeword& c, const CodeSpec& spec);
Codeword from_bits(const std::vector<int>& bits, const CodeSpec& spec);

// Narrow-sense only: row i is sum_j word_j alpha^{i j}, i = 1..N-K.
// Zero vector iff word is a codeword.
std::vector<uint32_t> syndrome(const std::vector<uint32_t>& word, const CodeSpec& spec);

bool is_codeword(const std::vector<uint32_t>& word, const CodeSpec& spec);

} // namespace rsasd

#endif
