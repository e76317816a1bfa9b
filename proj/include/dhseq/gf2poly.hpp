#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhseq/errors.hpp"

namespace dhseq {

struct BinarySequence;

// Dense polynomial over GF(2), 64 coefficients per word, no trailing zero words.
class BinaryPoly {
public:
    BinaryPoly() = default;  // the zero polynomial

    static BinaryPoly one();
    static BinaryPoly x_pow(std::size_t n);
    static BinaryPoly x_pow_n_plus_one(std::size_t n);  // x^n + 1
    static BinaryPoly from_exponents(std::initializer_list<std::size_t> exps);
    static BinaryPoly from_exponents(const std::vector<std::size_t>& exps);
    static BinaryPoly from_coefficient_bits(const std::vector<std::uint8_t>& bits);
    static BinaryPoly from_words(std::vector<std::uint64_t> words);

    bool is_zero() const { return words_.empty(); }
    // The zero polynomial has no degree.
    std::optional<std::size_t> degree() const;
    bool coeff(std::size_t i) const;
    std::size_t term_count() const;

    BinaryPoly& operator+=(const BinaryPoly& rhs);
    friend BinaryPoly operator+(BinaryPoly lhs, const BinaryPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b);
    BinaryPoly times_x_pow(std::size_t k) const;

    // (quotient, remainder); den must be nonzero.
    static std::pair<BinaryPoly, BinaryPoly> divmod(const BinaryPoly& num, const BinaryPoly& den);

    friend bool operator==(const BinaryPoly&, const BinaryPoly&) = default;

    std::vector<std::size_t> exponents() const;       // ascending
    std::string exponent_string() const;              // e.g. "1 + x^2 + x^13"
    std::string hex_string() const;                   // packed coefficient bits, little-endian bytes
    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::vector<std::uint64_t> words_;

    void set_bit(std::size_t i);
    void trim();
};

// Greatest common divisor; throws BothZeroError when both inputs are zero.
BinaryPoly poly_gcd(BinaryPoly a, BinaryPoly b);

// Minimal polynomial (x^period + 1) / gcd(x^period + 1, support).
// Requires deg(support) < period; throws DegreeTooLargeError otherwise.
BinaryPoly minimal_polynomial(const BinaryPoly& support, std::uint64_t period);

using BitVector = std::vector<std::uint8_t>;

// Shortest LFSR for a finite bit string: connection = 1 + c1 x + ... + cL x^L.
struct LfsrSynthesis {
    std::uint64_t length = 0;
    BinaryPoly connection = BinaryPoly::one();
};

LfsrSynthesis berlekamp_massey(const BitVector& bits);

// Linear complexity of a periodic sequence via the gcd formula
// (0 for the all-zero sequence).
std::uint64_t linear_complexity_gcd(const BinarySequence& seq);

}  // namespace dhseq
