#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dhseq/cyclotomy.hpp"
#include "dhseq/gf2poly.hpp"

namespace dhseq {

// Element of GF(2^m) in the polynomial basis; fixed word count per context.
struct FieldElem {
    std::vector<std::uint64_t> w;

    bool is_zero() const {
        for (std::uint64_t v : w)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// GF(2^m) with m = ord_N(2), together with a distinguished primitive N-th
// root of unity alpha.  The reduction polynomial is the lexicographically
// smallest irreducible of degree m; alpha = gamma^((2^m - 1)/N) for the
// smallest-encoded gamma whose power has multiplicative order exactly N.
class FieldCtx {
public:
    static FieldCtx make_field(std::uint64_t N);

    std::uint64_t root_order() const { return n_; }  // N
    std::size_t degree() const { return m_; }        // m
    std::size_t words() const { return words_; }
    const BinaryPoly& reduction() const { return reduction_; }
    const FieldElem& alpha() const { return alpha_; }

    FieldElem zero() const { return FieldElem{std::vector<std::uint64_t>(words_, 0)}; }
    FieldElem one() const { return from_encoding(1); }
    // Element whose low 64 coordinate bits are `bits` (must fit in m bits).
    FieldElem from_encoding(std::uint64_t bits) const;
    std::uint64_t encoding(const FieldElem& a) const;  // inverse, m <= 64 only

    void add_into(FieldElem& acc, const FieldElem& b) const;
    FieldElem add(FieldElem a, const FieldElem& b) const {
        add_into(a, b);
        return a;
    }
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem square(const FieldElem& a) const { return mul(a, a); }
    FieldElem pow(const FieldElem& base, std::uint64_t exp) const;
    // Exponent as little-endian bit words, bit_count significant bits.
    FieldElem pow_bits(const FieldElem& base, std::span<const std::uint64_t> exp,
                       std::size_t bit_count) const;

    // True iff the multiplicative order of a is exactly `bound`
    // (a != 0, a^bound must be 1 for a true result).
    bool has_order(const FieldElem& a, std::uint64_t bound) const;

    // Horner evaluation of a GF(2)[x] polynomial at a field point.
    FieldElem eval_poly(const BinaryPoly& poly, const FieldElem& point) const;

    std::string hex(const FieldElem& a) const;  // ceil(m/8) little-endian bytes

private:
    std::uint64_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t words_ = 0;
    BinaryPoly reduction_;
    std::vector<std::uint64_t> red_words_;
    FieldElem alpha_;

    void reduce_product(std::vector<std::uint64_t>& prod) const;
};

// Zero set of k -> S(alpha^k) over one period, split by partition cell.
struct SpectrumReport {
    std::uint64_t total_zeros = 0;
    std::uint64_t zeros_at_k0 = 0;
    std::uint64_t zeros_in_p = 0;
    std::uint64_t zeros_in_q = 0;
    std::uint64_t zeros_in_units = 0;
    std::uint64_t lc = 0;                 // N - total_zeros
    std::vector<std::uint8_t> zero_mask;  // size N
    bool frobenius_closed = true;         // zero set closed under k -> 2k (mod N)
};

enum class TSide { P, Q };

// alpha-power table bound to one field context; all character sums go
// through it.  The context must outlive the evaluator.
class CharacterEvaluator {
public:
    explicit CharacterEvaluator(const FieldCtx& ctx);

    const FieldCtx& ctx() const { return *ctx_; }
    const FieldElem& alpha_pow(std::uint64_t j) const { return pow_.at(j); }

    // sum over t in subset of alpha^(k t); subset entries live in [0, N).
    FieldElem subset_character_sum(std::span<const std::uint64_t> subset, std::uint64_t k) const;

    FieldElem eval_S(const CyclotomicPartition& part, std::uint64_t k) const;
    // T-sum over P_a (side P) or Q_a (side Q); a must be below 2n.
    FieldElem eval_T(const CyclotomicPartition& part, TSide side, std::size_t a,
                     std::uint64_t k) const;
    std::vector<FieldElem> eval_S_all(const CyclotomicPartition& part) const;

    SpectrumReport zero_spectrum(const CyclotomicPartition& part) const;
    SpectrumReport zero_spectrum(const CyclotomicPartition& part,
                                 const std::vector<FieldElem>& s_values) const;

private:
    const FieldCtx* ctx_;
    std::vector<FieldElem> pow_;  // alpha^j for j in [0, N)

    void require_same_modulus(const CyclotomicPartition& part) const;
};

FieldCtx make_field(std::uint64_t N);

}  // namespace dhseq
