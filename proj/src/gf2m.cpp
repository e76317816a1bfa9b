#include "dhseq/gf2m.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dhseq/numtheory.hpp"

namespace dhseq {

namespace {

constexpr std::size_t kWordBits = 64;
constexpr std::size_t kMaxDegree = 4096;  // keeps field construction desk-scale

// dst ^= src << shift (dst sized in advance).
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 std::size_t shift) {
    const std::size_t ws = shift / kWordBits;
    const std::size_t bs = shift % kWordBits;
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[ws + i] ^= src[i];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[ws + i] ^= (src[i] << bs) | carry;
        carry = src[i] >> (kWordBits - bs);
    }
    if (carry != 0) dst[ws + src.size()] ^= carry;
}

int top_bit(const std::vector<std::uint64_t>& w) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] != 0)
            return static_cast<int>(i * kWordBits + (kWordBits - 1 - std::countl_zero(w[i])));
    }
    return -1;
}

}  // namespace

FieldElem FieldCtx::from_encoding(std::uint64_t bits) const {
    if (m_ < kWordBits && bits >> m_ != 0)
        throw Error("from_encoding: value does not fit in " + std::to_string(m_) + " bits");
    FieldElem e{std::vector<std::uint64_t>(words_, 0)};
    e.w[0] = bits;
    return e;
}

std::uint64_t FieldCtx::encoding(const FieldElem& a) const {
    if (m_ > kWordBits) throw Error("encoding: field degree exceeds 64 bits");
    return a.w.empty() ? 0 : a.w[0];
}

void FieldCtx::add_into(FieldElem& acc, const FieldElem& b) const {
    for (std::size_t i = 0; i < words_; ++i) acc.w[i] ^= b.w[i];
}

void FieldCtx::reduce_product(std::vector<std::uint64_t>& prod) const {
    // Clear bits from the top down to m by xoring shifted copies of the
    // reduction polynomial (its bit m is set, so each step kills one bit).
    for (int d = top_bit(prod); d >= static_cast<int>(m_); --d) {
        const std::size_t idx = static_cast<std::size_t>(d);
        if ((prod[idx / kWordBits] >> (idx % kWordBits)) & 1) {
            xor_shifted(prod, red_words_, idx - m_);
        }
    }
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    std::vector<std::uint64_t> prod(2 * words_ + 1, 0);
    for (std::size_t wi = 0; wi < words_; ++wi) {
        std::uint64_t w = a.w[wi];
        while (w != 0) {
            const int bit = std::countr_zero(w);
            w &= w - 1;
            xor_shifted(prod, b.w, wi * kWordBits + static_cast<std::size_t>(bit));
        }
    }
    reduce_product(prod);
    FieldElem out{std::vector<std::uint64_t>(prod.begin(), prod.begin() + words_)};
    return out;
}

FieldElem FieldCtx::pow(const FieldElem& base, std::uint64_t exp) const {
    FieldElem acc = one();
    FieldElem sq = base;
    while (exp != 0) {
        if (exp & 1) acc = mul(acc, sq);
        sq = mul(sq, sq);
        exp >>= 1;
    }
    return acc;
}

FieldElem FieldCtx::pow_bits(const FieldElem& base, std::span<const std::uint64_t> exp,
                             std::size_t bit_count) const {
    FieldElem acc = one();
    FieldElem sq = base;
    for (std::size_t i = 0; i < bit_count; ++i) {
        if ((exp[i / kWordBits] >> (i % kWordBits)) & 1) acc = mul(acc, sq);
        if (i + 1 < bit_count) sq = mul(sq, sq);
    }
    return acc;
}

bool FieldCtx::has_order(const FieldElem& a, std::uint64_t bound) const {
    if (a.is_zero()) return false;
    if (pow(a, bound) != one()) return false;
    for (const auto& [p, e] : factorize(bound)) {
        if (pow(a, bound / p) == one()) return false;
    }
    return true;
}

FieldElem FieldCtx::eval_poly(const BinaryPoly& poly, const FieldElem& point) const {
    const auto deg = poly.degree();
    if (!deg) return zero();
    FieldElem acc = zero();
    for (std::size_t i = *deg + 1; i-- > 0;) {
        acc = mul(acc, point);
        if (poly.coeff(i)) acc.w[0] ^= 1;
    }
    return acc;
}

std::string FieldCtx::hex(const FieldElem& a) const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t nbytes = (m_ + 7) / 8;
    std::string out;
    out.reserve(2 * nbytes);
    for (std::size_t i = 0; i < nbytes; ++i) {
        const std::size_t w = (i * 8) / kWordBits;
        const std::size_t sh = (i * 8) % kWordBits;
        const std::uint8_t byte = w < a.w.size() ? static_cast<std::uint8_t>(a.w[w] >> sh) : 0;
        out += kDigits[byte >> 4];
        out += kDigits[byte & 0xf];
    }
    return out;
}

namespace {

// Polynomial arithmetic modulo f for the construction phase, on BinaryPoly.
BinaryPoly mod_f(const BinaryPoly& a, const BinaryPoly& f) {
    return BinaryPoly::divmod(a, f).second;
}

// x^(2^j) mod f chain with Rabin's criterion.  f has degree m >= 2 with
// constant term 1 (anything else is trivially reducible).
bool is_irreducible(const BinaryPoly& f, std::size_t m,
                    const std::vector<std::pair<std::uint64_t, int>>& m_factors) {
    const BinaryPoly x = BinaryPoly::x_pow(1);
    // Early reject: a nontrivial gcd with x^(2^j) - x for any j < m means a
    // factor of degree dividing j.  Checking small j first is cheap and
    // removes most candidates before the full ladder completes.
    constexpr std::size_t kEarly = 8;
    std::vector<std::size_t> checkpoints;  // j = m / r for prime r | m
    for (const auto& [r, e] : m_factors) checkpoints.push_back(m / r);
    std::sort(checkpoints.begin(), checkpoints.end());

    BinaryPoly t = mod_f(x, f);
    std::size_t next_cp = 0;
    for (std::size_t j = 1; j <= m; ++j) {
        t = mod_f(t * t, f);
        if (j < m && (j <= kEarly || (next_cp < checkpoints.size() && checkpoints[next_cp] == j))) {
            while (next_cp < checkpoints.size() && checkpoints[next_cp] == j) ++next_cp;
            BinaryPoly diff = t + x;
            if (diff.is_zero()) return false;  // every root lies in a subfield
            if (poly_gcd(f, diff).degree() != 0) return false;
        }
    }
    return t == mod_f(x, f);  // x^(2^m) == x
}

}  // namespace

FieldCtx FieldCtx::make_field(std::uint64_t N) {
    if (N < 3 || N % 2 == 0) throw Error("make_field: N must be an odd integer >= 3");
    FieldCtx ctx;
    ctx.n_ = N;
    const std::uint64_t m64 = multiplicative_order(Residue(2, N));
    if (m64 > kMaxDegree)
        throw Error("make_field: extension degree " + std::to_string(m64) +
                    " exceeds the supported range");
    const std::size_t m = static_cast<std::size_t>(m64);
    ctx.m_ = m;
    ctx.words_ = (m + kWordBits - 1) / kWordBits;

    // Lexicographically smallest irreducible of degree m: scan the low part
    // in increasing encoding order.  Constant term must be 1 and the total
    // number of terms must be odd, else x or x+1 divides the candidate.
    const auto m_factors = factorize(m64);
    BinaryPoly reduction;
    for (std::uint64_t low = 1;; low += 2) {
        if (low >> std::min<std::size_t>(m, 63) != 0)
            throw Error("make_field: no irreducible found (unreachable)");
        // Odd popcount of the low part makes the total term count even,
        // i.e. x+1 divides the candidate; skip those outright.
        if (std::popcount(low) % 2 != 0) continue;
        BinaryPoly f = BinaryPoly::x_pow(m) + BinaryPoly::from_words({low});
        if (is_irreducible(f, m, m_factors)) {
            reduction = f;
            break;
        }
    }
    ctx.reduction_ = reduction;
    ctx.red_words_ = reduction.words();

    // E = (2^m - 1) / N by long division over the bits of the all-ones value.
    std::vector<std::uint64_t> e_words(ctx.words_, 0);
    std::uint64_t rem = 0;
    for (std::size_t i = m; i-- > 0;) {
        rem = (rem << 1) | 1;
        if (rem >= N) {
            rem -= N;
            e_words[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
        }
    }
    if (rem != 0)
        throw std::logic_error("make_field: N does not divide 2^m - 1");

    // Smallest-encoded seed whose E-th power has multiplicative order N.
    const std::uint64_t seed_cap =
        m < 24 ? (std::uint64_t{1} << m) : (std::uint64_t{1} << 24);
    for (std::uint64_t seed = 2; seed < seed_cap; ++seed) {
        const FieldElem gamma = ctx.from_encoding(seed);
        const FieldElem cand = ctx.pow_bits(gamma, e_words, m);
        if (ctx.has_order(cand, N)) {
            ctx.alpha_ = cand;
            return ctx;
        }
    }
    throw Error("make_field: no root of unity of order " + std::to_string(N) + " found");
}

FieldCtx make_field(std::uint64_t N) { return FieldCtx::make_field(N); }

CharacterEvaluator::CharacterEvaluator(const FieldCtx& ctx) : ctx_(&ctx) {
    const std::uint64_t N = ctx.root_order();
    // The power table holds N field elements; stay within a desk-scale budget.
    if (N * ctx.words() > (std::uint64_t{1} << 27))
        throw Error("CharacterEvaluator: power table for N = " + std::to_string(N) +
                    " would exceed the memory budget");
    pow_.reserve(N);
    pow_.push_back(ctx.one());
    for (std::uint64_t j = 1; j < N; ++j) pow_.push_back(ctx.mul(pow_.back(), ctx.alpha()));
    // alpha^N must close the cycle.
    if (ctx.mul(pow_.back(), ctx.alpha()) != ctx.one())
        throw std::logic_error("CharacterEvaluator: alpha powers do not close after N steps");
}

void CharacterEvaluator::require_same_modulus(const CyclotomicPartition& part) const {
    if (part.params.N != ctx_->root_order())
        throw MismatchedInputsError("CharacterEvaluator: partition modulus " +
                                    std::to_string(part.params.N) + " does not match field (" +
                                    std::to_string(ctx_->root_order()) + ")");
}

FieldElem CharacterEvaluator::subset_character_sum(std::span<const std::uint64_t> subset,
                                                   std::uint64_t k) const {
    const std::uint64_t N = ctx_->root_order();
    FieldElem acc = ctx_->zero();
    for (std::uint64_t t : subset) {
        ctx_->add_into(acc, pow_[mul_mod(k % N, t, N)]);
    }
    return acc;
}

FieldElem CharacterEvaluator::eval_S(const CyclotomicPartition& part, std::uint64_t k) const {
    require_same_modulus(part);
    return subset_character_sum(part.C1, k);
}

FieldElem CharacterEvaluator::eval_T(const CyclotomicPartition& part, TSide side, std::size_t a,
                                     std::uint64_t k) const {
    require_same_modulus(part);
    if (a >= part.params.order())
        throw IndexOutOfRangeError("eval_T: class index " + std::to_string(a) +
                                   " not below 2n = " + std::to_string(part.params.order()));
    const auto& set = side == TSide::P ? part.Pm[a] : part.Qm[a];
    return subset_character_sum(set, k);
}

std::vector<FieldElem> CharacterEvaluator::eval_S_all(const CyclotomicPartition& part) const {
    require_same_modulus(part);
    const std::uint64_t N = ctx_->root_order();
    std::vector<FieldElem> out;
    out.reserve(N);
    for (std::uint64_t k = 0; k < N; ++k) out.push_back(subset_character_sum(part.C1, k));
    return out;
}

SpectrumReport CharacterEvaluator::zero_spectrum(const CyclotomicPartition& part) const {
    return zero_spectrum(part, eval_S_all(part));
}

SpectrumReport CharacterEvaluator::zero_spectrum(const CyclotomicPartition& part,
                                                 const std::vector<FieldElem>& s_values) const {
    require_same_modulus(part);
    const std::uint64_t N = ctx_->root_order();
    if (s_values.size() != N)
        throw MismatchedInputsError("zero_spectrum: expected one value per residue");
    SpectrumReport rep;
    rep.zero_mask.assign(N, 0);
    for (std::uint64_t k = 0; k < N; ++k) {
        if (!s_values[k].is_zero()) continue;
        rep.zero_mask[k] = 1;
        ++rep.total_zeros;
        switch (part.locate(k).cell) {
            case Cell::Zero: ++rep.zeros_at_k0; break;
            case Cell::MultipleOfP: ++rep.zeros_in_p; break;
            case Cell::MultipleOfQ: ++rep.zeros_in_q; break;
            case Cell::Unit: ++rep.zeros_in_units; break;
        }
    }
    rep.lc = N - rep.total_zeros;
    for (std::uint64_t k = 0; k < N; ++k) {
        if (rep.zero_mask[k] != rep.zero_mask[(2 * k) % N]) {
            rep.frobenius_closed = false;
            break;
        }
    }
    return rep;
}

}  // namespace dhseq
