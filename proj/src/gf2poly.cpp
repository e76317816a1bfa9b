#include "dhseq/gf2poly.hpp"

#include <algorithm>
#include <bit>

#include "dhseq/sequence.hpp"

namespace dhseq {

namespace {

constexpr std::size_t kWordBits = 64;

// dst ^= src << shift; dst must already be large enough.
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

std::optional<std::size_t> words_degree(const std::vector<std::uint64_t>& w) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] != 0) return i * kWordBits + (kWordBits - 1 - std::countl_zero(w[i]));
    }
    return std::nullopt;
}

}  // namespace

void BinaryPoly::set_bit(std::size_t i) {
    const std::size_t w = i / kWordBits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i % kWordBits);
}

void BinaryPoly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPoly BinaryPoly::one() { return x_pow(0); }

BinaryPoly BinaryPoly::x_pow(std::size_t n) {
    BinaryPoly p;
    p.set_bit(n);
    return p;
}

BinaryPoly BinaryPoly::x_pow_n_plus_one(std::size_t n) {
    BinaryPoly p;
    p.set_bit(n);
    p.set_bit(0);
    return p;
}

BinaryPoly BinaryPoly::from_exponents(std::initializer_list<std::size_t> exps) {
    return from_exponents(std::vector<std::size_t>(exps));
}

BinaryPoly BinaryPoly::from_exponents(const std::vector<std::size_t>& exps) {
    BinaryPoly p;
    for (std::size_t e : exps) p.set_bit(e);  // repeated exponents act as OR, not XOR
    return p;
}

BinaryPoly BinaryPoly::from_coefficient_bits(const std::vector<std::uint8_t>& bits) {
    BinaryPoly p;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] & 1) p.set_bit(i);
    }
    return p;
}

BinaryPoly BinaryPoly::from_words(std::vector<std::uint64_t> words) {
    BinaryPoly p;
    p.words_ = std::move(words);
    p.trim();
    return p;
}

std::optional<std::size_t> BinaryPoly::degree() const { return words_degree(words_); }

bool BinaryPoly::coeff(std::size_t i) const {
    const std::size_t w = i / kWordBits;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % kWordBits)) & 1;
}

std::size_t BinaryPoly::term_count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BinaryPoly& BinaryPoly::operator+=(const BinaryPoly& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    trim();
    return *this;
}

BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) {
    if (a.is_zero() || b.is_zero()) return BinaryPoly{};
    BinaryPoly out;
    out.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
        std::uint64_t w = a.words_[wi];
        while (w != 0) {
            const int bit = std::countr_zero(w);
            w &= w - 1;
            xor_shifted(out.words_, b.words_, wi * kWordBits + static_cast<std::size_t>(bit));
        }
    }
    out.trim();
    return out;
}

BinaryPoly BinaryPoly::times_x_pow(std::size_t k) const {
    if (is_zero()) return {};
    BinaryPoly out;
    out.words_.assign(words_.size() + k / kWordBits + 1, 0);
    xor_shifted(out.words_, words_, k);
    out.trim();
    return out;
}

std::pair<BinaryPoly, BinaryPoly> BinaryPoly::divmod(const BinaryPoly& num,
                                                     const BinaryPoly& den) {
    const auto dd = den.degree();
    if (!dd) throw Error("divmod: division by the zero polynomial");
    BinaryPoly rem = num;
    BinaryPoly quo;
    auto rd = rem.degree();
    while (rd && *rd >= *dd) {
        const std::size_t shift = *rd - *dd;
        quo.set_bit(shift);
        xor_shifted(rem.words_, den.words_, shift);
        rem.trim();
        rd = rem.degree();
    }
    quo.trim();
    return {quo, rem};
}

std::vector<std::size_t> BinaryPoly::exponents() const {
    std::vector<std::size_t> out;
    out.reserve(term_count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w != 0) {
            const int bit = std::countr_zero(w);
            w &= w - 1;
            out.push_back(wi * kWordBits + static_cast<std::size_t>(bit));
        }
    }
    return out;
}

std::string BinaryPoly::exponent_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t e : exponents()) {
        if (!out.empty()) out += " + ";
        if (e == 0)
            out += "1";
        else if (e == 1)
            out += "x";
        else
            out += "x^" + std::to_string(e);
    }
    return out;
}

std::string BinaryPoly::hex_string() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const auto d = degree();
    const std::size_t nbytes = d ? (*d / 8 + 1) : 1;
    std::string out;
    out.reserve(2 * nbytes);
    for (std::size_t i = 0; i < nbytes; ++i) {
        const std::size_t w = (i * 8) / kWordBits;
        const std::size_t sh = (i * 8) % kWordBits;
        const std::uint8_t byte =
            w < words_.size() ? static_cast<std::uint8_t>(words_[w] >> sh) : 0;
        out += kDigits[byte >> 4];
        out += kDigits[byte & 0xf];
    }
    return out;
}

BinaryPoly poly_gcd(BinaryPoly a, BinaryPoly b) {
    if (a.is_zero() && b.is_zero())
        throw BothZeroError("poly_gcd: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        BinaryPoly r = BinaryPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;  // leading coefficient is already 1 over GF(2)
}

BinaryPoly minimal_polynomial(const BinaryPoly& support, std::uint64_t period) {
    if (period == 0) throw Error("minimal_polynomial: period must be positive");
    const auto d = support.degree();
    if (d && *d >= period)
        throw DegreeTooLargeError("minimal_polynomial: support degree " + std::to_string(*d) +
                                  " not below period " + std::to_string(period));
    const BinaryPoly xn1 = BinaryPoly::x_pow_n_plus_one(static_cast<std::size_t>(period));
    if (support.is_zero()) return BinaryPoly::one();
    const BinaryPoly g = poly_gcd(xn1, support);
    auto [quo, rem] = BinaryPoly::divmod(xn1, g);
    if (!rem.is_zero()) throw Error("minimal_polynomial: internal division was not exact");
    return quo;
}

LfsrSynthesis berlekamp_massey(const BitVector& bits) {
    const std::size_t n = bits.size();
    std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0);
    c[0] = b[0] = 1;
    std::size_t L = 0;
    std::size_t m = 1;  // steps since the last length change
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t d = bits[i] & 1;
        for (std::size_t j = 1; j <= L; ++j) d ^= static_cast<std::uint8_t>(c[j] & bits[i - j] & 1);
        if (d == 0) {
            ++m;
            continue;
        }
        if (2 * L <= i) {
            std::vector<std::uint8_t> keep(c);
            for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
            L = i + 1 - L;
            b = std::move(keep);
            m = 1;
        } else {
            for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
            ++m;
        }
    }
    LfsrSynthesis out;
    out.length = L;
    out.connection =
        BinaryPoly::from_coefficient_bits(std::vector<std::uint8_t>(c.begin(), c.begin() + L + 1));
    return out;
}

std::uint64_t linear_complexity_gcd(const BinarySequence& seq) {
    if (seq.period == 0 || seq.bits.size() != seq.period)
        throw Error("linear_complexity_gcd: sequence must hold exactly one full period");
    const BinaryPoly s = support_poly(seq);
    if (s.is_zero()) return 0;
    const BinaryPoly g =
        poly_gcd(BinaryPoly::x_pow_n_plus_one(static_cast<std::size_t>(seq.period)), s);
    return seq.period - static_cast<std::uint64_t>(*g.degree());
}

}  // namespace dhseq
