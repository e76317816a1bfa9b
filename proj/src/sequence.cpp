#include "dhseq/sequence.hpp"

#include <numeric>

namespace dhseq {

std::uint64_t BinarySequence::weight() const {
    return std::accumulate(bits.begin(), bits.end(), std::uint64_t{0});
}

BinarySequence generate(const CyclotomicPartition& partition) {
    const std::uint64_t N = partition.params.N;
    BinarySequence seq;
    seq.period = N;
    seq.bits.assign(N, 0);
    for (std::uint64_t t : partition.C1) seq.bits[t] = 1;
    if (seq.weight() != (N - 1) / 2)
        throw std::logic_error("generate: sequence is not balanced");
    return seq;
}

BinaryPoly support_poly(const BinarySequence& seq) {
    return BinaryPoly::from_coefficient_bits(seq.bits);
}

BinarySequence sequence_from_support(const BinaryPoly& support, std::uint64_t period) {
    const auto d = support.degree();
    if (d && *d >= period)
        throw DegreeTooLargeError("sequence_from_support: support degree exceeds the period");
    BinarySequence seq;
    seq.period = period;
    seq.bits.assign(period, 0);
    for (std::size_t e : support.exponents()) seq.bits[e] = 1;
    return seq;
}

std::string bit_string(const BinarySequence& seq) {
    std::string out(seq.bits.size(), '0');
    for (std::size_t i = 0; i < seq.bits.size(); ++i) {
        if (seq.bits[i]) out[i] = '1';
    }
    return out;
}

std::string hex_string(const BinarySequence& seq) {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t nbytes = (seq.bits.size() + 7) / 8;
    std::string out;
    out.reserve(2 * nbytes);
    for (std::size_t i = 0; i < nbytes; ++i) {
        std::uint8_t byte = 0;
        for (std::size_t j = 0; j < 8 && i * 8 + j < seq.bits.size(); ++j) {
            byte |= static_cast<std::uint8_t>((seq.bits[i * 8 + j] & 1) << j);
        }
        out += kDigits[byte >> 4];
        out += kDigits[byte & 0xf];
    }
    return out;
}

BitVector doubled_period(const BinarySequence& seq) {
    BitVector out;
    out.reserve(2 * seq.bits.size());
    out.insert(out.end(), seq.bits.begin(), seq.bits.end());
    out.insert(out.end(), seq.bits.begin(), seq.bits.end());
    return out;
}

}  // namespace dhseq
