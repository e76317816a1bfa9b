#pragma once

#include <cstdint>
#include <string>

#include "dhseq/cyclotomy.hpp"
#include "dhseq/gf2poly.hpp"

namespace dhseq {

// One full period of the characteristic sequence of C1: s_i = 1 iff i in C1.
struct BinarySequence {
    std::uint64_t period = 0;
    BitVector bits;  // bits.size() == period, entries 0/1

    std::uint64_t weight() const;

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;
};

BinarySequence generate(const CyclotomicPartition& partition);

// S(x) = sum of x^t over the support of one period.
BinaryPoly support_poly(const BinarySequence& seq);

// Inverse of support_poly for deg < period.
BinarySequence sequence_from_support(const BinaryPoly& support, std::uint64_t period);

std::string bit_string(const BinarySequence& seq);

// Coefficient bits packed little-endian: bit (i % 8) of byte i/8 is s_i.
std::string hex_string(const BinarySequence& seq);

// Two consecutive periods, ready for LFSR synthesis.
BitVector doubled_period(const BinarySequence& seq);

}  // namespace dhseq
