#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "dhseq/sequence.hpp"

using namespace dhseq;

TEST_CASE("the sequence for (3, 5), frozen") {
    const CyclotomicPartition part = build_partition(derive_params(3, 5));
    const BinarySequence seq = generate(part);

    CHECK(seq.period == 15);
    CHECK(seq.weight() == 7);
    CHECK(bit_string(seq) == "001000111110010");
    CHECK(hex_string(seq) == "c427");

    // The support is exactly C1.
    CHECK(support_poly(seq).exponents() ==
          std::vector<std::size_t>{2, 6, 7, 8, 9, 10, 13});
    for (std::uint64_t a : part.C1) CHECK(seq.bits[a] == 1);
    for (std::uint64_t a : part.C0) CHECK(seq.bits[a] == 0);
}

TEST_CASE("generated sequences are balanced") {
    for (const auto& [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {3, 5}, {3, 7}, {5, 7}, {5, 13}, {7, 13}, {13, 37}}) {
        CAPTURE(p);
        CAPTURE(q);
        const BinarySequence seq = generate(build_partition(derive_params(p, q)));
        REQUIRE(seq.period == p * q);
        REQUIRE(seq.bits.size() == seq.period);
        REQUIRE(seq.weight() == (seq.period - 1) / 2);
        REQUIRE(seq.bits[0] == 0);  // zero lies in C0
    }
}

TEST_CASE("support_poly and sequence_from_support are inverse") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> bit(0, 1);
    for (std::uint64_t period : {1ull, 2ull, 15ull, 64ull, 65ull, 100ull}) {
        for (int trial = 0; trial < 30; ++trial) {
            BinarySequence seq{period, BitVector(period)};
            for (auto& b : seq.bits) b = static_cast<std::uint8_t>(bit(rng));
            CAPTURE(period);
            CAPTURE(trial);
            REQUIRE(sequence_from_support(support_poly(seq), period) == seq);
        }
    }
}

TEST_CASE("sequence_from_support edge cases") {
    const BinarySequence zeros = sequence_from_support(BinaryPoly{}, 5);
    CHECK(zeros.period == 5);
    CHECK(zeros.weight() == 0);
    CHECK(bit_string(zeros) == "00000");

    const BinarySequence impulse = sequence_from_support(BinaryPoly::x_pow(3), 6);
    CHECK(bit_string(impulse) == "000100");

    CHECK_THROWS_AS(sequence_from_support(BinaryPoly::x_pow(6), 6), DegreeTooLargeError);
    CHECK_THROWS_AS(sequence_from_support(BinaryPoly::x_pow(9), 6), DegreeTooLargeError);
}

TEST_CASE("hex packing puts bit i at position i%8 of byte i/8") {
    BinarySequence seq{9, {1, 0, 0, 0, 0, 0, 0, 0, 1}};
    // byte 0 = 0x01, byte 1 = 0x01
    CHECK(hex_string(seq) == "0101");

    BinarySequence one_byte{8, {0, 1, 0, 0, 0, 0, 0, 1}};
    CHECK(hex_string(one_byte) == "82");

    BinarySequence empty_tail{3, {1, 1, 1}};
    CHECK(hex_string(empty_tail) == "07");
}

TEST_CASE("doubled_period repeats the bits twice") {
    BinarySequence seq{4, {1, 0, 1, 1}};
    CHECK(doubled_period(seq) == BitVector{1, 0, 1, 1, 1, 0, 1, 1});

    const BinarySequence gen = generate(build_partition(derive_params(3, 5)));
    const BitVector two = doubled_period(gen);
    REQUIRE(two.size() == 30);
    for (std::size_t i = 0; i < 15; ++i) REQUIRE(two[i] == two[i + 15]);
}
