#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dhseq/errors.hpp"

namespace dhseq {

// A value reduced modulo a fixed modulus >= 2.
struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 2;

    Residue() = default;
    Residue(std::uint64_t v, std::uint64_t m);

    friend bool operator==(const Residue&, const Residue&) = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic over the whole 64-bit range.
bool is_prime(std::uint64_t u);

Residue mod_pow(const Residue& base, std::uint64_t exp);

// Trial-division factorization: (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t v);

std::uint64_t euler_phi(std::uint64_t v);

// Order of a unit in (Z/m)^*.  Throws NotAUnitError otherwise.
std::uint64_t multiplicative_order(const Residue& a);

// Smallest primitive root of an odd prime p.
std::uint64_t primitive_root(std::uint64_t p);

// Smallest g that is simultaneously a primitive root of both odd primes.
std::uint64_t common_primitive_root(std::uint64_t p, std::uint64_t q);

// Unique residue modulo m1*m2 matching both inputs (moduli coprime).
Residue crt_pair(const Residue& r1, const Residue& r2);

// Odd primes p in ascending order with p <= bound.
std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t bound);

}  // namespace dhseq
