#pragma once

#include <cstdint>
#include <vector>

#include "dhseq/errors.hpp"
#include "dhseq/numtheory.hpp"

namespace dhseq {

// Derived constants of the generalized cyclotomy for one pair of odd primes
// p < q: N = pq, 2n = gcd(p-1, q-1), e = (p-1)(q-1)/(2n), g the smallest
// common primitive root, and x the unit with x = g (mod p), x = 1 (mod q).
struct Params {
    std::uint64_t p = 0, q = 0;
    std::uint64_t N = 0;
    std::uint64_t n = 0;
    std::uint64_t e = 0;
    std::uint64_t g = 0;
    std::uint64_t x = 0;

    std::uint64_t order() const { return 2 * n; }  // number of classes

    friend bool operator==(const Params&, const Params&) = default;
};

Params derive_params(std::uint64_t p, std::uint64_t q);

enum class Cell : std::uint8_t { Zero, Unit, MultipleOfP, MultipleOfQ };

// Where a residue lives, with the class index inside its family:
//   Unit        -> index i with a in D_i
//   MultipleOfP -> index i with a/p in D_i^(q)
//   MultipleOfQ -> index i with a/q in D_i^(p)
struct Location {
    Cell cell = Cell::Zero;
    std::uint32_t index = 0;

    friend bool operator==(const Location&, const Location&) = default;
};

// Every index set of the construction for one pair, all sorted ascending,
// plus a constant-time residue -> Location table.
struct CyclotomicPartition {
    Params params;

    std::vector<std::vector<std::uint64_t>> D;   // 2n classes partitioning Z_N^*
    std::vector<std::vector<std::uint64_t>> Dp;  // 2n classes partitioning Z_p^*
    std::vector<std::vector<std::uint64_t>> Dq;  // 2n classes partitioning Z_q^*
    std::vector<std::vector<std::uint64_t>> B;   // B_m = D_m u ... u D_{m+n-1} (cyclic)
    std::vector<std::vector<std::uint64_t>> Bp;
    std::vector<std::vector<std::uint64_t>> Bq;
    std::vector<std::vector<std::uint64_t>> Pm;  // P_m = p * B_m^(q)
    std::vector<std::vector<std::uint64_t>> Qm;  // Q_m = q * B_m^(p)
    std::vector<std::uint64_t> P;                // P_0 u P_n = all nonzero multiples of p
    std::vector<std::uint64_t> Q;                // Q_0 u Q_n
    std::vector<std::uint64_t> units;            // Z_N^*
    std::vector<std::uint64_t> C0;               // {0} u P_0 u Q_0 u B_0
    std::vector<std::uint64_t> C1;               // P_n u Q_n u B_n

    std::vector<Location> table;  // size N

    Location locate(std::uint64_t a) const { return table.at(a); }

    bool in_D(std::uint64_t a, std::size_t i) const;
    bool in_Pm(std::uint64_t a, std::size_t m) const;  // membership in P_m
    bool in_Qm(std::uint64_t a, std::size_t m) const;
    bool in_P(std::uint64_t a) const { return locate(a).cell == Cell::MultipleOfP; }
    bool in_Q(std::uint64_t a) const { return locate(a).cell == Cell::MultipleOfQ; }
};

CyclotomicPartition build_partition(const Params& params);

}  // namespace dhseq
