#include "dhseq/numtheory.hpp"

#include <numeric>
#include <string>

namespace dhseq {

Residue::Residue(std::uint64_t v, std::uint64_t m) {
    if (m < 2) throw Error("Residue: modulus must be at least 2");
    modulus = m;
    value = v % m;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace {

bool composite_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

constexpr std::uint64_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t u) {
    if (u < 2) return false;
    for (std::uint64_t p : kSmallPrimes) {
        if (u == p) return true;
        if (u % p == 0) return false;
    }
    std::uint64_t d = u - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Miller-Rabin with the first twelve primes as bases is exact below 3.3e24,
    // which covers the whole 64-bit range.
    for (std::uint64_t a : kSmallPrimes) {
        if (composite_witness(u, a, d, s)) return false;
    }
    return true;
}

Residue mod_pow(const Residue& base, std::uint64_t exp) {
    return Residue(pow_mod(base.value, exp, base.modulus), base.modulus);
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t v) {
    if (v == 0) throw Error("factorize: argument must be positive");
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d : {2ull, 3ull, 5ull}) {
        if (v % d == 0) {
            int e = 0;
            while (v % d == 0) {
                v /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    // Wheel over residues coprime to 30, starting at 7.
    static constexpr std::uint64_t kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t d = 7;
    std::size_t w = 0;
    while (d <= v / d) {
        if (v % d == 0) {
            int e = 0;
            while (v % d == 0) {
                v /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
        d += kWheel[w];
        w = (w + 1) & 7;
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

std::uint64_t euler_phi(std::uint64_t v) {
    std::uint64_t phi = v;
    for (const auto& [p, e] : factorize(v)) {
        phi -= phi / p;
    }
    return phi;
}

std::uint64_t multiplicative_order(const Residue& a) {
    if (std::gcd(a.value, a.modulus) != 1) {
        throw NotAUnitError("multiplicative_order: " + std::to_string(a.value) +
                            " is not a unit modulo " + std::to_string(a.modulus));
    }
    // Start from phi(m) and strip prime factors while the power stays 1.
    std::uint64_t d = euler_phi(a.modulus);
    for (const auto& [p, e] : factorize(d)) {
        for (int i = 0; i < e; ++i) {
            if (pow_mod(a.value, d / p, a.modulus) == 1)
                d /= p;
            else
                break;
        }
    }
    return d;
}

namespace {

bool generates_mod_prime(std::uint64_t r, std::uint64_t p,
                         const std::vector<std::pair<std::uint64_t, int>>& factors_p_minus_1) {
    r %= p;
    if (r == 0) return false;
    for (const auto& [f, e] : factors_p_minus_1) {
        if (pow_mod(r, (p - 1) / f, p) == 1) return false;
    }
    return true;
}

void require_odd_prime(std::uint64_t p, const char* who, const char* name) {
    if (!is_prime(p))
        throw NotPrimeError(std::string(who) + ": " + name + " = " + std::to_string(p) +
                            " is not prime");
    if (p == 2)
        throw NotPrimeError(std::string(who) + ": " + name + " must be an odd prime");
}

}  // namespace

std::uint64_t primitive_root(std::uint64_t p) {
    require_odd_prime(p, "primitive_root", "p");
    const auto factors = factorize(p - 1);
    for (std::uint64_t r = 2; r < p; ++r) {
        if (generates_mod_prime(r, p, factors)) return r;
    }
    throw Error("primitive_root: search exhausted (unreachable for a prime modulus)");
}

std::uint64_t common_primitive_root(std::uint64_t p, std::uint64_t q) {
    require_odd_prime(p, "common_primitive_root", "p");
    require_odd_prime(q, "common_primitive_root", "q");
    if (p == q) throw EqualPrimesError("common_primitive_root: p and q must be distinct");
    const auto fp = factorize(p - 1);
    const auto fq = factorize(q - 1);
    // A CRT combination of per-prime roots exists below pq, so the scan terminates.
    const std::uint64_t bound = p * q;
    for (std::uint64_t g = 2; g < bound; ++g) {
        if (generates_mod_prime(g, p, fp) && generates_mod_prime(g, q, fq)) return g;
    }
    throw Error("common_primitive_root: search exhausted (unreachable for distinct odd primes)");
}

namespace {

// Inverse of a modulo m (gcd(a, m) == 1, m >= 2).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        __int128 qt = r0 / r1;
        __int128 r2 = r0 - qt * r1;
        __int128 t2 = t0 - qt * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0) t0 += m;
    return static_cast<std::uint64_t>(t0);
}

}  // namespace

Residue crt_pair(const Residue& r1, const Residue& r2) {
    const std::uint64_t m1 = r1.modulus, m2 = r2.modulus;
    if (std::gcd(m1, m2) != 1) {
        throw ModuliNotCoprimeError("crt_pair: moduli " + std::to_string(m1) + " and " +
                                    std::to_string(m2) + " are not coprime");
    }
    if (static_cast<unsigned __int128>(m1) * m2 > static_cast<std::uint64_t>(-1)) {
        throw Error("crt_pair: modulus product exceeds 64 bits");
    }
    // x = r1 + m1 * t with t = (r2 - r1) / m1 (mod m2).
    const std::uint64_t diff = (r2.value + m2 - r1.value % m2) % m2;
    const std::uint64_t t = mul_mod(diff, inverse_mod(m1 % m2, m2), m2);
    return Residue(r1.value + m1 * t, m1 * m2);
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 3) return out;
    std::vector<std::uint8_t> sieve(bound + 1, 1);
    for (std::uint64_t i = 3; i * i <= bound; i += 2) {
        if (!sieve[i]) continue;
        for (std::uint64_t j = i * i; j <= bound; j += 2 * i) sieve[j] = 0;
    }
    for (std::uint64_t i = 3; i <= bound; i += 2) {
        if (sieve[i]) out.push_back(i);
    }
    return out;
}

}  // namespace dhseq
