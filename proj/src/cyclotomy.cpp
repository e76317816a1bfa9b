#include "dhseq/cyclotomy.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dhseq {

namespace {

void require_odd_prime_pair(const char* who, std::uint64_t p, std::uint64_t q) {
    const std::string head(who);
    if (!is_prime(p))
        throw NotPrimeError(head + ": p = " + std::to_string(p) + " is not prime");
    if (!is_prime(q))
        throw NotPrimeError(head + ": q = " + std::to_string(q) + " is not prime");
    if (p == 2) throw NotOddError(head + ": p must be odd");
    if (q == 2) throw NotOddError(head + ": q must be odd");
    if (p >= q)
        throw OrderViolationError(head + ": need p < q, got p = " + std::to_string(p) +
                                  ", q = " + std::to_string(q));
}

// Residues of Z_N are tabulated; keep N within a sane desk-scale budget.
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 22;

void require_supported_range(const char* who, std::uint64_t p, std::uint64_t q) {
    if (q > kMaxModulus / p)
        throw Error(std::string(who) + ": pq = " + std::to_string(p) + "*" + std::to_string(q) +
                    " exceeds the supported range");
}

}  // namespace

Params derive_params(std::uint64_t p, std::uint64_t q) {
    require_odd_prime_pair("derive_params", p, q);
    require_supported_range("derive_params", p, q);
    Params out;
    out.p = p;
    out.q = q;
    out.N = p * q;
    const std::uint64_t d = std::gcd(p - 1, q - 1);  // d = 2n is even
    out.n = d / 2;
    out.e = (p - 1) / d * (q - 1);
    out.g = common_primitive_root(p, q);
    out.x = crt_pair(Residue(out.g, p), Residue(1, q)).value;
    return out;
}

namespace {

// Cyclotomic classes of Z_r^* for a prime r: class i is {g^(2n*t + i)},
// each of size (r-1)/(2n).  Also fills class_of[value] = i.
std::vector<std::vector<std::uint64_t>> prime_classes(std::uint64_t r, std::uint64_t g,
                                                      std::uint64_t order,
                                                      std::vector<std::uint32_t>& class_of) {
    const std::uint64_t size = (r - 1) / order;
    const std::uint64_t step = pow_mod(g, order, r);
    std::vector<std::vector<std::uint64_t>> classes(order);
    class_of.assign(r, UINT32_MAX);
    for (std::uint64_t i = 0; i < order; ++i) {
        auto& cls = classes[i];
        cls.reserve(size);
        std::uint64_t v = pow_mod(g, i, r);
        for (std::uint64_t t = 0; t < size; ++t) {
            cls.push_back(v);
            if (class_of[v] != UINT32_MAX)
                throw std::logic_error("prime_classes: residue hit twice");
            class_of[v] = static_cast<std::uint32_t>(i);
            v = mul_mod(v, step, r);
        }
        std::sort(cls.begin(), cls.end());
    }
    return classes;
}

std::vector<std::uint64_t> sorted_union(const std::vector<std::vector<std::uint64_t>>& family,
                                        std::size_t first, std::size_t count) {
    std::vector<std::uint64_t> out;
    const std::size_t order = family.size();
    for (std::size_t j = 0; j < count; ++j) {
        const auto& part = family[(first + j) % order];
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool CyclotomicPartition::in_D(std::uint64_t a, std::size_t i) const {
    const Location loc = locate(a);
    return loc.cell == Cell::Unit && loc.index == i;
}

bool CyclotomicPartition::in_Pm(std::uint64_t a, std::size_t m) const {
    const Location loc = locate(a);
    if (loc.cell != Cell::MultipleOfP) return false;
    const std::uint64_t order = params.order();
    return (loc.index + order - m % order) % order < params.n;
}

bool CyclotomicPartition::in_Qm(std::uint64_t a, std::size_t m) const {
    const Location loc = locate(a);
    if (loc.cell != Cell::MultipleOfQ) return false;
    const std::uint64_t order = params.order();
    return (loc.index + order - m % order) % order < params.n;
}

CyclotomicPartition build_partition(const Params& params) {
    const std::uint64_t p = params.p, q = params.q, N = params.N;
    require_odd_prime_pair("build_partition", p, q);
    require_supported_range("build_partition", p, q);
    const std::uint64_t order = params.order();
    if (N != p * q || order == 0 || std::gcd(p - 1, q - 1) != order ||
        params.e * order != (p - 1) * (q - 1))
        throw MismatchedInputsError("build_partition: inconsistent parameter block");
    if (multiplicative_order(Residue(params.g, p)) != p - 1 ||
        multiplicative_order(Residue(params.g, q)) != q - 1)
        throw MismatchedInputsError("build_partition: g is not a common primitive root");
    if (params.x % p != params.g % p || params.x % q != 1)
        throw MismatchedInputsError("build_partition: x does not satisfy its congruences");

    CyclotomicPartition part;
    part.params = params;

    std::vector<std::uint32_t> class_p, class_q;
    part.Dp = prime_classes(p, params.g, order, class_p);
    part.Dq = prime_classes(q, params.g, order, class_q);

    part.table.assign(N, Location{});
    std::vector<std::uint8_t> seen(N, 0);
    seen[0] = 1;  // zero cell

    // D_i = {g^(2n*t + i) * x^l : 0 <= t < e/(2n), 0 <= l < 2n}
    part.D.resize(order);
    part.units.reserve(params.e * order);
    const std::uint64_t t_count = params.e / order;
    const std::uint64_t step = pow_mod(params.g, order, N);
    std::vector<std::uint64_t> xpow(order);
    xpow[0] = 1;
    for (std::size_t l = 1; l < order; ++l) xpow[l] = mul_mod(xpow[l - 1], params.x, N);
    for (std::uint64_t i = 0; i < order; ++i) {
        auto& cls = part.D[i];
        cls.reserve(params.e);
        std::uint64_t base = pow_mod(params.g, i, N);
        for (std::uint64_t t = 0; t < t_count; ++t) {
            for (std::size_t l = 0; l < order; ++l) {
                const std::uint64_t v = mul_mod(base, xpow[l], N);
                if (seen[v])
                    throw std::logic_error("build_partition: unit classes overlap at " +
                                           std::to_string(v));
                seen[v] = 1;
                cls.push_back(v);
                part.table[v] = {Cell::Unit, static_cast<std::uint32_t>(i)};
            }
            base = mul_mod(base, step, N);
        }
        std::sort(cls.begin(), cls.end());
        part.units.insert(part.units.end(), cls.begin(), cls.end());
    }
    std::sort(part.units.begin(), part.units.end());

    // Multiples of p carry the class of a/p in the q-side family (and dually).
    for (std::uint64_t b = 1; b < q; ++b) {
        const std::uint64_t v = p * b;
        if (seen[v]) throw std::logic_error("build_partition: multiple of p already placed");
        seen[v] = 1;
        part.table[v] = {Cell::MultipleOfP, class_q[b]};
    }
    for (std::uint64_t c = 1; c < p; ++c) {
        const std::uint64_t v = q * c;
        if (seen[v]) throw std::logic_error("build_partition: multiple of q already placed");
        seen[v] = 1;
        part.table[v] = {Cell::MultipleOfQ, class_p[c]};
    }
    if (std::count(seen.begin(), seen.end(), std::uint8_t{1}) != static_cast<long>(N))
        throw std::logic_error("build_partition: cells do not cover Z_N");

    const std::size_t n = static_cast<std::size_t>(params.n);
    part.B.resize(order);
    part.Bp.resize(order);
    part.Bq.resize(order);
    part.Pm.resize(order);
    part.Qm.resize(order);
    for (std::size_t m = 0; m < order; ++m) {
        part.B[m] = sorted_union(part.D, m, n);
        part.Bp[m] = sorted_union(part.Dp, m, n);
        part.Bq[m] = sorted_union(part.Dq, m, n);
        part.Pm[m].reserve(part.Bq[m].size());
        for (std::uint64_t b : part.Bq[m]) part.Pm[m].push_back(p * b);
        part.Qm[m].reserve(part.Bp[m].size());
        for (std::uint64_t c : part.Bp[m]) part.Qm[m].push_back(q * c);
    }

    auto merge_two = [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        std::vector<std::uint64_t> out;
        out.resize(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
        return out;
    };
    part.P = merge_two(part.Pm[0], part.Pm[n]);
    part.Q = merge_two(part.Qm[0], part.Qm[n]);

    part.C0.push_back(0);
    part.C0.insert(part.C0.end(), part.Pm[0].begin(), part.Pm[0].end());
    part.C0.insert(part.C0.end(), part.Qm[0].begin(), part.Qm[0].end());
    part.C0.insert(part.C0.end(), part.B[0].begin(), part.B[0].end());
    std::sort(part.C0.begin(), part.C0.end());
    part.C1.insert(part.C1.end(), part.Pm[n].begin(), part.Pm[n].end());
    part.C1.insert(part.C1.end(), part.Qm[n].begin(), part.Qm[n].end());
    part.C1.insert(part.C1.end(), part.B[n].begin(), part.B[n].end());
    std::sort(part.C1.begin(), part.C1.end());

    if (part.C0.size() + part.C1.size() != N || part.C1.size() != (N - 1) / 2)
        throw std::logic_error("build_partition: C0/C1 sizes are off balance");
    for (std::size_t i = 1; i < part.C1.size(); ++i) {
        if (part.C1[i] == part.C1[i - 1])
            throw std::logic_error("build_partition: C1 holds a duplicate");
    }

    return part;
}

}  // namespace dhseq
