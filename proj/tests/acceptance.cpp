// Acceptance gate: nine criteria, one PASS/FAIL line each, exit 0 only if
// every criterion holds.  Each criterion re-derives its facts through the
// public library API (or an independent local oracle) rather than trusting
// a single code path.

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "dhseq/analyzer.hpp"
#include "dhseq/report_io.hpp"

using namespace dhseq;

namespace {

struct Criterion {
    int number;
    const char* label;
    bool passed;
    std::vector<std::string> details;
};

std::vector<Criterion> g_results;

void report(int number, const char* label, bool passed, std::vector<std::string> details = {}) {
    g_results.push_back({number, label, passed, std::move(details)});
}

// The seven-pair acceptance sweep; (5,7) qualifies since gcd(4,6) = 2.
const std::vector<std::pair<std::uint64_t, std::uint64_t>> kPairs = {
    {3, 5}, {3, 7}, {7, 11}, {5, 7}, {5, 13}, {5, 17}, {7, 13}};

// Everything the per-pair criteria need, built once through the library API.
struct PairData {
    Params params;
    CyclotomicPartition part;
    BinarySequence seq;
    FieldCtx ctx;
    SpectrumReport spectrum;
    AnalysisReport report;
};

std::vector<PairData> build_pairs() {
    std::vector<PairData> out;
    for (const auto& [p, q] : kPairs) {
        PairData d{derive_params(p, q), {}, {}, FieldCtx::make_field(p * q), {}, {}};
        d.part = build_partition(d.params);
        d.seq = generate(d.part);
        const CharacterEvaluator eval(d.ctx);
        d.spectrum = eval.zero_spectrum(d.part);
        d.report = analyze(p, q);
        out.push_back(std::move(d));
    }
    return out;
}

std::string pair_tag(const Params& p) {
    return "(" + std::to_string(p.p) + ", " + std::to_string(p.q) + ")";
}

// ---- criterion 1: three independent linear-complexity oracles agree ----

void criterion_1(const std::vector<PairData>& pairs) {
    std::vector<std::string> bad;
    const auto start = std::chrono::steady_clock::now();
    for (const PairData& d : pairs) {
        const std::uint64_t lc_bm = berlekamp_massey(doubled_period(d.seq)).length;
        const std::uint64_t lc_gcd = linear_complexity_gcd(d.seq);
        const std::uint64_t lc_spec = d.spectrum.lc;
        if (lc_bm != lc_gcd || lc_gcd != lc_spec) {
            bad.push_back(pair_tag(d.params) + ": bm=" + std::to_string(lc_bm) +
                          " gcd=" + std::to_string(lc_gcd) + " spectrum=" +
                          std::to_string(lc_spec));
        }
    }
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (secs >= 10) bad.push_back("runtime " + std::to_string(secs) + "s exceeds 10s");
    report(1, "Berlekamp-Massey, gcd and zero-spectrum complexities agree on all seven pairs",
           bad.empty(), bad);
}

// ---- criterion 2: complexity bound ----

void criterion_2(const std::vector<PairData>& pairs) {
    std::vector<std::string> bad;
    for (const PairData& d : pairs) {
        const std::uint64_t bound = (d.params.N - 1) / 2;
        if (d.spectrum.lc < bound) {
            bad.push_back(pair_tag(d.params) + ": lc " + std::to_string(d.spectrum.lc) +
                          " < bound " + std::to_string(bound));
        }
    }
    report(2, "linear complexity is at least (pq-1)/2 on every pair", bad.empty(), bad);
}

// ---- criterion 3: balance ----

void criterion_3(const std::vector<PairData>& pairs) {
    std::vector<std::string> bad;
    for (const PairData& d : pairs) {
        if (d.seq.weight() != (d.params.N - 1) / 2) {
            bad.push_back(pair_tag(d.params) + ": weight " + std::to_string(d.seq.weight()));
        }
    }
    report(3, "sequence weight equals (N-1)/2 on every pair", bad.empty(), bad);
}

// ---- criterion 4: value of S at 1 ----

void criterion_4(const std::vector<PairData>& pairs) {
    std::vector<std::string> bad;
    std::vector<std::string> info;
    for (const PairData& d : pairs) {
        const CharacterEvaluator eval(d.ctx);
        const FieldElem s1 = eval.eval_S(d.part, 0);
        const std::uint64_t hp = (d.params.p - 1) / 2;
        const std::uint64_t hq = (d.params.q - 1) / 2;
        // The closed form's displayed sum is hp + hq + (p-1)(q-1)/2; the third
        // term equals 2*hp*hq and is always even, so every pair must give
        // S(1) = (hp + hq) mod 2.  Cross-check against the weight parity:
        // evaluating the support polynomial at 1 counts the support mod 2.
        const std::uint64_t parity = (hp + hq + hp * (d.params.q - 1)) % 2;
        const FieldElem expect = parity != 0 ? d.ctx.one() : d.ctx.zero();
        if (s1 != expect) {
            bad.push_back(pair_tag(d.params) + ": S(1) = " + d.ctx.hex(s1) + ", expected " +
                          d.ctx.hex(expect));
            continue;
        }
        if (d.seq.weight() % 2 != parity) {
            bad.push_back(pair_tag(d.params) + ": S(1) disagrees with the weight parity");
            continue;
        }
        if (d.params.n == 1 || (hp + hq) % 2 == 0) {
            // Here the stated case split agrees with the displayed sum:
            // (hp + hq) mod 2 for n = 1, zero for n > 1 with hp + hq even.
            // (All n > 1 pairs with 4 | gcd(p-1, q-1) land in the even cell.)
            continue;
        }
        // n > 1 with hp + hq odd (e.g. (7, 13), n = 3): the stated "zero for
        // n > 1" branch contradicts both the displayed sum and balance, since
        // S(1) is the parity of the weight (pq-1)/2, which is odd here.  The
        // sequence is correct; the analyzer must flag the branch rather than
        // fail a true property or assert the contradiction away.
        const LemmaVerdict* v = d.report.verdict(ClaimId::S1, Reading::Single);
        if (v == nullptr || v->status != VerdictStatus::PassWithNote) {
            bad.push_back(pair_tag(d.params) +
                          ": inconsistent n > 1 branch not flagged by the analyzer");
        } else {
            info.push_back(pair_tag(d.params) + ": S(1) = 1 with n = " +
                           std::to_string(d.params.n) +
                           " and hp + hq odd; the n > 1 branch's stated zero conflicts with "
                           "balance, recorded as " + to_string(v->status));
        }
    }
    std::vector<std::string> details = bad;
    details.insert(details.end(), info.begin(), info.end());
    report(4,
           "S(1) equals the displayed parity sum on every pair; the n > 1 zero branch holds "
           "where self-consistent and is flagged where not",
           bad.empty(), details);
}

// ---- criterion 5: lemma suite ----

void criterion_5(const std::vector<PairData>& pairs) {
    std::vector<std::string> bad;
    const ClaimId gating[] = {ClaimId::PQR, ClaimId::DI, ClaimId::PQZ, ClaimId::ZN,
                              ClaimId::BSPQ};
    const ClaimId dual[] = {ClaimId::PQ, ClaimId::SPQ, ClaimId::ST};
    for (const PairData& d : pairs) {
        for (ClaimId id : gating) {
            const LemmaVerdict* v = d.report.verdict(id, Reading::Single);
            if (v == nullptr) {
                bad.push_back(pair_tag(d.params) + ": missing verdict " + to_string(id));
            } else if (v->status == VerdictStatus::Fail) {
                bad.push_back(pair_tag(d.params) + ": " + to_string(id) + " failed");
            }
        }
        for (ClaimId id : dual) {
            for (Reading r : {Reading::AsPrinted, Reading::AsProved}) {
                const LemmaVerdict* v = d.report.verdict(id, r);
                if (v == nullptr) {
                    bad.push_back(pair_tag(d.params) + ": missing " + to_string(id) + " [" +
                                  to_string(r) + "]");
                }
            }
        }
        // Every Fail must carry at least one concrete counterexample.
        for (const LemmaVerdict& v : d.report.verdicts) {
            if (v.status == VerdictStatus::Fail && v.counterexamples.empty()) {
                bad.push_back(pair_tag(d.params) + ": " + to_string(v.claim) +
                              " failed without a counterexample");
            }
        }
    }
    // Determinism: a repeated analysis renders byte-identically.
    for (const auto& [p, q] : {std::pair<std::uint64_t, std::uint64_t>{3, 5}, {5, 13}}) {
        if (to_json(analyze(p, q)).dump() != to_json(analyze(p, q)).dump()) {
            bad.push_back("analysis of (" + std::to_string(p) + ", " + std::to_string(q) +
                          ") is not deterministic");
        }
    }
    report(5,
           "claim suite: the five exhaustive claims pass; contested claims carry dual, "
           "deterministic verdicts with counterexamples on Fail",
           bad.empty(), bad);
}

// ---- criterion 6: unit-zero bound ----

void criterion_6(const std::vector<PairData>& pairs) {
    std::vector<std::string> bad;
    for (const PairData& d : pairs) {
        const std::uint64_t bound = (d.params.p - 1) * (d.params.q - 1) / 2;
        if (d.spectrum.zeros_in_units > bound) {
            bad.push_back(pair_tag(d.params) + ": " + std::to_string(d.spectrum.zeros_in_units) +
                          " unit zeros exceed " + std::to_string(bound));
        }
    }
    report(6, "unit zeros of S(alpha^k) stay within (p-1)(q-1)/2", bad.empty(), bad);
}

// ---- criterion 7: Frobenius closure ----

void criterion_7(const std::vector<PairData>& pairs) {
    std::vector<std::string> bad;
    for (const PairData& d : pairs) {
        bool closed = d.spectrum.frobenius_closed;
        // Independent re-check of the mask itself.
        const std::uint64_t N = d.params.N;
        for (std::uint64_t k = 0; k < N && closed; ++k) {
            if (d.spectrum.zero_mask[k] != d.spectrum.zero_mask[(2 * k) % N]) closed = false;
        }
        if (!closed) bad.push_back(pair_tag(d.params) + ": zero set not closed under doubling");
    }
    report(7, "the zero set of S(alpha^k) is closed under k -> 2k (mod N)", bad.empty(), bad);
}

// ---- criterion 8: micro-oracles ----

// Shortest LFSR by exhaustive search over all connection masks.
std::size_t shortest_lfsr_by_search(const BitVector& bits) {
    const std::size_t n = bits.size();
    for (std::size_t L = 0; L <= n; ++L) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
            bool ok = true;
            for (std::size_t i = L; i < n && ok; ++i) {
                std::uint8_t s = 0;
                for (std::size_t j = 1; j <= L; ++j) {
                    if ((mask >> (j - 1)) & 1) s ^= bits[i - j];
                }
                ok = (s == bits[i]);
            }
            if (ok) return L;
        }
    }
    return n;
}

int u32_degree(std::uint32_t v) { return v == 0 ? -1 : 31 - std::countl_zero(v); }

std::uint32_t u32_mod(std::uint32_t a, std::uint32_t b) {
    const int db = u32_degree(b);
    for (int da = u32_degree(a); da >= db; da = u32_degree(a)) {
        a ^= b << (da - db);
    }
    return a;
}

// Greatest common divisor by scanning every candidate divisor.
std::uint32_t u32_gcd_by_enumeration(std::uint32_t a, std::uint32_t b) {
    std::uint32_t best = 1;
    for (std::uint32_t d = 1; d < 128; ++d) {
        const bool div_a = a == 0 || u32_mod(a, d) == 0;
        const bool div_b = b == 0 || u32_mod(b, d) == 0;
        if (div_a && div_b && u32_degree(d) > u32_degree(best)) best = d;
    }
    return best;
}

void criterion_8() {
    std::vector<std::string> bad;
    const auto start = std::chrono::steady_clock::now();

    // Exhaustive synthesis check over every length-10 bit string.
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << 10) && bad.size() < 5; ++v) {
        BitVector bits(10);
        for (std::size_t i = 0; i < 10; ++i) bits[i] = static_cast<std::uint8_t>((v >> i) & 1);
        const std::uint64_t got = berlekamp_massey(bits).length;
        const std::size_t want = shortest_lfsr_by_search(bits);
        if (got != want) {
            bad.push_back("bm mismatch on string " + std::to_string(v) + ": " +
                          std::to_string(got) + " vs " + std::to_string(want));
        }
    }

    // Exhaustive gcd check over every pair of degree <= 6, via divisor scan.
    for (std::uint32_t a = 0; a < 128 && bad.size() < 5; ++a) {
        for (std::uint32_t b = 0; b < 128; ++b) {
            if (a == 0 && b == 0) continue;
            const BinaryPoly g =
                poly_gcd(BinaryPoly::from_words({a}), BinaryPoly::from_words({b}));
            const std::uint32_t got =
                g.words().empty() ? 0 : static_cast<std::uint32_t>(g.words()[0]);
            const std::uint32_t want = u32_gcd_by_enumeration(a, b);
            if (got != want) {
                bad.push_back("gcd mismatch at (" + std::to_string(a) + ", " +
                              std::to_string(b) + "): " + std::to_string(got) + " vs " +
                              std::to_string(want));
                break;
            }
        }
    }

    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (secs >= 30) bad.push_back("runtime " + std::to_string(secs) + "s exceeds 30s");
    report(8, "synthesis and gcd agree with exhaustive-search oracles", bad.empty(), bad);
}

// ---- criterion 9: full sweep at scale ----

void criterion_9() {
    std::vector<std::string> bad;
    const auto start = std::chrono::steady_clock::now();
    const auto pairs = pairs_up_to(1000);
    const std::vector<SweepItem> items = sweep(pairs);
    const auto secs = std::chrono::duration_cast<std::chrono::duration<double>>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (secs >= 60.0) bad.push_back("sweep took " + std::to_string(secs) + "s (limit 60s)");
    if (items.size() != pairs.size()) bad.push_back("sweep dropped pairs");

    for (const SweepItem& item : items) {
        if (bad.size() >= 8) break;
        const std::string tag = "(" + std::to_string(item.p) + ", " + std::to_string(item.q) + ")";
        if (!item.report) {
            bad.push_back(tag + ": " + item.error);
            continue;
        }
        const AnalysisReport& rep = *item.report;
        // Criteria 1-3 from the report fields (analyze would have thrown on
        // an oracle split, but recheck anyway).
        if (rep.lc_bm != rep.lc_gcd || rep.lc_gcd != rep.lc_spectrum)
            bad.push_back(tag + ": oracle mismatch");
        if (!rep.theorem_holds || rep.lc_gcd < rep.theorem_bound)
            bad.push_back(tag + ": bound violated");
        if (rep.weight != (rep.params.N - 1) / 2) bad.push_back(tag + ": unbalanced");
        if (rep.zero_counts.total() != rep.params.N - rep.lc_spectrum)
            bad.push_back(tag + ": zero split inconsistent");
        // Criterion 4 at scale: the k = 0 cell holds a zero exactly when the
        // displayed parity sum (hp + hq mod 2) vanishes.
        const std::uint64_t s1_parity = ((rep.params.p - 1) / 2 + (rep.params.q - 1) / 2) % 2;
        if (rep.zero_counts.k0 != (s1_parity == 0 ? 1u : 0u))
            bad.push_back(tag + ": S(1) zero cell disagrees with the parity sum");
        // Criteria 4-6 as recorded verdicts (S1, the gating claims, BSPQ).
        // Frobenius closure (criterion 7) is enforced inside analyze(),
        // which refuses to produce a report when it breaks.
        for (ClaimId id : {ClaimId::S1, ClaimId::PQR, ClaimId::DI, ClaimId::PQZ, ClaimId::ZN,
                           ClaimId::BSPQ, ClaimId::THEOREM}) {
            const LemmaVerdict* v = rep.verdict(id, Reading::Single);
            if (v == nullptr || v->status == VerdictStatus::Fail)
                bad.push_back(tag + ": claim " + to_string(id) + " not clean");
        }
    }
    report(9,
           "sweep over all pairs with pq <= 1000 finishes in time and every report is clean",
           bad.empty(), bad);
}

}  // namespace

int main() {
    try {
        const std::vector<PairData> pairs = build_pairs();
        criterion_1(pairs);
        criterion_2(pairs);
        criterion_3(pairs);
        criterion_4(pairs);
        criterion_5(pairs);
        criterion_6(pairs);
        criterion_7(pairs);
        criterion_8();
        criterion_9();
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "acceptance aborted: %s\n", ex.what());
        return 1;
    }

    int failures = 0;
    for (const Criterion& c : g_results) {
        std::printf("[%s] criterion %d: %s\n", c.passed ? "PASS" : "FAIL", c.number, c.label);
        for (const std::string& d : c.details) std::printf("        %s\n", d.c_str());
        if (!c.passed) ++failures;
    }
    if (failures != 0) {
        std::printf("%d of %zu criteria failed\n", failures, g_results.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", g_results.size());
    return 0;
}
