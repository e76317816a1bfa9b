#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhseq/cyclotomy.hpp"
#include "dhseq/gf2m.hpp"
#include "dhseq/gf2poly.hpp"
#include "dhseq/sequence.hpp"

namespace dhseq {

// Every checkable statement of the source construction.
enum class ClaimId { PQR, DI, PQZ, ZN, BSPQ, PQ, SPQ, ST, S1, THEOREM };

// Some statements appear with one wording in the statement and another in
// its proof; those get a verdict per reading.
enum class Reading { Single, AsPrinted, AsProved };

enum class VerdictStatus { Pass, Fail, PassWithNote };

std::string to_string(ClaimId id);
std::string to_string(Reading r);
std::string to_string(VerdictStatus s);
std::optional<ClaimId> claim_from_string(const std::string& name);

// One concrete witness against (or illustrating) a claim.
struct Counterexample {
    std::vector<std::pair<std::string, std::uint64_t>> inputs;  // named, fixed order
    std::string observed;
    std::string expected;
};

constexpr std::size_t kMaxCounterexamples = 10;

struct LemmaVerdict {
    ClaimId claim = ClaimId::PQR;
    Reading reading = Reading::Single;
    VerdictStatus status = VerdictStatus::Pass;
    std::vector<Counterexample> counterexamples;  // at most kMaxCounterexamples
    std::string note;
};

struct ZeroCounts {
    std::uint64_t k0 = 0;
    std::uint64_t in_p = 0;
    std::uint64_t in_q = 0;
    std::uint64_t units = 0;

    std::uint64_t total() const { return k0 + in_p + in_q + units; }

    friend bool operator==(const ZeroCounts&, const ZeroCounts&) = default;
};

struct AnalysisReport {
    Params params;
    std::uint64_t lc_bm = 0;
    std::uint64_t lc_gcd = 0;
    std::uint64_t lc_spectrum = 0;
    std::uint64_t weight = 0;
    ZeroCounts zero_counts;
    BinaryPoly minimal_poly;
    std::vector<LemmaVerdict> verdicts;
    std::uint64_t theorem_bound = 0;  // (pq - 1) / 2
    bool theorem_holds = false;

    const LemmaVerdict* verdict(ClaimId id, Reading r) const;
    // True when a claim with no reading ambiguity failed; treated as a
    // hard error by the command-line driver.
    bool hard_failure() const;
};

// Claims whose failure is disqualifying (single-reading statements).
bool is_gating_claim(ClaimId id);

// Exhaustive check of one claim at the given parameters.  Returns one
// verdict for single-reading claims, two (printed, proved) otherwise.
std::vector<LemmaVerdict> verify_claim(ClaimId claim, const Params& params,
                                       const CyclotomicPartition& partition, const FieldCtx& ctx);

AnalysisReport analyze(std::uint64_t p, std::uint64_t q);

struct SweepItem {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::optional<AnalysisReport> report;
    std::string error;  // nonempty exactly when report is absent
};

std::vector<SweepItem> sweep(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs);

// All pairs of odd primes p < q with pq <= max_n, ordered by (pq, p).
std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_up_to(std::uint64_t max_n);

}  // namespace dhseq
