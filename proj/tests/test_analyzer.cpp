#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "dhseq/analyzer.hpp"
#include "dhseq/report_io.hpp"

using namespace dhseq;

namespace {

const LemmaVerdict& must_verdict(const AnalysisReport& rep, ClaimId id, Reading r) {
    const LemmaVerdict* v = rep.verdict(id, r);
    REQUIRE(v != nullptr);
    return *v;
}

}  // namespace

TEST_CASE("analyze(3, 5): the smallest pair, fully frozen") {
    const AnalysisReport rep = analyze(3, 5);

    CHECK(rep.params.N == 15);
    CHECK(rep.weight == 7);
    CHECK(rep.theorem_bound == 7);
    CHECK(rep.theorem_holds);

    // All three oracles agree on the linear complexity.
    CHECK(rep.lc_bm == 15);
    CHECK(rep.lc_gcd == 15);
    CHECK(rep.lc_spectrum == 15);
    CHECK(rep.minimal_poly == BinaryPoly::x_pow_n_plus_one(15));
    CHECK(rep.zero_counts == ZeroCounts{});

    // Seven single-reading claims plus three double-reading ones.
    CHECK(rep.verdicts.size() == 13);

    for (ClaimId id : {ClaimId::PQR, ClaimId::DI, ClaimId::PQZ, ClaimId::ZN, ClaimId::BSPQ,
                       ClaimId::S1, ClaimId::THEOREM}) {
        CAPTURE(to_string(id));
        const LemmaVerdict& v = must_verdict(rep, id, Reading::Single);
        REQUIRE(v.status != VerdictStatus::Fail);
        REQUIRE(v.counterexamples.empty());
    }

    CHECK(must_verdict(rep, ClaimId::PQ, Reading::AsPrinted).status == VerdictStatus::Pass);
    CHECK(must_verdict(rep, ClaimId::PQ, Reading::AsProved).status ==
          VerdictStatus::PassWithNote);

    // q = 5 = 1 (mod 4): the proof variant of the S-decomposition also holds...
    CHECK(must_verdict(rep, ClaimId::SPQ, Reading::AsPrinted).status == VerdictStatus::Pass);
    CHECK(must_verdict(rep, ClaimId::SPQ, Reading::AsProved).status == VerdictStatus::Pass);

    // ...but the printed zero-count bound breaks: T_a^(p) vanishes at every
    // k in Q because |P_a| = (q-1)/2 is even.
    const LemmaVerdict& st_printed = must_verdict(rep, ClaimId::ST, Reading::AsPrinted);
    CHECK(st_printed.status == VerdictStatus::Fail);
    CHECK_FALSE(st_printed.counterexamples.empty());
    CHECK(must_verdict(rep, ClaimId::ST, Reading::AsProved).status ==
          VerdictStatus::PassWithNote);

    // A failed non-gating claim is not a hard failure.
    CHECK_FALSE(rep.hard_failure());

    // No single-reading verdict exists for double-reading claims.
    CHECK(rep.verdict(ClaimId::ST, Reading::Single) == nullptr);
    CHECK(rep.verdict(ClaimId::PQ, Reading::Single) == nullptr);
}

TEST_CASE("analyze(3, 7): q = 3 (mod 4) flips the two contested verdicts") {
    const AnalysisReport rep = analyze(3, 7);

    CHECK(must_verdict(rep, ClaimId::ST, Reading::AsPrinted).status == VerdictStatus::Pass);

    const LemmaVerdict& spq_proved = must_verdict(rep, ClaimId::SPQ, Reading::AsProved);
    CHECK(spq_proved.status == VerdictStatus::Fail);
    CHECK_FALSE(spq_proved.counterexamples.empty());
    CHECK(must_verdict(rep, ClaimId::SPQ, Reading::AsPrinted).status == VerdictStatus::Pass);

    CHECK_FALSE(rep.hard_failure());
    CHECK(rep.theorem_holds);
}

TEST_CASE("analyze(5, 13): a pair with n = 2") {
    const AnalysisReport rep = analyze(5, 13);
    CHECK(rep.params.n == 2);
    CHECK(rep.weight == 32);
    CHECK(rep.theorem_bound == 32);
    CHECK(rep.theorem_holds);
    CHECK(rep.lc_bm == rep.lc_gcd);
    CHECK(rep.lc_gcd == rep.lc_spectrum);
    CHECK(rep.lc_gcd >= 32);
    CHECK(rep.zero_counts.total() == 65 - rep.lc_spectrum);
    CHECK_FALSE(rep.hard_failure());

    // hp + hq = 2 + 6 is even, so the n > 1 zero branch agrees with the
    // parity sum: S(1) = 0 and k = 0 contributes one spectrum zero.
    const LemmaVerdict& s1 = must_verdict(rep, ClaimId::S1, Reading::Single);
    CHECK(s1.status == VerdictStatus::Pass);
    CHECK(rep.zero_counts.k0 == 1);
}

TEST_CASE("analyze(7, 13): n = 3 with S(1) = 1; the zero branch is flagged, not failed") {
    const AnalysisReport rep = analyze(7, 13);
    CHECK(rep.params.n == 3);

    // S(1) is the weight parity: the weight (91 - 1)/2 = 45 is odd, so the
    // k = 0 cell of the zero spectrum is empty and S(1) = 1 = (3 + 6) mod 2.
    CHECK(rep.weight == 45);
    CHECK(rep.zero_counts.k0 == 0);

    // The displayed parity sum holds; the simplification that sends every
    // n > 1 pair to zero does not apply here (hp + hq odd), which the
    // verdict records as a note rather than a failure of a true property.
    const LemmaVerdict& s1 = must_verdict(rep, ClaimId::S1, Reading::Single);
    CHECK(s1.status == VerdictStatus::PassWithNote);
    CHECK(s1.counterexamples.empty());
    CHECK_FALSE(s1.note.empty());

    CHECK_FALSE(rep.hard_failure());
    CHECK(rep.theorem_holds);
}

TEST_CASE("analyze propagates parameter errors") {
    CHECK_THROWS_AS(analyze(4, 5), NotPrimeError);
    CHECK_THROWS_AS(analyze(2, 7), NotOddError);
    CHECK_THROWS_AS(analyze(7, 3), OrderViolationError);
}

TEST_CASE("sweep captures per-pair errors without aborting") {
    const std::vector<SweepItem> items = sweep({{3, 5}, {4, 6}, {5, 7}});
    REQUIRE(items.size() == 3);

    CHECK(items[0].p == 3);
    CHECK(items[0].report.has_value());
    CHECK(items[0].error.empty());

    CHECK(items[1].p == 4);
    CHECK_FALSE(items[1].report.has_value());
    CHECK_FALSE(items[1].error.empty());

    CHECK(items[2].report.has_value());
    CHECK(items[2].report->params.N == 35);
}

TEST_CASE("analysis is deterministic") {
    const AnalysisReport a = analyze(5, 13);
    const AnalysisReport b = analyze(5, 13);
    CHECK(to_json(a).dump() == to_json(b).dump());

    const auto s1 = sweep({{3, 5}, {3, 7}, {5, 7}});
    const auto s2 = sweep({{3, 5}, {3, 7}, {5, 7}});
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(to_json(s1[i]).dump() == to_json(s2[i]).dump());
    }
}

TEST_CASE("pairs_up_to enumerates by product") {
    using PairVec = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
    CHECK(pairs_up_to(14).empty());
    CHECK(pairs_up_to(15) == PairVec{{3, 5}});
    CHECK(pairs_up_to(35) == PairVec{{3, 5}, {3, 7}, {3, 11}, {5, 7}});
    const auto many = pairs_up_to(300);
    for (std::size_t i = 1; i < many.size(); ++i) {
        const auto prev = many[i - 1].first * many[i - 1].second;
        const auto cur = many[i].first * many[i].second;
        REQUIRE(prev <= cur);
        if (prev == cur) REQUIRE(many[i - 1].first < many[i].first);
    }
    for (const auto& [p, q] : many) {
        REQUIRE(p < q);
        REQUIRE(p * q <= 300);
        REQUIRE(is_prime(p));
        REQUIRE(is_prime(q));
    }
}

TEST_CASE("verify_claim checks input consistency") {
    const Params pr35 = derive_params(3, 5);
    const CyclotomicPartition part37 = build_partition(derive_params(3, 7));
    const FieldCtx ctx15 = make_field(15);
    CHECK_THROWS_AS(verify_claim(ClaimId::PQR, pr35, part37, ctx15), MismatchedInputsError);

    const CyclotomicPartition part35 = build_partition(pr35);
    const FieldCtx ctx21 = make_field(21);
    CHECK_THROWS_AS(verify_claim(ClaimId::PQR, pr35, part35, ctx21), MismatchedInputsError);

    // Well-matched inputs give one verdict for single-reading claims, two otherwise.
    CHECK(verify_claim(ClaimId::PQR, pr35, part35, ctx15).size() == 1);
    CHECK(verify_claim(ClaimId::ST, pr35, part35, ctx15).size() == 2);
    CHECK(verify_claim(ClaimId::SPQ, pr35, part35, ctx15).size() == 2);
}

TEST_CASE("gating classification") {
    CHECK(is_gating_claim(ClaimId::PQR));
    CHECK(is_gating_claim(ClaimId::DI));
    CHECK(is_gating_claim(ClaimId::PQZ));
    CHECK(is_gating_claim(ClaimId::ZN));
    CHECK(is_gating_claim(ClaimId::BSPQ));
    CHECK(is_gating_claim(ClaimId::S1));
    CHECK(is_gating_claim(ClaimId::THEOREM));
    CHECK_FALSE(is_gating_claim(ClaimId::PQ));
    CHECK_FALSE(is_gating_claim(ClaimId::SPQ));
    CHECK_FALSE(is_gating_claim(ClaimId::ST));
}

TEST_CASE("claim names round-trip") {
    for (ClaimId id : {ClaimId::PQR, ClaimId::DI, ClaimId::PQZ, ClaimId::ZN, ClaimId::BSPQ,
                       ClaimId::PQ, ClaimId::SPQ, ClaimId::ST, ClaimId::S1, ClaimId::THEOREM}) {
        CHECK(claim_from_string(to_string(id)) == id);
    }
    CHECK_FALSE(claim_from_string("NOPE").has_value());
}
