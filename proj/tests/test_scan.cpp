#include <doctest.h>

#include "hookbias/scan.hpp"

using namespace hookbias;

TEST_CASE("bias scan matches direct enumeration totals")
{
    BiasReport rep = scan_bias(Pair::odd_vs_distinct, 3, 30, Source::enumeration);
    CHECK(rep.n_max == 30);
    CHECK(rep.differences.size() == 31);
    for (unsigned n = 0; n <= 30; ++n) {
        mpz_class expected =
            stat_total(Family::odd, Statistic::hooks_eq_t, 3, n)
            - stat_total(Family::distinct, Statistic::hooks_eq_t, 3, n);
        CHECK(rep.differences[n] == expected);
    }
}

TEST_CASE("genfun and enumeration sources agree")
{
    for (unsigned t : {2u, 3u}) {
        BiasReport a = scan_bias(Pair::odd_vs_distinct, t, 60, Source::genfun);
        BiasReport b = scan_bias(Pair::odd_vs_distinct, t, 60,
                                 Source::enumeration, 3);
        CHECK(a.differences == b.differences);
        CHECK(a.violation_set == b.violation_set);
        CHECK(a.last_violation == b.last_violation);
    }
}

TEST_CASE("known last violations for the plain pair")
{
    std::vector<BiasReport> reps =
        scan_bias_range(Pair::odd_vs_distinct, 2, 6, 70, Source::enumeration);
    REQUIRE(reps.size() == 5);
    CHECK(!reps[0].last_violation.has_value()); // t = 2: never negative
    CHECK(reps[1].last_violation == 7);         // t = 3
    CHECK(reps[2].last_violation == 8);         // t = 4
    CHECK(reps[3].last_violation == 18);        // t = 5
    CHECK(reps[4].last_violation == 16);        // t = 6

    // t = 3 fails exactly at 5 and 7 in this window
    CHECK(reps[1].violation_set == std::vector<unsigned>{5, 7});
    CHECK(reps[1].differences[5] == -1);
    CHECK(reps[1].differences[7] == -1);
}

TEST_CASE("known last violations for the self-conjugate pair")
{
    std::vector<BiasReport> reps = scan_bias_range(
        Pair::selfconj_vs_distinctodd, 2, 6, 70, Source::enumeration, 3);
    REQUIRE(reps.size() == 5);
    CHECK(reps[0].last_violation == 10);
    CHECK(reps[1].last_violation == 8);
    CHECK(reps[2].last_violation == 22);
    CHECK(reps[3].last_violation == 12);
    CHECK(reps[4].last_violation == 30);
}

TEST_CASE("genfun source is limited to the proved closed forms")
{
    CHECK_THROWS_AS(scan_bias(Pair::odd_vs_distinct, 4, 10, Source::genfun),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        scan_bias(Pair::selfconj_vs_distinctodd, 2, 10, Source::genfun),
        std::invalid_argument);
}

TEST_CASE("even-hook totals over self-conjugate partitions stay divisible")
{
    CongruenceReport rep = scan_congruence(5, 50, 2);
    CHECK(rep.m_max == 5);
    CHECK(rep.n_max == 50);
    for (const auto& hit : rep.nonzero)
        MESSAGE("m=" << hit.m << " n=" << hit.n << " residue=" << hit.residue);
    CHECK(rep.ok());
}

TEST_CASE("identity scan passes")
{
    CheckReport rep = scan_identities(40);
    for (const CheckIssue& issue : rep.issues)
        MESSAGE(issue.check << " at n=" << issue.exponent << ": "
                            << issue.detail);
    CHECK(rep.ok());
    CHECK(!rep.passed.empty());
}

TEST_CASE("pair names round trip")
{
    CHECK(pair_from_name(pair_name(Pair::odd_vs_distinct))
          == Pair::odd_vs_distinct);
    CHECK(pair_from_name(pair_name(Pair::selfconj_vs_distinctodd))
          == Pair::selfconj_vs_distinctodd);
    CHECK_THROWS_AS(pair_from_name("nope"), std::invalid_argument);
}
