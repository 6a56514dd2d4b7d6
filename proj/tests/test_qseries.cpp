#include <doctest.h>

#include <random>

#include "hookbias/qseries.hpp"

using namespace hookbias;

namespace {

ZSeries from_list(std::initializer_list<long> values)
{
    ZSeries s(values.size() - 1);
    std::size_t k = 0;
    for (long v : values)
        s.at(k++) = v;
    return s;
}

ZSeries random_series(std::mt19937& rng, std::size_t order)
{
    std::uniform_int_distribution<long> dist(-5, 5);
    ZSeries s(order);
    for (std::size_t k = 0; k <= order; ++k)
        s.at(k) = dist(rng);
    return s;
}

} // namespace

TEST_CASE("pochhammer matches known expansions")
{
    // (-q;q)_inf counts partitions into distinct parts
    CHECK(pochhammer(-1, 1, 1, kInfinite, 7)
          == from_list({1, 1, 1, 2, 2, 3, 4, 5}));
    // (q;q)_inf is Euler's pentagonal series
    CHECK(pochhammer(1, 1, 1, kInfinite, 7)
          == from_list({1, -1, -1, 0, 0, 1, 0, 1}));
    // finite symbol (q;q)_2 = (1-q)(1-q^2)
    CHECK(pochhammer(1, 1, 1, 2, 4) == from_list({1, -1, -1, 1, 0}));
    // (-q^2;q^2)_inf: distinct even parts
    CHECK(pochhammer(-1, 2, 2, kInfinite, 8)
          == from_list({1, 0, 1, 0, 1, 0, 2, 0, 2}));
    CHECK_THROWS_AS(pochhammer(1, 0, 1, kInfinite, 5), std::invalid_argument);
}

TEST_CASE("pochhammer truncation consistency")
{
    ZSeries big = pochhammer(-1, 1, 1, kInfinite, 40);
    ZSeries small = pochhammer(-1, 1, 1, kInfinite, 17);
    CHECK(big.truncated(17) == small);
}

TEST_CASE("geometric and inverse builders")
{
    CHECK(geometric(3, 9) == from_list({0, 0, 0, 1, 0, 0, 1, 0, 0, 1}));
    CHECK(inv_one_minus(2, 6) == from_list({1, 0, 1, 0, 1, 0, 1}));

    // 1/(1-q^j) really is the series inverse of 1-q^j
    ZSeries one_minus(10);
    one_minus.at(0) = 1;
    one_minus.at(4) = -1;
    CHECK(one_minus.inverse() == inv_one_minus(4, 10));
}

TEST_CASE("lambert terms expand alternately")
{
    // q/(1+q) = q - q^2 + q^3 - ...
    CHECK(lambert_term(1, 1, 5) == from_list({0, 1, -1, 1, -1, 1}));
    // q^4/(1+q^2) = q^4 - q^6 + q^8
    CHECK(lambert_term(2, 2, 8) == from_list({0, 0, 0, 0, 1, 0, -1, 0, 1}));

    // sum_{m>=1} q^m/(1+q^m): coefficient of q^4 is
    // (number of odd divisors of 4) - (number of even divisors) = 1 - 2 = -1
    ZSeries lam = lambert(1, 1, 12);
    CHECK(lam[1] == 1);
    CHECK(lam[4] == -1);
    CHECK(lam[12] == -2);
}

TEST_CASE("lambert rearrangement identity")
{
    // -sum_{m>=1} q^m/(1+q^m) + sum_{m>=1} q^{4m}/(1+q^m)
    //   = -q/(1-q^2) - q^3/(1-q^3) + correction-free rearrangement
    // i.e. sum q^{4m}/(1+q^m) - sum q^m/(1+q^m)
    //   = -sum q^m (1-q^{3m})/(1+q^m) = -sum q^m(1-q^m)(1+q^m+q^{2m})/(1+q^m)
    // checked coefficientwise instead through the two sides directly:
    const std::size_t order = 60;
    ZSeries lhs = lambert(4, 1, order) - lambert(1, 1, order);
    ZSeries rhs(order);
    // -q^m(1-q^{3m})/(1+q^m) = -(q^m - q^{2m} + 2 q^{3m}/(1+q^m)) ... use
    // exact per-m expansion to keep the oracle independent:
    for (unsigned m = 1; m <= order; ++m) {
        // q^m (1 - q^{3m}) / (1 + q^m) expanded as alternating series
        ZSeries numer(order);
        if (m <= order)
            numer.at(m) = 1;
        if (4 * m <= order)
            numer.at(4 * m) = -1;
        ZSeries denom = ZSeries::one(order);
        if (m <= order)
            denom.at(m) = 1;
        rhs -= numer * denom.inverse();
    }
    CHECK(lhs == rhs);
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 20; ++trial) {
        ZSeries a = random_series(rng, 25);
        ZSeries b = random_series(rng, 25);
        ZSeries c = random_series(rng, 25);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("multiplication truncates consistently")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        ZSeries a = random_series(rng, 30);
        ZSeries b = random_series(rng, 30);
        CHECK((a * b).truncated(12) == a.truncated(12) * b.truncated(12));
    }
}

TEST_CASE("inverse is a two-sided inverse")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        ZSeries a = random_series(rng, 20);
        a.at(0) = trial % 2 == 0 ? 1 : -1;
        CHECK(a * a.inverse() == ZSeries::one(20));
        CHECK(a.inverse() * a == ZSeries::one(20));
    }
    ZSeries bad = ZSeries::one(5);
    bad.at(0) = 2;
    CHECK_THROWS_AS(bad.inverse(), std::domain_error);
}

TEST_CASE("rational mode inverts any nonzero constant")
{
    QSeries s(6);
    s.at(0) = mpq_class(3, 2);
    s.at(1) = mpq_class(1, 7);
    CHECK(s * s.inverse() == QSeries::one(6));
}

TEST_CASE("mul_binomial agrees with full multiplication")
{
    std::mt19937 rng(5);
    ZSeries a = random_series(rng, 18);
    ZSeries expected = a;
    ZSeries factor = ZSeries::one(18);
    factor.at(7) = -3;
    expected *= factor;
    a.mul_binomial(7, mpz_class(-3));
    CHECK(a == expected);

    // factors beyond the order are no-ops
    ZSeries b = random_series(rng, 18);
    ZSeries before = b;
    b.mul_binomial(19, mpz_class(5));
    CHECK(b == before);
}

TEST_CASE("order discipline is strict")
{
    ZSeries a(10), b(11);
    CHECK_THROWS_AS(a += b, order_mismatch);
    CHECK_THROWS_AS(a * b, order_mismatch);
    CHECK_THROWS_AS(a.truncated(11), std::invalid_argument);
}

TEST_CASE("pow matches repeated multiplication")
{
    std::mt19937 rng(1234);
    ZSeries a = random_series(rng, 15);
    a.at(0) = 1;
    ZSeries cube = a * a * a;
    CHECK(a.pow(3) == cube);
    CHECK(a.pow(0) == ZSeries::one(15));
    CHECK(a.pow(-2) == (a * a).inverse());
}
