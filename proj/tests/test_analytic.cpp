#include <doctest.h>

#include <cmath>

#include "hookbias/analytic.hpp"
#include "hookbias/partitions.hpp"

using namespace hookbias;

namespace {

const double kPi = 3.14159265358979323846;

double rel_err(double got, double want)
{
    return std::fabs(got - want) / std::fabs(want);
}

} // namespace

TEST_CASE("LogReal arithmetic")
{
    LogReal a = LogReal::from_double(3.5);
    LogReal b = LogReal::from_double(-1.25);
    CHECK((a * b).to_double() == doctest::Approx(-4.375));
    CHECK((a / b).to_double() == doctest::Approx(-2.8));
    CHECK((a + b).to_double() == doctest::Approx(2.25));
    CHECK((a - b).to_double() == doctest::Approx(4.75));
    CHECK((b - a).to_double() == doctest::Approx(-4.75));
    CHECK(b < a);
    CHECK(LogReal::zero() < a);
    CHECK(b < LogReal::zero());
    CHECK((a - a).sign == 0);

    // from_mpz keeps the leading digits of huge integers
    mpz_class big = 1;
    for (int k = 2; k <= 200; ++k)
        big *= k; // 200!
    LogReal lb = LogReal::from_mpz(big);
    CHECK(lb.sign == 1);
    // Stirling: ln 200! = 863.23198...
    CHECK(lb.log_abs == doctest::Approx(863.2319872).epsilon(1e-9));
    CHECK(LogReal::from_mpz(mpz_class(0)).sign == 0);
    CHECK(LogReal::from_mpz(mpz_class(-7)).sign == -1);
}

TEST_CASE("distinct part counts match enumeration")
{
    DistinctCountTable q1 = distinct_counts(1, 40);
    for (unsigned n = 0; n <= 40; ++n)
        CHECK(q1.rho(n) == family_count(Family::distinct, n));

    DistinctCountTable q3 = distinct_counts(3, 30);
    for (unsigned n = 0; n <= 30; ++n) {
        mpz_class direct = 0;
        enumerate(Family::distinct, n, [&](const Partition& p) {
            if (p.empty() || p.back() >= 3)
                ++direct;
        });
        CHECK(q3.rho(n) == direct);
    }
}

TEST_CASE("rho sandwich between shifted distinct counts")
{
    // q(n)/2^{m-1} <= rho(n,m) <= q(n + m(m-1)/2)/2^{m-1}
    for (unsigned m = 2; m <= 9; ++m) {
        unsigned shift = m * (m - 1) / 2;
        DistinctCountTable rho = distinct_counts(m, 200);
        DistinctCountTable q = distinct_counts(1, 200 + shift);
        mpz_class pow2 = 1;
        for (unsigned k = 1; k < m; ++k)
            pow2 *= 2;
        for (unsigned n = m; n <= 200; ++n) {
            CHECK(pow2 * rho.rho(n) >= q.rho(n));
            CHECK(pow2 * rho.rho(n) <= q.rho(n + shift));
        }
    }
}

TEST_CASE("Bessel I1 reference values")
{
    CHECK(rel_err(bessel_i1(1.0), 0.565159103992485) < 1e-13);
    CHECK(rel_err(bessel_i1(2.0), 1.590636854637329) < 1e-13);
    CHECK(rel_err(bessel_i1(5.0), 24.33564214245053) < 1e-13);
    CHECK(rel_err(bessel_i1(3.0), 3.953370217402609) < 1e-13);
    CHECK_THROWS_AS(bessel_i1(0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i1(801.0), std::domain_error);
}

TEST_CASE("Bessel sandwich brackets the series value")
{
    for (double x = 3.25; x <= 200.0; x += 0.25) {
        LogReal value = bessel_i1_log(x);
        auto [lo, hi] = bessel_bounds(x);
        CHECK(lo < value);
        CHECK(value < hi);
        // the relative gap closes like 4/x
        double width = hi.to_double() / lo.to_double() - 1;
        if (x > 50)
            CHECK(width < 5.0 / x);
    }
}

TEST_CASE("envelope contains the exact error for q(n)")
{
    DistinctCountTable q = distinct_counts(1, 400);
    for (unsigned n = 1; n <= 400; ++n) {
        Envelope env = bb_envelope(n);
        LogReal exact = LogReal::from_mpz(q.rho(n));
        LogReal err = (exact - env.main).abs();
        CHECK(err <= env.err_bound);
        if (n >= 25)
            CHECK(env.err_bound <= env.simplified);
    }
}

TEST_CASE("wright prefactors for each statistic")
{
    const double c = std::pow(3.0, 0.25) / (2 * kPi);
    struct Row {
        const char* stat;
        double alpha0;
        double prefactor;
    };
    const Row rows[] = {
        {"a1", 0.5, 0.5 * c},
        {"b1", std::log(2.0), std::log(2.0) * c},
        {"a2", 0.75, std::pow(3.0, 1.25) / (8 * kPi)},
        {"b2", 0.5, std::pow(3.0, 0.25) / (4 * kPi)},
        {"a3", 2.0 / 3.0, std::pow(3.0, 0.25) / (3 * kPi)},
        {"b3", std::log(2.0) - 0.125,
         (std::log(2.0) - 0.125) * std::pow(3.0, 0.25) / (2 * kPi)},
    };
    for (const Row& row : rows) {
        AsymptoticParams params = asymptotic_params(row.stat);
        CHECK(params.K == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(params.A == doctest::Approx(kPi * kPi / 12));
        CHECK(params.B == 1.0);
        CHECK(params.beta == 0.0);
        CHECK(params.alpha0 == doctest::Approx(row.alpha0).epsilon(1e-14));

        // peel the exponential main factor off to expose the constant
        const unsigned long n = 1000;
        LogReal main = wright_main(params, n);
        double log_pref = main.log_abs - 2 * std::sqrt(params.A * n)
                          + 0.25 * std::log(static_cast<double>(n));
        CHECK(rel_err(std::exp(log_pref), row.prefactor) < 1e-12);
    }
    CHECK_THROWS_AS(asymptotic_params("c9"), std::invalid_argument);
}

TEST_CASE("laurent factors converge to their constants")
{
    struct Row {
        LaurentName name;
        double limit;
    };
    const Row rows[] = {
        {LaurentName::Lo2, 0.75},
        {LaurentName::Ld2, 0.5},
        {LaurentName::Lo3, 2.0 / 3.0},
        {LaurentName::Rd3, -0.125},
        {LaurentName::LambertSum, std::log(2.0)},
    };
    for (const Row& row : rows) {
        double prev = std::fabs(laurent_limit(row.name, 0.1) - row.limit);
        for (double z : {0.01, 0.001}) {
            double cur = std::fabs(laurent_limit(row.name, z) - row.limit);
            CHECK(cur < prev);
            prev = cur;
        }
        CHECK(std::fabs(laurent_limit(row.name, 1e-4) - row.limit) < 1e-3);
    }
    CHECK(laurent_from_name("LambertSum") == LaurentName::LambertSum);
    CHECK_THROWS_AS(laurent_limit(LaurentName::Lo2, 0.0), std::domain_error);
}
