#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hookbias {

// Signed magnitude carried in log space, so that exponential-scale values
// (e^mu overflows binary64 near n ~ 60000) can be compared and combined
// exactly where it matters: in the sign and the leading digits.
struct LogReal {
    int sign = 0;
    double log_abs = -std::numeric_limits<double>::infinity();

    static LogReal zero() { return {}; }
    static LogReal exp_of(double x) { return {1, x}; }

    static LogReal from_double(double v)
    {
        if (v == 0)
            return zero();
        return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
    }

    static LogReal from_mpz(const mpz_class& v);

    double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    LogReal operator-() const { return {-sign, log_abs}; }

    friend LogReal operator*(const LogReal& a, const LogReal& b)
    {
        if (a.sign == 0 || b.sign == 0)
            return zero();
        return {a.sign * b.sign, a.log_abs + b.log_abs};
    }

    friend LogReal operator/(const LogReal& a, const LogReal& b);
    friend LogReal operator+(const LogReal& a, const LogReal& b);
    friend LogReal operator-(const LogReal& a, const LogReal& b)
    {
        return a + (-b);
    }

    LogReal abs() const { return {sign == 0 ? 0 : 1, log_abs}; }

    bool operator<(const LogReal& rhs) const;
    bool operator<=(const LogReal& rhs) const { return !(rhs < *this); }
};

// rho(n, m): partitions of n into distinct parts all at least m.
// rho(n, 1) = q(n).
struct DistinctCountTable {
    unsigned m = 1;
    std::vector<mpz_class> values; // indexed by n

    unsigned n_max() const { return static_cast<unsigned>(values.size()) - 1; }
    const mpz_class& rho(unsigned n) const { return values.at(n); }
};

// Exact DP over distinct parts >= m. O(n_max^2) big-integer additions.
DistinctCountTable distinct_counts(unsigned m, unsigned n_max);

// Modified Bessel function I_1 by its ascending series, summed to machine
// stagnation. Domain 0 < x <= 800.
LogReal bessel_i1_log(double x);
double bessel_i1(double x);

// The closed-form sandwich L_1(x) < I_1(x) < U_1(x), valid for x > 3.
std::pair<LogReal, LogReal> bessel_bounds(double x);

// Bessel main term and error envelope for q(n):
//   q(n) = pi^2/(6 sqrt(2) mu) I_1(mu) + E(mu),  mu = pi/(6 sqrt 2) sqrt(24n+1)
struct Envelope {
    double mu = 0;
    LogReal main;
    LogReal err_bound;  // 0.9 pi^2/(6 sqrt 2) e^mu/mu^2 (1 + 5 mu^2 e^-mu)
    LogReal simplified; // (11/10) e^mu/mu^2, valid for mu > 9 (n >= 25)
};
Envelope bb_envelope(unsigned long n);

// Circle-method hypothesis constants attached to each statistic. For every
// statistic here K = 1/sqrt(2), A = pi^2/12, B = 1, beta = 0; only the
// Laurent constant alpha0 varies.
struct AsymptoticParams {
    double K = 0;
    double A = 0;
    double B = 0;
    double beta = 0;
    double alpha0 = 0;
};

// statistic in {a1, b1, a2, b2, a3, b3}
AsymptoticParams asymptotic_params(const std::string& statistic);

// Main-term value K e^{2 sqrt(An)} n^{(2B-2beta-3)/4} * alpha0 * c00 with
// c00 = sqrt(A)^{beta-B+1/2} / (2 sqrt(pi)).
LogReal wright_main(const AsymptoticParams& params, unsigned long n);

// z * L(e^{-z}) for the rational/Lambert factors; converges to the
// corresponding alpha0 component as z -> 0+.
enum class LaurentName { Lo2, Ld2, Lo3, Rd3, LambertSum };
LaurentName laurent_from_name(const std::string& name);
double laurent_limit(LaurentName name, double z);

} // namespace hookbias
