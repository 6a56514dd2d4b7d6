#include "hookbias/analytic.hpp"

#include <numbers>
#include <stdexcept>

namespace hookbias {

namespace {
constexpr double kPi = std::numbers::pi;
}

LogReal LogReal::from_mpz(const mpz_class& v)
{
    if (v == 0)
        return zero();
    long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return {sgn(v) > 0 ? 1 : -1,
            std::log(std::fabs(d)) + static_cast<double>(exp2) * std::numbers::ln2};
}

LogReal operator/(const LogReal& a, const LogReal& b)
{
    if (b.sign == 0)
        throw std::domain_error("LogReal division by zero");
    if (a.sign == 0)
        return LogReal::zero();
    return {a.sign * b.sign, a.log_abs - b.log_abs};
}

LogReal operator+(const LogReal& a, const LogReal& b)
{
    if (a.sign == 0)
        return b;
    if (b.sign == 0)
        return a;
    const LogReal& hi = a.log_abs >= b.log_abs ? a : b;
    const LogReal& lo = a.log_abs >= b.log_abs ? b : a;
    double ratio = std::exp(lo.log_abs - hi.log_abs); // in [0,1]
    if (a.sign == b.sign)
        return {a.sign, hi.log_abs + std::log1p(ratio)};
    if (ratio == 1.0)
        return LogReal::zero();
    return {hi.sign, hi.log_abs + std::log1p(-ratio)};
}

bool LogReal::operator<(const LogReal& rhs) const
{
    if (sign != rhs.sign)
        return sign < rhs.sign;
    if (sign == 0)
        return false;
    return sign > 0 ? log_abs < rhs.log_abs : rhs.log_abs < log_abs;
}

DistinctCountTable distinct_counts(unsigned m, unsigned n_max)
{
    if (m == 0)
        throw std::invalid_argument("distinct_counts needs m >= 1");
    DistinctCountTable table;
    table.m = m;
    table.values.assign(std::size_t{n_max} + 1, 0);
    table.values[0] = 1;
    // 0/1 knapsack over distinct parts k >= m
    for (unsigned k = m; k <= n_max; ++k)
        for (unsigned n = n_max; n >= k; --n)
            table.values[n] += table.values[n - k];
    return table;
}

LogReal bessel_i1_log(double x)
{
    if (!(x > 0) || x > 800)
        throw std::domain_error("bessel_i1 domain is 0 < x <= 800");
    double term = x / 2;
    double sum = term;
    double log_scale = 0;
    const double ratio_num = x * x / 4;
    for (int k = 0;; ++k) {
        term *= ratio_num / ((k + 1.0) * (k + 2.0));
        sum += term;
        if (term < sum * 1e-18)
            break;
        if (sum > 1e280) {
            sum *= 1e-280;
            term *= 1e-280;
            log_scale += 280 * std::numbers::ln10;
        }
    }
    return {1, std::log(sum) + log_scale};
}

double bessel_i1(double x)
{
    return bessel_i1_log(x).to_double();
}

std::pair<LogReal, LogReal> bessel_bounds(double x)
{
    if (!(x > 3))
        throw std::domain_error("bessel_bounds needs x > 3");
    double log_front = -0.5 * std::log(2 * kPi * x);
    LogReal big_minus = LogReal{1, x + log_front + std::log1p(-2 / x)};
    LogReal big_plus = LogReal{1, x + log_front + std::log1p(2 / x)};
    LogReal small = LogReal{1, -x + log_front + std::numbers::ln2};
    return {big_minus - small, big_plus + small};
}

Envelope bb_envelope(unsigned long n)
{
    Envelope env;
    const double mu = kPi / (6 * std::numbers::sqrt2)
                    * std::sqrt(24.0 * static_cast<double>(n) + 1.0);
    env.mu = mu;
    const double front = std::log(kPi * kPi / (6 * std::numbers::sqrt2));
    env.main = LogReal{1, front - std::log(mu)} * bessel_i1_log(mu);
    env.err_bound = LogReal{
        1, std::log(0.9) + front + mu - 2 * std::log(mu)
               + std::log1p(5 * mu * mu * std::exp(-mu))};
    env.simplified = LogReal{1, std::log(1.1) + mu - 2 * std::log(mu)};
    return env;
}

AsymptoticParams asymptotic_params(const std::string& statistic)
{
    AsymptoticParams p;
    p.K = 1 / std::numbers::sqrt2;
    p.A = kPi * kPi / 12;
    p.B = 1;
    p.beta = 0;
    if (statistic == "a1")
        p.alpha0 = 0.5;
    else if (statistic == "b1")
        p.alpha0 = std::numbers::ln2;
    else if (statistic == "a2")
        p.alpha0 = 0.75;
    else if (statistic == "b2")
        p.alpha0 = 0.5;
    else if (statistic == "a3")
        p.alpha0 = 2.0 / 3.0;
    else if (statistic == "b3")
        p.alpha0 = std::numbers::ln2 - 0.125;
    else
        throw std::invalid_argument("no asymptotic parameters for: " + statistic);
    return p;
}

LogReal wright_main(const AsymptoticParams& p, unsigned long n)
{
    if (n == 0)
        throw std::invalid_argument("wright_main needs n >= 1");
    const double logn = std::log(static_cast<double>(n));
    const double c00_log = (p.beta - p.B + 0.5) * 0.5 * std::log(p.A)
                         - std::log(2 * std::sqrt(kPi));
    double log_abs = std::log(p.K)
                   + 2 * std::sqrt(p.A * static_cast<double>(n))
                   + 0.25 * (2 * p.B - 2 * p.beta - 3) * logn
                   + std::log(std::fabs(p.alpha0)) + c00_log;
    return {p.alpha0 > 0 ? 1 : (p.alpha0 < 0 ? -1 : 0), log_abs};
}

LaurentName laurent_from_name(const std::string& name)
{
    if (name == "Lo2")
        return LaurentName::Lo2;
    if (name == "Ld2")
        return LaurentName::Ld2;
    if (name == "Lo3")
        return LaurentName::Lo3;
    if (name == "Rd3")
        return LaurentName::Rd3;
    if (name == "LambertSum")
        return LaurentName::LambertSum;
    throw std::invalid_argument("unknown Laurent factor: " + name);
}

double laurent_limit(LaurentName name, double z)
{
    if (!(z > 0) || z > 1)
        throw std::domain_error("laurent_limit needs 0 < z <= 1");
    auto qk = [z](double k) { return std::exp(-k * z); };
    auto one_minus_qk = [z](double k) { return -std::expm1(-k * z); };
    double value = 0;
    switch (name) {
    case LaurentName::Lo2:
        value = qk(2) * (1 + qk(1) + qk(3)) / one_minus_qk(4);
        break;
    case LaurentName::Ld2:
        value = qk(2) / one_minus_qk(2);
        break;
    case LaurentName::Lo3:
        value = qk(3) * (1 + qk(3)) / ((1 + qk(1)) * one_minus_qk(4))
              + qk(6) / one_minus_qk(4) + qk(3) / one_minus_qk(6);
        break;
    case LaurentName::Rd3:
        value = -qk(2) / (one_minus_qk(4) * (1 + qk(1))) - qk(1) / (1 + qk(1));
        break;
    case LaurentName::LambertSum: {
        for (double n = 1;; ++n) {
            double t = qk(n);
            if (t < 1e-18)
                break;
            value += t / (1 + t);
        }
        break;
    }
    }
    return z * value;
}

} // namespace hookbias
