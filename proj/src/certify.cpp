#include "hookbias/certify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hookbias/genfun.hpp"
#include "hookbias/parallel.hpp"

namespace hookbias {

namespace {
constexpr double kPi = std::numbers::pi;
}

void InequalitySpec::validate() const
{
    if (m < 1)
        throw std::invalid_argument("minimum part m must be >= 1");
    if (lhs.empty() || rhs.empty())
        throw std::invalid_argument("both sides of the inequality must be non-empty");
    auto check_side = [](const std::vector<std::pair<mpq_class, unsigned>>& side,
                         const char* label) {
        long prev = -1;
        for (const auto& [coeff, shift] : side) {
            if (coeff <= 0)
                throw std::invalid_argument(std::string(label) + " coefficients must be positive");
            if (static_cast<long>(shift) <= prev)
                throw std::invalid_argument(std::string(label) + " shifts must be strictly increasing");
            prev = static_cast<long>(shift);
        }
    };
    check_side(lhs, "lhs");
    check_side(rhs, "rhs");
    if (!(lhs_sum() < rhs_sum()))
        throw std::invalid_argument("coefficient sums must satisfy sum(alpha) < sum(beta)");
}

mpq_class InequalitySpec::lhs_sum() const
{
    mpq_class s = 0;
    for (const auto& [coeff, shift] : lhs)
        s += coeff;
    return s;
}

mpq_class InequalitySpec::rhs_sum() const
{
    mpq_class s = 0;
    for (const auto& [coeff, shift] : rhs)
        s += coeff;
    return s;
}

unsigned InequalitySpec::max_shift() const
{
    unsigned ms = 0;
    for (const auto& [coeff, shift] : lhs)
        ms = std::max(ms, shift);
    for (const auto& [coeff, shift] : rhs)
        ms = std::max(ms, shift);
    return ms;
}

InequalitySpec InequalitySpec::canceled() const
{
    std::map<unsigned, mpq_class> left, right;
    for (const auto& [coeff, shift] : lhs)
        left[shift] += coeff;
    for (const auto& [coeff, shift] : rhs)
        right[shift] += coeff;
    for (auto& [shift, coeff] : left) {
        auto it = right.find(shift);
        if (it == right.end())
            continue;
        mpq_class common = std::min(coeff, it->second);
        coeff -= common;
        it->second -= common;
    }
    InequalitySpec out;
    out.m = m;
    for (const auto& [shift, coeff] : left)
        if (coeff > 0)
            out.lhs.emplace_back(coeff, shift);
    for (const auto& [shift, coeff] : right)
        if (coeff > 0)
            out.rhs.emplace_back(coeff, shift);
    return out;
}

namespace {

// Smallest mu past which the Bessel error envelope stays below the required
// fraction of the main term:
//   (eps pi^{3/2} / (12 B)) sqrt(mu) >= (2+eps) c0 (1 + 5 mu^2 e^{-mu}),
// with c0 = 0.9 pi^2 / (6 sqrt 2). The left side increases and the right
// side decreases for mu > 2, so bisection applies. The closed-form N_B uses
// the cruder constant 11/10 in place of c0 (1 + 5 mu^2 e^{-mu}).
double refined_bessel_threshold(double B, double eps, unsigned L)
{
    const double c0 = 0.9 * kPi * kPi / (6 * std::numbers::sqrt2);
    auto margin = [&](double mu) {
        return eps * std::pow(kPi, 1.5) / (12 * B) * std::sqrt(mu)
             - (2 + eps) * c0 * (1 + 5 * mu * mu * std::exp(-mu));
    };
    double lo = 2.0, hi = 4.0;
    while (margin(hi) < 0)
        hi *= 2;
    for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
        double mid = 0.5 * (lo + hi);
        (margin(mid) >= 0 ? hi : lo) = mid;
    }
    return 3 * hi * hi / (kPi * kPi) - L - 1.0 / 24.0;
}

} // namespace

Thresholds thresholds(double A, double B, double C, double eps, unsigned L)
{
    if (!(A > 0) || !(B > 0) || !(C > 0) || !(eps > 0) || L < 1)
        throw std::invalid_argument("thresholds needs A, B, C, eps > 0 and L >= 1");
    const double D = 1 / A + 1 / B + 1 / C;
    if (!(D < 1))
        throw std::invalid_argument("thresholds needs 1/A + 1/B + 1/C < 1");

    Thresholds t;
    const double shift = static_cast<double>(L) + 1.0 / 24.0;
    // All four evaluated through logs so that extreme A, B, C stay finite.
    t.N_A = std::exp(std::log(12.0) + 2 * (std::log(A) + std::log(2 + eps))
                     - 2 * (std::log(kPi) + std::log(eps)))
          - shift;
    t.N_B = std::exp(std::log(910787328.0 / 10000.0)
                     + 4 * (std::log(B) + std::log(2 + eps))
                     - 8 * std::log(kPi) - 4 * std::log(eps))
          - shift;
    t.N_B_refined = refined_bessel_threshold(B, eps, L);
    {
        double inner = std::log(2.0) + std::log(C) + std::log(2 + eps)
                     + std::log(1.0 + L) - std::log(eps);
        t.N_C = 3.0 / (4 * kPi * kPi) * inner * inner - 1.0 / 24.0;
    }
    {
        double denom = std::log((1 + eps) / (1 + D * eps));
        t.N_D = static_cast<double>(L) * static_cast<double>(L) * kPi * kPi
                  / (12 * denom * denom)
              - 1.0 / 24.0;
    }
    t.N = std::max({t.N_A, std::min(t.N_B, t.N_B_refined), t.N_C, t.N_D, 26.0});
    return t;
}

AbcChoice optimize_abc(double eps, unsigned L, unsigned budget)
{
    if (!(eps > 0) || L < 1)
        throw std::invalid_argument("optimize_abc needs eps > 0 and L >= 1");

    const double lo = 1.05, hi = 1e7;
    const double log_lo = std::log(lo), log_hi = std::log(hi);
    unsigned evals = 0;
    auto objective = [&](double A, double B, double C) {
        ++evals;
        if (1 / A + 1 / B + 1 / C >= 1)
            return std::numeric_limits<double>::infinity();
        return thresholds(A, B, C, eps, L).N;
    };

    AbcChoice best{4, 4, 4, objective(4, 4, 4)};

    // Coarse log grid.
    unsigned per_axis = 2;
    while ((per_axis + 1) * (per_axis + 1) * (per_axis + 1) + evals <= budget / 2
           && per_axis < 12)
        ++per_axis;
    for (unsigned i = 0; i <= per_axis; ++i)
        for (unsigned j = 0; j <= per_axis; ++j)
            for (unsigned k = 0; k <= per_axis; ++k) {
                double A = std::exp(log_lo + (log_hi - log_lo) * i / per_axis);
                double B = std::exp(log_lo + (log_hi - log_lo) * j / per_axis);
                double C = std::exp(log_lo + (log_hi - log_lo) * k / per_axis);
                double val = objective(A, B, C);
                if (val < best.N)
                    best = {A, B, C, val};
            }

    // Coordinate descent with a shrinking log window.
    double window = (log_hi - log_lo) / per_axis;
    while (window > 1e-6 && evals + 27 <= budget) {
        bool improved = false;
        for (int coord = 0; coord < 3 && evals + 9 <= budget; ++coord) {
            double cur = coord == 0 ? best.A : coord == 1 ? best.B : best.C;
            double cur_log = std::log(cur);
            for (int step = -4; step <= 4; ++step) {
                if (step == 0)
                    continue;
                double cand_log = std::clamp(cur_log + window * step / 4.0,
                                             log_lo, log_hi);
                double cand = std::exp(cand_log);
                double A = coord == 0 ? cand : best.A;
                double B = coord == 1 ? cand : best.B;
                double C = coord == 2 ? cand : best.C;
                double val = objective(A, B, C);
                if (val < best.N) {
                    best = {A, B, C, val};
                    improved = true;
                }
            }
        }
        if (!improved)
            window *= 0.5;
    }
    return best;
}

Certificate certify(const InequalitySpec& spec,
                    std::optional<std::array<double, 3>> abc,
                    unsigned n_cap,
                    const DistinctCountTable* table,
                    unsigned abc_budget,
                    unsigned threads)
{
    spec.validate();

    Certificate cert;
    cert.spec = spec;

    const mpq_class alpha_sum = spec.lhs_sum();
    const mpq_class beta_sum = spec.rhs_sum();
    cert.eps = mpq_class((beta_sum - alpha_sum) / alpha_sum).get_d();
    cert.L = spec.lhs.back().second + spec.m * (spec.m - 1) / 2;

    if (abc) {
        cert.abc = *abc;
    } else {
        AbcChoice found = optimize_abc(cert.eps, cert.L, abc_budget);
        cert.abc = {found.A, found.B, found.C};
    }
    cert.th = thresholds(cert.abc[0], cert.abc[1], cert.abc[2], cert.eps, cert.L);

    cert.verified_from = 0;
    cert.verified_to = std::min<unsigned>(
        n_cap, static_cast<unsigned>(std::floor(cert.th.N)));

    const unsigned max_shift = spec.max_shift();
    DistinctCountTable local;
    if (table == nullptr) {
        local = distinct_counts(spec.m, cert.verified_to + max_shift);
        table = &local;
    }
    if (table->m != spec.m || table->n_max() < cert.verified_to + max_shift)
        throw std::invalid_argument("rho table does not cover the verification range");

    // Clear denominators once so the range check runs on plain integers.
    mpz_class denom_lcm = 1;
    for (const auto& [coeff, shift] : spec.lhs)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                coeff.get_den().get_mpz_t());
    for (const auto& [coeff, shift] : spec.rhs)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                coeff.get_den().get_mpz_t());
    std::vector<std::pair<mpz_class, unsigned>> lhs_z, rhs_z;
    for (const auto& [coeff, shift] : spec.lhs)
        lhs_z.emplace_back(mpz_class(coeff * denom_lcm), shift);
    for (const auto& [coeff, shift] : spec.rhs)
        rhs_z.emplace_back(mpz_class(coeff * denom_lcm), shift);

    const std::size_t count = std::size_t{cert.verified_to} - cert.verified_from + 1;
    std::vector<char> violated(count, 0);
    parallel_for(count, threads, [&](std::size_t i) {
        const unsigned n = cert.verified_from + static_cast<unsigned>(i);
        mpz_class lhs_val = 0, rhs_val = 0;
        for (const auto& [coeff, shift] : lhs_z)
            mpz_addmul(lhs_val.get_mpz_t(), coeff.get_mpz_t(),
                       table->rho(n + shift).get_mpz_t());
        for (const auto& [coeff, shift] : rhs_z)
            mpz_addmul(rhs_val.get_mpz_t(), coeff.get_mpz_t(),
                       table->rho(n + shift).get_mpz_t());
        if (lhs_val > rhs_val)
            violated[i] = 1;
    });
    for (std::size_t i = 0; i < count; ++i)
        if (violated[i])
            cert.violations.push_back(cert.verified_from + static_cast<unsigned>(i));
    return cert;
}

InequalitySpec paper_t3_spec()
{
    // The shifted coefficient inequality behind the 3-hook bias threshold:
    //   sum_k g_{51-mu} rho(n+mu, 9) <= sum_l f_{51-nu} rho(n+nu, 9),
    // mu running over 29..42 and nu over 0..26.
    ZSeries f = build(SeriesName::fpoly, 52);
    ZSeries g = build(SeriesName::gpoly, 52);
    InequalitySpec spec;
    spec.m = 9;
    for (unsigned mu = 29; mu <= 42; ++mu)
        if (g[51 - mu] != 0)
            spec.lhs.emplace_back(mpq_class(g[51 - mu]), mu);
    for (unsigned nu = 0; nu <= 26; ++nu)
        if (f[51 - nu] != 0)
            spec.rhs.emplace_back(mpq_class(f[51 - nu]), nu);
    return spec;
}

std::string certificate_to_text(const Certificate& cert)
{
    std::ostringstream out;
    out.precision(10);
    auto side = [&](const std::vector<std::pair<mpq_class, unsigned>>& terms) {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i)
                out << " + ";
            if (terms[i].first != 1)
                out << terms[i].first.get_str() << "*";
            out << "rho(n+" << terms[i].second << "," << cert.spec.m << ")";
        }
    };
    out << "hookbias certificate v1\n";
    out << "inequality: ";
    side(cert.spec.lhs);
    out << " <= ";
    side(cert.spec.rhs);
    out << "\n";
    out << "m: " << cert.spec.m << "\n";
    out << "eps: " << cert.eps << "\n";
    out << "L: " << cert.L << "\n";
    out << "abc: " << cert.abc[0] << " " << cert.abc[1] << " " << cert.abc[2] << "\n";
    out << "N_A: " << cert.th.N_A << "\n";
    out << "N_B: " << cert.th.N_B << "\n";
    out << "N_B_refined: " << cert.th.N_B_refined << "\n";
    out << "N_C: " << cert.th.N_C << "\n";
    out << "N_D: " << cert.th.N_D << "\n";
    out << "N: " << cert.th.N << "\n";
    out << "verified_range: " << cert.verified_from << " " << cert.verified_to << "\n";
    out << "violations:";
    for (unsigned n : cert.violations)
        out << " " << n;
    out << "\n";
    return out.str();
}

} // namespace hookbias
