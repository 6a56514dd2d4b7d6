#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hookbias/analytic.hpp"

namespace hookbias {

// A linear inequality sum alpha_k rho(n+mu_k, m) <= sum beta_l rho(n+nu_l, m)
// with positive rational coefficients and strictly increasing shifts.
// m = 1 is the plain q(n) case.
struct InequalitySpec {
    std::vector<std::pair<mpq_class, unsigned>> lhs; // (alpha_k, mu_k)
    std::vector<std::pair<mpq_class, unsigned>> rhs; // (beta_l, nu_l)
    unsigned m = 1;

    void validate() const; // throws std::invalid_argument on any violation
    mpq_class lhs_sum() const;
    mpq_class rhs_sum() const;
    unsigned max_shift() const;

    // Cancels matched summands across the two sides (equal shifts), which
    // can only grow epsilon and shrink L; the violation set is unchanged.
    InequalitySpec canceled() const;
};

struct Thresholds {
    double N_A = 0;
    double N_B = 0;         // printed closed form
    double N_B_refined = 0; // unsimplified error envelope, solved directly
    double N_C = 0;
    double N_D = 0;
    double N = 0; // max(N_A, min(N_B, N_B_refined), N_C, N_D, 26)
};

// The effective-bound construction; requires D = 1/A+1/B+1/C < 1.
Thresholds thresholds(double A, double B, double C, double eps, unsigned L);

struct AbcChoice {
    double A = 0, B = 0, C = 0;
    double N = 0;
};

// Deterministic log-grid search plus coordinate refinement, at most `budget`
// threshold evaluations.
AbcChoice optimize_abc(double eps, unsigned L, unsigned budget);

struct Certificate {
    InequalitySpec spec;
    double eps = 0;
    unsigned L = 0;
    std::array<double, 3> abc{};
    Thresholds th;
    unsigned verified_from = 0;
    unsigned verified_to = 0; // min(floor(N), cap)
    std::vector<unsigned> violations;
};

// Computes eps, L, and N for the inequality, then exhaustively checks it
// with exact arithmetic for all n in [0, min(floor(N), n_cap)].
// A prebuilt rho table may be supplied; it must cover verified_to+max_shift.
Certificate certify(const InequalitySpec& spec,
                    std::optional<std::array<double, 3>> abc,
                    unsigned n_cap,
                    const DistinctCountTable* table = nullptr,
                    unsigned abc_budget = 20000,
                    unsigned threads = 1);

// The 3-hook flagship inequality on rho(n, 9), with the fixed f/g polynomial
// coefficients: eps = 6.375, L = 78.
InequalitySpec paper_t3_spec();

std::string certificate_to_text(const Certificate& cert);

} // namespace hookbias
