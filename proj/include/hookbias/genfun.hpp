#pragma once

#include <string>
#include <vector>

#include "hookbias/qseries.hpp"

namespace hookbias {

// Closed-form generating functions for the hook and gap statistics, plus the
// fixed polynomials entering the 3-hook bisection.
enum class SeriesName {
    a2,       // total 2-hooks over odd partitions
    b2,       // total 2-hooks over distinct partitions
    a3,       // total 3-hooks over odd partitions
    b3,       // total 3-hooks over distinct partitions
    diff2,    // a2 - b2 in product form
    w,        // same coefficients as diff2, built along its combinatorial route
    Aq,       // first half of the 3-hook bisection
    Bq,       // second half of the 3-hook bisection
    fpoly,    // fixed polynomial f, coefficient sum 118
    gpoly,    // fixed polynomial g, coefficient sum 16
    ppoly,    // helper polynomial of the bisection rewrite
    H1,       // positive part of the gap-1 difference
    H2,       // gap-2 difference (odd minus distinct)
    ell1diff, // gap-1 difference (distinct minus odd)
};

const char* series_name(SeriesName s);
SeriesName series_from_name(const std::string& name);

ZSeries build(SeriesName name, std::size_t order);

struct CheckIssue {
    std::string check;
    long exponent = -1; // offending power of q, if applicable
    std::string detail;
};

struct CheckReport {
    std::vector<CheckIssue> issues;
    std::vector<std::string> passed;
    bool ok() const { return issues.empty(); }
};

// Verifies the 3-hook bisection: Aq+Bq against a3-b3, sign patterns of the
// pieces, and the helper polynomial identity. Needs order >= 76.
CheckReport check_bisection(std::size_t order);

// Verifies the gap-difference identities and their exceptional sets.
// Needs order >= 10.
CheckReport check_gap_series(std::size_t order);

enum class Identity { NekrasovOkounkov, Han1, Han2 };

struct IdentityParams {
    long t = 1; // unused by NekrasovOkounkov
    long y = 0; // unused by NekrasovOkounkov
    long z = 0; // unused by Han1
};

// Checks the hook-product identity at the given small-integer parameters:
// the left side by enumerating all partitions of each n <= order and
// multiplying per-hook factors in exact rational arithmetic, the right side
// by infinite-product expansion.
CheckReport check_identity(Identity which, const IdentityParams& params,
                           std::size_t order);

} // namespace hookbias
