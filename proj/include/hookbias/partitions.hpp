#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hookbias {

// Weakly decreasing positive parts. The empty vector is the partition of 0.
using Partition = std::vector<unsigned>;

enum class Family { all, odd, distinct, self_conjugate, distinct_odd };
enum class Statistic { hooks_eq_t, hooks_div_t, gaps_1, gaps_2, parts, part_sizes };

const char* family_name(Family f);
const char* statistic_name(Statistic s);
Family family_from_name(const std::string& name);
Statistic statistic_from_name(const std::string& name);

Partition conjugate(const Partition& p);

// All hook lengths h(i,j) = p_i + p'_j - i - j + 1, one per cell.
std::vector<unsigned> hook_multiset(const Partition& p);

// Visits each partition of n in the family exactly once, lexicographically
// descending on parts. The reference passed to fn is reused between calls.
void enumerate(Family f, unsigned n, const std::function<void(const Partition&)>& fn);

std::uint64_t family_count(Family f, unsigned n);

// Per-partition statistic value; t is used only by the hook statistics.
std::uint64_t stat_value(const Partition& p, Statistic s, unsigned t);

// number of gaps p_i - p_{i+1} == gap, with p_{len+1} = 0
std::uint64_t gap_count(const Partition& p, unsigned gap);

mpz_class stat_total(Family f, Statistic s, unsigned t, unsigned n);

// One enumeration pass collecting every statistic the scanners need.
struct HookProfile {
    unsigned n = 0;
    std::uint64_t members = 0;
    std::vector<std::uint64_t> hooks_eq; // hooks_eq[t] for 1 <= t <= n; [0] unused
    std::uint64_t parts = 0;
    std::uint64_t part_sizes = 0;
    std::uint64_t gaps1 = 0;
    std::uint64_t gaps2 = 0;
};

HookProfile hook_profile(Family f, unsigned n);

// Values of one statistic for every n up to n_max.
struct HookTable {
    Family family = Family::all;
    Statistic statistic = Statistic::hooks_eq_t;
    unsigned t = 1;
    std::vector<mpz_class> values; // indexed by n

    unsigned n_max() const { return static_cast<unsigned>(values.size()) - 1; }
};

HookTable hook_table(Family f, Statistic s, unsigned t, unsigned n_max);

// Partitions of n with exactly one part of multiplicity three and all other
// parts of multiplicity one.
mpz_class beck_c(unsigned n);

// Total number of different part sizes greater than 1 in all odd partitions
// of n whose multiplicity of 1 is congruent to 0 or 3 mod 4.
mpz_class beck_w(unsigned n);

// Enumeration counts for the combinatorial readings of the gap-bias and
// 2-hook excesses. ell1/ell2 counts are only meaningful outside the small
// exceptional n listed with the corresponding theorems.
enum class ExcessKind { ell1, ell2_main, ell2_alt, hooks2 };
ExcessKind excess_kind_from_name(const std::string& name);
mpz_class excess_interpretation_count(ExcessKind kind, unsigned n);

} // namespace hookbias
