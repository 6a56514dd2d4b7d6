#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hookbias/genfun.hpp"
#include "hookbias/partitions.hpp"

namespace hookbias {

enum class Pair { odd_vs_distinct, selfconj_vs_distinctodd };
const char* pair_name(Pair p);
Pair pair_from_name(const std::string& name);

enum class Source { enumeration, genfun };

// Differences a_t(n) - b_t(n) (or the starred pair) for n <= n_max, plus
// the observed violations. last_violation is evidence relative to n_max
// only; the scan cannot rule out later sign changes.
struct BiasReport {
    Pair pair = Pair::odd_vs_distinct;
    unsigned t = 1;
    unsigned n_max = 0;
    std::optional<unsigned> last_violation;
    std::vector<unsigned> violation_set;
    std::vector<mpz_class> differences; // indexed by n
};

// source = genfun is available only for (odd_vs_distinct, t in {2, 3}).
BiasReport scan_bias(Pair pair, unsigned t, unsigned n_max, Source source,
                     unsigned threads = 1);

// All t in [t_min, t_max] over one shared enumeration pass per n; the
// enumeration source parallelizes over n.
std::vector<BiasReport> scan_bias_range(Pair pair, unsigned t_min, unsigned t_max,
                                        unsigned n_max, Source source,
                                        unsigned threads = 1);

// Residues a*_{2m}(n) mod 2m for 1 <= m <= m_max, 0 <= n <= n_max.
struct CongruenceReport {
    unsigned m_max = 0;
    unsigned n_max = 0;
    struct Hit {
        unsigned m = 0;
        unsigned n = 0;
        unsigned long residue = 0;
    };
    std::vector<Hit> nonzero;
    bool ok() const { return nonzero.empty(); }
};

CongruenceReport scan_congruence(unsigned m_max, unsigned n_max,
                                 unsigned threads = 1);

// Identity and inequality checks over enumeration tables for n <= n_max:
// the part-count identity against beck_c, the total-hook identity across
// each family pair, the two gap-bias sign patterns with their exceptional
// sets, and the two gap-excess comparison inequalities.
CheckReport scan_identities(unsigned n_max);

} // namespace hookbias
