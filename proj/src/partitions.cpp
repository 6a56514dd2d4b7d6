#include "hookbias/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookbias {

const char* family_name(Family f)
{
    switch (f) {
    case Family::all: return "all";
    case Family::odd: return "odd";
    case Family::distinct: return "distinct";
    case Family::self_conjugate: return "self_conjugate";
    case Family::distinct_odd: return "distinct_odd";
    }
    return "?";
}

const char* statistic_name(Statistic s)
{
    switch (s) {
    case Statistic::hooks_eq_t: return "hooks_eq_t";
    case Statistic::hooks_div_t: return "hooks_div_t";
    case Statistic::gaps_1: return "gaps_1";
    case Statistic::gaps_2: return "gaps_2";
    case Statistic::parts: return "parts";
    case Statistic::part_sizes: return "part_sizes";
    }
    return "?";
}

Family family_from_name(const std::string& name)
{
    for (Family f : {Family::all, Family::odd, Family::distinct,
                     Family::self_conjugate, Family::distinct_odd})
        if (name == family_name(f))
            return f;
    throw std::invalid_argument("unknown family: " + name);
}

Statistic statistic_from_name(const std::string& name)
{
    for (Statistic s : {Statistic::hooks_eq_t, Statistic::hooks_div_t,
                        Statistic::gaps_1, Statistic::gaps_2,
                        Statistic::parts, Statistic::part_sizes})
        if (name == statistic_name(s))
            return s;
    if (name == "hook")
        return Statistic::hooks_eq_t;
    throw std::invalid_argument("unknown statistic: " + name);
}

Partition conjugate(const Partition& p)
{
    Partition c;
    if (p.empty())
        return c;
    c.resize(p[0]);
    for (unsigned part : p)
        for (unsigned j = 0; j < part; ++j)
            ++c[j];
    return c;
}

std::vector<unsigned> hook_multiset(const Partition& p)
{
    std::vector<unsigned> hooks;
    const Partition conj = conjugate(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i]; ++j)
            hooks.push_back(p[i] + conj[j] - static_cast<unsigned>(i + j) - 1);
    return hooks;
}

namespace {

struct Generator {
    Partition parts;
    const std::function<void(const Partition&)>* fn;

    void emit() { (*fn)(parts); }

    void gen_all(unsigned n, unsigned maxp)
    {
        if (n == 0) {
            emit();
            return;
        }
        for (unsigned k = std::min(n, maxp); k >= 1; --k) {
            parts.push_back(k);
            gen_all(n - k, k);
            parts.pop_back();
        }
    }

    void gen_odd(unsigned n, unsigned maxp)
    {
        if (n == 0) {
            emit();
            return;
        }
        int k = static_cast<int>(std::min(n, maxp));
        if (k % 2 == 0)
            --k;
        for (; k >= 1; k -= 2) {
            parts.push_back(static_cast<unsigned>(k));
            gen_odd(n - k, static_cast<unsigned>(k));
            parts.pop_back();
        }
    }

    void gen_distinct(unsigned n, unsigned maxp)
    {
        if (n == 0) {
            emit();
            return;
        }
        for (unsigned k = std::min(n, maxp); k >= 1; --k) {
            // parts below k can contribute at most 1+2+...+(k-1)
            if (2 * (n - k) > k * (k - 1))
                continue;
            parts.push_back(k);
            gen_distinct(n - k, k - 1);
            parts.pop_back();
        }
    }

    void gen_distinct_odd(unsigned n, unsigned maxp)
    {
        if (n == 0) {
            emit();
            return;
        }
        int k = static_cast<int>(std::min(n, maxp));
        if (k % 2 == 0)
            --k;
        for (; k >= 1; k -= 2) {
            // odd parts below k sum to at most ((k-1)/2)^2
            unsigned uk = static_cast<unsigned>(k);
            unsigned half = (uk - 1) / 2;
            if (n - uk > half * half)
                continue;
            parts.push_back(uk);
            if (n == uk)
                emit();
            else
                gen_distinct_odd(n - uk, uk - 2); // uk >= 3 when the prune passed
            parts.pop_back();
        }
    }
};

// Self-conjugate partition whose diagonal hook lengths are the given
// distinct odd parts.
Partition unfold_diagonal(const Partition& diag)
{
    Partition lam;
    const std::size_t r = diag.size();
    if (r == 0)
        return lam;
    lam.reserve(diag[0] / 2 + 1);
    for (std::size_t i = 0; i < r; ++i)
        lam.push_back((diag[i] - 1) / 2 + static_cast<unsigned>(i) + 1);
    for (unsigned row = static_cast<unsigned>(r) + 1; row <= lam[0]; ++row) {
        unsigned cnt = 0;
        for (std::size_t k = 0; k < r; ++k)
            if (lam[k] >= row)
                ++cnt;
        lam.push_back(cnt);
    }
    return lam;
}

} // namespace

void enumerate(Family f, unsigned n, const std::function<void(const Partition&)>& fn)
{
    if (f == Family::self_conjugate) {
        enumerate(Family::distinct_odd, n, [&fn](const Partition& d) {
            fn(unfold_diagonal(d));
        });
        return;
    }
    Generator g;
    g.fn = &fn;
    switch (f) {
    case Family::all: g.gen_all(n, n == 0 ? 1 : n); break;
    case Family::odd: g.gen_odd(n, n == 0 ? 1 : n); break;
    case Family::distinct: g.gen_distinct(n, n == 0 ? 1 : n); break;
    case Family::distinct_odd: g.gen_distinct_odd(n, n == 0 ? 1 : n); break;
    case Family::self_conjugate: break; // handled above
    }
}

std::uint64_t family_count(Family f, unsigned n)
{
    std::uint64_t cnt = 0;
    enumerate(f, n, [&cnt](const Partition&) { ++cnt; });
    return cnt;
}

std::uint64_t gap_count(const Partition& p, unsigned gap)
{
    std::uint64_t cnt = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        unsigned next = i + 1 < p.size() ? p[i + 1] : 0;
        if (p[i] - next == gap)
            ++cnt;
    }
    return cnt;
}

std::uint64_t stat_value(const Partition& p, Statistic s, unsigned t)
{
    switch (s) {
    case Statistic::hooks_eq_t: {
        std::uint64_t cnt = 0;
        for (unsigned h : hook_multiset(p))
            if (h == t)
                ++cnt;
        return cnt;
    }
    case Statistic::hooks_div_t: {
        if (t == 0)
            throw std::invalid_argument("hook statistics need t >= 1");
        std::uint64_t cnt = 0;
        for (unsigned h : hook_multiset(p))
            if (h % t == 0)
                ++cnt;
        return cnt;
    }
    case Statistic::gaps_1:
        return gap_count(p, 1);
    case Statistic::gaps_2:
        return gap_count(p, 2);
    case Statistic::parts:
        return p.size();
    case Statistic::part_sizes: {
        std::uint64_t cnt = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (i == 0 || p[i] != p[i - 1])
                ++cnt;
        return cnt;
    }
    }
    return 0;
}

mpz_class stat_total(Family f, Statistic s, unsigned t, unsigned n)
{
    if ((s == Statistic::hooks_eq_t || s == Statistic::hooks_div_t) && t == 0)
        throw std::invalid_argument("hook statistics need t >= 1");
    std::uint64_t total = 0;
    enumerate(f, n, [&](const Partition& p) { total += stat_value(p, s, t); });
    return mpz_class(static_cast<unsigned long>(total));
}

HookProfile hook_profile(Family f, unsigned n)
{
    HookProfile prof;
    prof.n = n;
    prof.hooks_eq.assign(n + 1, 0);
    Partition conj;
    enumerate(f, n, [&](const Partition& p) {
        ++prof.members;
        prof.parts += p.size();
        // conjugate computed in place; hooks read off the profile
        conj.assign(p.empty() ? 0 : p[0], 0);
        for (unsigned part : p)
            for (unsigned j = 0; j < part; ++j)
                ++conj[j];
        for (std::size_t i = 0; i < p.size(); ++i) {
            unsigned next = i + 1 < p.size() ? p[i + 1] : 0;
            unsigned gap = p[i] - next;
            if (gap == 1)
                ++prof.gaps1;
            else if (gap == 2)
                ++prof.gaps2;
            if (i == 0 || p[i] != p[i - 1])
                ++prof.part_sizes;
            for (std::size_t j = 0; j < p[i]; ++j)
                ++prof.hooks_eq[p[i] + conj[j] - i - j - 1];
        }
    });
    return prof;
}

HookTable hook_table(Family f, Statistic s, unsigned t, unsigned n_max)
{
    HookTable table;
    table.family = f;
    table.statistic = s;
    table.t = t;
    table.values.reserve(std::size_t{n_max} + 1);
    for (unsigned n = 0; n <= n_max; ++n)
        table.values.push_back(stat_total(f, s, t, n));
    return table;
}

namespace {

// (size, multiplicity) runs, largest size first
std::vector<std::pair<unsigned, unsigned>> multiplicities(const Partition& p)
{
    std::vector<std::pair<unsigned, unsigned>> runs;
    for (unsigned part : p) {
        if (!runs.empty() && runs.back().first == part)
            ++runs.back().second;
        else
            runs.emplace_back(part, 1u);
    }
    return runs;
}

bool one_triple_rest_single(const std::vector<std::pair<unsigned, unsigned>>& runs,
                            unsigned* repeated)
{
    unsigned triples = 0;
    for (const auto& [size, mult] : runs) {
        if (mult == 3) {
            ++triples;
            *repeated = size;
        } else if (mult != 1) {
            return false;
        }
    }
    return triples == 1;
}

} // namespace

mpz_class beck_c(unsigned n)
{
    std::uint64_t cnt = 0;
    enumerate(Family::all, n, [&](const Partition& p) {
        unsigned rep = 0;
        if (one_triple_rest_single(multiplicities(p), &rep))
            ++cnt;
    });
    return mpz_class(static_cast<unsigned long>(cnt));
}

mpz_class beck_w(unsigned n)
{
    std::uint64_t total = 0;
    enumerate(Family::odd, n, [&](const Partition& p) {
        auto runs = multiplicities(p);
        unsigned m1 = 0;
        if (!runs.empty() && runs.back().first == 1)
            m1 = runs.back().second;
        if (m1 % 4 != 0 && m1 % 4 != 3)
            return;
        for (const auto& [size, mult] : runs)
            if (size > 1)
                ++total;
    });
    return mpz_class(static_cast<unsigned long>(total));
}

ExcessKind excess_kind_from_name(const std::string& name)
{
    if (name == "ell1")
        return ExcessKind::ell1;
    if (name == "ell2_main")
        return ExcessKind::ell2_main;
    if (name == "ell2_alt")
        return ExcessKind::ell2_alt;
    if (name == "hooks2")
        return ExcessKind::hooks2;
    throw std::invalid_argument("unknown excess kind: " + name);
}

namespace {

bool contains(const std::vector<std::pair<unsigned, unsigned>>& runs, unsigned size)
{
    for (const auto& [s, m] : runs)
        if (s == size)
            return true;
    return false;
}

// two smallest parts different from `exclude` differ by an allowed amount
bool small_pair_gap(const Partition& p, unsigned exclude,
                    std::initializer_list<unsigned> allowed)
{
    std::vector<unsigned> others;
    for (auto it = p.rbegin(); it != p.rend() && others.size() < 2; ++it)
        if (*it != exclude)
            others.push_back(*it);
    if (others.size() < 2)
        return false;
    unsigned gap = others[1] - others[0];
    for (unsigned a : allowed)
        if (gap == a)
            return true;
    return false;
}

bool ell1_predicate(const Partition& p)
{
    auto runs = multiplicities(p);
    unsigned rep = 0;
    if (!one_triple_rest_single(runs, &rep))
        return false;
    if (rep >= 3)
        return true;
    if (rep == 1) {
        if (p.size() < 5)
            return false;
        if (!small_pair_gap(p, 1, {1}))
            return false;
        if (contains(runs, 2) && !contains(runs, 4))
            return false;
        return true;
    }
    // rep == 2
    if (p.size() != 3 && p.size() < 5)
        return false;
    if (contains(runs, 1))
        return contains(runs, 3);
    if (p.size() == 3)
        return true; // (2,2,2)
    return small_pair_gap(p, 2, {1, 2});
}

bool ell2_main_predicate(const Partition& p)
{
    auto runs = multiplicities(p);
    unsigned m3 = 0;
    bool has1 = false, has2 = false;
    for (const auto& [size, mult] : runs) {
        if (size == 3)
            m3 = mult;
        if (size == 1)
            has1 = true;
        if (size == 2)
            has2 = true;
        if (size != 3 && mult != 1)
            return false;
    }
    if (m3 < 2)
        return false;
    if (m3 == 2 && p.back() >= 3)
        return false;
    if (has1 && has2)
        return false;
    unsigned small_sum = 0;
    unsigned s = 0; // smallest part greater than 4
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (*it <= 3)
            small_sum += *it;
        if (*it > 4 && s == 0)
            s = *it;
    }
    return s >= 5 && small_sum >= 2 && s <= small_sum - 2;
}

bool ell2_alt_predicate(const Partition& p)
{
    auto runs = multiplicities(p);
    unsigned m1 = 0, big_rep = 0, big_smallest = 0;
    for (const auto& [size, mult] : runs) {
        if (size == 1) {
            m1 = mult;
            continue;
        }
        if (size == 2 || size == 3)
            return false;
        if (size > 4) {
            big_smallest = size; // runs are in decreasing size order
            big_rep = mult;
        } else if (mult != 1) { // size == 4
            return false;
        }
    }
    if (m1 < 2 || big_smallest == 0 || big_rep != 2)
        return false;
    // everything above the doubled smallest-big part must be single
    for (const auto& [size, mult] : runs)
        if (size > big_smallest && mult != 1)
            return false;
    return true;
}

} // namespace

mpz_class excess_interpretation_count(ExcessKind kind, unsigned n)
{
    if (kind == ExcessKind::hooks2)
        return beck_w(n);
    std::uint64_t cnt = 0;
    enumerate(Family::all, n, [&](const Partition& p) {
        bool ok = false;
        switch (kind) {
        case ExcessKind::ell1: ok = ell1_predicate(p); break;
        case ExcessKind::ell2_main: ok = ell2_main_predicate(p); break;
        case ExcessKind::ell2_alt: ok = ell2_alt_predicate(p); break;
        case ExcessKind::hooks2: break;
        }
        if (ok)
            ++cnt;
    });
    return mpz_class(static_cast<unsigned long>(cnt));
}

} // namespace hookbias
