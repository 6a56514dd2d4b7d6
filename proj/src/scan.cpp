#include "hookbias/scan.hpp"

#include <algorithm>
#include <stdexcept>

#include "hookbias/parallel.hpp"

namespace hookbias {

const char* pair_name(Pair p)
{
    switch (p) {
    case Pair::odd_vs_distinct: return "odd_vs_distinct";
    case Pair::selfconj_vs_distinctodd: return "selfconj_vs_distinctodd";
    }
    return "?";
}

Pair pair_from_name(const std::string& name)
{
    if (name == "odd_vs_distinct")
        return Pair::odd_vs_distinct;
    if (name == "selfconj_vs_distinctodd")
        return Pair::selfconj_vs_distinctodd;
    throw std::invalid_argument("unknown family pair: " + name);
}

namespace {

std::pair<Family, Family> pair_families(Pair p)
{
    if (p == Pair::odd_vs_distinct)
        return {Family::odd, Family::distinct};
    return {Family::self_conjugate, Family::distinct_odd};
}

std::uint64_t hooks_at(const HookProfile& prof, unsigned t)
{
    return t < prof.hooks_eq.size() ? prof.hooks_eq[t] : 0;
}

void finalize(BiasReport& report)
{
    for (unsigned n = 0; n < report.differences.size(); ++n)
        if (report.differences[n] < 0)
            report.violation_set.push_back(n);
    if (!report.violation_set.empty())
        report.last_violation = report.violation_set.back();
}

} // namespace

std::vector<BiasReport> scan_bias_range(Pair pair, unsigned t_min, unsigned t_max,
                                        unsigned n_max, Source source,
                                        unsigned threads)
{
    if (t_min < 1 || t_max < t_min)
        throw std::invalid_argument("scan_bias_range needs 1 <= t_min <= t_max");

    std::vector<BiasReport> reports;
    for (unsigned t = t_min; t <= t_max; ++t) {
        BiasReport r;
        r.pair = pair;
        r.t = t;
        r.n_max = n_max;
        r.differences.assign(std::size_t{n_max} + 1, 0);
        reports.push_back(std::move(r));
    }

    if (source == Source::genfun) {
        if (pair != Pair::odd_vs_distinct || t_min < 2 || t_max > 3)
            throw std::invalid_argument(
                "genfun source only covers odd_vs_distinct with t in {2, 3}");
        for (auto& report : reports) {
            ZSeries a = build(report.t == 2 ? SeriesName::a2 : SeriesName::a3,
                              std::size_t{n_max} + 1);
            ZSeries b = build(report.t == 2 ? SeriesName::b2 : SeriesName::b3,
                              std::size_t{n_max} + 1);
            for (unsigned n = 0; n <= n_max; ++n)
                report.differences[n] = a[n] - b[n];
            finalize(report);
        }
        return reports;
    }

    auto [fam_a, fam_b] = pair_families(pair);
    parallel_for(std::size_t{n_max} + 1, threads, [&](std::size_t n) {
        HookProfile pa = hook_profile(fam_a, static_cast<unsigned>(n));
        HookProfile pb = hook_profile(fam_b, static_cast<unsigned>(n));
        for (auto& report : reports)
            report.differences[n] =
                static_cast<long>(hooks_at(pa, report.t))
                - static_cast<long>(hooks_at(pb, report.t));
    });
    for (auto& report : reports)
        finalize(report);
    return reports;
}

BiasReport scan_bias(Pair pair, unsigned t, unsigned n_max, Source source,
                     unsigned threads)
{
    return scan_bias_range(pair, t, t, n_max, source, threads).front();
}

CongruenceReport scan_congruence(unsigned m_max, unsigned n_max, unsigned threads)
{
    if (m_max < 1)
        throw std::invalid_argument("scan_congruence needs m_max >= 1");
    CongruenceReport report;
    report.m_max = m_max;
    report.n_max = n_max;
    std::vector<std::vector<CongruenceReport::Hit>> per_n(std::size_t{n_max} + 1);
    parallel_for(std::size_t{n_max} + 1, threads, [&](std::size_t n) {
        HookProfile prof = hook_profile(Family::self_conjugate,
                                        static_cast<unsigned>(n));
        for (unsigned m = 1; m <= m_max; ++m) {
            unsigned long count =
                2 * m < prof.hooks_eq.size() ? prof.hooks_eq[2 * m] : 0;
            unsigned long residue = count % (2 * m);
            if (residue != 0)
                per_n[n].push_back({m, static_cast<unsigned>(n), residue});
        }
    });
    for (const auto& hits : per_n)
        report.nonzero.insert(report.nonzero.end(), hits.begin(), hits.end());
    return report;
}

CheckReport scan_identities(unsigned n_max)
{
    CheckReport report;
    auto fail = [&](const char* check, unsigned n, std::string detail) {
        report.issues.push_back({check, static_cast<long>(n), std::move(detail)});
    };
    auto record_pass = [&](const char* check) { report.passed.push_back(check); };

    bool andrews_beck_ok = true;
    bool hook_totals_ok = true;
    bool ell1_ok = true;
    bool ell2_ok = true;
    bool gap_excess_ok = true;
    bool cor64_ok = true;

    for (unsigned n = 0; n <= n_max; ++n) {
        HookProfile odd = hook_profile(Family::odd, n);
        HookProfile dis = hook_profile(Family::distinct, n);

        const long a1 = static_cast<long>(odd.part_sizes);
        const long b1 = static_cast<long>(dis.parts);

        if (mpz_class(b1 - a1) != beck_c(n)) {
            andrews_beck_ok = false;
            fail("andrews_beck", n, "b1 - a1 != c(n)");
        }

        std::uint64_t a_total = 0, b_total = 0;
        for (std::uint64_t v : odd.hooks_eq)
            a_total += v;
        for (std::uint64_t v : dis.hooks_eq)
            b_total += v;
        if (a_total != b_total || a_total != std::uint64_t{n} * odd.members) {
            hook_totals_ok = false;
            fail("hook_totals", n, "sum_t a_t(n) != sum_t b_t(n)");
        }

        const long ell1_diff = static_cast<long>(dis.gaps1) - static_cast<long>(odd.gaps1);
        const bool ell1_exceptional = n == 2 || n == 4;
        if (ell1_exceptional ? ell1_diff != -1 : ell1_diff < 0) {
            ell1_ok = false;
            fail("gap1_bias", n, "ell1 difference off pattern: " + std::to_string(ell1_diff));
        }

        const long ell2_diff = static_cast<long>(odd.gaps2) - static_cast<long>(dis.gaps2);
        const bool ell2_exceptional = n == 2 || n == 6;
        if (ell2_exceptional ? ell2_diff != -1 : ell2_diff < 0) {
            ell2_ok = false;
            fail("gap2_bias", n, "ell2 difference off pattern: " + std::to_string(ell2_diff));
        }

        if (n >= 5 && ell1_diff > b1 - a1) {
            gap_excess_ok = false;
            fail("gap1_excess_vs_parts", n, "ell1 excess exceeds b1 - a1");
        }

        if (a1 - static_cast<long>(odd.gaps1) > b1 - static_cast<long>(dis.gaps1)) {
            cor64_ok = false;
            fail("part_sizes_vs_gaps", n, "a1 - ell1(odd) > b1 - ell1(distinct)");
        }
    }

    if (andrews_beck_ok)
        record_pass("andrews_beck");
    if (hook_totals_ok)
        record_pass("hook_totals");
    if (ell1_ok)
        record_pass("gap1_bias");
    if (ell2_ok)
        record_pass("gap2_bias");
    if (gap_excess_ok)
        record_pass("gap1_excess_vs_parts");
    if (cor64_ok)
        record_pass("part_sizes_vs_gaps");
    return report;
}

} // namespace hookbias
