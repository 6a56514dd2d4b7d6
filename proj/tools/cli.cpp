#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookbias/cache.hpp"
#include "hookbias/certify.hpp"
#include "hookbias/genfun.hpp"
#include "hookbias/partitions.hpp"
#include "hookbias/scan.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace hookbias;

struct Options {
    std::string format = "table";
    std::string cache_dir;
    unsigned threads = 0; // 0 means hardware default
    bool long_mode = false;

    // series
    std::string series = "a2";
    unsigned order = 20;

    // count
    std::string family = "distinct";
    std::string stat = "hooks_eq_t";
    unsigned t = 2;
    unsigned n = 0;

    // scan
    std::string what = "bias";
    std::string pair = "odd_vs_distinct";
    std::string source = "enumeration";
    int scan_t = -1;
    unsigned t_min = 2, t_max = 10;
    unsigned n_max = 120;
    unsigned m_max = 5;

    // certify
    bool paper_t3 = false;
    std::string lhs, rhs;
    unsigned m = 1;
    std::vector<double> abc;
    unsigned cap = 10000;

    // identity
    std::string which = "nekrasov_okounkov";
    long id_t = 2, id_y = 0, id_z = 0;
};

json json_header(const std::string& command, const Options& opt)
{
    json doc;
    doc["tool"] = "hookbias";
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["threads"] = opt.threads;
    return doc;
}

void emit(const json& doc)
{
    std::cout << doc.dump(2) << "\n";
}

int run_series(const Options& opt)
{
    ZSeries s = build(series_from_name(opt.series), opt.order);
    if (opt.format == "structured") {
        json doc = json_header("series", opt);
        doc["name"] = opt.series;
        doc["order"] = opt.order;
        json coeffs = json::array();
        for (std::size_t n = 0; n < s.order(); ++n)
            coeffs.push_back(s[n].get_str());
        doc["coefficients"] = coeffs;
        emit(doc);
    } else {
        for (std::size_t n = 0; n < s.order(); ++n)
            std::cout << n << " " << s[n].get_str() << "\n";
    }
    return 0;
}

int run_count(const Options& opt)
{
    Family f = family_from_name(opt.family);
    Statistic s = statistic_from_name(opt.stat);
    HookTable table = cached_hook_table(opt.cache_dir, f, s, opt.t, opt.n);
    const mpz_class& value = table.values.at(opt.n);
    if (opt.format == "structured") {
        json doc = json_header("count", opt);
        doc["family"] = opt.family;
        doc["statistic"] = statistic_name(s);
        doc["t"] = opt.t;
        doc["n"] = opt.n;
        doc["value"] = value.get_str();
        emit(doc);
    } else {
        std::cout << value.get_str() << "\n";
    }
    return 0;
}

json issues_to_json(const CheckReport& report)
{
    json arr = json::array();
    for (const auto& issue : report.issues)
        arr.push_back({{"check", issue.check},
                       {"exponent", issue.exponent},
                       {"detail", issue.detail}});
    return arr;
}

int run_scan(const Options& opt)
{
    Source source = opt.source == "genfun" ? Source::genfun : Source::enumeration;
    if (opt.what == "bias") {
        unsigned lo = opt.scan_t >= 0 ? static_cast<unsigned>(opt.scan_t) : opt.t_min;
        unsigned hi = opt.scan_t >= 0 ? static_cast<unsigned>(opt.scan_t) : opt.t_max;
        auto reports = scan_bias_range(pair_from_name(opt.pair), lo, hi,
                                       opt.n_max, source, opt.threads);
        if (opt.format == "structured") {
            json doc = json_header("scan", opt);
            doc["what"] = "bias";
            doc["pair"] = opt.pair;
            doc["n_max"] = opt.n_max;
            doc["source"] = opt.source;
            json rows = json::array();
            for (const auto& r : reports) {
                json row;
                row["t"] = r.t;
                row["last_violation"] =
                    r.last_violation ? json(*r.last_violation) : json(nullptr);
                row["violations"] = r.violation_set;
                row["note"] = "consistent up to n_max only; conjecture open";
                rows.push_back(row);
            }
            doc["reports"] = rows;
            emit(doc);
        } else {
            std::cout << "pair " << opt.pair << ", n_max " << opt.n_max << "\n";
            std::cout << "t last_violation violations\n";
            for (const auto& r : reports) {
                std::cout << r.t << " ";
                if (r.last_violation)
                    std::cout << *r.last_violation;
                else
                    std::cout << "none";
                for (unsigned v : r.violation_set)
                    std::cout << " " << v;
                std::cout << "\n";
            }
        }
        return 0; // conjectural: violations are data, not failures
    }
    if (opt.what == "congruence") {
        CongruenceReport report = scan_congruence(opt.m_max, opt.n_max, opt.threads);
        if (opt.format == "structured") {
            json doc = json_header("scan", opt);
            doc["what"] = "congruence";
            doc["m_max"] = opt.m_max;
            doc["n_max"] = opt.n_max;
            json hits = json::array();
            for (const auto& hit : report.nonzero)
                hits.push_back({{"m", hit.m}, {"n", hit.n}, {"residue", hit.residue}});
            doc["nonzero_residues"] = hits;
            emit(doc);
        } else {
            if (report.ok()) {
                std::cout << "all residues zero for m <= " << opt.m_max
                          << ", n <= " << opt.n_max << "\n";
            } else {
                for (const auto& hit : report.nonzero)
                    std::cout << "m " << hit.m << " n " << hit.n
                              << " residue " << hit.residue << "\n";
            }
        }
        return 0; // conjectural as well
    }
    if (opt.what == "identities") {
        CheckReport report = scan_identities(opt.n_max);
        if (opt.format == "structured") {
            json doc = json_header("scan", opt);
            doc["what"] = "identities";
            doc["n_max"] = opt.n_max;
            doc["passed"] = report.passed;
            doc["issues"] = issues_to_json(report);
            emit(doc);
        } else {
            for (const auto& name : report.passed)
                std::cout << "ok " << name << "\n";
            for (const auto& issue : report.issues)
                std::cout << "FAIL " << issue.check << " at n " << issue.exponent
                          << ": " << issue.detail << "\n";
        }
        return report.ok() ? 0 : 1; // theorem-backed
    }
    throw CLI::ValidationError("--what must be bias, congruence, or identities");
}

std::vector<std::pair<mpq_class, unsigned>> parse_side(const std::string& text)
{
    // "coeff:shift,coeff:shift,..."
    std::vector<std::pair<mpq_class, unsigned>> side;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("inequality terms must look like coeff:shift");
        side.emplace_back(mpq_class(item.substr(0, colon)),
                          static_cast<unsigned>(std::stoul(item.substr(colon + 1))));
        side.back().first.canonicalize();
    }
    return side;
}

int run_certify(const Options& opt)
{
    InequalitySpec spec;
    if (opt.paper_t3) {
        spec = paper_t3_spec();
    } else {
        if (opt.lhs.empty() || opt.rhs.empty())
            throw CLI::ValidationError("certify needs --paper-t3 or both --lhs and --rhs");
        spec.lhs = parse_side(opt.lhs);
        spec.rhs = parse_side(opt.rhs);
        spec.m = opt.m;
    }

    std::optional<std::array<double, 3>> abc;
    if (!opt.abc.empty()) {
        if (opt.abc.size() != 3)
            throw CLI::ValidationError("--abc needs exactly three values");
        abc = {opt.abc[0], opt.abc[1], opt.abc[2]};
    }

    unsigned cap = opt.long_mode ? std::numeric_limits<unsigned>::max() : opt.cap;

    // warm the rho table through the cache so reruns are cheap
    std::optional<DistinctCountTable> table;
    if (!opt.cache_dir.empty()) {
        spec.validate();
        Certificate probe = certify(spec, abc, 0, nullptr, 20000, 1);
        unsigned to = std::min<unsigned>(
            cap, static_cast<unsigned>(std::floor(probe.th.N)));
        table = cached_rho_table(opt.cache_dir, spec.m, to + spec.max_shift());
    }

    Certificate cert = certify(spec, abc, cap, table ? &*table : nullptr,
                               20000, opt.threads);

    if (opt.format == "structured") {
        json doc = json_header("certify", opt);
        doc["certificate"] = certificate_to_text(cert);
        doc["N"] = cert.th.N;
        doc["eps"] = cert.eps;
        doc["L"] = cert.L;
        doc["verified_from"] = cert.verified_from;
        doc["verified_to"] = cert.verified_to;
        doc["violations"] = cert.violations;
        emit(doc);
    } else {
        std::cout << certificate_to_text(cert);
    }
    return 0;
}

int run_asym(const Options& opt)
{
    AsymptoticParams p = asymptotic_params(opt.stat);
    LogReal main = wright_main(p, opt.n == 0 ? 1 : opt.n);
    if (opt.format == "structured") {
        json doc = json_header("asym", opt);
        doc["statistic"] = opt.stat;
        doc["n"] = opt.n;
        doc["K"] = p.K;
        doc["A"] = p.A;
        doc["B"] = p.B;
        doc["beta"] = p.beta;
        doc["alpha0"] = p.alpha0;
        doc["log_main_term"] = main.log_abs;
        emit(doc);
    } else {
        std::cout.precision(15);
        std::cout << "statistic " << opt.stat << "\n";
        std::cout << "K " << p.K << "\nA " << p.A << "\nB " << p.B
                  << "\nbeta " << p.beta << "\nalpha0 " << p.alpha0 << "\n";
        std::cout << "log_main_term(n=" << opt.n << ") " << main.log_abs << "\n";
    }
    return 0;
}

int run_identity(const Options& opt)
{
    Identity which;
    if (opt.which == "nekrasov_okounkov")
        which = Identity::NekrasovOkounkov;
    else if (opt.which == "han1")
        which = Identity::Han1;
    else if (opt.which == "han2")
        which = Identity::Han2;
    else
        throw CLI::ValidationError("--which must be nekrasov_okounkov, han1, or han2");

    IdentityParams params;
    params.t = opt.id_t;
    params.y = opt.id_y;
    params.z = opt.id_z;
    CheckReport report = check_identity(which, params, opt.order);
    if (opt.format == "structured") {
        json doc = json_header("identity", opt);
        doc["which"] = opt.which;
        doc["order"] = opt.order;
        doc["passed"] = report.passed;
        doc["issues"] = issues_to_json(report);
        emit(doc);
    } else {
        for (const auto& name : report.passed)
            std::cout << "ok " << name << "\n";
        for (const auto& issue : report.issues)
            std::cout << "FAIL " << issue.check << " at q^" << issue.exponent
                      << ": " << issue.detail << "\n";
    }
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    Options opt;
    opt.cache_dir = default_cache_dir().string();

    CLI::App app{"partition hook-length bias toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "structured"}));
    app.add_option("--cache-dir", opt.cache_dir,
                   "cache directory (default $HOOKBIAS_CACHE_DIR; empty disables)");
    app.add_option("--threads", opt.threads, "worker threads (default: hardware)");
    app.add_flag("--long", opt.long_mode, "allow the full certified range");

    CLI::App* series = app.add_subcommand("series", "print exact series coefficients");
    series->add_option("--name", opt.series, "series name")->required();
    series->add_option("--order", opt.order, "number of coefficients");

    CLI::App* count = app.add_subcommand("count", "one exact statistic total");
    count->add_option("--family", opt.family, "partition family");
    count->add_option("--stat", opt.stat, "statistic name");
    count->add_option("--t", opt.t, "hook length t");
    count->add_option("--n", opt.n, "target n")->required();

    CLI::App* scan = app.add_subcommand("scan", "bias/congruence/identity scans");
    scan->add_option("--what", opt.what, "bias, congruence, or identities");
    scan->add_option("--pair", opt.pair, "family pair for bias scans");
    scan->add_option("--t", opt.scan_t, "single t for bias scans");
    scan->add_option("--t-min", opt.t_min, "range start for bias scans");
    scan->add_option("--t-max", opt.t_max, "range end for bias scans");
    scan->add_option("--n-max", opt.n_max, "scan limit");
    scan->add_option("--m-max", opt.m_max, "congruence moduli limit");
    scan->add_option("--source", opt.source, "enumeration or genfun")
        ->check(CLI::IsMember({"enumeration", "genfun"}));

    CLI::App* certify = app.add_subcommand("certify", "linear inequality certificates");
    certify->add_flag("--paper-t3", opt.paper_t3, "built-in 3-hook rho(n,9) spec");
    certify->add_option("--lhs", opt.lhs, "lhs terms, coeff:shift list");
    certify->add_option("--rhs", opt.rhs, "rhs terms, coeff:shift list");
    certify->add_option("--m", opt.m, "minimum part");
    certify->add_option("--abc", opt.abc, "fixed A,B,C")->delimiter(',');
    certify->add_option("--cap", opt.cap, "default verification cap");

    CLI::App* asym = app.add_subcommand("asym", "circle-method constants");
    asym->add_option("--stat", opt.stat, "statistic: a1..b3")->required();
    asym->add_option("--n", opt.n, "evaluation point");

    CLI::App* identity = app.add_subcommand("identity", "hook product identities");
    identity->add_option("--which", opt.which, "identity name");
    identity->add_option("--t", opt.id_t, "parameter t");
    identity->add_option("--y", opt.id_y, "parameter y");
    identity->add_option("--z", opt.id_z, "parameter z");
    identity->add_option("--order", opt.order, "check order")->default_val(15);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (opt.threads == 0) {
        opt.threads = std::thread::hardware_concurrency();
        if (opt.threads == 0)
            opt.threads = 1;
    }

    try {
        if (series->parsed())
            return run_series(opt);
        if (count->parsed())
            return run_count(opt);
        if (scan->parsed())
            return run_scan(opt);
        if (certify->parsed())
            return run_certify(opt);
        if (asym->parsed())
            return run_asym(opt);
        if (identity->parsed())
            return run_identity(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
