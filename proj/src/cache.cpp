#include "hookbias/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace hookbias {

namespace {

constexpr const char* kVersion = "hookbias-cache v1";

std::filesystem::path hook_table_path(const std::filesystem::path& dir,
                                      Family f, Statistic s, unsigned t)
{
    std::ostringstream name;
    name << "hook_" << family_name(f) << "_" << statistic_name(s)
         << "_t" << t << ".tbl";
    return dir / name.str();
}

std::filesystem::path rho_table_path(const std::filesystem::path& dir, unsigned m)
{
    return dir / ("rho_m" + std::to_string(m) + ".tbl");
}

bool write_atomically(const std::filesystem::path& path, const std::string& body)
{
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            return false;
        out << body;
        if (!out.flush())
            return false;
    }
    std::filesystem::rename(tmp, path, ec);
    return !ec;
}

// One "n value" record per line; n must run 0, 1, ..., records-1.
bool read_records(std::istream& in, unsigned long records,
                  std::vector<mpz_class>* values)
{
    values->clear();
    values->reserve(records);
    std::string line;
    for (unsigned long i = 0; i < records; ++i) {
        if (!std::getline(in, line))
            return false;
        std::istringstream fields(line);
        unsigned long n = 0;
        std::string digits;
        if (!(fields >> n >> digits) || n != i)
            return false;
        mpz_class v;
        if (mpz_set_str(v.get_mpz_t(), digits.c_str(), 10) != 0)
            return false;
        values->push_back(std::move(v));
    }
    // trailing data means a mismatched record count
    return !std::getline(in, line) || line.empty();
}

} // namespace

std::filesystem::path default_cache_dir()
{
    const char* env = std::getenv("HOOKBIAS_CACHE_DIR");
    return env == nullptr ? std::filesystem::path() : std::filesystem::path(env);
}

bool save_hook_table(const std::filesystem::path& dir, const HookTable& table)
{
    if (dir.empty() || table.values.empty())
        return false;
    std::ostringstream body;
    body << kVersion << "\n";
    body << "kind: hook_table\n";
    body << "family: " << family_name(table.family) << "\n";
    body << "statistic: " << statistic_name(table.statistic) << "\n";
    body << "t: " << table.t << "\n";
    body << "records: " << table.values.size() << "\n";
    for (std::size_t n = 0; n < table.values.size(); ++n)
        body << n << " " << table.values[n].get_str() << "\n";
    return write_atomically(hook_table_path(dir, table.family, table.statistic,
                                            table.t),
                            body.str());
}

std::optional<HookTable> load_hook_table(const std::filesystem::path& dir,
                                         Family f, Statistic s, unsigned t,
                                         unsigned min_n_max)
{
    if (dir.empty())
        return std::nullopt;
    std::ifstream in(hook_table_path(dir, f, s, t));
    if (!in)
        return std::nullopt;

    std::string line;
    unsigned long records = 0;
    unsigned long file_t = 0;
    std::string family, statistic;
    if (!std::getline(in, line) || line != kVersion)
        return std::nullopt;
    if (!std::getline(in, line) || line != "kind: hook_table")
        return std::nullopt;
    auto field = [&line](const char* key) -> std::optional<std::string> {
        std::string prefix = std::string(key) + ": ";
        if (line.rfind(prefix, 0) != 0)
            return std::nullopt;
        return line.substr(prefix.size());
    };
    if (!std::getline(in, line))
        return std::nullopt;
    if (auto v = field("family"))
        family = *v;
    else
        return std::nullopt;
    if (!std::getline(in, line))
        return std::nullopt;
    if (auto v = field("statistic"))
        statistic = *v;
    else
        return std::nullopt;
    if (!std::getline(in, line))
        return std::nullopt;
    if (auto v = field("t"))
        file_t = std::strtoul(v->c_str(), nullptr, 10);
    else
        return std::nullopt;
    if (!std::getline(in, line))
        return std::nullopt;
    if (auto v = field("records"))
        records = std::strtoul(v->c_str(), nullptr, 10);
    else
        return std::nullopt;

    if (family != family_name(f) || statistic != statistic_name(s)
        || file_t != t || records < std::size_t{min_n_max} + 1)
        return std::nullopt;

    HookTable table;
    table.family = f;
    table.statistic = s;
    table.t = t;
    if (!read_records(in, records, &table.values))
        return std::nullopt;
    return table;
}

bool save_rho_table(const std::filesystem::path& dir, const DistinctCountTable& table)
{
    if (dir.empty() || table.values.empty())
        return false;
    std::ostringstream body;
    body << kVersion << "\n";
    body << "kind: rho_table\n";
    body << "m: " << table.m << "\n";
    body << "records: " << table.values.size() << "\n";
    for (std::size_t n = 0; n < table.values.size(); ++n)
        body << n << " " << table.values[n].get_str() << "\n";
    return write_atomically(rho_table_path(dir, table.m), body.str());
}

std::optional<DistinctCountTable> load_rho_table(const std::filesystem::path& dir,
                                                 unsigned m, unsigned min_n_max)
{
    if (dir.empty())
        return std::nullopt;
    std::ifstream in(rho_table_path(dir, m));
    if (!in)
        return std::nullopt;

    std::string line;
    if (!std::getline(in, line) || line != kVersion)
        return std::nullopt;
    if (!std::getline(in, line) || line != "kind: rho_table")
        return std::nullopt;
    if (!std::getline(in, line) || line != "m: " + std::to_string(m))
        return std::nullopt;
    if (!std::getline(in, line) || line.rfind("records: ", 0) != 0)
        return std::nullopt;
    unsigned long records = std::strtoul(line.c_str() + 9, nullptr, 10);
    if (records < std::size_t{min_n_max} + 1)
        return std::nullopt;

    DistinctCountTable table;
    table.m = m;
    if (!read_records(in, records, &table.values))
        return std::nullopt;
    return table;
}

HookTable cached_hook_table(const std::filesystem::path& dir, Family f,
                            Statistic s, unsigned t, unsigned n_max)
{
    if (auto table = load_hook_table(dir, f, s, t, n_max))
        return std::move(*table);
    HookTable table = hook_table(f, s, t, n_max);
    save_hook_table(dir, table);
    return table;
}

DistinctCountTable cached_rho_table(const std::filesystem::path& dir,
                                    unsigned m, unsigned n_max)
{
    if (auto table = load_rho_table(dir, m, n_max))
        return std::move(*table);
    DistinctCountTable table = distinct_counts(m, n_max);
    save_rho_table(dir, table);
    return table;
}

} // namespace hookbias
