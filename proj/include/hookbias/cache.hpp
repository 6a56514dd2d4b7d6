#pragma once

#include <filesystem>
#include <optional>

#include "hookbias/analytic.hpp"
#include "hookbias/partitions.hpp"

namespace hookbias {

// Plain-text table persistence. Each file carries a version line, the key
// fields, and a record count; loaders reject anything that does not parse
// back exactly, so corrupt or truncated files fall through to recompute.

// Reads HOOKBIAS_CACHE_DIR; empty means no persistence.
std::filesystem::path default_cache_dir();

bool save_hook_table(const std::filesystem::path& dir, const HookTable& table);
std::optional<HookTable> load_hook_table(const std::filesystem::path& dir,
                                         Family f, Statistic s, unsigned t,
                                         unsigned min_n_max);

bool save_rho_table(const std::filesystem::path& dir, const DistinctCountTable& table);
std::optional<DistinctCountTable> load_rho_table(const std::filesystem::path& dir,
                                                 unsigned m, unsigned min_n_max);

// Load-or-compute wrappers; with an empty dir they just compute.
HookTable cached_hook_table(const std::filesystem::path& dir, Family f,
                            Statistic s, unsigned t, unsigned n_max);
DistinctCountTable cached_rho_table(const std::filesystem::path& dir,
                                    unsigned m, unsigned n_max);

} // namespace hookbias
