// SPDX-License-Identifier: Apache-2.0
//
// On-disk persistence of the moment table f~(p,q) and the inner sums. A cache
// only ever saves work: anything that fails to load or validate is reported
// and recomputed.

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

namespace certmass {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheDirEnv = "CERTMASS_CACHE_DIR";

struct CacheLoadResult {
    bool loaded = false;
    std::size_t moments = 0;
    std::size_t inner_sums = 0;
    std::string warning;  // empty unless a file existed but was rejected
};

std::filesystem::path cache_file(const std::filesystem::path& dir);

/// Reads the cache file in `dir` and seeds the memo tables. All-or-nothing:
/// a version mismatch, checksum mismatch, parse error or failed spot check
/// leaves the tables untouched and sets `warning`.
CacheLoadResult load_cache(const std::filesystem::path& dir);

/// Writes the current memo tables to `dir` (temporary file + rename).
/// Returns false and sets `warning` on I/O failure.
bool store_cache(const std::filesystem::path& dir, std::string* warning = nullptr);

/// Explicit directory, else $CERTMASS_CACHE_DIR, else $XDG_CACHE_HOME/certmass,
/// else $HOME/.cache/certmass; empty if none applies.
std::filesystem::path resolve_cache_dir(const std::string& explicit_dir);

}  // namespace certmass
