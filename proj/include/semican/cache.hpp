#pragma once

// On-disk cache of monomial tables, content-addressed by dimension vector and
// word list.

#include "semican/bases.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>

namespace semican::app {

/// $SEMICAN_CACHE_DIR if set and nonempty, else ~/.cache/semican.
std::filesystem::path default_cache_dir();

/// 64-bit FNV-1a over the dimension vector and the printed words.
std::uint64_t tables_key(bases::DimVector dim, const std::vector<bases::MonomialWord>& words);

class TableCache {
public:
    explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path file_for(bases::DimVector dim, const std::vector<bases::MonomialWord>& words) const;

    /// Empty on a miss or on an unreadable / mismatching entry.
    std::optional<bases::MonomialTables> load(bases::DimVector dim, const std::vector<bases::MonomialWord>& words) const;
    /// Best effort; a failed write is not an error.
    void store(const bases::MonomialTables& tables) const;

private:
    std::filesystem::path dir_;
};

struct CachedTables {
    bases::MonomialTables tables;
    bool hit = false;
};

/// Spanning-word tables for `dim`, through the cache when one is given.
CachedTables load_or_build(bases::DimVector dim, const std::optional<TableCache>& cache);

}  // namespace semican::app
