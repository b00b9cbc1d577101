#include "semican/cache.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

namespace semican::app {

using nlohmann::json;

namespace {

json table_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_pq_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RatMatrix table_from_json(const json& j) {
    RatMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& entries = j.at("entries");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = parse_rational(entries.at(i).at(k).get<std::string>());
    return m;
}

std::vector<std::string> word_strings(const std::vector<bases::MonomialWord>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(w.to_string());
    return out;
}

}  // namespace

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("SEMICAN_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "semican";
    return std::filesystem::temp_directory_path() / "semican-cache";
}

std::uint64_t tables_key(bases::DimVector dim, const std::vector<bases::MonomialWord>& words) {
    std::string text = std::to_string(dim.d1) + "," + std::to_string(dim.d2);
    for (const auto& w : words) text += ";" + w.to_string();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::filesystem::path TableCache::file_for(bases::DimVector dim, const std::vector<bases::MonomialWord>& words) const {
    std::ostringstream name;
    name << "tables-" << dim.d1 << "x" << dim.d2 << "-" << std::hex << tables_key(dim, words) << ".json";
    return dir_ / name.str();
}

std::optional<bases::MonomialTables> TableCache::load(bases::DimVector dim,
                                                      const std::vector<bases::MonomialWord>& words) const {
    std::ifstream in(file_for(dim, words));
    if (!in) return std::nullopt;
    try {
        const json j = json::parse(in);
        if (j.at("schema_version") != 1 || j.at("d1") != dim.d1 || j.at("d2") != dim.d2 ||
            j.at("words").get<std::vector<std::string>>() != word_strings(words))
            return std::nullopt;
        bases::MonomialTables t{dim, words, table_from_json(j.at("e_side")), table_from_json(j.at("pi_side"))};
        if (t.e_side.rows() != words.size() || t.pi_side.rows() != words.size()) return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void TableCache::store(const bases::MonomialTables& tables) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    const json j{{"schema_version", 1},
                 {"d1", tables.dim.d1},
                 {"d2", tables.dim.d2},
                 {"words", word_strings(tables.words)},
                 {"e_side", table_json(tables.e_side)},
                 {"pi_side", table_json(tables.pi_side)}};
    const auto target = file_for(tables.dim, tables.words);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump() << "\n";
        if (!out) return;
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

CachedTables load_or_build(bases::DimVector dim, const std::optional<TableCache>& cache) {
    auto words = bases::spanning_words(dim);
    if (cache)
        if (auto t = cache->load(dim, words)) return {std::move(*t), true};
    auto tables = bases::MonomialTables::build(dim, std::move(words));
    if (cache) cache->store(tables);
    return {std::move(tables), false};
}

}  // namespace semican::app
