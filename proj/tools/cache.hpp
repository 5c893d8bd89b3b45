#ifndef SHIFTCA_TOOLS_CACHE_HPP
#define SHIFTCA_TOOLS_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace shiftca::cli {

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string &data);

/// Directory of tower dumps named <key>.json. Entries are written to a temporary file in the
/// same directory and renamed into place, so readers never see a partial file.
class TowerCache {
public:
	/// From SHIFTCA_CACHE_DIR; nullopt when unset or empty. Throws Internal when the path
	/// exists but is not a directory or cannot be created.
	static std::optional<TowerCache> from_env();

	explicit TowerCache(std::filesystem::path dir);

	/// Unreadable or unparsable entries count as misses.
	std::optional<nlohmann::json> load(const std::string &key) const;
	void store(const std::string &key, const nlohmann::json &dump) const;

	const std::filesystem::path &dir() const { return dir_; }

private:
	std::filesystem::path dir_;
};

} // namespace shiftca::cli

#endif
