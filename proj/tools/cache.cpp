#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include "shiftca/error.hpp"

namespace shiftca::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string &data)
{
	unsigned char md[EVP_MAX_MD_SIZE];
	unsigned int len = 0;
	if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
		throw Error(ErrorKind::Internal, "SHA-256 digest failed");
	static constexpr char hex[] = "0123456789abcdef";
	std::string out;
	for (unsigned int i = 0; i < len; ++i) {
		out.push_back(hex[md[i] >> 4]);
		out.push_back(hex[md[i] & 0xf]);
	}
	return out;
}

std::optional<TowerCache> TowerCache::from_env()
{
	const char *env = std::getenv("SHIFTCA_CACHE_DIR");
	if (!env || !*env)
		return std::nullopt;
	return TowerCache(env);
}

TowerCache::TowerCache(fs::path dir) : dir_(std::move(dir))
{
	std::error_code ec;
	if (fs::exists(dir_, ec) && !fs::is_directory(dir_, ec))
		throw Error(ErrorKind::Internal, "cache path " + dir_.string() + " is not a directory");
	fs::create_directories(dir_, ec);
	if (ec)
		throw Error(ErrorKind::Internal, "cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::optional<nlohmann::json> TowerCache::load(const std::string &key) const
{
	std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
	if (!in)
		return std::nullopt;
	std::ostringstream buf;
	buf << in.rdbuf();
	nlohmann::json doc = nlohmann::json::parse(buf.str(), nullptr, false);
	if (doc.is_discarded() || !doc.is_object() || doc.value("format", "") != "shiftca-tower-v1")
		return std::nullopt;
	return doc;
}

void TowerCache::store(const std::string &key, const nlohmann::json &dump) const
{
	std::random_device rd;
	const fs::path final_path = dir_ / (key + ".json");
	const fs::path tmp = dir_ / (key + ".tmp." + std::to_string(rd()));
	{
		std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
		out << dump.dump() << '\n';
		if (!out)
			throw Error(ErrorKind::Internal, "cannot write cache entry " + tmp.string());
	}
	std::error_code ec;
	fs::rename(tmp, final_path, ec);
	if (ec) {
		fs::remove(tmp, ec);
		throw Error(ErrorKind::Internal, "cannot publish cache entry " + final_path.string());
	}
}

} // namespace shiftca::cli
