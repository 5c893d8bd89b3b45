#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cache.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using namespace shiftca::cli;

namespace {

const fs::path data_dir = SHIFTCA_TEST_DATA;

struct Result {
	int code;
	std::string out;
	std::string err;
};

Result invoke(std::vector<std::string> args)
{
	for (std::string &a : args)
		if (a.ends_with(".json") && !a.starts_with("/"))
			a = (data_dir / a).string();
	std::ostringstream out, err;
	const int code = run(args, out, err);
	return {code, out.str(), err.str()};
}

// Scoped SHIFTCA_CACHE_DIR.
struct CacheEnv {
	explicit CacheEnv(const fs::path &p) { ::setenv("SHIFTCA_CACHE_DIR", p.c_str(), 1); }
	~CacheEnv() { ::unsetenv("SHIFTCA_CACHE_DIR"); }
};

fs::path fresh_dir(const std::string &name)
{
	const fs::path p = fs::temp_directory_path() / ("shiftca-test-" + name + "-" + std::to_string(::getpid()));
	fs::remove_all(p);
	return p;
}

} // namespace

TEST_CASE("exit 0: successful reports")
{
	auto r = invoke({"kgroups", "-i", "full3.json"});
	CHECK(r.code == Ok);
	CHECK(r.out == "K0 = Z/2, K1 = 0 (exact, level 0)\n");

	r = invoke({"classes", "-i", "gm.json", "-l", "3"});
	CHECK(r.code == Ok);
	CHECK(r.out.find("m(0)=1") != std::string::npos);
	CHECK(r.out.find("m(1)=2") != std::string::npos);
	CHECK(r.out.find("stabilized at 1") != std::string::npos);

	r = invoke({"check", "-i", "point.json", "--condition", "I"});
	CHECK(r.code == Ok);
	CHECK(r.out.starts_with("FAILS\n"));

	r = invoke({"repcheck", "-i", "gm.json", "--depth", "6"});
	CHECK(r.code == Ok);
	CHECK(r.out.starts_with("all "));

	for (const char *cmd : {"dimension-group", "ideals", "bf", "oracle-ck"})
		CHECK(invoke({cmd, "-i", "gm.json"}).code == Ok);
	CHECK(invoke({"--help"}).code == Ok);
}

TEST_CASE("json reports follow the module schemas")
{
	auto r = invoke({"kgroups", "-i", "full3.json", "--json"});
	const auto k = nlohmann::json::parse(r.out);
	CHECK(k == nlohmann::json::parse(R"({"k0":{"rank":0,"torsion":[2]},"k1":{"rank":0,"torsion":[]},"exact":true,"level":0})"));

	r = invoke({"check", "-i", "gm.json", "--condition", "I", "--json"});
	const auto v = nlohmann::json::parse(r.out);
	CHECK(v["condition"] == "I");
	CHECK(v["status"] == "holds");
	CHECK(v["method"] == "exact");
	CHECK(v.contains("certificate"));

	r = invoke({"repcheck", "-i", "gm.json", "--depth", "8", "--budget", "4", "--json"});
	const auto rep = nlohmann::json::parse(r.out);
	CHECK(rep["pairs"] == 82);
	CHECK(rep["failed"] == 0);
}

TEST_CASE("json output is byte-identical across runs")
{
	for (const char *cmd : {"classes", "kgroups", "dimension-group", "ideals", "repcheck", "oracle-ck"}) {
		const auto a = invoke({cmd, "-i", "gm.json", "--json"});
		const auto b = invoke({cmd, "-i", "gm.json", "--json"});
		CHECK(a.code == Ok);
		CHECK(sha256_hex(a.out) == sha256_hex(b.out));
	}
	for (const char *cond : {"I", "star", "aperiodic", "irreducible"}) {
		const auto a = invoke({"check", "-i", "even.json", "--condition", cond, "--json"});
		CHECK(a.out == invoke({"check", "-i", "even.json", "--condition", cond, "--json"}).out);
	}
}

TEST_CASE("exit 1: invalid input")
{
	auto r = invoke({"classes", "-i", "bad.json"});
	CHECK(r.code == InputError);
	CHECK(r.err.find("ZeroRow") != std::string::npos);
	CHECK(invoke({"classes", "-i", "extra_field.json"}).code == InputError);
	CHECK(invoke({"classes", "-i", "no_such_file.json"}).code == InputError);
	CHECK(invoke({"bf", "-i", "even.json"}).code == InputError);
	CHECK(invoke({"frobnicate", "-i", "gm.json"}).code == InputError);
	CHECK(invoke({"check", "-i", "gm.json", "--condition", "II"}).code == InputError);
	CHECK(invoke({"kgroups", "-i", "gm.json", "-l", "0"}).code == InputError);
	CHECK(invoke({}).code == InputError);
}

TEST_CASE("exit 2: budgets and partial results")
{
	auto r = invoke({"kgroups", "-i", "even.json", "-l", "1"});
	CHECK(r.code == Partial);
	CHECK(r.err.find("APPROXIMATE (level 0)") != std::string::npos);
	CHECK(invoke({"kgroups", "-i", "even.json", "-l", "1", "--allow-partial"}).code == Ok);
	CHECK(invoke({"classes", "-i", "even.json", "-l", "2"}).code == Partial);
	CHECK(invoke({"ideals", "-i", "even.json", "-l", "2"}).code == Partial);
	CHECK(invoke({"kgroups", "-i", "gm.json", "--monoid-cap", "1"}).code == Partial);
	CHECK(invoke({"repcheck", "-i", "full3.json", "--depth", "40"}).code == Partial);
}

TEST_CASE("exit 3: unusable cache directory")
{
	const fs::path file = fresh_dir("file");
	std::ofstream(file) << "not a directory";
	CacheEnv env(file);
	const auto r = invoke({"classes", "-i", "gm.json"});
	CHECK(r.code == InternalError);
	fs::remove(file);
}

TEST_CASE("cache hits reproduce the cold report")
{
	const auto cold = invoke({"classes", "-i", "even.json", "--json"});
	const auto cold_text = invoke({"classes", "-i", "even.json"});
	const fs::path dir = fresh_dir("cache");
	{
		CacheEnv env(dir);
		const auto first = invoke({"classes", "-i", "even.json", "--json"});
		std::vector<fs::path> entries;
		for (const auto &e : fs::directory_iterator(dir))
			entries.push_back(e.path());
		REQUIRE(entries.size() == 1);
		CHECK(entries[0].extension() == ".json");
		const auto hit = invoke({"classes", "-i", "even.json", "--json"});
		CHECK(sha256_hex(first.out) == sha256_hex(cold.out));
		CHECK(sha256_hex(hit.out) == sha256_hex(cold.out));
		CHECK(invoke({"classes", "-i", "even.json"}).out == cold_text.out);

		// The entry is really read back: an edited entry shows through, a corrupt one is rebuilt.
		auto doc = nlohmann::json::parse(std::ifstream(entries[0]));
		doc["top_level"] = 99;
		std::ofstream(entries[0]) << doc.dump();
		CHECK(nlohmann::json::parse(invoke({"classes", "-i", "even.json", "--json"}).out)["top_level"] == 99);
		std::ofstream(entries[0]) << "{garbage";
		CHECK(invoke({"classes", "-i", "even.json", "--json"}).out == cold.out);
		CHECK(invoke({"classes", "-i", "even.json", "--json"}).out == cold.out);
	}
	fs::remove_all(dir);
}

TEST_CASE("different presentations of one shift share nothing but agree")
{
	const auto a = invoke({"kgroups", "-i", "gm.json", "--json"});
	const auto b = invoke({"kgroups", "-i", "gm_forbidden.json", "--json"});
	CHECK(nlohmann::json::parse(a.out)["k0"] == nlohmann::json::parse(b.out)["k0"]);
}

TEST_CASE("the installed binary reports exit codes")
{
	const std::string bin = SHIFTCA_BINARY;
	const auto status = [&](const std::string &args) {
		const int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
		return WEXITSTATUS(s);
	};
	CHECK(status("kgroups -i " + (data_dir / "full3.json").string()) == 0);
	CHECK(status("kgroups -i " + (data_dir / "bad.json").string()) == 1);
	CHECK(status("kgroups -l 1 -i " + (data_dir / "even.json").string()) == 2);
	const int s = std::system(("SHIFTCA_CACHE_DIR=" + (data_dir / "gm.json").string() + " " + bin + " classes -i " +
	                           (data_dir / "gm.json").string() + " >/dev/null 2>&1")
	                              .c_str());
	CHECK(WEXITSTATUS(s) == 3);
}
