#include "cli.hpp"

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "shiftca/conditions.hpp"
#include "shiftca/error.hpp"
#include "shiftca/invariants.hpp"
#include "shiftca/io.hpp"
#include "shiftca/repcheck.hpp"
#include "shiftca/report.hpp"
#include "shiftca/tower.hpp"

namespace shiftca::cli {

namespace {

using nlohmann::json;

struct Context {
	const RunConfig &cfg;
	std::ostream &out;
	std::ostream &err;
	Presentation p;
	std::shared_ptr<const ShiftGraph> g;
};

Tower build_tower(const Context &c)
{
	return Tower::build(c.g, TowerOptions{c.cfg.max_level, c.cfg.monoid_cap});
}

int partial(const Context &c, std::size_t level)
{
	c.err << "APPROXIMATE (level " << level << ")\n";
	return c.cfg.allow_partial ? Ok : Partial;
}

void emit(const Context &c, const json &doc) { c.out << doc.dump(2) << '\n'; }

std::string word_text(const std::string &w) { return w.empty() ? "ε" : w; }

int cmd_classes(const Context &c)
{
	const std::string key = sha256_hex(canonical_json(c.p).dump() + "\nmax_level=" + std::to_string(c.cfg.max_level) +
	                                   "\nmonoid_cap=" + std::to_string(c.cfg.monoid_cap));
	const auto cache = TowerCache::from_env();
	std::optional<json> dump;
	if (cache)
		dump = cache->load(key);
	if (!dump) {
		dump = tower_dump(build_tower(c));
		if (cache)
			cache->store(key, *dump);
	}
	if (c.cfg.json) {
		emit(c, *dump);
	} else {
		for (const json &lv : (*dump)["levels"]) {
			const std::size_t l = lv["level"];
			c.out << "level " << l << ": m(" << l << ")=" << lv["m"].get<std::size_t>() << '\n';
			for (const json &cls : lv["classes"]) {
				c.out << "  E" << cls["index"].get<std::size_t>() << "  P = {";
				bool first = true;
				for (const json &w : cls["past_set"]["words"]) {
					c.out << (first ? "" : ", ") << word_text(w.get<std::string>());
					first = false;
				}
				c.out << (cls["past_set"]["truncated"].get<bool>() ? ", ...}" : "}") << '\n';
			}
		}
	}
	if ((*dump)["stabilized_at"].is_null())
		return partial(c, (*dump)["top_level"].get<std::size_t>());
	if (!c.cfg.json)
		c.out << "stabilized at " << (*dump)["stabilized_at"].get<std::size_t>() << '\n';
	return Ok;
}

int cmd_kgroups(const Context &c)
{
	const KGroupsReport r = k_groups(build_tower(c));
	if (c.cfg.json)
		emit(c, to_json(r));
	else
		c.out << "K0 = " << r.k0.to_string() << ", K1 = " << r.k1.to_string() << " ("
		      << (r.exact ? "exact" : "approximate") << ", level " << r.level << ")\n";
	return r.exact ? Ok : partial(c, r.level);
}

int cmd_dimension_group(const Context &c)
{
	const Tower t = build_tower(c);
	if (!t.stabilized_at())
		return partial(c, t.top_level());
	const json doc = dimension_group_json(t, c.cfg.k_max);
	if (c.cfg.json) {
		emit(c, doc);
		return Ok;
	}
	c.out << "stable level " << doc["level"].get<std::size_t>() << ", shift map "
	      << doc["stable_transition"].dump() << '\n';
	for (const json &s : doc["systems"]) {
		const std::size_t from = s["classes"].size(), to = s["next_classes"].size();
		c.out << "k=" << s["k"].get<std::size_t>() << ": Z^" << from << " -> Z^" << to << "  A = " << s["map"].dump()
		      << "  delta = " << s["delta"].dump() << '\n';
	}
	return Ok;
}

int cmd_bf(const Context &c)
{
	const BowenFranks b = bowen_franks(c.p);
	if (c.cfg.json)
		emit(c, to_json(b));
	else
		c.out << "BF = " << b.group.to_string() << '\n';
	return Ok;
}

std::string upper(std::string s)
{
	for (char &ch : s)
		ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
	return s;
}

int cmd_check(const Context &c)
{
	const Tower t = build_tower(c);
	const std::string &cond = c.cfg.condition;
	if (cond != "I" && cond != "star" && !t.stabilized_at())
		return partial(c, t.top_level());
	const Verdict v = cond == "I"           ? condition_I(t)
	                  : cond == "star"      ? condition_star(t)
	                  : cond == "aperiodic" ? aperiodic_past(t)
	                                        : irreducible_past(t);
	if (c.cfg.json) {
		emit(c, to_json(v));
	} else {
		c.out << upper(to_string(v.status)) << '\n';
		c.out << "condition " << v.condition << ", method " << to_string(v.method);
		if (v.bound)
			c.out << " (bound " << *v.bound << ")";
		c.out << "\ncertificate " << v.certificate.dump() << '\n';
	}
	if (v.status == Status::Inconclusive && !t.stabilized_at())
		return partial(c, t.top_level());
	return Ok;
}

int cmd_ideals(const Context &c)
{
	const Tower t = build_tower(c);
	if (!t.stabilized_at())
		return partial(c, t.top_level());
	const IdealLatticeReport r = ideal_lattice(t, std::nullopt, c.cfg.monoid_cap);
	if (c.cfg.json) {
		emit(c, to_json(r));
		return Ok;
	}
	c.out << r.elements.size() << " ideals at level " << r.level << '\n';
	for (const auto &e : r.elements) {
		c.out << "  {";
		for (std::size_t i = 0; i < e.size(); ++i)
			c.out << (i ? "," : "") << e[i];
		c.out << "}\n";
	}
	return Ok;
}

int cmd_repcheck(const Context &c)
{
	const std::size_t budget = c.cfg.budget ? c.cfg.budget : std::max<std::size_t>(1, c.cfg.depth / 2);
	const TruncatedRep r(*c.g, c.cfg.depth);
	RelationReport rep = check_universal_relations(r, budget);
	if (c.p.is_sft_matrix()) {
		const RelationReport ck = check_ck_relations(r, c.p);
		rep.checks.insert(rep.checks.end(), ck.checks.begin(), ck.checks.end());
	}
	if (c.cfg.json) {
		emit(c, to_json(rep, c.p.alphabet()));
	} else if (rep.failed() == 0) {
		c.out << "all " << rep.checks.size() << " relation checks passed (" << rep.distinct_pairs()
		      << " pairs, depth " << rep.depth << ", basis " << rep.basis_size << ")\n";
	} else {
		c.out << rep.failed() << " of " << rep.checks.size() << " relation checks failed\n";
		for (const auto &chk : rep.checks)
			if (!chk.passed)
				c.out << "  " << chk.relation << " u=" << word_text(c.p.alphabet().format(chk.u))
				      << " v=" << word_text(c.p.alphabet().format(chk.v))
				      << " at " << word_text(c.p.alphabet().format(*chk.witness)) << '\n';
	}
	return rep.failed() == 0 ? Ok : InternalError;
}

int cmd_oracle_ck(const Context &c)
{
	const CkOracleReport r = ck_oracle(c.p);
	if (c.cfg.json) {
		emit(c, to_json(r));
	} else {
		c.out << "K0 = " << r.collapsed.k0.to_string() << ", K1 = " << r.collapsed.k1.to_string() << " (collapsed)\n";
		c.out << "K0 = " << r.raw.k0.to_string() << ", K1 = " << r.raw.k1.to_string() << " (raw matrix)\n";
	}
	return Ok;
}

int dispatch(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	Presentation p = load_presentation(cfg.input);
	auto g = std::make_shared<const ShiftGraph>(p);
	const Context c{cfg, out, err, std::move(p), std::move(g)};
	if (cfg.command == "classes")
		return cmd_classes(c);
	if (cfg.command == "kgroups")
		return cmd_kgroups(c);
	if (cfg.command == "dimension-group")
		return cmd_dimension_group(c);
	if (cfg.command == "bf")
		return cmd_bf(c);
	if (cfg.command == "check")
		return cmd_check(c);
	if (cfg.command == "ideals")
		return cmd_ideals(c);
	if (cfg.command == "repcheck")
		return cmd_repcheck(c);
	return cmd_oracle_ck(c);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	RunConfig cfg;
	CLI::App app{"Invariants of one-sided shift spaces", "shiftca"};
	app.require_subcommand(1);

	auto common = [&](CLI::App *sub) {
		sub->add_option("-i,--input", cfg.input, "shiftspace-v1 JSON file")->required()->check(CLI::ExistingFile);
		sub->add_flag("--json", cfg.json, "machine-readable report");
		return sub;
	};
	auto tower_flags = [&](CLI::App *sub) {
		sub->add_option("-l,--max-level", cfg.max_level, "highest tower level to build")
		    ->check(CLI::PositiveNumber)
		    ->capture_default_str();
		sub->add_option("--monoid-cap", cfg.monoid_cap, "relation monoid size limit")
		    ->check(CLI::PositiveNumber)
		    ->capture_default_str();
		sub->add_flag("--allow-partial", cfg.allow_partial, "exit 0 on results from an unstabilized tower");
		return sub;
	};

	tower_flags(common(app.add_subcommand("classes", "l-past equivalence classes per level")));
	tower_flags(common(app.add_subcommand("kgroups", "K0 and K1")));
	auto *dim = tower_flags(common(app.add_subcommand("dimension-group", "stationary dimension group data")));
	dim->add_option("--k-max", cfg.k_max, "deepest filtration index")->capture_default_str();
	common(app.add_subcommand("bf", "Bowen-Franks group of a matrix presentation"));
	auto *check = tower_flags(common(app.add_subcommand("check", "verdict for one condition")));
	check->add_option("--condition", cfg.condition, "I, star, aperiodic or irreducible")
	    ->required()
	    ->check(CLI::IsMember({"I", "star", "aperiodic", "irreducible"}));
	tower_flags(common(app.add_subcommand("ideals", "lattice of closed saturated class sets")));
	auto *rep = common(app.add_subcommand("repcheck", "verify the defining relations on a finite truncation"));
	rep->add_option("--depth", cfg.depth, "truncation depth N")->check(CLI::PositiveNumber)->capture_default_str();
	rep->add_option("--budget", cfg.budget, "bound on |u| + |v| (default depth / 2)");
	common(app.add_subcommand("oracle-ck", "Cuntz-Krieger groups straight from the matrix"));

	std::vector<const char *> argv{"shiftca"};
	for (const std::string &a : args)
		argv.push_back(a.c_str());
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? Ok : InputError;
	}
	cfg.command = app.get_subcommands().front()->get_name();

	try {
		return dispatch(cfg, out, err);
	} catch (const Error &e) {
		err << "shiftca: " << e.what() << '\n';
		switch (category_of(e.kind())) {
		case ErrorCategory::Input: return InputError;
		case ErrorCategory::Budget: return Partial;
		default: return InternalError;
		}
	} catch (const std::exception &e) {
		err << "shiftca: internal error: " << e.what() << '\n';
		return InternalError;
	}
}

} // namespace shiftca::cli
