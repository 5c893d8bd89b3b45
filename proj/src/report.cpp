#include "shiftca/report.hpp"

#include <limits>

namespace shiftca {

using nlohmann::json;

namespace {

json big(const BigInt &x)
{
	if (x <= std::numeric_limits<long long>::max() && x >= std::numeric_limits<long long>::min())
		return x.convert_to<long long>();
	return x.str();
}

} // namespace

json to_json(const AbelianGroup &g)
{
	json torsion = json::array();
	for (const BigInt &d : g.torsion)
		torsion.push_back(big(d));
	return {{"rank", g.free_rank}, {"torsion", torsion}};
}

json to_json(const IntMatrix &m)
{
	json rows = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i) {
		json row = json::array();
		for (std::size_t j = 0; j < m.cols(); ++j)
			row.push_back(big(m(i, j)));
		rows.push_back(row);
	}
	return rows;
}

json to_json(const KGroupsReport &r)
{
	return {{"k0", to_json(r.k0)}, {"k1", to_json(r.k1)}, {"exact", r.exact}, {"level", r.level}};
}

json to_json(const Verdict &v)
{
	json out = {{"condition", v.condition},
	            {"status", to_string(v.status)},
	            {"method", to_string(v.method)},
	            {"certificate", v.certificate}};
	if (v.bound)
		out["bound"] = *v.bound;
	return out;
}

json to_json(const IdealLatticeReport &r)
{
	json hasse = json::array();
	for (const auto &[lo, hi] : r.hasse)
		hasse.push_back({lo, hi});
	return {{"level", r.level}, {"elements", r.elements}, {"hasse", hasse}, {"hasse_computed", r.hasse_computed}};
}

json to_json(const BowenFranks &b) { return {{"group", to_json(b.group)}, {"matrix", to_json(b.from_matrix)}}; }

json to_json(const CkOracleReport &r)
{
	return {{"collapsed", to_json(r.collapsed)},
	        {"raw", to_json(r.raw)},
	        {"collapsed_matrix", to_json(r.collapsed_matrix)},
	        {"column_classes", r.column_classes}};
}

json to_json(const RelationReport &r, const Alphabet &alphabet)
{
	json checks = json::array();
	for (const RelationCheck &c : r.checks) {
		json entry = {{"relation", c.relation},
		              {"u", alphabet.format(c.u)},
		              {"v", alphabet.format(c.v)},
		              {"interior", c.interior},
		              {"passed", c.passed}};
		entry["witness"] = c.witness ? json(alphabet.format(*c.witness)) : json(nullptr);
		checks.push_back(entry);
	}
	return {{"depth", r.depth},
	        {"basis_size", r.basis_size},
	        {"pairs", r.distinct_pairs()},
	        {"passed", r.passed()},
	        {"failed", r.failed()},
	        {"checks", checks}};
}

json dimension_group_json(const Tower &t, std::size_t k_max)
{
	json systems = json::array();
	std::size_t level = 0;
	for (const StationarySystem &s : dimension_group(t, k_max)) {
		level = s.level;
		systems.push_back({{"k", s.k},
		                   {"classes", s.classes},
		                   {"next_classes", s.next_classes},
		                   {"map", to_json(s.map)},
		                   {"delta", to_json(s.delta)}});
	}
	return {{"level", level}, {"stable_transition", to_json(stable_transition(t))}, {"systems", systems}};
}

CappedPastSet capped_past_set(const ShiftGraph &g, const VertexSet &t, std::size_t l, std::size_t cap)
{
	// reach[m]: vertices that start a path of length m into t. A prefix p of a length-k
	// candidate survives iff some p-path ends in reach[k - |p|].
	std::vector<VertexSet> reach{t};
	for (std::size_t m = 1; m <= l; ++m) {
		VertexSet next(g.vertex_count());
		for (Symbol a = 0; a < g.symbol_count(); ++a)
			next |= g.pre(reach.back(), a);
		reach.push_back(std::move(next));
	}
	CappedPastSet out;
	Word prefix;
	for (std::size_t k = 0; k <= l && !out.truncated; ++k) {
		auto rec = [&](auto &&self, const VertexSet &ends) -> void {
			if (out.truncated)
				return;
			if (prefix.size() == k) {
				if (out.words.size() == cap)
					out.truncated = true;
				else
					out.words.push_back(prefix);
				return;
			}
			for (Symbol a = 0; a < g.symbol_count(); ++a) {
				VertexSet next = g.step(a).image(ends);
				if (!next.intersects(reach[k - prefix.size() - 1]))
					continue;
				prefix.push_back(a);
				self(self, next);
				prefix.pop_back();
			}
		};
		if (g.all_vertices().intersects(reach[k]))
			rec(rec, g.all_vertices());
	}
	return out;
}

json tower_dump(const Tower &t, std::size_t words_per_class)
{
	const Alphabet &alpha = t.graph().alphabet();
	json levels = json::array();
	for (const TowerLevel &lv : t.levels()) {
		const std::size_t l = lv.level;
		json classes = json::array();
		for (const PastClass &c : lv.classes) {
			const CappedPastSet past = capped_past_set(t.graph(), t.tsets()[c.tsets.front()], l, words_per_class);
			json words = json::array();
			for (const Word &w : past.words)
				words.push_back(alpha.format(w));
			classes.push_back({{"index", c.index},
			                   {"tsets", c.tsets},
			                   {"past_set", {{"words", words}, {"truncated", past.truncated}}}});
		}
		json m_sets = json::array();
		for (std::size_t k = 0; k <= l; ++k)
			m_sets.push_back(t.filtration_M(k, l));
		json entry = {{"level", l}, {"m", lv.m()}, {"classes", classes}, {"M", m_sets}};
		if (l < t.top_level()) {
			entry["I"] = to_json(t.matrix_I(l));
			entry["sum_A"] = to_json(t.matrix_A(l).summed);
			entry["B"] = to_json(t.matrix_B(l));
		}
		levels.push_back(entry);
	}
	json tsets = json::array();
	for (const VertexSet &s : t.tsets())
		tsets.push_back(s.elements());
	return {{"format", "shiftca-tower-v1"},
	        {"alphabet", alpha.symbols()},
	        {"tsets", tsets},
	        {"stabilized_at", t.stabilized_at() ? json(*t.stabilized_at()) : json(nullptr)},
	        {"top_level", t.top_level()},
	        {"levels", levels}};
}

} // namespace shiftca
