#include "shiftca/conditions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "shiftca/error.hpp"

namespace shiftca {

std::string to_string(Status s)
{
	switch (s) {
	case Status::Holds:
		return "holds";
	case Status::Fails:
		return "fails";
	case Status::Inconclusive:
		return "inconclusive";
	}
	return "inconclusive";
}

std::string to_string(Method m) { return m == Method::Exact ? "exact" : "bounded_search"; }

namespace {

std::size_t checked_level(const Tower &t, std::size_t base, std::optional<std::size_t> level)
{
	if (!level)
		return base;
	if (*level < base || *level > t.top_level())
		throw Error(ErrorKind::LevelMissing, "level " + std::to_string(*level) + " is not a built level at or past " +
		                                         std::to_string(base));
	return *level;
}

std::size_t finest_level(const Tower &t, std::optional<std::size_t> level)
{
	return checked_level(t, t.stabilized_at() ? *t.stabilized_at() : t.top_level(), level);
}

std::size_t require_stabilized(const Tower &t, const char *what, std::optional<std::size_t> level)
{
	if (!t.stabilized_at())
		throw Error(ErrorKind::NotStabilized, std::string(what) + " needs a stabilized tower (top level " +
		                                          std::to_string(t.top_level()) + ")");
	return checked_level(t, *t.stabilized_at(), level);
}

std::vector<std::string> vertex_list(const VertexSet &v)
{
	std::vector<std::string> out;
	v.for_each([&](std::size_t x) { out.push_back(std::to_string(x)); });
	return out;
}

// Shortest word from the identity to each monoid element, via symbol-ordered BFS.
std::vector<Word> shortest_words(const RelationMonoid &m, const std::vector<bool> *allowed = nullptr)
{
	std::vector<Word> word(m.size());
	std::vector<bool> seen(m.size(), false);
	std::deque<std::size_t> queue{0};
	seen[0] = true;
	while (!queue.empty()) {
		const std::size_t id = queue.front();
		queue.pop_front();
		for (Symbol a = 0; a < m.symbol_count(); ++a) {
			const std::size_t s = m.successor(id, a);
			if (s == RelationMonoid::none || seen[s] || (allowed && !(*allowed)[s]))
				continue;
			seen[s] = true;
			word[s] = word[id];
			word[s].push_back(a);
			queue.push_back(s);
		}
	}
	return word;
}

struct ClassRuns {
	std::vector<bool> live;      // can still reach an infinite run inside the class
	std::vector<bool> reachable; // reachable from the identity through live states
};

ClassRuns class_runs(const RelationMonoid &m, const std::set<VertexSet> &domains)
{
	const std::size_t n = m.size();
	std::vector<bool> core(n);
	for (std::size_t id = 0; id < n; ++id)
		core[id] = domains.count(m.domain(id)) > 0;
	// Greatest fixpoint: keep states with a successor that is kept.
	for (bool changed = true; changed;) {
		changed = false;
		for (std::size_t id = 0; id < n; ++id) {
			if (!core[id])
				continue;
			bool keep = false;
			for (Symbol a = 0; a < m.symbol_count() && !keep; ++a) {
				const std::size_t s = m.successor(id, a);
				keep = s != RelationMonoid::none && core[s];
			}
			if (!keep) {
				core[id] = false;
				changed = true;
			}
		}
	}
	std::vector<std::vector<std::size_t>> rev(n);
	for (std::size_t id = 0; id < n; ++id)
		for (Symbol a = 0; a < m.symbol_count(); ++a) {
			const std::size_t s = m.successor(id, a);
			if (s != RelationMonoid::none)
				rev[s].push_back(id);
		}
	ClassRuns r{core, std::vector<bool>(n, false)};
	std::vector<std::size_t> stack;
	for (std::size_t id = 0; id < n; ++id)
		if (core[id])
			stack.push_back(id);
	while (!stack.empty()) {
		const std::size_t id = stack.back();
		stack.pop_back();
		for (std::size_t p : rev[id])
			if (!r.live[p]) {
				r.live[p] = true;
				stack.push_back(p);
			}
	}
	if (r.live[0]) {
		stack.push_back(0);
		r.reachable[0] = true;
	}
	while (!stack.empty()) {
		const std::size_t id = stack.back();
		stack.pop_back();
		for (Symbol a = 0; a < m.symbol_count(); ++a) {
			const std::size_t s = m.successor(id, a);
			if (s != RelationMonoid::none && r.live[s] && !r.reachable[s]) {
				r.reachable[s] = true;
				stack.push_back(s);
			}
		}
	}
	return r;
}

// Per T-set: the stabilized classes of Pre_u(t) over all u, with the BFS depth needed.
struct Reach {
	std::vector<std::set<std::size_t>> classes;
	std::vector<std::size_t> depth;
};

Reach class_reach(const Tower &t, std::size_t l)
{
	const std::size_t T = t.tsets().size();
	const TowerLevel &lv = t.level(l);
	Reach r{std::vector<std::set<std::size_t>>(T), std::vector<std::size_t>(T, 0)};
	for (std::size_t src = 0; src < T; ++src) {
		std::vector<std::size_t> dist(T, Tower::dead);
		std::deque<std::size_t> queue{src};
		dist[src] = 0;
		std::vector<std::size_t> first_hit(lv.m(), Tower::dead);
		while (!queue.empty()) {
			const std::size_t u = queue.front();
			queue.pop_front();
			const std::size_t c = lv.class_of_tset[u];
			if (first_hit[c] == Tower::dead)
				first_hit[c] = dist[u];
			for (Symbol a = 0; a < t.graph().symbol_count(); ++a) {
				const std::size_t p = t.pre_index(u, a);
				if (p != Tower::dead && dist[p] == Tower::dead) {
					dist[p] = dist[u] + 1;
					queue.push_back(p);
				}
			}
		}
		for (std::size_t c = 0; c < lv.m(); ++c)
			if (first_hit[c] != Tower::dead) {
				r.classes[src].insert(c);
				r.depth[src] = std::max(r.depth[src], first_hit[c]);
			}
	}
	return r;
}

bool single_point_shift(const Tower &t)
{
	if (t.tsets().size() != 1)
		return false;
	const Verdict v = condition_I(t);
	return v.status == Status::Fails;
}

} // namespace

Verdict condition_I(const Tower &t, std::optional<std::size_t> level)
{
	const std::size_t l = finest_level(t, level);
	const TowerLevel &lv = t.level(l);
	const RelationMonoid &m = t.monoid();
	const Alphabet &alpha = t.graph().alphabet();
	Verdict v;
	v.condition = "I";
	v.certificate["level"] = l;
	nlohmann::json branches = nlohmann::json::array();
	for (const PastClass &c : lv.classes) {
		std::set<VertexSet> domains;
		for (std::size_t ts : c.tsets)
			domains.insert(t.tsets()[ts]);
		const ClassRuns runs = class_runs(m, domains);
		if (!runs.live[0])
			throw Error(ErrorKind::Internal, "a past class without points");
		const std::vector<Word> words = shortest_words(m, &runs.live);
		std::optional<std::pair<std::size_t, std::pair<Symbol, Symbol>>> branch;
		for (std::size_t id = 0; id < m.size() && !branch; ++id) {
			if (!runs.reachable[id])
				continue;
			std::optional<Symbol> first;
			for (Symbol a = 0; a < m.symbol_count(); ++a) {
				const std::size_t s = m.successor(id, a);
				if (s == RelationMonoid::none || !runs.live[s])
					continue;
				if (first) {
					branch = {id, {*first, a}};
					break;
				}
				first = a;
			}
		}
		if (branch) {
			branches.push_back({{"class", c.index},
			                    {"word", alpha.format(words[branch->first])},
			                    {"symbols", {alpha.name(branch->second.first), alpha.name(branch->second.second)}}});
			continue;
		}
		// Single point: follow the unique surviving successor until a state repeats.
		std::map<std::size_t, std::size_t> position;
		std::vector<Symbol> path;
		std::size_t id = 0;
		while (!position.count(id)) {
			position[id] = path.size();
			for (Symbol a = 0; a < m.symbol_count(); ++a) {
				const std::size_t s = m.successor(id, a);
				if (s != RelationMonoid::none && runs.live[s]) {
					path.push_back(a);
					id = s;
					break;
				}
			}
		}
		const std::size_t start = position[id];
		v.status = Status::Fails;
		v.method = Method::Exact;
		v.certificate = {{"level", l},
		                 {"class", c.index},
		                 {"prefix", alpha.format(Word(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(start)))},
		                 {"cycle", alpha.format(Word(path.begin() + static_cast<std::ptrdiff_t>(start), path.end()))}};
		return v;
	}
	if (t.stabilized_at()) {
		v.status = Status::Holds;
		v.method = Method::Exact;
	} else {
		v.status = Status::Inconclusive;
		v.method = Method::BoundedSearch;
		v.bound = l;
	}
	v.certificate["branches"] = std::move(branches);
	return v;
}

Verdict condition_star(const Tower &t)
{
	Verdict v;
	v.condition = "star";
	v.method = Method::Exact;
	const std::size_t last = t.universe_stabilized_at();
	const std::size_t T = t.tsets().size();
	const std::vector<Word> words = shortest_words(t.monoid());
	for (std::size_t l = 0; l <= last; ++l) {
		std::set<std::size_t> point_classes;
		for (std::size_t ts = 0; ts < T; ++ts)
			point_classes.insert(t.universe_class(l, ts));
		for (std::size_t u = 0; u < t.universe().size(); ++u) {
			if (!t.infinite_word_domain(u) || point_classes.count(t.universe_class(l, u)))
				continue;
			std::optional<Word> witness;
			for (std::size_t id = 0; id < t.monoid().size() && !witness; ++id)
				if (t.monoid().domain(id) == t.universe()[u])
					witness = words[id];
			v.status = Status::Fails;
			v.certificate = {{"level", l},
			                 {"word", t.graph().alphabet().format(witness.value_or(Word{}))},
			                 {"domain", vertex_list(t.universe()[u])}};
			return v;
		}
	}
	v.status = Status::Holds;
	v.certificate = {{"levels_checked", last + 1}};
	return v;
}

namespace {

Verdict reach_verdict(const Tower &t, const char *name, std::optional<std::size_t> level)
{
	const std::size_t l = require_stabilized(t, name, level);
	const Reach r = class_reach(t, l);
	Verdict v;
	v.condition = name;
	const std::size_t T = t.tsets().size();
	for (std::size_t src = 0; src < T; ++src)
		for (std::size_t c = 0; c < t.level(l).m(); ++c)
			if (!r.classes[src].count(c)) {
				v.status = Status::Fails;
				v.certificate = {{"level", l}, {"tset", vertex_list(t.tsets()[src])}, {"unreachable_class", c}};
				return v;
			}
	v.status = Status::Holds;
	std::size_t n = 0;
	for (std::size_t d : r.depth)
		n = std::max(n, d);
	v.certificate = {{"level", l}, {"N", n}};
	if (single_point_shift(t))
		v.certificate["note"] = "single-point shift: holds only through u = ε; no simplicity conclusion is drawn";
	return v;
}

} // namespace

Verdict aperiodic_past(const Tower &t, std::optional<std::size_t> level)
{
	Verdict v = reach_verdict(t, "aperiodic", level);
	v.method = Method::BoundedSearch;
	const std::size_t T = t.tsets().size();
	v.bound = T < 8 * sizeof(std::size_t) - 1 ? (std::size_t{1} << T) : std::numeric_limits<std::size_t>::max();
	return v;
}

Verdict irreducible_past(const Tower &t, std::optional<std::size_t> level)
{
	Verdict v = reach_verdict(t, "irreducible", level);
	v.method = Method::Exact;
	return v;
}

std::vector<std::vector<std::size_t>> shift_successor_classes(const Tower &t, std::optional<std::size_t> level)
{
	const std::size_t l = require_stabilized(t, "ideal lattice", level);
	const TowerLevel &lv = t.level(l);
	std::vector<std::set<std::size_t>> succ(lv.m());
	for (std::size_t ts = 0; ts < t.tsets().size(); ++ts)
		for (Symbol a = 0; a < t.graph().symbol_count(); ++a) {
			const std::size_t p = t.pre_index(ts, a);
			if (p != Tower::dead)
				succ[lv.class_of_tset[p]].insert(lv.class_of_tset[ts]);
		}
	std::vector<std::vector<std::size_t>> out;
	for (const auto &s : succ)
		out.emplace_back(s.begin(), s.end());
	return out;
}

namespace {

std::vector<std::size_t> closure_with(const std::vector<std::vector<std::size_t>> &succ, std::vector<bool> in)
{
	const std::size_t m = succ.size();
	for (bool changed = true; changed;) {
		changed = false;
		for (std::size_t c = 0; c < m; ++c) {
			if (in[c]) {
				for (std::size_t s : succ[c])
					if (!in[s]) {
						in[s] = true;
						changed = true;
					}
			} else if (!succ[c].empty() &&
			           std::all_of(succ[c].begin(), succ[c].end(), [&](std::size_t s) { return in[s]; })) {
				in[c] = true;
				changed = true;
			}
		}
	}
	std::vector<std::size_t> out;
	for (std::size_t c = 0; c < m; ++c)
		if (in[c])
			out.push_back(c);
	return out;
}

} // namespace

std::vector<std::size_t> ideal_closure(const Tower &t, const std::vector<std::size_t> &seed,
                                       std::optional<std::size_t> level)
{
	const auto succ = shift_successor_classes(t, level);
	std::vector<bool> in(succ.size(), false);
	for (std::size_t c : seed)
		in.at(c) = true;
	return closure_with(succ, std::move(in));
}

IdealLatticeReport ideal_lattice(const Tower &t, std::optional<std::size_t> level, std::size_t cap)
{
	const auto succ = shift_successor_classes(t, level);
	const std::size_t m = succ.size();
	IdealLatticeReport rep;
	rep.level = require_stabilized(t, "ideal lattice", level);
	std::set<std::vector<std::size_t>> found;
	std::deque<std::vector<std::size_t>> queue;
	auto add = [&](std::vector<std::size_t> s) {
		if (found.insert(s).second) {
			if (found.size() > cap)
				throw Error(ErrorKind::MonoidBudgetExceeded,
				            "ideal lattice exceeds " + std::to_string(cap) + " elements");
			queue.push_back(std::move(s));
		}
	};
	add(closure_with(succ, std::vector<bool>(m, false)));
	while (!queue.empty()) {
		const std::vector<std::size_t> cur = queue.front();
		queue.pop_front();
		std::vector<bool> in(m, false);
		for (std::size_t c : cur)
			in[c] = true;
		for (std::size_t c = 0; c < m; ++c)
			if (!in[c]) {
				std::vector<bool> more = in;
				more[c] = true;
				add(closure_with(succ, std::move(more)));
			}
	}
	rep.elements.assign(found.begin(), found.end());
	std::stable_sort(rep.elements.begin(), rep.elements.end(),
	                 [](const auto &a, const auto &b) { return a.size() < b.size(); });
	const std::size_t n = rep.elements.size();
	if (n > 2000) {
		rep.hasse_computed = false;
		return rep;
	}
	auto subset = [](const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
		return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
	};
	for (std::size_t hi = 0; hi < n; ++hi)
		for (std::size_t lo = 0; lo < n; ++lo) {
			if (!subset(rep.elements[lo], rep.elements[hi]))
				continue;
			bool covered = true;
			for (std::size_t mid = 0; mid < n && covered; ++mid)
				covered = !(subset(rep.elements[lo], rep.elements[mid]) && subset(rep.elements[mid], rep.elements[hi]));
			if (covered)
				rep.hasse.emplace_back(lo, hi);
		}
	std::sort(rep.hasse.begin(), rep.hasse.end());
	return rep;
}

} // namespace shiftca
