#include "shiftca/tower.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "shiftca/error.hpp"
#include "shiftca/scc.hpp"

namespace shiftca {

namespace {

using Partition = std::vector<std::size_t>;

// One refinement step over the universe. Returns the new partition.
Partition refine(const Partition &cur, const std::vector<std::vector<std::size_t>> &pre, std::size_t symbols)
{
	std::map<std::vector<std::size_t>, std::size_t> ids;
	Partition next(cur.size());
	std::vector<std::size_t> key(symbols + 1);
	for (std::size_t u = 0; u < cur.size(); ++u) {
		key[0] = cur[u];
		for (std::size_t a = 0; a < symbols; ++a)
			key[a + 1] = pre[u][a] == Tower::dead ? Tower::dead : cur[pre[u][a]];
		auto [it, fresh] = ids.try_emplace(key, ids.size());
		next[u] = it->second;
	}
	return next;
}

std::size_t count_classes(const Partition &p, std::size_t prefix)
{
	std::vector<std::size_t> seen(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(prefix));
	std::sort(seen.begin(), seen.end());
	return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

} // namespace

Tower Tower::build(const ShiftGraph &g, const TowerOptions &opts)
{
	return build(std::make_shared<const ShiftGraph>(g), opts);
}

Tower Tower::build(std::shared_ptr<const ShiftGraph> g, const TowerOptions &opts)
{
	Tower tw;
	tw.graph_ = std::move(g);
	tw.opts_ = opts;
	const ShiftGraph &graph = *tw.graph_;
	tw.monoid_ = std::make_shared<const RelationMonoid>(graph, opts.monoid_cap);
	const RelationMonoid &mon = *tw.monoid_;
	const std::size_t symbols = graph.symbol_count();

	tw.tsets_ = realized_tsets(mon);
	const std::size_t T = tw.tsets_.size();
	if (T == 0)
		throw Error(ErrorKind::EmptyShift, "the shift has no points");

	// Universe: T-sets, then the remaining word domains in sorted order.
	std::vector<VertexSet> others;
	{
		std::set<VertexSet> tset_lookup(tw.tsets_.begin(), tw.tsets_.end());
		std::set<VertexSet> rest;
		for (std::size_t id = 0; id < mon.size(); ++id)
			if (!tset_lookup.count(mon.domain(id)))
				rest.insert(mon.domain(id));
		others.assign(rest.begin(), rest.end());
	}
	tw.universe_ = tw.tsets_;
	tw.universe_.insert(tw.universe_.end(), others.begin(), others.end());
	std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_of;
	for (std::size_t u = 0; u < tw.universe_.size(); ++u)
		index_of.emplace(tw.universe_[u], u);

	// Domains of words that occur arbitrarily far into some point's past.
	{
		const auto adj = mon.adjacency();
		const auto cyc = nodes_on_cycles(adj);
		std::vector<bool> after_cycle(mon.size(), false);
		std::vector<std::size_t> stack;
		for (std::size_t id = 0; id < mon.size(); ++id)
			if (cyc[id]) {
				after_cycle[id] = true;
				stack.push_back(id);
			}
		while (!stack.empty()) {
			const std::size_t id = stack.back();
			stack.pop_back();
			for (std::size_t s : adj[id])
				if (!after_cycle[s]) {
					after_cycle[s] = true;
					stack.push_back(s);
				}
		}
		tw.infinite_word_domain_.assign(tw.universe_.size(), false);
		for (std::size_t id = 0; id < mon.size(); ++id)
			if (after_cycle[id])
				tw.infinite_word_domain_[index_of.at(mon.domain(id))] = true;
	}

	tw.pre_.assign(tw.universe_.size(), std::vector<std::size_t>(symbols, dead));
	for (std::size_t u = 0; u < tw.universe_.size(); ++u)
		for (Symbol a = 0; a < symbols; ++a) {
			VertexSet p = graph.pre(tw.universe_[u], a);
			if (p.empty())
				continue;
			auto it = index_of.find(p);
			if (it == index_of.end())
				throw Error(ErrorKind::Internal, "vertex-set universe is not closed under Pre");
			if (u < T && it->second >= T)
				throw Error(ErrorKind::Internal, "Pre of a T-set is not a T-set");
			tw.pre_[u][a] = it->second;
		}

	// Refine the universe to stability, then point levels up to l0 + 2 within max_level.
	tw.universe_partitions_.push_back(Partition(tw.universe_.size(), 0));
	while (true) {
		Partition next = refine(tw.universe_partitions_.back(), tw.pre_, symbols);
		const bool stable = count_classes(next, next.size()) ==
		                    count_classes(tw.universe_partitions_.back(), next.size());
		if (stable)
			break;
		tw.universe_partitions_.push_back(std::move(next));
	}

	std::optional<std::size_t> l0;
	for (std::size_t l = 0; l < tw.universe_partitions_.size(); ++l)
		if (count_classes(tw.universe_partitions_[l], T) ==
		    count_classes(tw.universe_partitions_[std::min(l + 1, tw.universe_partitions_.size() - 1)], T)) {
			l0 = l;
			break;
		}
	if (!l0)
		throw Error(ErrorKind::Internal, "point partition failed to stabilize");
	const std::size_t top = std::min(opts.max_level, *l0 + 2);
	// Stabilization is only claimed once level l0 + 1 is actually built.
	if (*l0 + 1 <= opts.max_level)
		tw.stabilized_at_ = *l0;

	// Reverse-reachability layers over T-sets, for exact-length predecessor words.
	const std::size_t horizon = top + 2;
	std::vector<std::vector<bool>> exact(T, std::vector<bool>(horizon + 1, false));
	for (std::size_t t = 0; t < T; ++t) {
		std::vector<std::size_t> layer{t};
		for (std::size_t k = 0; k <= horizon && !layer.empty(); ++k) {
			exact[t][k] = true;
			std::vector<bool> mark(T, false);
			std::vector<std::size_t> next;
			for (std::size_t s : layer)
				for (Symbol a = 0; a < symbols; ++a) {
					const std::size_t p = tw.pre_[s][a];
					if (p != dead && !mark[p]) {
						mark[p] = true;
						next.push_back(p);
					}
				}
			layer = std::move(next);
		}
	}
	tw.exact_past_ = exact;

	std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> words_memo;
	auto words = [&](std::size_t t, std::size_t k) -> const std::vector<Word> & {
		auto it = words_memo.find({t, k});
		if (it == words_memo.end())
			it = words_memo.emplace(std::make_pair(t, k), exact_past_words(graph, tw.tsets_[t], k)).first;
		return it->second;
	};
	// Length-major, then lexicographic order of the past sets P_l.
	auto past_less = [&](std::size_t l, std::size_t a, std::size_t b) {
		std::size_t k = 1;
		while (k <= l && tw.universe_class(k, a) == tw.universe_class(k, b))
			++k;
		if (k > l)
			return false;
		const auto &wa = words(a, k);
		const auto &wb = words(b, k);
		const auto mis = std::mismatch(wa.begin(), wa.end(), wb.begin(), wb.end());
		if (mis.first != wa.end() && mis.second != wb.end())
			return *mis.first < *mis.second;
		// One bucket is a proper prefix of the other. The shorter past wins only if it ends here.
		const bool a_shorter = mis.first == wa.end();
		const std::size_t shorter = a_shorter ? a : b;
		const bool shorter_continues = k < l && exact[shorter][k + 1];
		return a_shorter != shorter_continues;
	};

	for (std::size_t l = 0; l <= top; ++l) {
		TowerLevel lv;
		lv.level = l;
		std::map<std::size_t, std::vector<std::size_t>> groups;
		for (std::size_t t = 0; t < T; ++t)
			groups[tw.universe_class(l, t)].push_back(t);
		std::vector<std::vector<std::size_t>> members;
		for (auto &[id, ts] : groups)
			members.push_back(std::move(ts));
		std::sort(members.begin(), members.end(),
		          [&](const auto &x, const auto &y) { return past_less(l, x.front(), y.front()); });
		lv.class_of_tset.assign(T, 0);
		for (std::size_t i = 0; i < members.size(); ++i) {
			PastClass c;
			c.index = i;
			c.tsets = members[i];
			for (std::size_t k = 0; k <= l; ++k)
				c.has_exact_past.push_back(exact[c.tsets.front()][k]);
			for (std::size_t t : c.tsets)
				lv.class_of_tset[t] = i;
			lv.classes.push_back(std::move(c));
		}
		std::map<std::size_t, std::size_t> star;
		for (std::size_t u = 0; u < tw.universe_.size(); ++u)
			if (tw.infinite_word_domain_[u])
				star.try_emplace(tw.universe_class(l, u), u);
		for (const auto &[id, u] : star)
			lv.word_classes_star.push_back(u);
		std::sort(lv.word_classes_star.begin(), lv.word_classes_star.end());
		tw.levels_.push_back(std::move(lv));
	}

	for (std::size_t l = 0; l < top; ++l) {
		const TowerLevel &lo = tw.levels_[l];
		const TowerLevel &hi = tw.levels_[l + 1];
		IntMatrix I(hi.m(), lo.m());
		for (const PastClass &c : hi.classes)
			I(c.index, lo.class_of_tset[c.tsets.front()]) = 1;
		TransitionMatrices A;
		A.summed = IntMatrix(hi.m(), lo.m());
		for (Symbol a = 0; a < symbols; ++a) {
			IntMatrix Aa(hi.m(), lo.m());
			for (const PastClass &c : hi.classes) {
				std::optional<std::size_t> target;
				for (std::size_t t : c.tsets) {
					const std::size_t p = tw.pre_[t][a];
					if (p == dead)
						continue;
					const std::size_t j = lo.class_of_tset[p];
					if (target && *target != j)
						throw Error(ErrorKind::IllDefinedTransition,
						            "symbol '" + graph.alphabet().name(a) + "' sends level-" +
						                std::to_string(l + 1) + " class " + std::to_string(c.index) +
						                " into several level-" + std::to_string(l) + " classes");
					target = j;
				}
				if (target) {
					Aa(c.index, *target) = 1;
					A.summed(c.index, *target) += 1;
				}
			}
			A.by_symbol.push_back(std::move(Aa));
		}
		tw.I_.push_back(std::move(I));
		tw.A_.push_back(std::move(A));
	}
	return tw;
}

const TowerLevel &Tower::level(std::size_t l) const
{
	if (l >= levels_.size())
		throw Error(ErrorKind::LevelMissing, "level " + std::to_string(l) + " was not built (top level " +
		                                         std::to_string(top_level()) + ")");
	return levels_[l];
}

void Tower::check_pair(std::size_t l) const
{
	if (l + 1 >= levels_.size())
		throw Error(ErrorKind::LevelMissing, "maps out of level " + std::to_string(l) + " need level " +
		                                         std::to_string(l + 1) + " (top level " +
		                                         std::to_string(top_level()) + ")");
}

const IntMatrix &Tower::matrix_I(std::size_t l) const
{
	check_pair(l);
	return I_[l];
}

const TransitionMatrices &Tower::matrix_A(std::size_t l) const
{
	check_pair(l);
	return A_[l];
}

std::vector<std::size_t> Tower::filtration_M(std::size_t k, std::size_t l) const
{
	const TowerLevel &lv = level(l);
	std::vector<std::size_t> out;
	for (const PastClass &c : lv.classes) {
		bool any = false;
		for (std::size_t t : c.tsets)
			any = any || tset_has_exact_past(t, k);
		if (any)
			out.push_back(c.index);
	}
	return out;
}

bool Tower::tset_has_exact_past(std::size_t t, std::size_t k) const
{
	if (k < exact_past_[t].size())
		return exact_past_[t][k];
	return has_exact_past(*graph_, tsets_[t], k);
}

IntMatrix Tower::matrix_B(std::size_t l) const
{
	check_pair(l);
	std::vector<std::size_t> rows(levels_[l + 1].m());
	std::iota(rows.begin(), rows.end(), std::size_t{0});
	return (I_[l] - A_[l].summed).select(rows, filtration_M(1, l));
}

IntMatrix Tower::map_I(std::size_t k, std::size_t l) const
{
	check_pair(l);
	return I_[l].select(filtration_M(k, l + 1), filtration_M(k, l));
}

IntMatrix Tower::map_A(std::size_t k, std::size_t l) const
{
	check_pair(l);
	return A_[l].summed.select(filtration_M(k + 1, l + 1), filtration_M(k, l));
}

IntMatrix Tower::map_delta(std::size_t k, std::size_t l) const
{
	const auto rows = filtration_M(k + 1, l);
	const auto cols = filtration_M(k, l);
	IntMatrix d(rows.size(), cols.size());
	for (std::size_t i = 0; i < rows.size(); ++i)
		for (std::size_t j = 0; j < cols.size(); ++j)
			if (rows[i] == cols[j])
				d(i, j) = 1;
	return d;
}

PastSet Tower::past_set(std::size_t l, std::size_t class_index) const
{
	const TowerLevel &lv = level(l);
	if (class_index >= lv.m())
		throw Error(ErrorKind::LevelMissing, "no class " + std::to_string(class_index) + " at level " +
		                                         std::to_string(l));
	return point_past_set(*graph_, tsets_[lv.classes[class_index].tsets.front()], l);
}

std::size_t Tower::universe_class(std::size_t l, std::size_t u) const
{
	return universe_partitions_[std::min(l, universe_partitions_.size() - 1)][u];
}

} // namespace shiftca
