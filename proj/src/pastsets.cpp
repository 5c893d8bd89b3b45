#include "shiftca/pastsets.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "shiftca/error.hpp"
#include "shiftca/scc.hpp"

namespace shiftca {

bool PastSet::contains(const Word &u) const
{
	if (u.size() >= words_by_length.size())
		return false;
	const auto &bucket = words_by_length[u.size()];
	return std::binary_search(bucket.begin(), bucket.end(), u);
}

std::size_t PastSet::size() const
{
	std::size_t n = 0;
	for (const auto &bucket : words_by_length)
		n += bucket.size();
	return n;
}

RelationMonoid::RelationMonoid(const ShiftGraph &g, std::size_t cap) : symbols_(g.symbol_count())
{
	std::unordered_map<Relation, std::size_t, RelationHash> ids;
	auto intern = [&](Relation r) -> std::size_t {
		auto [it, fresh] = ids.try_emplace(r, elements_.size());
		if (fresh) {
			if (elements_.size() >= cap)
				throw Error(ErrorKind::MonoidBudgetExceeded,
				            "relation monoid exceeds " + std::to_string(cap) + " elements");
			domains_.push_back(r.domain());
			elements_.push_back(std::move(r));
			successors_.emplace_back(symbols_, none);
		}
		return it->second;
	};

	intern(Relation::identity(g.vertex_count()));
	for (std::size_t id = 0; id < elements_.size(); ++id) {
		for (Symbol a = 0; a < symbols_; ++a) {
			Relation next = elements_[id].then(g.step(a));
			if (next.empty())
				continue;
			const std::size_t nid = intern(std::move(next));
			successors_[id][a] = nid;
		}
	}
}

std::vector<std::vector<std::size_t>> RelationMonoid::adjacency() const
{
	std::vector<std::vector<std::size_t>> adj(size());
	for (std::size_t id = 0; id < size(); ++id)
		for (std::size_t s : successors_[id])
			if (s != none)
				adj[id].push_back(s);
	return adj;
}

Relation word_relation(const ShiftGraph &g, const Word &u) { return g.word_relation(u); }

std::vector<VertexSet> realized_tsets(const RelationMonoid &m)
{
	std::vector<std::vector<std::size_t>> adj(m.size());
	for (std::size_t id = 0; id < m.size(); ++id)
		for (Symbol a = 0; a < m.symbol_count(); ++a) {
			const std::size_t s = m.successor(id, a);
			if (s != RelationMonoid::none && m.domain(s) == m.domain(id))
				adj[id].push_back(s);
		}
	const auto cyc = nodes_on_cycles(adj);
	std::set<VertexSet> found;
	for (std::size_t id = 0; id < m.size(); ++id)
		if (cyc[id])
			found.insert(m.domain(id));
	return {found.begin(), found.end()};
}

std::vector<VertexSet> realized_tsets(const ShiftGraph &g, std::size_t cap)
{
	return realized_tsets(RelationMonoid(g, cap));
}

VertexSet pre(const ShiftGraph &g, const VertexSet &t, Symbol a) { return g.pre(t, a); }

VertexSet pre_word(const ShiftGraph &g, const VertexSet &t, const Word &u)
{
	VertexSet cur = t;
	for (auto it = u.rbegin(); it != u.rend() && !cur.empty(); ++it)
		cur = g.pre(cur, *it);
	return cur;
}

std::vector<Word> exact_past_words(const ShiftGraph &g, const VertexSet &t, std::size_t k)
{
	std::vector<Word> out;
	Word suffix_rev; // built back to front
	auto rec = [&](auto &&self, const VertexSet &cur) -> void {
		if (suffix_rev.size() == k) {
			out.emplace_back(suffix_rev.rbegin(), suffix_rev.rend());
			return;
		}
		for (Symbol a = 0; a < g.symbol_count(); ++a) {
			VertexSet next = g.pre(cur, a);
			if (next.empty())
				continue;
			suffix_rev.push_back(a);
			self(self, next);
			suffix_rev.pop_back();
		}
	};
	if (!t.empty())
		rec(rec, t);
	std::sort(out.begin(), out.end());
	return out;
}

bool has_exact_past(const ShiftGraph &g, const VertexSet &t, std::size_t k)
{
	// Layered reachability over vertex sets; cheap even when the word count is not.
	std::set<VertexSet> layer;
	if (!t.empty())
		layer.insert(t);
	for (std::size_t step = 0; step < k && !layer.empty(); ++step) {
		std::set<VertexSet> next;
		for (const VertexSet &s : layer)
			for (Symbol a = 0; a < g.symbol_count(); ++a) {
				VertexSet p = g.pre(s, a);
				if (!p.empty())
					next.insert(std::move(p));
			}
		layer = std::move(next);
	}
	return !layer.empty();
}

PastSet point_past_set(const ShiftGraph &g, const VertexSet &t, std::size_t l)
{
	PastSet p;
	p.level = l;
	p.words_by_length.resize(l + 1);
	p.words_by_length[0].push_back({});
	for (std::size_t k = 1; k <= l; ++k)
		p.words_by_length[k] = exact_past_words(g, t, k);
	return p;
}

PastSet word_past_set(const ShiftGraph &g, const Word &u, std::size_t l)
{
	const VertexSet dom = g.word_relation(u).domain();
	if (dom.empty())
		throw Error(ErrorKind::WordNotInLanguage, "'" + g.alphabet().format(u) + "' is not in the language");
	return point_past_set(g, dom, l);
}

} // namespace shiftca
