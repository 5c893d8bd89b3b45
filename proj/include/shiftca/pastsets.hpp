#ifndef SHIFTCA_PASTSETS_HPP
#define SHIFTCA_PASTSETS_HPP

#include <cstddef>
#include <limits>
#include <unordered_map>
#include <vector>

#include "shiftca/bitset.hpp"
#include "shiftca/presentation.hpp"

namespace shiftca {

inline constexpr std::size_t default_monoid_cap = 1'000'000;

/// Words of length <= level that may precede a point (or a word), stored per exact length.
struct PastSet {
	std::size_t level = 0;
	std::vector<std::vector<Word>> words_by_length; ///< index k holds the sorted words of length k

	bool contains(const Word &u) const;
	std::size_t size() const;
	bool has_length(std::size_t k) const { return k < words_by_length.size() && !words_by_length[k].empty(); }

	friend bool operator==(const PastSet &, const PastSet &) = default;
};

/// Reachable part of the transition monoid {R_u | u in L(X)}, explored breadth first
/// from R_ε. Element 0 is the identity.
class RelationMonoid {
public:
	static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

	/// Throws MonoidBudgetExceeded once more than `cap` elements are discovered.
	explicit RelationMonoid(const ShiftGraph &g, std::size_t cap = default_monoid_cap);

	std::size_t size() const { return elements_.size(); }
	const Relation &element(std::size_t id) const { return elements_[id]; }
	const VertexSet &domain(std::size_t id) const { return domains_[id]; }
	/// Id of R_{u a} given id of R_u, or `none` when ua is not in the language.
	std::size_t successor(std::size_t id, Symbol a) const { return successors_[id][a]; }
	std::size_t symbol_count() const { return symbols_; }

	/// Adjacency lists of the one-step graph r -> r∘E_a.
	std::vector<std::vector<std::size_t>> adjacency() const;

private:
	std::size_t symbols_;
	std::vector<Relation> elements_;
	std::vector<VertexSet> domains_;
	std::vector<std::vector<std::size_t>> successors_;
};

Relation word_relation(const ShiftGraph &g, const Word &u);

/// {T(x) | x in X}, sorted. A domain D is realized iff some monoid element with
/// domain D lies on a cycle of domain-preserving steps.
std::vector<VertexSet> realized_tsets(const RelationMonoid &m);
std::vector<VertexSet> realized_tsets(const ShiftGraph &g, std::size_t cap = default_monoid_cap);

/// T(ax) = Pre_a(T(x)).
VertexSet pre(const ShiftGraph &g, const VertexSet &t, Symbol a);

/// Pre_u(t) = Pre_{u1}(...Pre_{un}(t)).
VertexSet pre_word(const ShiftGraph &g, const VertexSet &t, const Word &u);

/// Sorted words of exact length k with Pre_u(t) nonempty.
std::vector<Word> exact_past_words(const ShiftGraph &g, const VertexSet &t, std::size_t k);

/// Whether some word of exact length k may precede t.
bool has_exact_past(const ShiftGraph &g, const VertexSet &t, std::size_t k);

/// P_l(x) for any point with T(x) = t.
PastSet point_past_set(const ShiftGraph &g, const VertexSet &t, std::size_t l);

/// P_l(u) = {v : |v| <= l, vu in L(X)}. Throws WordNotInLanguage.
PastSet word_past_set(const ShiftGraph &g, const Word &u, std::size_t l);

} // namespace shiftca

#endif
