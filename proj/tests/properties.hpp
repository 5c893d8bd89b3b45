// Randomized and exhaustive property checks shared by the unit tests and the acceptance runner.
// Each check returns an empty string on success, otherwise a description of the first failure.
#ifndef SHIFTCA_TESTS_PROPERTIES_HPP
#define SHIFTCA_TESTS_PROPERTIES_HPP

#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "shiftca/error.hpp"
#include "shiftca/intlinalg.hpp"
#include "shiftca/pastsets.hpp"
#include "shiftca/tower.hpp"
#include "support.hpp"

namespace shiftca::test {

inline VertexSet to_vertex_set(std::size_t n, const VSet &s)
{
	VertexSet v(n);
	for (std::size_t x : s)
		v.insert(x);
	return v;
}

struct SamplePoint {
	Word prefix;
	Word cycle;
	VSet tset;
};

/// Ultimately periodic points p c^ω with the given bounds, with their T-sets by direct path search.
inline std::vector<SamplePoint> sample_points(const LabeledGraph &g, std::size_t symbols, std::size_t max_prefix,
                                              std::size_t max_cycle)
{
	std::vector<SamplePoint> out;
	for (std::size_t cl = 1; cl <= max_cycle; ++cl)
		all_words(symbols, cl, [&](const Word &c) {
			const VSet base = brute_tset(g, {}, c);
			if (base.empty())
				return;
			for (std::size_t pl = 0; pl <= max_prefix; ++pl)
				all_words(symbols, pl, [&](const Word &p) {
					VSet t = brute_pre_word(g, base, p);
					if (!t.empty())
						out.push_back({p, c, std::move(t)});
				});
		});
	return out;
}

/// Literal P_l(x) for x = p c^ω: u is kept when u p c^ω is readable somewhere.
inline std::vector<Word> literal_past(const LabeledGraph &g, std::size_t symbols, const SamplePoint &x, std::size_t l)
{
	std::vector<Word> out;
	for (std::size_t k = 0; k <= l; ++k)
		all_words(symbols, k, [&](const Word &u) {
			Word up = u;
			up.insert(up.end(), x.prefix.begin(), x.prefix.end());
			if (!brute_tset(g, up, x.cycle).empty())
				out.push_back(u);
		});
	return out;
}

/// Point past sets, realized T-sets and tower partitions against literal definitions on one graph.
inline std::string check_pasts_against_brute_force(const ShiftGraph &sg, std::size_t max_l)
{
	const LabeledGraph &g = sg.graph();
	const std::size_t symbols = sg.symbol_count();
	const std::size_t n = g.vertex_count;
	std::ostringstream err;

	const auto points = sample_points(g, symbols, 2, 3);
	const auto realized = realized_tsets(sg);
	std::set<VertexSet> realized_set(realized.begin(), realized.end());
	std::set<VertexSet> seen;
	for (const auto &x : points) {
		const VertexSet t = to_vertex_set(n, x.tset);
		seen.insert(t);
		if (!realized_set.count(t)) {
			err << "T-set of a sampled point is not realized";
			return err.str();
		}
	}
	if (seen != realized_set) {
		// Larger sample before giving up: every realized T-set has an ultimately periodic witness.
		for (const VSet &t : brute_tsets(g, symbols, 4, 5))
			seen.insert(to_vertex_set(n, t));
		if (seen != realized_set)
			return "realized T-sets differ from sampled points";
	}

	const Tower tower = Tower::build(sg, {std::max<std::size_t>(max_l, 1), default_monoid_cap});
	std::map<VertexSet, std::size_t> tset_index;
	for (std::size_t i = 0; i < tower.tsets().size(); ++i)
		tset_index[tower.tsets()[i]] = i;

	for (std::size_t l = 0; l <= max_l; ++l) {
		std::vector<std::vector<Word>> literal;
		for (const auto &x : points) {
			literal.push_back(literal_past(g, symbols, x, l));
			const PastSet p = point_past_set(sg, to_vertex_set(n, x.tset), l);
			std::vector<Word> flat;
			for (const auto &bucket : p.words_by_length)
				flat.insert(flat.end(), bucket.begin(), bucket.end());
			if (flat != literal.back())
				return "point_past_set differs from the literal past at level " + std::to_string(l);
		}
		if (l > tower.top_level())
			continue;
		const TowerLevel &lv = tower.level(l);
		for (std::size_t i = 0; i < points.size(); ++i)
			for (std::size_t j = i + 1; j < points.size(); ++j) {
				const bool same_class = lv.class_of_tset[tset_index.at(to_vertex_set(n, points[i].tset))] ==
				                        lv.class_of_tset[tset_index.at(to_vertex_set(n, points[j].tset))];
				if (same_class != (literal[i] == literal[j]))
					return "tower class disagrees with literal past equality at level " + std::to_string(l);
			}
	}
	return {};
}

/// Graphs for the brute-force sweep: all graphs on one vertex with up to 3 symbols and on two
/// vertices with up to 2 symbols, then `random_count` random graphs with up to 4 vertices and 3 symbols.
inline std::vector<ShiftGraph> sweep_graphs(std::size_t random_count, std::uint64_t seed)
{
	std::vector<ShiftGraph> out;
	auto add = [&](const LabeledGraph &raw, std::size_t symbols) {
		try {
			out.emplace_back(Alphabet(digits(symbols)), essentialize(raw));
		} catch (const Error &) {
		}
	};
	for (std::size_t symbols = 1; symbols <= 3; ++symbols)
		for (std::size_t mask = 0; mask < (1u << symbols); ++mask) {
			LabeledGraph g;
			g.vertex_count = 1;
			for (Symbol a = 0; a < symbols; ++a)
				if (mask >> a & 1)
					g.edges.push_back({0, 0, a});
			add(g, symbols);
		}
	for (std::size_t symbols = 1; symbols <= 2; ++symbols) {
		const std::size_t slots = 4 * symbols;
		for (std::size_t mask = 0; mask < (1u << slots); ++mask) {
			LabeledGraph g;
			g.vertex_count = 2;
			for (std::size_t s = 0; s < slots; ++s)
				if (mask >> s & 1)
					g.edges.push_back({s / (2 * symbols), s / symbols % 2, static_cast<Symbol>(s % symbols)});
			add(g, symbols);
		}
	}
	std::mt19937_64 rng(seed);
	while (random_count > 0) {
		const std::size_t v = 2 + rng() % 3;
		const std::size_t s = 1 + rng() % 3;
		const std::size_t before = out.size();
		add(random_graph(rng, v, s, 0.15 + 0.1 * static_cast<double>(rng() % 3)), s);
		if (out.size() > before)
			--random_count;
	}
	return out;
}

/// Refinement uniqueness: every row of every I_l has exactly one 1.
inline std::string check_refinement(const Tower &t)
{
	for (std::size_t l = 0; l < t.top_level(); ++l) {
		const IntMatrix &I = t.matrix_I(l);
		for (std::size_t i = 0; i < I.rows(); ++i) {
			int ones = 0;
			for (std::size_t j = 0; j < I.cols(); ++j) {
				if (I(i, j) != 0 && I(i, j) != 1)
					return "I entry outside {0,1}";
				ones += I(i, j) == 1;
			}
			if (ones != 1)
				return "level-" + std::to_string(l + 1) + " class " + std::to_string(i) + " sits in " +
				       std::to_string(ones) + " level-" + std::to_string(l) + " classes";
		}
	}
	return {};
}

/// The commuting diagrams of the tower maps at every built level.
inline std::string check_diagrams(const Tower &t)
{
	for (std::size_t l = 0; l + 1 < t.top_level(); ++l) {
		for (std::size_t k = 0; k <= l; ++k) {
			if (t.map_A(k, l + 1) * t.map_I(k, l) != t.map_I(k + 1, l + 1) * t.map_A(k, l))
				return "A/I square fails at k=" + std::to_string(k) + " l=" + std::to_string(l);
			if (t.map_I(k + 1, l) * t.map_delta(k, l) != t.map_delta(k, l + 1) * t.map_I(k, l))
				return "delta/I square fails at k=" + std::to_string(k) + " l=" + std::to_string(l);
		}
		// I_1^l needs k = 1 <= l; at l = 0 the square is only checked when every class has a predecessor.
		if (l == 0 && t.filtration_M(1, 1).size() != t.level(1).m())
			continue;
		if (t.map_I(0, l + 1) * t.matrix_B(l) != t.matrix_B(l + 1) * t.map_I(1, l))
			return "B square fails at l=" + std::to_string(l);
	}
	return {};
}

inline IntMatrix random_unimodular(std::mt19937_64 &rng, std::size_t n)
{
	IntMatrix u = IntMatrix::identity(n);
	if (n < 2)
		return u;
	std::uniform_int_distribution<int> coef(-2, 2);
	for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
		const std::size_t a = rng() % n, b = rng() % n;
		if (a == b)
			continue;
		const int q = coef(rng);
		for (std::size_t j = 0; j < n; ++j)
			u(a, j) += q * u(b, j);
	}
	return u;
}

inline IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, int lo, int hi)
{
	std::uniform_int_distribution<int> d(lo, hi);
	IntMatrix m(r, c);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < c; ++j)
			m(i, j) = d(rng);
	return m;
}

/// Recomposition, unimodularity, divisibility and kernel torsion-freeness on random matrices.
inline std::string check_smith(std::mt19937_64 &rng, int trials)
{
	for (int trial = 0; trial < trials; ++trial) {
		const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
		const IntMatrix m = random_matrix(rng, r, c, -4, 4);
		const SmithDecomposition s = smith(m);
		if (s.U * m * s.V != s.D)
			return "U M V != D for " + m.to_string();
		if (!is_unimodular(s.U) || !is_unimodular(s.V))
			return "non-unimodular transform for " + m.to_string();
		for (std::size_t i = 0; i < s.D.rows(); ++i)
			for (std::size_t j = 0; j < s.D.cols(); ++j)
				if (i != j && s.D(i, j) != 0)
					return "D not diagonal for " + m.to_string();
		const auto d = s.diagonal();
		for (std::size_t i = 0; i + 1 < d.size(); ++i) {
			if (d[i] < 0 || (d[i] == 0 && d[i + 1] != 0) || (d[i] != 0 && d[i + 1] % d[i] != 0))
				return "divisibility chain broken for " + m.to_string();
		}
		const AbelianGroup k = kernel(m);
		if (!k.torsion.empty() || k.free_rank + rank(m) != c)
			return "kernel not free of rank cols - rank for " + m.to_string();
	}
	return {};
}

} // namespace shiftca::test

#endif
