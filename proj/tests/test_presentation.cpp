#include "doctest.h"

#include <random>
#include <set>

#include "shiftca/error.hpp"
#include "shiftca/presentation.hpp"
#include "support.hpp"

using namespace shiftca;
using namespace shiftca::test;

namespace {

std::set<std::tuple<std::size_t, std::size_t, Symbol>> edge_set(const LabeledGraph &g)
{
	std::set<std::tuple<std::size_t, std::size_t, Symbol>> s;
	for (const Edge &e : g.edges)
		s.insert({e.from, e.to, e.label});
	return s;
}

// Brute-force language of a matrix SFT: all words with allowed consecutive pairs.
std::vector<Word> matrix_language(const std::vector<std::vector<long long>> &m, std::size_t k)
{
	std::vector<Word> out;
	Word w(k, 0);
	const std::size_t n = m.size();
	std::function<void(std::size_t)> rec = [&](std::size_t pos) {
		if (pos == k) {
			out.push_back(w);
			return;
		}
		for (Symbol a = 0; a < n; ++a) {
			if (pos > 0 && m[w[pos - 1]][a] == 0)
				continue;
			w[pos] = a;
			rec(pos + 1);
		}
	};
	rec(0);
	return out;
}

} // namespace

TEST_CASE("validation accepts the golden mean matrix")
{
	const Presentation p = sft_presentation({{1, 1}, {1, 0}});
	CHECK(p.is_sft_matrix());
	CHECK(p.kind_name() == "sft");
	CHECK(p.alphabet().size() == 2);
}

TEST_CASE("validation errors")
{
	CHECK(thrown_kind([] { sft_presentation({{1, 1}, {0, 0}}); }) == ErrorKind::ZeroRow);
	CHECK(thrown_kind([] { sft_presentation({{1, 2}, {1, 0}}); }) == ErrorKind::NonBinaryEntry);
	CHECK(thrown_kind([] { sft_presentation({{1, 1}}); }) == ErrorKind::NotSquare);
	CHECK(thrown_kind([] { graph_presentation(1, {"0"}, {}); }) == ErrorKind::EmptyShift);
	CHECK(thrown_kind([] { graph_presentation(1, {"0"}, {{0, 1, "0"}}); }) == ErrorKind::DanglingEdge);
	CHECK(thrown_kind([] { graph_presentation(1, {"0"}, {{0, 0, "x"}}); }) == ErrorKind::UnknownSymbol);
	CHECK(thrown_kind([] { graph_presentation(1, {}, {}); }) == ErrorKind::EmptyAlphabet);
	CHECK(thrown_kind([] { graph_presentation(1, {"a", "a"}, {{0, 0, "a"}}); }) == ErrorKind::DuplicateSymbol);
	CHECK(thrown_kind([] { forbidden_presentation({"0", "1"}, {""}); }) == ErrorKind::EmptyWord);
	CHECK(thrown_kind([] { forbidden_presentation({"0", "1"}, {"0", "1"}); }) == ErrorKind::EmptyShift);
	CHECK(thrown_kind([] { forbidden_presentation({"0", "1"}, {"2"}); }) == ErrorKind::UnknownSymbol);
}

TEST_CASE("golden mean matrix becomes the three-edge graph")
{
	const Presentation g = to_labeled_graph(sft_presentation({{1, 1}, {1, 0}}));
	const LabeledGraph &lg = g.labeled_graph();
	CHECK(lg.vertex_count == 2);
	CHECK(edge_set(lg) == std::set<std::tuple<std::size_t, std::size_t, Symbol>>{{0, 0, 0}, {0, 1, 1}, {1, 0, 0}});
}

TEST_CASE("forbidden 11 gives the golden mean graph")
{
	const Presentation f = to_labeled_graph(forbidden_presentation({"0", "1"}, {"11"}));
	const Presentation m = to_labeled_graph(sft_presentation({{1, 1}, {1, 0}}));
	CHECK(f.labeled_graph().vertex_count == m.labeled_graph().vertex_count);
	CHECK(edge_set(f.labeled_graph()) == edge_set(m.labeled_graph()));
}

TEST_CASE("full 2-shift matrix gives the complete labeled graph")
{
	const LabeledGraph lg = to_labeled_graph(sft_presentation({{1, 1}, {1, 1}})).labeled_graph();
	CHECK(lg.vertex_count == 2);
	CHECK(lg.edges.size() == 4);
}

TEST_CASE("essentialization drops dead ends iteratively")
{
	LabeledGraph g;
	g.vertex_count = 4;
	g.edges = {{0, 0, 0}, {0, 1, 0}, {1, 2, 0}, {2, 3, 0}};
	const LabeledGraph e = essentialize(g);
	CHECK(e.vertex_count == 1);
	CHECK(e.edges.size() == 1);
	LabeledGraph dead;
	dead.vertex_count = 2;
	dead.edges = {{0, 1, 0}};
	CHECK(thrown_kind([&] { essentialize(dead); }) == ErrorKind::EmptyShift);
}

TEST_CASE("language membership")
{
	const Presentation p = sft_presentation({{1, 1}, {1, 0}});
	CHECK(is_in_language(p, p.alphabet().parse("0101")));
	CHECK_FALSE(is_in_language(p, p.alphabet().parse("11")));
	CHECK(is_in_language(p, Word{}));
	CHECK(language(p, 2) == std::vector<Word>{{0, 0}, {0, 1}, {1, 0}});
	CHECK(language(p, 0) == std::vector<Word>{Word{}});
	CHECK(language(sft_presentation({{1, 1}, {1, 1}}), 5).size() == 32);
	const Presentation point = graph_presentation(1, {"0"}, {{0, 0, "0"}});
	CHECK(language(point, 3) == std::vector<Word>{{0, 0, 0}});
}

TEST_CASE("word formatting")
{
	const Alphabet compact({"0", "1"});
	CHECK(compact.format({0, 1, 1}) == "011");
	CHECK(compact.parse("011") == Word{0, 1, 1});
	const Alphabet wide({"ab", "c"});
	CHECK(wide.format({0, 1}) == "ab.c");
	CHECK(wide.parse("ab.c") == Word{0, 1});
	CHECK(wide.parse("") == Word{});
}

TEST_CASE("cylinder membership")
{
	const ShiftGraph g = golden_mean();
	// C(1, 0) = {0x : 1x in X}: w = 0.w' with 1.w' allowed.
	CHECK(cylinder_contains(g, {{1}, {0}}, {0, 0}));
	CHECK_FALSE(cylinder_contains(g, {{1}, {0}}, {0, 1}));
	CHECK(cylinder_contains(g, {{}, {1}}, {1, 0}));
}

TEST_CASE("full n-shift language sizes")
{
	for (std::size_t n = 1; n <= 4; ++n) {
		const Presentation p = sft_presentation(std::vector<std::vector<long long>>(n, std::vector<long long>(n, 1)));
		std::size_t expected = 1;
		for (std::size_t k = 0; k <= 4; ++k, expected *= n)
			CHECK(language(p, k).size() == expected);
	}
}

TEST_CASE("matrix SFT languages match the literal definition, including zero columns")
{
	std::mt19937_64 rng(7);
	std::bernoulli_distribution coin(0.55);
	for (int trial = 0; trial < 200; ++trial) {
		const std::size_t n = 1 + trial % 4;
		std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
		for (auto &row : m) {
			for (auto &x : row)
				x = coin(rng);
			if (std::count(row.begin(), row.end(), 1) == 0)
				row[rng() % n] = 1;
		}
		const Presentation p = sft_presentation(m);
		const Presentation g = to_labeled_graph(p);
		for (std::size_t k = 0; k <= 6; ++k) {
			const auto expected = matrix_language(m, k);
			REQUIRE(language(p, k) == expected);
			REQUIRE(language(g, k) == expected);
		}
	}
}

TEST_CASE("forbidden-word recoding preserves the language")
{
	std::mt19937_64 rng(11);
	int checked = 0;
	for (int trial = 0; trial < 300 && checked < 120; ++trial) {
		const std::size_t symbols = 2 + trial % 2;
		std::vector<std::string> alphabet = digits(symbols);
		std::vector<std::string> words;
		const std::size_t count = 1 + rng() % 3;
		for (std::size_t i = 0; i < count; ++i) {
			std::string w;
			const std::size_t len = 1 + rng() % 3;
			for (std::size_t j = 0; j < len; ++j)
				w += alphabet[rng() % symbols];
			words.push_back(w);
		}
		std::optional<Presentation> p;
		try {
			p = forbidden_presentation(alphabet, words);
		} catch (const Error &e) {
			REQUIRE(e.kind() == ErrorKind::EmptyShift);
			continue;
		}
		++checked;
		const Presentation g = to_labeled_graph(*p);
		// Literal definition: words avoiding every forbidden factor that extend to length 8.
		std::vector<Word> bad;
		for (const auto &w : words)
			bad.push_back(p->alphabet().parse(w));
		auto clean = [&](const Word &w) {
			for (const Word &f : bad)
				if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end())
					return false;
			return true;
		};
		const std::size_t horizon = 10;
		std::vector<Word> long_clean;
		{
			std::vector<Word> layer{Word{}};
			for (std::size_t k = 0; k < horizon; ++k) {
				std::vector<Word> next;
				for (const Word &w : layer)
					for (Symbol a = 0; a < symbols; ++a) {
						Word x = w;
						x.push_back(a);
						if (clean(x))
							next.push_back(x);
					}
				layer = std::move(next);
			}
			long_clean = std::move(layer);
		}
		for (std::size_t k = 0; k <= 5; ++k) {
			std::set<Word> expected;
			for (const Word &w : long_clean)
				expected.insert(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
			const auto got = language(g, k);
			REQUIRE(std::set<Word>(got.begin(), got.end()) == expected);
		}
	}
	CHECK(checked >= 50);
}

TEST_CASE("languages are factorial and extendable")
{
	std::mt19937_64 rng(3);
	for (int trial = 0; trial < 100; ++trial) {
		LabeledGraph raw = random_graph(rng, 1 + trial % 4, 1 + trial % 3, 0.3);
		LabeledGraph g;
		try {
			g = essentialize(raw);
		} catch (const Error &) {
			continue;
		}
		const ShiftGraph sg(Alphabet(digits(1 + trial % 3)), g);
		for (std::size_t k = 1; k <= 5; ++k) {
			const auto lk = language(sg, k);
			const auto next = language(sg, k + 1);
			const std::set<Word> shorter = [&] {
				auto v = language(sg, k - 1);
				return std::set<Word>(v.begin(), v.end());
			}();
			for (const Word &u : lk) {
				CHECK(shorter.count(Word(u.begin() + 1, u.end())));
				CHECK(shorter.count(Word(u.begin(), u.end() - 1)));
				bool extends = false;
				for (Symbol a = 0; a < sg.symbol_count(); ++a) {
					Word x = u;
					x.push_back(a);
					extends = extends || std::binary_search(next.begin(), next.end(), x);
				}
				CHECK(extends);
			}
		}
	}
}
