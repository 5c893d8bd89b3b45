// Shared builders for the test executables.
#ifndef SHIFTCA_TESTS_SUPPORT_HPP
#define SHIFTCA_TESTS_SUPPORT_HPP

#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "shiftca/error.hpp"
#include "shiftca/intlinalg.hpp"
#include "shiftca/presentation.hpp"

namespace shiftca {

// Lets test frameworks print matrices in failure messages.
inline std::ostream &operator<<(std::ostream &os, const IntMatrix &m) { return os << m.to_string(); }
inline std::ostream &operator<<(std::ostream &os, const AbelianGroup &g) { return os << g.to_string(); }

} // namespace shiftca

namespace shiftca::test {

inline std::vector<std::string> digits(std::size_t n)
{
	std::vector<std::string> out;
	for (std::size_t i = 0; i < n; ++i)
		out.push_back(std::to_string(i));
	return out;
}

inline Presentation sft_presentation(const std::vector<std::vector<long long>> &m)
{
	RawPresentation raw;
	raw.kind = "sft";
	raw.alphabet = digits(m.size());
	raw.matrix = m;
	return validate(raw);
}

inline ShiftGraph sft(const std::vector<std::vector<long long>> &m) { return ShiftGraph(sft_presentation(m)); }

inline Presentation graph_presentation(std::size_t vertices, std::vector<std::string> alphabet,
                                       const std::vector<std::tuple<long long, long long, std::string>> &edges)
{
	RawPresentation raw;
	raw.kind = "labeled_graph";
	raw.alphabet = std::move(alphabet);
	raw.vertices = static_cast<long long>(vertices);
	for (const auto &[f, t, l] : edges)
		raw.edges.push_back({f, t, l});
	return validate(raw);
}

inline ShiftGraph labeled(std::size_t vertices, std::vector<std::string> alphabet,
                          const std::vector<std::tuple<long long, long long, std::string>> &edges)
{
	return ShiftGraph(graph_presentation(vertices, std::move(alphabet), edges));
}

inline Presentation forbidden_presentation(std::vector<std::string> alphabet, std::vector<std::string> words)
{
	RawPresentation raw;
	raw.kind = "forbidden_words";
	raw.alphabet = std::move(alphabet);
	raw.forbidden = std::move(words);
	return validate(raw);
}

inline ShiftGraph golden_mean() { return sft({{1, 1}, {1, 0}}); }

inline ShiftGraph full_shift(std::size_t n)
{
	return sft(std::vector<std::vector<long long>>(n, std::vector<long long>(n, 1)));
}

inline ShiftGraph fixed_point() { return labeled(1, {"0"}, {{0, 0, "0"}}); }

// Blocks of 1s between 0s have even length.
inline ShiftGraph even_shift() { return labeled(2, {"0", "1"}, {{0, 0, "0"}, {0, 1, "1"}, {1, 0, "1"}}); }

/// Random labeled graph before essentialization; may be empty after it.
inline LabeledGraph random_graph(std::mt19937_64 &rng, std::size_t vertices, std::size_t symbols, double density)
{
	std::bernoulli_distribution coin(density);
	LabeledGraph g;
	g.vertex_count = vertices;
	for (std::size_t f = 0; f < vertices; ++f)
		for (std::size_t t = 0; t < vertices; ++t)
			for (Symbol a = 0; a < symbols; ++a)
				if (coin(rng))
					g.edges.push_back({f, t, a});
	return g;
}

template <class F>
std::optional<ErrorKind> thrown_kind(F &&f)
{
	try {
		f();
	} catch (const Error &e) {
		return e.kind();
	}
	return std::nullopt;
}

} // namespace shiftca::test

#endif
