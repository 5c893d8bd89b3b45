#ifndef SHIFTCA_PRESENTATION_HPP
#define SHIFTCA_PRESENTATION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shiftca/bitset.hpp"

namespace shiftca {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

class Alphabet {
public:
	Alphabet() = default;
	/// Throws EmptyAlphabet / DuplicateSymbol.
	explicit Alphabet(std::vector<std::string> symbols);

	std::size_t size() const { return symbols_.size(); }
	const std::string &name(Symbol s) const { return symbols_.at(s); }
	const std::vector<std::string> &symbols() const { return symbols_; }
	std::optional<Symbol> index(std::string_view name) const;

	/// True when every symbol name is a single character; words then print unseparated.
	bool compact() const { return compact_; }

	std::string format(const Word &w) const;
	/// Throws UnknownSymbol.
	Word parse(std::string_view text) const;

	friend bool operator==(const Alphabet &a, const Alphabet &b) { return a.symbols_ == b.symbols_; }

private:
	std::vector<std::string> symbols_;
	std::map<std::string, Symbol, std::less<>> index_;
	bool compact_ = true;
};

struct SftMatrix {
	std::vector<std::vector<int>> entries;
};

struct ForbiddenWords {
	std::vector<Word> words;
};

struct Edge {
	std::size_t from;
	std::size_t to;
	Symbol label;

	friend auto operator<=>(const Edge &, const Edge &) = default;
};

struct LabeledGraph {
	std::size_t vertex_count = 0;
	std::vector<Edge> edges;
};

/// Unvalidated input, as read from a "shiftspace-v1" document.
struct RawPresentation {
	struct RawEdge {
		long long from = 0;
		long long to = 0;
		std::string label;
	};

	std::string kind;
	std::vector<std::string> alphabet;
	std::vector<std::vector<long long>> matrix;
	std::vector<std::string> forbidden;
	long long vertices = 0;
	std::vector<RawEdge> edges;
};

class Presentation {
public:
	using Kind = std::variant<SftMatrix, ForbiddenWords, LabeledGraph>;

	const Alphabet &alphabet() const { return alphabet_; }
	const Kind &kind() const { return kind_; }
	std::string_view kind_name() const;

	bool is_sft_matrix() const { return std::holds_alternative<SftMatrix>(kind_); }
	const SftMatrix &sft_matrix() const;
	const LabeledGraph &labeled_graph() const;

	friend Presentation validate(const RawPresentation &raw);
	friend Presentation to_labeled_graph(const Presentation &p);

private:
	Presentation(Alphabet alphabet, Kind kind) : alphabet_(std::move(alphabet)), kind_(std::move(kind)) {}

	Alphabet alphabet_;
	Kind kind_;
};

/// Checks the raw data and returns a presentation; labeled graphs come back essentialized.
Presentation validate(const RawPresentation &raw);

/// Equivalent labeled-graph presentation (essentialized, every point readable).
Presentation to_labeled_graph(const Presentation &p);

/// Drops vertices that start no infinite path and renumbers the rest in order.
/// Throws EmptyShift when nothing survives.
LabeledGraph essentialize(const LabeledGraph &g);

/// Essentialized graph with per-symbol adjacency; the engine every analysis runs on.
class ShiftGraph {
public:
	ShiftGraph(Alphabet alphabet, LabeledGraph graph);
	explicit ShiftGraph(const Presentation &p);

	const Alphabet &alphabet() const { return alphabet_; }
	const LabeledGraph &graph() const { return graph_; }
	std::size_t vertex_count() const { return graph_.vertex_count; }
	std::size_t symbol_count() const { return alphabet_.size(); }

	/// One-step relation of symbol a.
	const Relation &step(Symbol a) const { return steps_.at(a); }

	Relation word_relation(const Word &u) const;
	bool accepts(const Word &u) const;

	/// {v | an a-labeled edge leads from v into t}.
	VertexSet pre(const VertexSet &t, Symbol a) const { return steps_[a].preimage(t); }

	VertexSet all_vertices() const { return VertexSet::full(graph_.vertex_count); }

private:
	Alphabet alphabet_;
	LabeledGraph graph_;
	std::vector<Relation> steps_;
};

/// C(u, v) = {vx | ux in X}.
struct CylinderDescriptor {
	Word u;
	Word v;
};

/// Finite-word shadow of C(u,v): w = v·w' with u·w' in the language.
bool cylinder_contains(const ShiftGraph &g, const CylinderDescriptor &c, const Word &w);

bool is_in_language(const Presentation &p, const Word &u);
bool is_in_language(const ShiftGraph &g, const Word &u);

/// L^k(X) in length-lexicographic order.
std::vector<Word> language(const Presentation &p, std::size_t k);
std::vector<Word> language(const ShiftGraph &g, std::size_t k);

} // namespace shiftca

#endif
