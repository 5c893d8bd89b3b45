#include "shiftca/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "shiftca/error.hpp"

namespace shiftca {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols))
{
	if (symbols_.empty())
		throw Error(ErrorKind::EmptyAlphabet, "alphabet has no symbols");
	for (Symbol i = 0; i < symbols_.size(); ++i) {
		const std::string &s = symbols_[i];
		if (s.empty())
			throw Error(ErrorKind::MalformedInput, "symbol names must be nonempty");
		if (!index_.emplace(s, i).second)
			throw Error(ErrorKind::DuplicateSymbol, "symbol '" + s + "' listed twice");
		if (s.size() != 1)
			compact_ = false;
	}
}

std::optional<Symbol> Alphabet::index(std::string_view name) const
{
	auto it = index_.find(name);
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

std::string Alphabet::format(const Word &w) const
{
	std::string out;
	for (std::size_t i = 0; i < w.size(); ++i) {
		if (!compact_ && i > 0)
			out += '.';
		out += symbols_.at(w[i]);
	}
	return out;
}

Word Alphabet::parse(std::string_view text) const
{
	Word w;
	if (text.empty())
		return w;
	auto push = [&](std::string_view piece) {
		auto s = index(piece);
		if (!s)
			throw Error(ErrorKind::UnknownSymbol, "symbol '" + std::string(piece) + "' is not in the alphabet");
		w.push_back(*s);
	};
	if (compact_) {
		for (std::size_t i = 0; i < text.size(); ++i)
			push(text.substr(i, 1));
	} else {
		std::size_t start = 0;
		while (true) {
			const std::size_t dot = text.find('.', start);
			push(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
			if (dot == std::string_view::npos)
				break;
			start = dot + 1;
		}
	}
	return w;
}

std::string_view Presentation::kind_name() const
{
	switch (kind_.index()) {
	case 0: return "sft";
	case 1: return "forbidden_words";
	default: return "labeled_graph";
	}
}

const SftMatrix &Presentation::sft_matrix() const
{
	if (const auto *m = std::get_if<SftMatrix>(&kind_))
		return *m;
	throw Error(ErrorKind::WrongKind, "presentation is not an sft matrix");
}

const LabeledGraph &Presentation::labeled_graph() const
{
	if (const auto *g = std::get_if<LabeledGraph>(&kind_))
		return *g;
	throw Error(ErrorKind::WrongKind, "presentation is not a labeled graph");
}

namespace {

std::vector<bool> essential_vertices(const LabeledGraph &g)
{
	std::vector<bool> alive(g.vertex_count, true);
	std::vector<std::size_t> out_degree(g.vertex_count, 0);
	std::vector<std::vector<std::size_t>> preds(g.vertex_count);
	for (const Edge &e : g.edges) {
		++out_degree[e.from];
		preds[e.to].push_back(e.from);
	}
	std::vector<std::size_t> stack;
	for (std::size_t v = 0; v < g.vertex_count; ++v)
		if (out_degree[v] == 0)
			stack.push_back(v);
	while (!stack.empty()) {
		const std::size_t v = stack.back();
		stack.pop_back();
		if (!alive[v])
			continue;
		alive[v] = false;
		for (std::size_t u : preds[v])
			if (alive[u] && --out_degree[u] == 0)
				stack.push_back(u);
	}
	return alive;
}

} // namespace

LabeledGraph essentialize(const LabeledGraph &g)
{
	const std::vector<bool> alive = essential_vertices(g);
	std::vector<std::size_t> renumber(g.vertex_count, 0);
	std::size_t next = 0;
	for (std::size_t v = 0; v < g.vertex_count; ++v)
		if (alive[v])
			renumber[v] = next++;
	if (next == 0)
		throw Error(ErrorKind::EmptyShift, "no vertex starts an infinite path");

	LabeledGraph out;
	out.vertex_count = next;
	std::set<Edge> seen;
	for (const Edge &e : g.edges) {
		if (!alive[e.from] || !alive[e.to])
			continue;
		Edge r{renumber[e.from], renumber[e.to], e.label};
		if (seen.insert(r).second)
			out.edges.push_back(r);
	}
	return out;
}

namespace {

// Higher-block recoding of a forbidden-word constraint. Vertices are the
// allowed blocks of length `block` (lex order); the edge w -> w[1:]c carries
// label c. When some block cannot be read from any other vertex a prefix
// layer rooted at the empty word is added so that every point is readable.
class BlockRecoder {
public:
	BlockRecoder(std::size_t symbols, const std::vector<Word> &forbidden) : symbols_(symbols)
	{
		for (const Word &w : forbidden) {
			forbidden_.insert(w);
			max_len_ = std::max(max_len_, w.size());
		}
		block_ = std::max<std::size_t>(max_len_ > 0 ? max_len_ - 1 : 1, 1);
	}

	LabeledGraph build() const
	{
		std::vector<Word> blocks;
		Word cur;
		enumerate_clean(cur, blocks);
		std::map<Word, std::size_t> id;
		for (std::size_t i = 0; i < blocks.size(); ++i)
			id.emplace(blocks[i], i);

		LabeledGraph g;
		g.vertex_count = blocks.size();
		for (std::size_t i = 0; i < blocks.size(); ++i) {
			for (Symbol c = 0; c < symbols_; ++c) {
				Word ext = blocks[i];
				ext.push_back(c);
				if (!clean_suffixes(ext))
					continue;
				Word target(ext.begin() + 1, ext.end());
				g.edges.push_back({i, id.at(target), c});
			}
		}
		if (g.vertex_count == 0)
			throw Error(ErrorKind::EmptyShift, "every block contains a forbidden word");

		const LabeledGraph ess = essentialize(g);
		const std::vector<bool> alive = essential_vertices(g);
		std::vector<Word> alive_blocks;
		for (std::size_t v = 0; v < g.vertex_count; ++v)
			if (alive[v])
				alive_blocks.push_back(blocks[v]);
		std::set<Word> alive_set(alive_blocks.begin(), alive_blocks.end());

		if (all_readable(alive_blocks, alive_set))
			return ess;
		return with_prefix_layer(ess, alive_blocks);
	}

private:
	bool clean_suffixes(const Word &w) const
	{
		for (std::size_t len = 1; len <= std::min(max_len_, w.size()); ++len) {
			Word suffix(w.end() - static_cast<std::ptrdiff_t>(len), w.end());
			if (forbidden_.count(suffix))
				return false;
		}
		return true;
	}

	void enumerate_clean(Word &cur, std::vector<Word> &out) const
	{
		if (cur.size() == block_) {
			out.push_back(cur);
			return;
		}
		for (Symbol c = 0; c < symbols_; ++c) {
			cur.push_back(c);
			if (clean_suffixes(cur))
				enumerate_clean(cur, out);
			cur.pop_back();
		}
	}

	bool clean(const Word &w) const
	{
		Word prefix;
		for (Symbol c : w) {
			prefix.push_back(c);
			if (!clean_suffixes(prefix))
				return false;
		}
		return true;
	}

	// A point starting with block w is readable from vertex v iff v·w is clean
	// and every intermediate block survived essentialization.
	bool all_readable(const std::vector<Word> &alive, const std::set<Word> &alive_set) const
	{
		for (const Word &w : alive) {
			bool found = false;
			for (const Word &v : alive) {
				Word joined = v;
				joined.insert(joined.end(), w.begin(), w.end());
				if (!clean(joined))
					continue;
				bool ok = true;
				for (std::size_t i = 1; i < block_ && ok; ++i)
					ok = alive_set.count(Word(joined.begin() + static_cast<std::ptrdiff_t>(i),
					                          joined.begin() + static_cast<std::ptrdiff_t>(i + block_))) > 0;
				if (ok) {
					found = true;
					break;
				}
			}
			if (!found)
				return false;
		}
		return true;
	}

	LabeledGraph with_prefix_layer(const LabeledGraph &ess, const std::vector<Word> &alive_blocks) const
	{
		LabeledGraph g = ess;
		std::map<Word, std::size_t> block_id;
		for (std::size_t i = 0; i < alive_blocks.size(); ++i)
			block_id.emplace(alive_blocks[i], i);

		// Prefixes of surviving blocks, shortest first.
		std::map<Word, std::size_t> prefix_id;
		std::vector<Word> prefixes;
		std::set<Word> prefix_set;
		for (const Word &b : alive_blocks)
			for (std::size_t len = 0; len < block_; ++len)
				prefix_set.insert(Word(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(len)));
		prefixes.assign(prefix_set.begin(), prefix_set.end());
		std::stable_sort(prefixes.begin(), prefixes.end(),
		                 [](const Word &a, const Word &b) { return a.size() < b.size(); });
		for (const Word &p : prefixes)
			prefix_id.emplace(p, g.vertex_count++);

		for (const Word &p : prefixes) {
			for (Symbol c = 0; c < symbols_; ++c) {
				Word next = p;
				next.push_back(c);
				if (next.size() < block_) {
					if (auto it = prefix_id.find(next); it != prefix_id.end())
						g.edges.push_back({prefix_id.at(p), it->second, c});
				} else if (auto it = block_id.find(next); it != block_id.end()) {
					g.edges.push_back({prefix_id.at(p), it->second, c});
				}
			}
		}
		return essentialize(g);
	}

	std::size_t symbols_;
	std::set<Word> forbidden_;
	std::size_t max_len_ = 0;
	std::size_t block_ = 1;
};

std::vector<Word> matrix_forbidden(const SftMatrix &m)
{
	std::vector<Word> out;
	for (Symbol i = 0; i < m.entries.size(); ++i)
		for (Symbol j = 0; j < m.entries[i].size(); ++j)
			if (m.entries[i][j] == 0)
				out.push_back({i, j});
	return out;
}

} // namespace

Presentation validate(const RawPresentation &raw)
{
	Alphabet alphabet(raw.alphabet);
	const std::size_t n = alphabet.size();

	if (raw.kind == "sft") {
		if (raw.matrix.size() != n)
			throw Error(ErrorKind::NotSquare, "matrix must have one row per symbol");
		SftMatrix m;
		for (std::size_t i = 0; i < n; ++i) {
			if (raw.matrix[i].size() != n)
				throw Error(ErrorKind::NotSquare, "row " + std::to_string(i) + " has the wrong length");
			std::vector<int> row;
			bool any = false;
			for (long long x : raw.matrix[i]) {
				if (x != 0 && x != 1)
					throw Error(ErrorKind::NonBinaryEntry, "matrix entries must be 0 or 1");
				any = any || x == 1;
				row.push_back(static_cast<int>(x));
			}
			if (!any)
				throw Error(ErrorKind::ZeroRow, "row " + std::to_string(i) + " is zero");
			m.entries.push_back(std::move(row));
		}
		return Presentation(std::move(alphabet), std::move(m));
	}

	if (raw.kind == "forbidden_words") {
		ForbiddenWords f;
		for (const std::string &s : raw.forbidden) {
			Word w = alphabet.parse(s);
			if (w.empty())
				throw Error(ErrorKind::EmptyWord, "forbidden words must be nonempty");
			f.words.push_back(std::move(w));
		}
		std::sort(f.words.begin(), f.words.end());
		f.words.erase(std::unique(f.words.begin(), f.words.end()), f.words.end());
		BlockRecoder(n, f.words).build(); // surfaces EmptyShift early
		return Presentation(std::move(alphabet), std::move(f));
	}

	if (raw.kind == "labeled_graph") {
		if (raw.vertices <= 0)
			throw Error(ErrorKind::MalformedInput, "vertices must be positive");
		LabeledGraph g;
		g.vertex_count = static_cast<std::size_t>(raw.vertices);
		for (const auto &e : raw.edges) {
			if (e.from < 0 || e.to < 0 || e.from >= raw.vertices || e.to >= raw.vertices)
				throw Error(ErrorKind::DanglingEdge, "edge " + std::to_string(e.from) + "->" +
				                                         std::to_string(e.to) + " leaves the vertex range");
			auto label = alphabet.index(e.label);
			if (!label)
				throw Error(ErrorKind::UnknownSymbol, "edge label '" + e.label + "' is not in the alphabet");
			g.edges.push_back({static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to), *label});
		}
		return Presentation(std::move(alphabet), essentialize(g));
	}

	throw Error(ErrorKind::MalformedInput, "unknown presentation kind '" + raw.kind + "'");
}

Presentation to_labeled_graph(const Presentation &p)
{
	const std::size_t n = p.alphabet().size();
	return std::visit(
	    [&](const auto &k) -> Presentation {
		    using T = std::decay_t<decltype(k)>;
		    if constexpr (std::is_same_v<T, LabeledGraph>)
			    return p;
		    else if constexpr (std::is_same_v<T, SftMatrix>)
			    return Presentation(p.alphabet(), BlockRecoder(n, matrix_forbidden(k)).build());
		    else
			    return Presentation(p.alphabet(), BlockRecoder(n, k.words).build());
	    },
	    p.kind());
}

ShiftGraph::ShiftGraph(Alphabet alphabet, LabeledGraph graph) : alphabet_(std::move(alphabet)), graph_(std::move(graph))
{
	for (const Edge &e : graph_.edges)
		if (e.from >= graph_.vertex_count || e.to >= graph_.vertex_count || e.label >= alphabet_.size())
			throw Error(ErrorKind::DanglingEdge, "edge outside the graph");
	steps_.assign(alphabet_.size(), Relation(graph_.vertex_count));
	for (const Edge &e : graph_.edges)
		steps_[e.label].set(e.from, e.to);
}

ShiftGraph::ShiftGraph(const Presentation &p)
    : ShiftGraph(p.alphabet(), to_labeled_graph(p).labeled_graph())
{
}

Relation ShiftGraph::word_relation(const Word &u) const
{
	Relation r = Relation::identity(graph_.vertex_count);
	for (Symbol a : u)
		r = r.then(steps_.at(a));
	return r;
}

bool ShiftGraph::accepts(const Word &u) const
{
	VertexSet frontier = all_vertices();
	for (Symbol a : u) {
		if (a >= steps_.size())
			return false;
		frontier = steps_[a].image(frontier);
		if (frontier.empty())
			return false;
	}
	return true;
}

bool cylinder_contains(const ShiftGraph &g, const CylinderDescriptor &c, const Word &w)
{
	if (w.size() < c.v.size() || !std::equal(c.v.begin(), c.v.end(), w.begin()))
		return false;
	if (!g.accepts(w))
		return false;
	Word uw = c.u;
	uw.insert(uw.end(), w.begin() + static_cast<std::ptrdiff_t>(c.v.size()), w.end());
	return g.accepts(uw);
}

bool is_in_language(const ShiftGraph &g, const Word &u) { return g.accepts(u); }

bool is_in_language(const Presentation &p, const Word &u) { return ShiftGraph(p).accepts(u); }

std::vector<Word> language(const ShiftGraph &g, std::size_t k)
{
	std::vector<Word> out;
	Word cur;
	auto rec = [&](auto &&self, const VertexSet &frontier) -> void {
		if (cur.size() == k) {
			out.push_back(cur);
			return;
		}
		for (Symbol a = 0; a < g.symbol_count(); ++a) {
			VertexSet next = g.step(a).image(frontier);
			if (next.empty())
				continue;
			cur.push_back(a);
			self(self, next);
			cur.pop_back();
		}
	};
	rec(rec, g.all_vertices());
	return out;
}

std::vector<Word> language(const Presentation &p, std::size_t k) { return language(ShiftGraph(p), k); }

} // namespace shiftca
