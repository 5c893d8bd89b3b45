#include "shiftca/repcheck.hpp"

#include <algorithm>
#include <set>

#include "shiftca/error.hpp"

namespace shiftca {

SparseMatrix SparseMatrix::identity(std::size_t n)
{
	SparseMatrix m(n);
	for (std::size_t i = 0; i < n; ++i)
		m.cols_[i][i] = 1;
	return m;
}

void SparseMatrix::add(std::size_t row, std::size_t col, long long v)
{
	if (v == 0)
		return;
	auto &c = cols_.at(col);
	auto [it, fresh] = c.try_emplace(row, v);
	if (!fresh) {
		it->second += v;
		if (it->second == 0)
			c.erase(it);
	}
}

long long SparseMatrix::at(std::size_t row, std::size_t col) const
{
	const auto &c = cols_.at(col);
	auto it = c.find(row);
	return it == c.end() ? 0 : it->second;
}

SparseMatrix SparseMatrix::transpose() const
{
	SparseMatrix t(size());
	for (std::size_t j = 0; j < size(); ++j)
		for (const auto &[i, v] : cols_[j])
			t.cols_[i][j] = v;
	return t;
}

SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b)
{
	if (a.size() != b.size())
		throw Error(ErrorKind::Internal, "sparse product shape mismatch");
	SparseMatrix c(a.size());
	for (std::size_t j = 0; j < b.size(); ++j)
		for (const auto &[k, bv] : b.cols_[j])
			for (const auto &[i, av] : a.cols_[k])
				c.add(i, j, av * bv);
	return c;
}

SparseMatrix operator+(const SparseMatrix &a, const SparseMatrix &b)
{
	if (a.size() != b.size())
		throw Error(ErrorKind::Internal, "sparse sum shape mismatch");
	SparseMatrix c = a;
	for (std::size_t j = 0; j < b.size(); ++j)
		for (const auto &[i, v] : b.cols_[j])
			c.add(i, j, v);
	return c;
}

TruncatedRep::TruncatedRep(const ShiftGraph &g, std::size_t depth, std::size_t cap)
    : graph_(std::make_shared<const ShiftGraph>(g)), depth_(depth)
{
	if (depth == 0)
		throw Error(ErrorKind::DepthTooLarge, "truncation depth must be at least 1");
	for (std::size_t k = 0; k <= depth; ++k) {
		std::vector<Word> layer = language(g, k);
		if (basis_.size() + layer.size() > cap)
			throw Error(ErrorKind::DepthTooLarge, "truncation basis exceeds " + std::to_string(cap) +
			                                          " words at depth " + std::to_string(depth));
		for (Word &w : layer) {
			index_.emplace(w, basis_.size());
			basis_.push_back(std::move(w));
		}
	}
}

std::optional<std::size_t> TruncatedRep::index(const Word &w) const
{
	auto it = index_.find(w);
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

SparseMatrix TruncatedRep::s(const Word &u) const
{
	SparseMatrix m(basis_.size());
	for (std::size_t j = 0; j < basis_.size(); ++j) {
		if (u.size() + basis_[j].size() > depth_)
			continue;
		Word uw = u;
		uw.insert(uw.end(), basis_[j].begin(), basis_[j].end());
		if (auto i = index(uw))
			m.add(*i, j, 1);
	}
	return m;
}

SparseMatrix TruncatedRep::cylinder(const Word &u, const Word &v) const
{
	SparseMatrix m(basis_.size());
	for (std::size_t j = 0; j < basis_.size(); ++j)
		if (cylinder_contains(*graph_, {u, v}, basis_[j]))
			m.add(j, j, 1);
	return m;
}

std::vector<std::size_t> TruncatedRep::interior(std::size_t used) const
{
	std::vector<std::size_t> out;
	if (used > depth_)
		return out;
	for (std::size_t j = 0; j < basis_.size(); ++j)
		if (basis_[j].size() <= depth_ - used)
			out.push_back(j);
	return out;
}

std::size_t RelationReport::passed() const
{
	return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto &c) { return c.passed; }));
}

std::size_t RelationReport::distinct_pairs() const
{
	std::set<std::pair<Word, Word>> pairs;
	for (const auto &c : checks)
		if (c.relation == "product" || c.relation == "cylinder")
			pairs.insert({c.u, c.v});
	return pairs.size();
}

namespace {

RelationCheck compare(const TruncatedRep &r, std::string relation, const Word &u, const Word &v,
                      const SparseMatrix &lhs, const SparseMatrix &rhs, const std::vector<std::size_t> &cols)
{
	RelationCheck c{std::move(relation), u, v, cols.size(), true, std::nullopt};
	for (std::size_t j : cols)
		if (lhs.column(j) != rhs.column(j)) {
			c.passed = false;
			c.witness = r.basis()[j];
			break;
		}
	return c;
}

} // namespace

RelationReport check_universal_relations(const TruncatedRep &r, std::size_t word_budget)
{
	RelationReport rep;
	rep.depth = r.depth();
	rep.basis_size = r.basis().size();
	const ShiftGraph &g = r.graph();
	std::vector<Word> words;
	for (std::size_t k = 0; k <= word_budget; ++k)
		for (Word &w : language(g, k))
			words.push_back(std::move(w));
	std::map<Word, SparseMatrix> s_cache, st_cache;
	auto s = [&](const Word &u) -> const SparseMatrix & {
		auto it = s_cache.find(u);
		if (it == s_cache.end())
			it = s_cache.emplace(u, r.s(u)).first;
		return it->second;
	};
	auto st = [&](const Word &u) -> const SparseMatrix & {
		auto it = st_cache.find(u);
		if (it == st_cache.end())
			it = st_cache.emplace(u, s(u).transpose()).first;
		return it->second;
	};

	for (const Word &u : words) {
		const SparseMatrix pi = s(u) * st(u) * s(u);
		rep.checks.push_back(compare(r, "partial_isometry", u, {}, pi, s(u), r.interior(u.size())));
	}
	for (const Word &u : words)
		for (const Word &v : words) {
			if (u.size() + v.size() > word_budget)
				continue;
			Word uv = u;
			uv.insert(uv.end(), v.begin(), v.end());
			const auto cols = r.interior(uv.size());
			rep.checks.push_back(compare(r, "product", u, v, s(u) * s(v), s(uv), cols));
			const SparseMatrix proj = s(v) * st(u) * s(u) * st(v);
			rep.checks.push_back(compare(r, "cylinder", u, v, proj, r.cylinder(u, v), cols));
		}
	return rep;
}

RelationReport check_ck_relations(const TruncatedRep &r, const Presentation &p)
{
	if (!p.is_sft_matrix())
		throw Error(ErrorKind::WrongKind, "Cuntz-Krieger relations need an sft matrix presentation, got " +
		                                      std::string(p.kind_name()));
	const auto &a = p.sft_matrix().entries;
	const std::size_t n = a.size();
	if (n != r.graph().symbol_count())
		throw Error(ErrorKind::WrongKind, "matrix size does not match the representation's alphabet");
	RelationReport rep;
	rep.depth = r.depth();
	rep.basis_size = r.basis().size();
	std::vector<std::size_t> cols;
	for (std::size_t j : r.interior(1))
		if (!r.basis()[j].empty())
			cols.push_back(j);
	std::vector<SparseMatrix> range(n);
	SparseMatrix total(r.basis().size());
	for (Symbol j = 0; j < n; ++j) {
		const SparseMatrix sj = r.s({j});
		range[j] = sj * sj.transpose();
		total = total + range[j];
	}
	rep.checks.push_back(compare(r, "ck_sum", {}, {}, total, SparseMatrix::identity(r.basis().size()), cols));
	for (Symbol i = 0; i < n; ++i) {
		const SparseMatrix si = r.s({i});
		SparseMatrix rhs(r.basis().size());
		for (Symbol j = 0; j < n; ++j)
			if (a[i][j])
				rhs = rhs + range[j];
		rep.checks.push_back(compare(r, "ck_range", {i}, {}, si.transpose() * si, rhs, cols));
	}
	return rep;
}

} // namespace shiftca
