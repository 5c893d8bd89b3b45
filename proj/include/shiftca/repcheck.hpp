#ifndef SHIFTCA_REPCHECK_HPP
#define SHIFTCA_REPCHECK_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "shiftca/presentation.hpp"

namespace shiftca {

/// Square integer matrix stored by columns; entries are small counts, kept exact.
class SparseMatrix {
public:
	SparseMatrix() = default;
	explicit SparseMatrix(std::size_t n) : cols_(n) {}

	static SparseMatrix identity(std::size_t n);

	std::size_t size() const { return cols_.size(); }
	void add(std::size_t row, std::size_t col, long long v);
	long long at(std::size_t row, std::size_t col) const;
	const std::map<std::size_t, long long> &column(std::size_t col) const { return cols_[col]; }

	SparseMatrix transpose() const;
	friend SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b);
	friend SparseMatrix operator+(const SparseMatrix &a, const SparseMatrix &b);
	friend bool operator==(const SparseMatrix &, const SparseMatrix &) = default;

private:
	std::vector<std::map<std::size_t, long long>> cols_;
};

/// Finite shadow of the representation s_u e_x = e_{ux} on l2(X): the basis is every word of
/// the language with length <= N, and s_u e_w = e_{uw} when |uw| <= N and uw is in the
/// language, else 0. With this policy s_u s_v = s_{uv} holds on the whole space and every s_u
/// is a partial isometry; only relation (2) needs the interior.
class TruncatedRep {
public:
	static constexpr std::size_t default_basis_cap = 200'000;

	/// Throws DepthTooLarge when the basis would exceed `cap` words.
	TruncatedRep(const ShiftGraph &g, std::size_t depth, std::size_t cap = default_basis_cap);

	const ShiftGraph &graph() const { return *graph_; }
	std::size_t depth() const { return depth_; }
	const std::vector<Word> &basis() const { return basis_; }
	std::optional<std::size_t> index(const Word &w) const;

	/// s_u for any word u (zero when u is not in the language).
	SparseMatrix s(const Word &u) const;
	/// Diagonal indicator of the finite shadow of C(u, v): w = v·w' with u·w' in the language.
	SparseMatrix cylinder(const Word &u, const Word &v) const;
	/// Basis indices of interior(u, v) = {w : |w| <= N - |uv|}.
	std::vector<std::size_t> interior(std::size_t used) const;

private:
	std::shared_ptr<const ShiftGraph> graph_;
	std::size_t depth_;
	std::vector<Word> basis_;
	std::map<Word, std::size_t> index_;
};

struct RelationCheck {
	std::string relation; ///< "product", "cylinder", "partial_isometry", "ck_sum", "ck_range"
	Word u;
	Word v;
	std::size_t interior = 0;
	bool passed = true;
	std::optional<Word> witness; ///< basis word whose column differs
};

struct RelationReport {
	std::size_t depth = 0;
	std::size_t basis_size = 0;
	std::vector<RelationCheck> checks;

	std::size_t passed() const;
	std::size_t failed() const { return checks.size() - passed(); }
	std::size_t distinct_pairs() const;
};

/// Relations (1) s_u s_v = s_{uv} and (2) s_v s_u^T s_u s_v^T = 1_{C(u,v)} for all u, v in the
/// language with |u| + |v| <= budget, plus s_u s_u^T s_u = s_u, compared column by column on
/// interior(u, v).
RelationReport check_universal_relations(const TruncatedRep &r, std::size_t word_budget);

/// Σ_j s_j s_j^T = 1 and s_i^T s_i = Σ_j A(i,j) s_j s_j^T on 1 <= |w| <= N - 1.
/// Throws WrongKind unless p is a matrix presentation with the representation's alphabet.
RelationReport check_ck_relations(const TruncatedRep &r, const Presentation &p);

} // namespace shiftca

#endif
