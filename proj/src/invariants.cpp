#include "shiftca/invariants.hpp"

#include <map>
#include <numeric>

#include "shiftca/error.hpp"

namespace shiftca {

KGroupsReport k_groups(const Tower &t)
{
	if (t.top_level() < 1)
		throw Error(ErrorKind::TowerTooShallow, "K-groups need at least two tower levels");
	KGroupsReport r;
	if (t.stabilized_at()) {
		r.level = *t.stabilized_at();
		r.exact = true;
	} else {
		r.level = t.top_level() - 1;
	}
	const IntMatrix B = t.matrix_B(r.level);
	r.k0 = cokernel(B);
	r.k1 = kernel(B);
	return r;
}

IntMatrix stable_transition(const Tower &t)
{
	if (!t.stabilized_at())
		throw Error(ErrorKind::NotStabilized, "the tower did not stabilize within level " +
		                                          std::to_string(t.top_level()));
	const std::size_t l0 = *t.stabilized_at();
	return t.matrix_I(l0).transpose() * t.matrix_A(l0).summed;
}

std::vector<StationarySystem> dimension_group(const Tower &t, std::size_t k_max)
{
	const IntMatrix A = stable_transition(t);
	const std::size_t l0 = *t.stabilized_at();
	std::vector<StationarySystem> out;
	for (std::size_t k = 0; k <= k_max; ++k) {
		StationarySystem s;
		s.k = k;
		s.level = l0;
		s.classes = t.filtration_M(k, l0);
		s.next_classes = t.filtration_M(k + 1, l0);
		s.map = A.select(s.next_classes, s.classes);
		s.delta = t.map_delta(k, l0);
		out.push_back(std::move(s));
	}
	return out;
}

namespace {

const SftMatrix &require_matrix(const Presentation &p, const char *what)
{
	if (!p.is_sft_matrix())
		throw Error(ErrorKind::WrongKind, std::string(what) + " needs an sft matrix presentation, got " +
		                                      std::string(p.kind_name()));
	return p.sft_matrix();
}

IntMatrix to_int_matrix(const std::vector<std::vector<int>> &a)
{
	IntMatrix m(a.size(), a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < a.size(); ++j)
			m(i, j) = a[i][j];
	return m;
}

KGroupsReport ck_groups(const IntMatrix &a)
{
	const IntMatrix m = IntMatrix::identity(a.rows()) - a.transpose();
	return {cokernel(m), kernel(m), 0, true};
}

} // namespace

BowenFranks bowen_franks(const Presentation &p)
{
	const IntMatrix a = to_int_matrix(require_matrix(p, "bowen_franks").entries);
	return {cokernel(IntMatrix::identity(a.rows()) - a), a};
}

CkOracleReport ck_oracle(const Presentation &p) { return ck_oracle(require_matrix(p, "ck_oracle").entries); }

CkOracleReport ck_oracle(const std::vector<std::vector<int>> &a)
{
	const std::size_t n = a.size();
	CkOracleReport r;
	std::map<std::vector<int>, std::size_t> by_column;
	std::vector<std::size_t> class_of(n);
	for (std::size_t j = 0; j < n; ++j) {
		std::vector<int> col(n);
		for (std::size_t i = 0; i < n; ++i)
			col[i] = a[i][j];
		auto [it, fresh] = by_column.try_emplace(col, r.column_classes.size());
		if (fresh)
			r.column_classes.emplace_back();
		r.column_classes[it->second].push_back(j);
		class_of[j] = it->second;
	}
	const std::size_t c = r.column_classes.size();
	r.collapsed_matrix = IntMatrix(c, c);
	for (std::size_t from = 0; from < c; ++from)
		for (std::size_t to = 0; to < c; ++to)
			for (std::size_t sym : r.column_classes[from])
				r.collapsed_matrix(from, to) += a[sym][r.column_classes[to].front()];
	r.collapsed = ck_groups(r.collapsed_matrix);
	r.raw = ck_groups(to_int_matrix(a));
	return r;
}

} // namespace shiftca
