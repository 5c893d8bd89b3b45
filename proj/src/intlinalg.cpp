#include "shiftca/intlinalg.hpp"

#include <limits>
#include <optional>
#include <sstream>
#include <utility>

#include "shiftca/error.hpp"

namespace shiftca {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
	rows_ = rows.size();
	cols_ = rows_ ? rows.begin()->size() : 0;
	data_.reserve(rows_ * cols_);
	for (const auto &r : rows) {
		if (r.size() != cols_)
			throw Error(ErrorKind::Internal, "ragged matrix literal");
		for (long long x : r)
			data_.emplace_back(x);
	}
}

IntMatrix IntMatrix::identity(std::size_t n)
{
	IntMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>> &rows, std::size_t cols_if_empty)
{
	IntMatrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
	for (std::size_t i = 0; i < rows.size(); ++i) {
		if (rows[i].size() != m.cols_)
			throw Error(ErrorKind::Internal, "ragged matrix rows");
		for (std::size_t j = 0; j < m.cols_; ++j)
			m(i, j) = rows[i][j];
	}
	return m;
}

IntMatrix IntMatrix::transpose() const
{
	IntMatrix t(cols_, rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			t(j, i) = (*this)(i, j);
	return t;
}

IntMatrix IntMatrix::select(const std::vector<std::size_t> &row_idx, const std::vector<std::size_t> &col_idx) const
{
	IntMatrix s(row_idx.size(), col_idx.size());
	for (std::size_t i = 0; i < row_idx.size(); ++i)
		for (std::size_t j = 0; j < col_idx.size(); ++j)
			s(i, j) = (*this)(row_idx[i], col_idx[j]);
	return s;
}

bool IntMatrix::is_zero() const
{
	for (const BigInt &x : data_)
		if (x != 0)
			return false;
	return true;
}

std::vector<std::vector<long long>> IntMatrix::to_rows() const
{
	std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j) {
			const BigInt &x = (*this)(i, j);
			if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
				throw Error(ErrorKind::Internal, "matrix entry exceeds 64 bits");
			out[i][j] = x.convert_to<long long>();
		}
	return out;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
{
	if (a.cols_ != b.rows_)
		throw Error(ErrorKind::Internal, "matrix product shape mismatch");
	IntMatrix c(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k) {
			const BigInt &x = a(i, k);
			if (x == 0)
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				c(i, j) += x * b(k, j);
		}
	return c;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw Error(ErrorKind::Internal, "matrix sum shape mismatch");
	IntMatrix c = a;
	for (std::size_t i = 0; i < c.data_.size(); ++i)
		c.data_[i] += b.data_[i];
	return c;
}

IntMatrix operator-(const IntMatrix &a, const IntMatrix &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw Error(ErrorKind::Internal, "matrix difference shape mismatch");
	IntMatrix c = a;
	for (std::size_t i = 0; i < c.data_.size(); ++i)
		c.data_[i] -= b.data_[i];
	return c;
}

std::string IntMatrix::to_string() const
{
	std::ostringstream os;
	os << '[';
	for (std::size_t i = 0; i < rows_; ++i) {
		os << (i ? ",[" : "[");
		for (std::size_t j = 0; j < cols_; ++j)
			os << (j ? "," : "") << (*this)(i, j);
		os << ']';
	}
	os << ']';
	return os.str();
}

std::size_t SmithDecomposition::rank() const
{
	std::size_t r = 0;
	for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
		if (D(i, i) != 0)
			++r;
	return r;
}

std::vector<BigInt> SmithDecomposition::diagonal() const
{
	std::vector<BigInt> d;
	for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
		d.push_back(D(i, i));
	return d;
}

std::string AbelianGroup::to_string() const
{
	if (trivial())
		return "0";
	std::ostringstream os;
	bool first = true;
	if (free_rank > 0) {
		os << 'Z';
		if (free_rank > 1)
			os << '^' << free_rank;
		first = false;
	}
	for (const BigInt &d : torsion) {
		os << (first ? "" : " ⊕ ") << "Z/" << d;
		first = false;
	}
	return os.str();
}

namespace {

// Elementary operations applied to the working matrix and mirrored on U (rows) or V (columns).
struct Reducer {
	IntMatrix &D, &U, &V;

	void swap_rows(std::size_t a, std::size_t b)
	{
		if (a == b)
			return;
		for (std::size_t j = 0; j < D.cols(); ++j)
			std::swap(D(a, j), D(b, j));
		for (std::size_t j = 0; j < U.cols(); ++j)
			std::swap(U(a, j), U(b, j));
	}

	void swap_cols(std::size_t a, std::size_t b)
	{
		if (a == b)
			return;
		for (std::size_t i = 0; i < D.rows(); ++i)
			std::swap(D(i, a), D(i, b));
		for (std::size_t i = 0; i < V.rows(); ++i)
			std::swap(V(i, a), V(i, b));
	}

	// row[target] += q * row[source]
	void add_row(std::size_t target, std::size_t source, const BigInt &q)
	{
		for (std::size_t j = 0; j < D.cols(); ++j)
			D(target, j) += q * D(source, j);
		for (std::size_t j = 0; j < U.cols(); ++j)
			U(target, j) += q * U(source, j);
	}

	void add_col(std::size_t target, std::size_t source, const BigInt &q)
	{
		for (std::size_t i = 0; i < D.rows(); ++i)
			D(i, target) += q * D(i, source);
		for (std::size_t i = 0; i < V.rows(); ++i)
			V(i, target) += q * V(i, source);
	}

	void negate_row(std::size_t r)
	{
		for (std::size_t j = 0; j < D.cols(); ++j)
			D(r, j) = -D(r, j);
		for (std::size_t j = 0; j < U.cols(); ++j)
			U(r, j) = -U(r, j);
	}
};

std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix &D, std::size_t t)
{
	std::optional<std::pair<std::size_t, std::size_t>> best;
	BigInt best_abs;
	for (std::size_t i = t; i < D.rows(); ++i)
		for (std::size_t j = t; j < D.cols(); ++j) {
			if (D(i, j) == 0)
				continue;
			BigInt a = abs(D(i, j));
			if (!best || a < best_abs) {
				best = {i, j};
				best_abs = std::move(a);
			}
		}
	return best;
}

} // namespace

SmithDecomposition smith(const IntMatrix &m)
{
	SmithDecomposition s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
	Reducer red{s.D, s.U, s.V};
	IntMatrix &D = s.D;
	const std::size_t steps = std::min(m.rows(), m.cols());

	for (std::size_t t = 0; t < steps; ++t) {
		bool finished = false;
		while (true) {
			auto pivot = smallest_pivot(D, t);
			if (!pivot) {
				finished = true;
				break;
			}
			red.swap_rows(t, pivot->first);
			red.swap_cols(t, pivot->second);

			bool clean = true;
			for (std::size_t i = t + 1; i < D.rows(); ++i) {
				if (D(i, t) == 0)
					continue;
				BigInt q = D(i, t) / D(t, t);
				red.add_row(i, t, -q);
				clean = clean && D(i, t) == 0;
			}
			for (std::size_t j = t + 1; j < D.cols(); ++j) {
				if (D(t, j) == 0)
					continue;
				BigInt q = D(t, j) / D(t, t);
				red.add_col(j, t, -q);
				clean = clean && D(t, j) == 0;
			}
			if (!clean)
				continue;

			std::optional<std::size_t> offending;
			for (std::size_t i = t + 1; i < D.rows() && !offending; ++i)
				for (std::size_t j = t + 1; j < D.cols(); ++j)
					if (D(i, j) % D(t, t) != 0) {
						offending = i;
						break;
					}
			if (offending) {
				red.add_row(t, *offending, 1);
				continue;
			}
			break;
		}
		if (finished)
			break;
		if (D(t, t) < 0)
			red.negate_row(t);
	}

	if (s.U * m * s.V != s.D)
		throw Error(ErrorKind::Internal, "Smith decomposition failed to recompose");
	return s;
}

std::size_t rank(const IntMatrix &m) { return smith(m).rank(); }

AbelianGroup cokernel(const IntMatrix &m)
{
	const SmithDecomposition s = smith(m);
	AbelianGroup g;
	g.free_rank = m.rows() - s.rank();
	for (const BigInt &d : s.diagonal())
		if (d > 1)
			g.torsion.push_back(d);
	return g;
}

AbelianGroup kernel(const IntMatrix &m)
{
	AbelianGroup g;
	g.free_rank = m.cols() - rank(m);
	return g;
}

BigInt determinant(const IntMatrix &m)
{
	if (m.rows() != m.cols())
		throw Error(ErrorKind::Internal, "determinant of a non-square matrix");
	const std::size_t n = m.rows();
	if (n == 0)
		return 1;
	IntMatrix a = m;
	BigInt sign = 1, prev = 1;
	for (std::size_t k = 0; k + 1 < n; ++k) {
		if (a(k, k) == 0) {
			std::size_t swap_with = k + 1;
			while (swap_with < n && a(swap_with, k) == 0)
				++swap_with;
			if (swap_with == n)
				return 0;
			for (std::size_t j = 0; j < n; ++j)
				std::swap(a(k, j), a(swap_with, j));
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i)
			for (std::size_t j = k + 1; j < n; ++j)
				a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
		prev = a(k, k);
	}
	return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix &m) { return m.rows() == m.cols() && abs(determinant(m)) == 1; }

} // namespace shiftca
