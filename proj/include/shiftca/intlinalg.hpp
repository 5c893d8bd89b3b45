#ifndef SHIFTCA_INTLINALG_HPP
#define SHIFTCA_INTLINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shiftca {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of exact integers.
class IntMatrix {
public:
	IntMatrix() = default;
	IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
	IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

	static IntMatrix identity(std::size_t n);
	static IntMatrix from_rows(const std::vector<std::vector<long long>> &rows, std::size_t cols_if_empty = 0);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	BigInt &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	const BigInt &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

	IntMatrix transpose() const;
	/// Rows and columns picked by index, in the order given.
	IntMatrix select(const std::vector<std::size_t> &row_idx, const std::vector<std::size_t> &col_idx) const;

	bool is_zero() const;
	std::vector<std::vector<long long>> to_rows() const; ///< throws if an entry overflows long long

	friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
	friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
	friend IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
	friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

	std::string to_string() const;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<BigInt> data_;
};

/// U·M·V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all d >= 0.
struct SmithDecomposition {
	IntMatrix U;
	IntMatrix D;
	IntMatrix V;

	std::size_t rank() const;
	std::vector<BigInt> diagonal() const;
};

/// Finitely generated abelian group Z^free_rank ⊕ Z/d1 ⊕ ... with d1 | d2 | ..., every d >= 2.
struct AbelianGroup {
	std::size_t free_rank = 0;
	std::vector<BigInt> torsion;

	bool trivial() const { return free_rank == 0 && torsion.empty(); }
	/// "0", "Z", "Z^2 ⊕ Z/3", ...
	std::string to_string() const;

	friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;
};

/// Deterministic: pivot is the smallest nonzero |entry|, ties broken row-major.
/// The decomposition is recomposed and checked before returning.
SmithDecomposition smith(const IntMatrix &m);

std::size_t rank(const IntMatrix &m);

/// Z^rows / M·Z^cols.
AbelianGroup cokernel(const IntMatrix &m);

/// ker(M : Z^cols -> Z^rows), always free.
AbelianGroup kernel(const IntMatrix &m);

/// Fraction-free Gaussian elimination.
BigInt determinant(const IntMatrix &m);

bool is_unimodular(const IntMatrix &m);

} // namespace shiftca

#endif
