#ifndef SHIFTCA_INVARIANTS_HPP
#define SHIFTCA_INVARIANTS_HPP

#include <cstddef>
#include <vector>

#include "shiftca/intlinalg.hpp"
#include "shiftca/presentation.hpp"
#include "shiftca/tower.hpp"

namespace shiftca {

struct KGroupsReport {
	AbelianGroup k0;
	AbelianGroup k1;
	std::size_t level = 0; ///< level l whose B^l was used
	bool exact = false;    ///< true iff the tower stabilized at `level`

	friend bool operator==(const KGroupsReport &, const KGroupsReport &) = default;
};

/// K0 = coker(B^l), K1 = ker(B^l) at the stabilized level, or at the top usable level with
/// exact = false. Throws TowerTooShallow when fewer than two levels exist.
KGroupsReport k_groups(const Tower &t);

/// Stationary data for one filtration depth k at the stabilized level: the group Z^{M_k},
/// positive cone coordinatewise, connecting map A_k : Z^{M_k} -> Z^{M_{k+1}} and the
/// coordinate projection δ_k : Z^{M_k} -> Z^{M_{k+1}}.
struct StationarySystem {
	std::size_t k = 0;
	std::size_t level = 0;
	std::vector<std::size_t> classes;      ///< M_k, as class indices at `level`
	std::vector<std::size_t> next_classes; ///< M_{k+1}
	IntMatrix map;
	IntMatrix delta;

	std::size_t rank() const { return classes.size(); }
};

/// Throws NotStabilized.
std::vector<StationarySystem> dimension_group(const Tower &t, std::size_t k_max);

/// ΣA at the stabilized level expressed on level-l0 classes: the square map P^T·ΣA_{l0} where
/// P = I_{l0} is the post-stabilization bijection. Throws NotStabilized.
IntMatrix stable_transition(const Tower &t);

struct BowenFranks {
	AbelianGroup group;
	IntMatrix from_matrix;
};

/// coker(I - A). Throws WrongKind unless p is a matrix presentation.
BowenFranks bowen_franks(const Presentation &p);

struct CkOracleReport {
	KGroupsReport collapsed;    ///< on the matrix with equal columns identified
	KGroupsReport raw;          ///< on A itself
	IntMatrix collapsed_matrix; ///< A'(C, D) = Σ_{a in C} A(a, d) for any d in D
	std::vector<std::vector<std::size_t>> column_classes;
};

/// Cuntz–Krieger groups coker / ker of (I - A^T), computed from the matrix alone.
/// Throws WrongKind unless p is a matrix presentation.
CkOracleReport ck_oracle(const Presentation &p);
CkOracleReport ck_oracle(const std::vector<std::vector<int>> &a);

} // namespace shiftca

#endif
