#ifndef SHIFTCA_TOWER_HPP
#define SHIFTCA_TOWER_HPP

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "shiftca/intlinalg.hpp"
#include "shiftca/pastsets.hpp"
#include "shiftca/presentation.hpp"

namespace shiftca {

/// One l-past equivalence class E_i^l of points.
struct PastClass {
	std::size_t index = 0;
	std::vector<std::size_t> tsets;   ///< indices into Tower::tsets()
	std::vector<bool> has_exact_past; ///< k = 0..l: some predecessor word of exact length k
};

struct TowerLevel {
	std::size_t level = 0;
	std::vector<PastClass> classes;
	std::vector<std::size_t> class_of_tset;
	/// Representatives (indices into Tower::universe()) of the infinite word classes Ω_l*.
	std::vector<std::size_t> word_classes_star;

	std::size_t m() const { return classes.size(); }
};

struct TowerOptions {
	std::size_t max_level = 64;
	std::size_t monoid_cap = default_monoid_cap;
};

struct TransitionMatrices {
	std::vector<IntMatrix> by_symbol; ///< A_l(·,·,a), m(l+1) x m(l)
	IntMatrix summed;                 ///< Σ_a A_l
};

/// The l-past equivalence tower of a sofic shift.
///
/// Past sets of points are functions of their T-sets, and
/// P_{l+1}(x) is determined by the pairs (a, P_l(ax)) with ax in X, so the
/// levels come from Moore-style refinement of the realized T-sets under
/// t -> Pre_a(t), an empty Pre acting as a dead class. The same refinement
/// runs over the domains dom(R_u) of all words so that word pasts P_l(u)
/// can be compared with point pasts. Class order at each level is the
/// length-major, then lexicographic order of the classes' past sets.
///
/// Levels are built until the point partition repeats (stabilized_at = l0)
/// and then two more, or until max_level.
class Tower {
public:
	static constexpr std::size_t dead = std::numeric_limits<std::size_t>::max();

	static Tower build(std::shared_ptr<const ShiftGraph> g, const TowerOptions &opts = {});
	static Tower build(const ShiftGraph &g, const TowerOptions &opts = {});

	const ShiftGraph &graph() const { return *graph_; }
	const RelationMonoid &monoid() const { return *monoid_; }

	const std::vector<VertexSet> &tsets() const { return tsets_; }
	const std::vector<TowerLevel> &levels() const { return levels_; }
	const TowerLevel &level(std::size_t l) const;
	std::size_t top_level() const { return levels_.size() - 1; }
	std::optional<std::size_t> stabilized_at() const { return stabilized_at_; }
	const TowerOptions &options() const { return opts_; }

	/// I_l(i,j) = 1 iff E_i^{l+1} ⊆ E_j^l.
	const IntMatrix &matrix_I(std::size_t l) const;
	/// A_l(i,j,a) = 1 iff ∅ ≠ aE_i^{l+1} ⊆ E_j^l.
	const TransitionMatrices &matrix_A(std::size_t l) const;
	/// M_k^l: classes with a predecessor word of exact length k. For k > l the
	/// class qualifies when one of its T-sets has such a word.
	std::vector<std::size_t> filtration_M(std::size_t k, std::size_t l) const;
	/// B^l : Z^{M_1^l} -> Z^{m(l+1)}, e_j -> Σ_i (I_l(i,j) - Σ_a A_l(i,j,a)) e_i.
	IntMatrix matrix_B(std::size_t l) const;

	/// I_k^l : Z^{M_k^l} -> Z^{M_k^{l+1}}.
	IntMatrix map_I(std::size_t k, std::size_t l) const;
	/// A_k^l : Z^{M_k^l} -> Z^{M_{k+1}^{l+1}}.
	IntMatrix map_A(std::size_t k, std::size_t l) const;
	/// δ_k^l : Z^{M_k^l} -> Z^{M_{k+1}^l}, coordinate projection.
	IntMatrix map_delta(std::size_t k, std::size_t l) const;

	PastSet past_set(std::size_t l, std::size_t class_index) const;

	// Universe of vertex sets: the T-sets first, then the other word domains.
	const std::vector<VertexSet> &universe() const { return universe_; }
	bool infinite_word_domain(std::size_t u) const { return infinite_word_domain_[u]; }
	/// Index of Pre_a(universe[u]) in the universe, or `dead`.
	std::size_t pre_index(std::size_t u, Symbol a) const { return pre_[u][a]; }
	/// Partition id of universe[u] at level l; levels past stabilization reuse the last one.
	std::size_t universe_class(std::size_t l, std::size_t u) const;
	std::size_t universe_stabilized_at() const { return universe_partitions_.size() - 1; }

	/// Whether some word of exact length k may precede points with T-set tsets()[t].
	bool tset_has_exact_past(std::size_t t, std::size_t k) const;

private:
	Tower() = default;

	void check_pair(std::size_t l) const;

	std::shared_ptr<const ShiftGraph> graph_;
	std::shared_ptr<const RelationMonoid> monoid_;
	TowerOptions opts_;
	std::vector<VertexSet> tsets_;
	std::vector<VertexSet> universe_;
	std::vector<bool> infinite_word_domain_;
	std::vector<std::vector<std::size_t>> pre_;
	std::vector<std::vector<std::size_t>> universe_partitions_;
	std::vector<std::vector<bool>> exact_past_;
	std::vector<TowerLevel> levels_;
	std::vector<IntMatrix> I_;
	std::vector<TransitionMatrices> A_;
	std::optional<std::size_t> stabilized_at_;
};

} // namespace shiftca

#endif
