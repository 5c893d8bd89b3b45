#ifndef SHIFTCA_CONDITIONS_HPP
#define SHIFTCA_CONDITIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shiftca/tower.hpp"

namespace shiftca {

enum class Status { Holds, Fails, Inconclusive };
enum class Method { Exact, BoundedSearch };

std::string to_string(Status s);
std::string to_string(Method m);

struct Verdict {
	std::string condition; ///< "I", "star", "aperiodic", "irreducible"
	Status status = Status::Inconclusive;
	Method method = Method::Exact;
	std::optional<std::size_t> bound; ///< search bound for BoundedSearch
	nlohmann::json certificate = nlohmann::json::object();
};

/// The optional `level` evaluates a check at a built level at or beyond stabilization
/// (default: the stabilized level); earlier levels are rejected with LevelMissing.

/// Every l-past class has two distinct points. A class of T-set family S is the set of points
/// whose relation-monoid run eventually stays among elements with domain in S; it is a single
/// point iff no state on a surviving run has two surviving successors.
/// Exact on a stabilized tower; otherwise a singleton at the top level still proves Fails.
Verdict condition_I(const Tower &t, std::optional<std::size_t> level = std::nullopt);

/// Every infinite word class of Ω_l* shares its past set with some point, for every l.
/// Checked up to the level where word classes stop refining, so always exact.
Verdict condition_star(const Tower &t);

/// For every T-set t and every stabilized class c some u (ε allowed) has Pre_u(t) in c.
/// Throws NotStabilized.
Verdict aperiodic_past(const Tower &t, std::optional<std::size_t> level = std::nullopt);

/// Same reachability test; necessary via constant sequences and sufficient with N = 1.
/// Throws NotStabilized.
Verdict irreducible_past(const Tower &t, std::optional<std::size_t> level = std::nullopt);

struct IdealLatticeReport {
	std::size_t level = 0;
	std::vector<std::vector<std::size_t>> elements;           ///< sorted class-index sets, sorted by size then lex
	std::vector<std::pair<std::size_t, std::size_t>> hasse;   ///< covering pairs (lower, upper) as element indices
	bool hasse_computed = true;
};

/// Sets of stabilized classes closed under x -> σx and saturated (a class whose every
/// σ-successor class is inside belongs too). Throws NotStabilized, or MonoidBudgetExceeded
/// when the lattice exceeds `cap` elements.
IdealLatticeReport ideal_lattice(const Tower &t, std::optional<std::size_t> level = std::nullopt,
                                 std::size_t cap = 100000);

/// Least σ-closed saturated superset of `seed` at the stabilized level.
std::vector<std::size_t> ideal_closure(const Tower &t, const std::vector<std::size_t> &seed,
                                       std::optional<std::size_t> level = std::nullopt);

/// Classes of the points σx for x in class c at the stabilized level.
std::vector<std::vector<std::size_t>> shift_successor_classes(const Tower &t,
                                                              std::optional<std::size_t> level = std::nullopt);

} // namespace shiftca

#endif
