#ifndef SHIFTCA_REPORT_HPP
#define SHIFTCA_REPORT_HPP

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "shiftca/conditions.hpp"
#include "shiftca/invariants.hpp"
#include "shiftca/repcheck.hpp"
#include "shiftca/tower.hpp"

namespace shiftca {

/// {"rank": r, "torsion": [d1, ...]}; torsion entries beyond 64 bits are written as strings.
nlohmann::json to_json(const AbelianGroup &g);
nlohmann::json to_json(const IntMatrix &m);
nlohmann::json to_json(const KGroupsReport &r);
nlohmann::json to_json(const Verdict &v);
nlohmann::json to_json(const IdealLatticeReport &r);
nlohmann::json to_json(const BowenFranks &b);
nlohmann::json to_json(const CkOracleReport &r);
nlohmann::json to_json(const RelationReport &r, const Alphabet &alphabet);
nlohmann::json dimension_group_json(const Tower &t, std::size_t k_max);

/// Words of length <= l preceding points with T-set t, in length-lex order; at most `cap`
/// words are listed and `truncated` says whether more exist.
struct CappedPastSet {
	std::vector<Word> words;
	bool truncated = false;
};
CappedPastSet capped_past_set(const ShiftGraph &g, const VertexSet &t, std::size_t l, std::size_t cap);

/// Per level: m, each class with its T-sets and past set, M_k, and I, ΣA, B where level + 1 exists.
nlohmann::json tower_dump(const Tower &t, std::size_t words_per_class = 1024);

} // namespace shiftca

#endif
