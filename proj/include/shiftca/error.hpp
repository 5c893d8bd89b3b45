#ifndef SHIFTCA_ERROR_HPP
#define SHIFTCA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftca {

enum class ErrorKind {
	// input / validation
	EmptyAlphabet,
	DuplicateSymbol,
	UnknownSymbol,
	ZeroRow,
	NonBinaryEntry,
	NotSquare,
	EmptyWord,
	DanglingEdge,
	EmptyShift,
	MalformedInput,
	WrongKind,
	WordNotInLanguage,
	// budgets
	MonoidBudgetExceeded,
	DepthTooLarge,
	// tower / invariants
	LevelMissing,
	TowerTooShallow,
	NotStabilized,
	IllDefinedTransition,
	// invariant violations inside the library
	Internal,
};

std::string_view to_string(ErrorKind kind);

/// Category used by the command line front end to pick an exit code.
enum class ErrorCategory { Input, Budget, Internal };

ErrorCategory category_of(ErrorKind kind);

class Error : public std::runtime_error {
public:
	Error(ErrorKind kind, const std::string &what)
	    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

	ErrorKind kind() const noexcept { return kind_; }

private:
	ErrorKind kind_;
};

} // namespace shiftca

#endif
