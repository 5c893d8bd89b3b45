#include "shiftca/error.hpp"

namespace shiftca {

std::string_view to_string(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::EmptyAlphabet: return "EmptyAlphabet";
	case ErrorKind::DuplicateSymbol: return "DuplicateSymbol";
	case ErrorKind::UnknownSymbol: return "UnknownSymbol";
	case ErrorKind::ZeroRow: return "ZeroRow";
	case ErrorKind::NonBinaryEntry: return "NonBinaryEntry";
	case ErrorKind::NotSquare: return "NotSquare";
	case ErrorKind::EmptyWord: return "EmptyWord";
	case ErrorKind::DanglingEdge: return "DanglingEdge";
	case ErrorKind::EmptyShift: return "EmptyShift";
	case ErrorKind::MalformedInput: return "MalformedInput";
	case ErrorKind::WrongKind: return "WrongKind";
	case ErrorKind::WordNotInLanguage: return "WordNotInLanguage";
	case ErrorKind::MonoidBudgetExceeded: return "MonoidBudgetExceeded";
	case ErrorKind::DepthTooLarge: return "DepthTooLarge";
	case ErrorKind::LevelMissing: return "LevelMissing";
	case ErrorKind::TowerTooShallow: return "TowerTooShallow";
	case ErrorKind::NotStabilized: return "NotStabilized";
	case ErrorKind::IllDefinedTransition: return "IllDefinedTransition";
	case ErrorKind::Internal: return "Internal";
	}
	return "Unknown";
}

ErrorCategory category_of(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::MonoidBudgetExceeded:
	case ErrorKind::DepthTooLarge:
	case ErrorKind::NotStabilized:
	case ErrorKind::TowerTooShallow:
		return ErrorCategory::Budget;
	case ErrorKind::LevelMissing:
	case ErrorKind::IllDefinedTransition:
	case ErrorKind::Internal:
		return ErrorCategory::Internal;
	default:
		return ErrorCategory::Input;
	}
}

} // namespace shiftca
