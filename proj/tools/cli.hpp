#ifndef SHIFTCA_TOOLS_CLI_HPP
#define SHIFTCA_TOOLS_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "shiftca/pastsets.hpp"

namespace shiftca::cli {

enum ExitCode : int { Ok = 0, InputError = 1, Partial = 2, InternalError = 3 };

struct RunConfig {
	std::string command;
	std::string input;
	std::size_t max_level = 64;
	std::size_t monoid_cap = default_monoid_cap;
	std::size_t depth = 6;
	std::size_t budget = 0; ///< word budget for repcheck; 0 means depth / 2
	std::size_t k_max = 3;
	std::string condition;
	bool json = false;
	bool allow_partial = false;
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace shiftca::cli

#endif
