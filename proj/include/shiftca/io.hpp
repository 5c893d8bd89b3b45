#ifndef SHIFTCA_IO_HPP
#define SHIFTCA_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "shiftca/presentation.hpp"

namespace shiftca {

/// Reads a "shiftspace-v1" document. Exactly the fields of the declared kind are accepted;
/// anything else is MalformedInput.
RawPresentation parse_shiftspace(const nlohmann::json &doc);

/// Parses and validates the file at `path`.
Presentation load_presentation(const std::filesystem::path &path);

/// The validated presentation written back as a "shiftspace-v1" document. Keys are sorted, so
/// dump() of the result is a stable content key.
nlohmann::json canonical_json(const Presentation &p);

} // namespace shiftca

#endif
