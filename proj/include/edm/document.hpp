#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "edm/cbba.hpp"

namespace edm {

// CBBA documents are JSON:
//
//   {"frame": ["A", "B"],
//    "masses": [{"set": ["A"], "re": 0.2, "im": 0.1}, ...]}
//
// Unknown keys are rejected. Structural problems are reported as PARSE_ERROR,
// set entries naming a non-frame element as UNKNOWN_ELEMENT, and everything
// else goes through validate_cbba.

ValidationResult parse_cbba_document(std::string_view text);
ValidationResult parse_cbba_file(const std::filesystem::path& path);

/// Serializes with shortest round-trip decimal representation of each component.
std::string serialize_cbba(const Cbba& m);

}  // namespace edm
