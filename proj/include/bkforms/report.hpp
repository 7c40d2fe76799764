#pragma once

#include <string>

#include "bkforms/form_spec.hpp"

namespace bkforms {

/// Canonical serialization: insertion-ordered objects, two-space indentation,
/// every float printed with 17 significant digits, trailing newline.
/// parse + re-dump of its own output is byte-identical.
std::string canonical_dump(const Json& doc);

/// Parse with errors wrapped as ValidationError.
Json parse_json(const std::string& text);

std::string format_double(double x);

/// Human-readable rendering of a report produced by the command layer.
std::string render_text(const Json& report);

}  // namespace bkforms
