#pragma once

#include <string>

#include "grouplat/group.hpp"

namespace grouplat {

/// Parses {"degree": n, "generators": [[images...], ...], "name": ...}.
Group group_from_json_text(const std::string& text);

/// Canonical group record; generators emitted in the stored order.
std::string group_to_json_text(const Group& g, const std::string& name = "");

}  // namespace grouplat
