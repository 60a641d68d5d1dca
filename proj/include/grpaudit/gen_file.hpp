#pragma once

#include <string>
#include <string_view>

#include "grpaudit/perm_group.hpp"

namespace grpaudit {

/// Generator files: a "degree n" line, then one generator per line in
/// 1-based disjoint-cycle notation. Blank lines and text after '#' are
/// ignored. Errors carry the offending line number.
PermGroup parse_generator_text(std::string_view text);
PermGroup load_generator_file(const std::string& path);

std::string format_generator_text(const PermGroup& g, std::string_view comment = {});

}  // namespace grpaudit
