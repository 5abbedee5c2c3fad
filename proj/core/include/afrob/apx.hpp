#pragma once

#include <string>
#include <string_view>

#include "afrob/framework.hpp"

namespace afrob {

/// Parses the line-based apx format:
///
///   % comment
///   arg(a).
///   att(a,b).
///
/// Blank lines and lines starting with `%` (after leading whitespace) are
/// skipped. Whitespace is allowed around the statement and between its
/// tokens. Attacks may refer to arguments declared further down; duplicates
/// are merged. Throws ParseError or UndeclaredArgument.
Framework parse_apx(std::string_view text);

/// Canonical apx rendering: arguments, then attacks, in canonical order.
std::string to_apx(const Framework& g);

}  // namespace afrob
