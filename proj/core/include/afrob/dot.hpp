#pragma once

#include <optional>
#include <string>

#include "afrob/framework.hpp"
#include "afrob/labelling.hpp"

namespace afrob {

/// Graphviz digraph of `g`, nodes and edges in canonical order. With a
/// labelling, each node gets class="in|out|undec" and a matching fill colour.
/// Throws LabellingMismatch if the labelling does not cover exactly g's
/// arguments.
std::string emit_dot(const Framework& g, const std::optional<Labelling>& labelling = std::nullopt);

}  // namespace afrob
