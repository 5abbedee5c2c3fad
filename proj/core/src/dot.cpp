#include "afrob/dot.hpp"

#include "afrob/error.hpp"

namespace afrob {

namespace {

std::string_view fill_colour(Label l) {
  switch (l) {
    case Label::in: return "palegreen";
    case Label::out: return "lightcoral";
    case Label::undec: return "khaki";
  }
  return "white";
}

}  // namespace

std::string emit_dot(const Framework& g, const std::optional<Labelling>& labelling) {
  if (labelling && (labelling->in() | labelling->out() | labelling->undec()) != g.all()) {
    throw Error(ErrorKind::LabellingMismatch, "labelling does not cover the framework's arguments");
  }
  std::string out = "digraph af {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out += "  \"" + g.name(i).str() + "\"";
    if (labelling) {
      const Label l = labelling->at(i);
      out += " [class=\"" + std::string(to_string(l)) + "\", style=filled, fillcolor=\"" +
             std::string(fill_colour(l)) + "\"]";
    }
    out += ";\n";
  }
  for (const Attack& a : g.attacks()) {
    out += "  \"" + a.source.str() + "\" -> \"" + a.target.str() + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace afrob
