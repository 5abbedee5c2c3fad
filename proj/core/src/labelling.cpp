#include "afrob/labelling.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "afrob/error.hpp"

namespace afrob {

std::string_view to_string(Label l) {
  switch (l) {
    case Label::in: return "in";
    case Label::out: return "out";
    case Label::undec: return "undec";
  }
  return "?";
}

Labelling::Labelling(ArgSet universe, ArgSet in, ArgSet out)
    : in_(in), out_(out), undec_(universe - in - out) {}

ArgSet Labelling::of(Label l) const noexcept {
  switch (l) {
    case Label::in: return in_;
    case Label::out: return out_;
    case Label::undec: return undec_;
  }
  return {};
}

Label Labelling::at(std::size_t i) const noexcept {
  if (in_.contains(i)) return Label::in;
  if (out_.contains(i)) return Label::out;
  return Label::undec;
}

bool labelling_less(const Labelling& a, const Labelling& b) {
  if (a.in() != b.in()) return lexicographic_less(a.in(), b.in());
  return lexicographic_less(a.out(), b.out());
}

namespace {

void sort_labellings(std::vector<Labelling>& ls) {
  std::sort(ls.begin(), ls.end(), labelling_less);
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
}

template <typename Pred>
std::vector<Labelling> all_labellings_where(const Framework& g, Pred&& keep) {
  require_enumerable(g, kMaxLabellingArguments);
  const ArgSet universe = g.all();
  std::vector<Labelling> out;
  const std::uint64_t count = std::uint64_t{1} << g.size();
  for (std::uint64_t in_bits = 0; in_bits < count; ++in_bits) {
    const std::uint64_t rest = universe.bits() & ~in_bits;
    // every subset of `rest` as the out-set, the empty one included
    std::uint64_t out_bits = rest;
    while (true) {
      Labelling l(universe, ArgSet(in_bits), ArgSet(out_bits));
      if (keep(l)) out.push_back(l);
      if (out_bits == 0) break;
      out_bits = (out_bits - 1) & rest;
    }
  }
  sort_labellings(out);
  return out;
}

}  // namespace

Labelling labelling_of_set(const Framework& g, ArgSet e) {
  return Labelling(g.all(), e, attacked_by(g, e) - e);
}

Labelling labelling_of_extension(const Framework& g, ArgSet e) {
  if (!e.subset_of(g.all()) || !is_admissible(g, e)) {
    throw Error(ErrorKind::NotAdmissible, "set is not admissible");
  }
  return labelling_of_set(g, e);
}

bool is_reinstatement_labelling(const Framework& g, const Labelling& l) {
  for (std::size_t a : l.in()) {
    if (!g.attackers_of(a).subset_of(l.out())) return false;
  }
  for (std::size_t a : l.out()) {
    if (!g.attackers_of(a).intersects(l.in())) return false;
  }
  return true;
}

bool is_complete_labelling(const Framework& g, const Labelling& l) {
  if (!is_reinstatement_labelling(g, l)) return false;
  for (std::size_t a = 0; a < g.size(); ++a) {
    const ArgSet att = g.attackers_of(a);
    if (att.subset_of(l.out()) && !l.in().contains(a)) return false;
    if (att.intersects(l.in()) && !l.out().contains(a)) return false;
  }
  return true;
}

std::vector<Labelling> reinstatement_labellings(const Framework& g) {
  return all_labellings_where(g, [&](const Labelling& l) { return is_reinstatement_labelling(g, l); });
}

std::vector<Labelling> complete_labellings(const Framework& g) {
  return all_labellings_where(g, [&](const Labelling& l) { return is_complete_labelling(g, l); });
}

std::vector<Labelling> restrict_labellings(const std::vector<Labelling>& labellings,
                                           Extremum extremum, Label label) {
  std::vector<Labelling> out;
  for (const Labelling& l : labellings) {
    const ArgSet s = l.of(label);
    bool keep = false;
    switch (extremum) {
      case Extremum::empty:
        keep = s.empty();
        break;
      case Extremum::maximal:
        keep = std::none_of(labellings.begin(), labellings.end(),
                            [&](const Labelling& o) { return s.proper_subset_of(o.of(label)); });
        break;
      case Extremum::minimal:
        keep = std::none_of(labellings.begin(), labellings.end(),
                            [&](const Labelling& o) { return o.of(label).proper_subset_of(s); });
        break;
    }
    if (keep) out.push_back(l);
  }
  return out;
}

std::vector<Labelling> labellings_for(const Framework& g, Semantics sigma) {
  auto complete = complete_labellings(g);
  switch (sigma) {
    case Semantics::com:
      return complete;
    case Semantics::stb:
      return restrict_labellings(complete, Extremum::empty, Label::undec);
    case Semantics::prf:
      return restrict_labellings(complete, Extremum::maximal, Label::in);
    case Semantics::gde: {
      auto grounded = restrict_labellings(complete, Extremum::minimal, Label::in);
      if (grounded.size() != 1) {
        throw Error(ErrorKind::InternalInvariantViolation,
                    "expected a unique grounded labelling, found " +
                        std::to_string(grounded.size()));
      }
      return grounded;
    }
    case Semantics::sst:
      return restrict_labellings(complete, Extremum::minimal, Label::undec);
    case Semantics::cf:
    case Semantics::adm:
      break;
  }
  throw Error(ErrorKind::UnsupportedSemantics,
              "no labelling restriction for semantics '" + std::string(to_string(sigma)) + "'");
}

std::vector<Labelling> semantics_labellings(const Framework& g, Semantics sigma) {
  std::vector<Labelling> out;
  switch (sigma) {
    case Semantics::cf:
      for (ArgSet e : conflict_free_sets(g)) out.push_back(labelling_of_set(g, e));
      break;
    case Semantics::adm:
      for (ArgSet e : admissible_sets(g)) out.push_back(labelling_of_extension(g, e));
      break;
    default:
      return labellings_for(g, sigma);
  }
  sort_labellings(out);
  return out;
}

CredulousSets credulous_sets(const Framework& g, Semantics sigma) {
  CredulousSets sets;
  for (const Labelling& l : semantics_labellings(g, sigma)) {
    sets.in |= l.in();
    sets.out |= l.out();
    sets.undec |= l.undec();
  }
  return sets;
}

}  // namespace afrob
