#include "afrob/semantics.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "afrob/error.hpp"
#include "afrob/labelling.hpp"

namespace afrob {

namespace {

constexpr std::array<std::string_view, 7> kNames = {"cf", "adm", "com", "stb", "prf", "gde", "sst"};

template <typename Pred>
std::vector<ArgSet> subsets_where(const Framework& g, Pred&& keep) {
  require_enumerable(g);
  std::vector<ArgSet> out;
  const std::uint64_t count = std::uint64_t{1} << g.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ArgSet e(bits);
    if (keep(e)) out.push_back(e);
  }
  return out;
}

}  // namespace

std::string_view to_string(Semantics s) { return kNames[static_cast<std::size_t>(s)]; }

std::optional<Semantics> parse_semantics(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Semantics>(i);
  }
  return std::nullopt;
}

void require_enumerable(const Framework& g, std::size_t limit) {
  if (g.size() > limit) {
    throw Error(ErrorKind::SizeLimit, "framework has " + std::to_string(g.size()) +
                                          " arguments; enumeration is limited to " +
                                          std::to_string(limit));
  }
}

ExtensionSet::ExtensionSet(std::vector<ArgSet> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ExtensionSet::contains(ArgSet e) const {
  return std::binary_search(members_.begin(), members_.end(), e, canonical_less);
}

ExtensionSet ExtensionSet::minus(const ExtensionSet& other) const {
  std::vector<ArgSet> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out), canonical_less);
  return ExtensionSet(std::move(out));
}

std::vector<ArgSet> maximal_sets(const std::vector<ArgSet>& sets) {
  std::vector<ArgSet> out;
  for (ArgSet s : sets) {
    const bool dominated =
        std::any_of(sets.begin(), sets.end(), [s](ArgSet t) { return s.proper_subset_of(t); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<ArgSet> minimal_sets(const std::vector<ArgSet>& sets) {
  std::vector<ArgSet> out;
  for (ArgSet s : sets) {
    const bool dominated =
        std::any_of(sets.begin(), sets.end(), [s](ArgSet t) { return t.proper_subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

bool is_conflict_free(const Framework& g, ArgSet e) { return !attacked_by(g, e).intersects(e); }

bool is_admissible(const Framework& g, ArgSet e) {
  if (!is_conflict_free(g, e)) return false;
  const ArgSet counter = attacked_by(g, e);
  for (std::size_t a : e) {
    if (!g.attackers_of(a).subset_of(counter)) return false;
  }
  return true;
}

bool is_complete(const Framework& g, ArgSet e) {
  if (!is_admissible(g, e)) return false;
  const ArgSet counter = attacked_by(g, e);
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (!e.contains(a) && g.attackers_of(a).subset_of(counter)) return false;
  }
  return true;
}

bool is_stable(const Framework& g, ArgSet e) {
  return is_conflict_free(g, e) && (g.all() - e).subset_of(attacked_by(g, e));
}

ExtensionSet conflict_free_sets(const Framework& g) {
  return ExtensionSet(subsets_where(g, [&](ArgSet e) { return is_conflict_free(g, e); }));
}

ExtensionSet admissible_sets(const Framework& g) {
  return ExtensionSet(subsets_where(g, [&](ArgSet e) { return is_admissible(g, e); }));
}

ExtensionSet complete_sets(const Framework& g) {
  return ExtensionSet(subsets_where(g, [&](ArgSet e) { return is_complete(g, e); }));
}

ExtensionSet stable_sets(const Framework& g) {
  return ExtensionSet(subsets_where(g, [&](ArgSet e) { return is_stable(g, e); }));
}

ExtensionSet preferred_sets(const Framework& g) {
  return ExtensionSet(maximal_sets(admissible_sets(g).members()));
}

ExtensionSet grounded_set(const Framework& g) {
  auto minimal = minimal_sets(complete_sets(g).members());
  if (minimal.size() != 1) {
    throw Error(ErrorKind::InternalInvariantViolation,
                "expected a unique minimal complete extension, found " +
                    std::to_string(minimal.size()));
  }
  return ExtensionSet(std::move(minimal));
}

ExtensionSet semi_stable_sets(const Framework& g) {
  std::vector<ArgSet> ins;
  for (const Labelling& l : labellings_for(g, Semantics::sst)) ins.push_back(l.in());
  return ExtensionSet(std::move(ins));
}

ExtensionSet extensions(const Framework& g, Semantics sigma) {
  switch (sigma) {
    case Semantics::cf: return conflict_free_sets(g);
    case Semantics::adm: return admissible_sets(g);
    case Semantics::com: return complete_sets(g);
    case Semantics::stb: return stable_sets(g);
    case Semantics::prf: return preferred_sets(g);
    case Semantics::gde: return grounded_set(g);
    case Semantics::sst: return semi_stable_sets(g);
  }
  throw Error(ErrorKind::UnsupportedSemantics, "unknown semantics");
}

}  // namespace afrob
