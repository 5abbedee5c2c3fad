#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "afrob/arg_set.hpp"
#include "afrob/framework.hpp"
#include "afrob/semantics.hpp"

namespace afrob {

enum class Label { in, out, undec };

std::string_view to_string(Label l);

/// Total in/out/undec assignment over the arguments of one framework.
class Labelling {
 public:
  Labelling() = default;
  /// `in` and `out` must be disjoint subsets of `universe`; the rest is undec.
  Labelling(ArgSet universe, ArgSet in, ArgSet out);

  ArgSet in() const noexcept { return in_; }
  ArgSet out() const noexcept { return out_; }
  ArgSet undec() const noexcept { return undec_; }
  ArgSet of(Label l) const noexcept;
  Label at(std::size_t i) const noexcept;

  friend bool operator==(const Labelling&, const Labelling&) = default;

 private:
  ArgSet in_;
  ArgSet out_;
  ArgSet undec_;
};

/// Lexicographic by in-set, ties broken by out-set.
bool labelling_less(const Labelling& a, const Labelling& b);

inline constexpr std::size_t kMaxLabellingArguments = 16;

/// in = e, out = arguments attacked by e (minus e), undec = the rest. No
/// validity check; used for conflict-free sets.
Labelling labelling_of_set(const Framework& g, ArgSet e);

/// As labelling_of_set, but throws NotAdmissible unless `e` is admissible.
Labelling labelling_of_extension(const Framework& g, ArgSet e);

/// Every in-argument has all attackers out; every out-argument has an in
/// attacker.
bool is_reinstatement_labelling(const Framework& g, const Labelling& l);
/// Reinstatement labelling that also satisfies the converse conditions.
bool is_complete_labelling(const Framework& g, const Labelling& l);

/// All 3^n assignments satisfying is_reinstatement_labelling. SizeLimit above
/// kMaxLabellingArguments.
std::vector<Labelling> reinstatement_labellings(const Framework& g);
std::vector<Labelling> complete_labellings(const Framework& g);

enum class Extremum { empty, maximal, minimal };

/// One row of the restriction table linking complete labellings to a
/// semantics, e.g. {maximal, in} -> preferred.
struct LabelRestriction {
  Extremum extremum;
  Label label;
  Semantics semantics;
};

inline constexpr std::array<LabelRestriction, 7> kRestrictionTable = {{
    {Extremum::empty, Label::undec, Semantics::stb},
    {Extremum::maximal, Label::in, Semantics::prf},
    {Extremum::maximal, Label::out, Semantics::prf},
    {Extremum::maximal, Label::undec, Semantics::gde},
    {Extremum::minimal, Label::in, Semantics::gde},
    {Extremum::minimal, Label::out, Semantics::gde},
    {Extremum::minimal, Label::undec, Semantics::sst},
}};

/// Keeps the labellings whose `label`-set is empty, or ⊆-maximal/minimal
/// within `labellings`.
std::vector<Labelling> restrict_labellings(const std::vector<Labelling>& labellings,
                                           Extremum extremum, Label label);

/// Complete labellings filtered by the canonical restriction for `sigma`
/// (stb: empty undec, prf: maximal in, gde: minimal in, sst: minimal undec).
/// Throws UnsupportedSemantics for cf and adm.
std::vector<Labelling> labellings_for(const Framework& g, Semantics sigma);

/// Arguments labelled in/out/undec in at least one labelling associated with
/// the extensions of `sigma`.
struct CredulousSets {
  ArgSet in;
  ArgSet out;
  ArgSet undec;
};

/// The labellings the credulous sets are built from: labelling_of_set for cf,
/// labelling_of_extension for adm, labellings_for otherwise.
std::vector<Labelling> semantics_labellings(const Framework& g, Semantics sigma);

CredulousSets credulous_sets(const Framework& g, Semantics sigma);

}  // namespace afrob
