#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "afrob/arg_set.hpp"
#include "afrob/framework.hpp"

namespace afrob {

enum class Semantics { cf, adm, com, stb, prf, gde, sst };

inline constexpr Semantics kAllSemantics[] = {Semantics::cf,  Semantics::adm, Semantics::com,
                                              Semantics::stb, Semantics::prf, Semantics::gde,
                                              Semantics::sst};

std::string_view to_string(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view name);

/// Subset enumeration visits 2^n candidates; larger frameworks are refused.
inline constexpr std::size_t kMaxEnumerationArguments = 24;

/// Throws SizeLimit when `g` is too large for subset enumeration.
void require_enumerable(const Framework& g, std::size_t limit = kMaxEnumerationArguments);

/// A set of extensions, kept sorted by size then lexicographically and free
/// of duplicates, so that equality is equality of the set of sets.
class ExtensionSet {
 public:
  ExtensionSet() = default;
  explicit ExtensionSet(std::vector<ArgSet> members);

  const std::vector<ArgSet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(ArgSet e) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Members of *this that are not in `other`.
  ExtensionSet minus(const ExtensionSet& other) const;

  friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;

 private:
  std::vector<ArgSet> members_;
};

/// ⊆-maximal / ⊆-minimal members of a family of sets.
std::vector<ArgSet> maximal_sets(const std::vector<ArgSet>& sets);
std::vector<ArgSet> minimal_sets(const std::vector<ArgSet>& sets);

bool is_conflict_free(const Framework& g, ArgSet e);
bool is_admissible(const Framework& g, ArgSet e);
bool is_complete(const Framework& g, ArgSet e);
bool is_stable(const Framework& g, ArgSet e);

ExtensionSet conflict_free_sets(const Framework& g);
ExtensionSet admissible_sets(const Framework& g);
ExtensionSet complete_sets(const Framework& g);
ExtensionSet stable_sets(const Framework& g);
ExtensionSet preferred_sets(const Framework& g);
/// One-element set holding the grounded extension. Throws
/// InternalInvariantViolation if the minimal complete set is not unique.
ExtensionSet grounded_set(const Framework& g);
/// In-sets of the complete labellings with ⊆-minimal undec.
ExtensionSet semi_stable_sets(const Framework& g);

ExtensionSet extensions(const Framework& g, Semantics sigma);

}  // namespace afrob
