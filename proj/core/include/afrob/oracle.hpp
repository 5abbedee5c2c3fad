#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "afrob/framework.hpp"
#include "afrob/invariance.hpp"
#include "afrob/semantics.hpp"

namespace afrob {

/// lost = S(g) \ S(g2), gained = S(g2) \ S(g).
struct ExtensionDiff {
  ExtensionSet lost;
  ExtensionSet gained;

  bool empty() const noexcept { return lost.empty() && gained.empty(); }
};

ExtensionDiff extension_diff(const Framework& g, const Framework& g2, Semantics sigma);

/// Ground truth: recomputes the extensions of g and g + e and compares them.
/// Never looks at labellings.
bool oracle_invariant(const Framework& g, Edge e, Semantics sigma);
bool oracle_invariant(const Framework& g, const Attack& e, Semantics sigma);

/// A candidate attack on which the labelling predicate and the oracle
/// disagree.
struct DiscrepancyReport {
  Framework framework;
  Attack attack;
  Semantics semantics;
  Verdict predicate_verdict;
  bool oracle_verdict;  // true = invariant
  ExtensionDiff extension_diff;
  std::vector<Witness> witnesses;  // the predicate's justification, if any
};

/// Compares the predicate with the oracle on every candidate (A × A) \ R.
std::vector<DiscrepancyReport> cross_validate(const Framework& g, Semantics sigma,
                                              bool preferred_only = false);

/// Framework over n arguments named a, b, c, ... (x00, x01, ... past 26)
/// whose attack relation is bit k of `relation` = attack (k / n, k % n).
Framework canonical_framework(std::size_t n, std::uint64_t relation);

/// Uniform over all 2^(n²) attack relations on n canonical arguments (n ≤ 8).
/// Uses the raw engine output, so the stream is identical on every platform.
Framework random_framework(std::size_t n, std::mt19937_64& rng);

struct AuditOptions {
  std::size_t arguments = 3;
  Semantics semantics = Semantics::adm;
  /// Seed and sample count apply only past kExhaustiveAuditLimit arguments,
  /// where frameworks are sampled instead of enumerated.
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  bool preferred_only = false;
  std::size_t jobs = 1;
  /// Number of DiscrepancyReports kept verbatim in the aggregate.
  std::size_t max_examples = 10;
};

inline constexpr std::size_t kExhaustiveAuditLimit = 3;
inline constexpr std::size_t kMaxAuditArguments = 8;

struct AuditReport {
  std::size_t arguments = 0;
  Semantics semantics = Semantics::adm;
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;
  bool preferred_only = false;
  std::size_t frameworks = 0;
  std::size_t candidates = 0;
  std::size_t disagreements = 0;
  /// predicate says invariant, oracle sees a change
  std::size_t false_invariant = 0;
  /// predicate reports a violation, oracle sees no change
  std::size_t false_violation = 0;
  /// disagreements per bullet named by the predicate; "none" counts the
  /// false-invariant cases, which have no witness
  std::map<std::string, std::size_t> by_bullet;
  std::vector<DiscrepancyReport> examples;
};

/// Runs cross_validate over every framework on `arguments` canonical
/// arguments (n ≤ 3), or over `samples` seeded random frameworks otherwise.
/// Same options give the same report, whatever `jobs` is.
AuditReport exhaustive_audit(const AuditOptions& options);

}  // namespace afrob
