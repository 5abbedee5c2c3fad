#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "afrob/framework.hpp"
#include "afrob/semantics.hpp"

namespace afrob {

enum class Strategy { exhaustive, greedy };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

struct RobustnessOptions {
  Strategy strategy = Strategy::exhaustive;
  /// Caps the number of additions; a result that hit the cap is a lower bound.
  std::optional<std::size_t> max_steps;
  /// Re-checks every step the predicate accepts against the oracle and drops
  /// the ones it rejects.
  bool paranoid = false;
};

struct RobustnessResult {
  std::size_t degree = 0;
  std::vector<Attack> witness;
  /// Distinct attack relations visited.
  std::size_t explored_states = 0;
  Strategy strategy = Strategy::exhaustive;
  bool capped = false;
  std::size_t oracle_rejections = 0;
};

/// The single-attack additions allowed from a framework, in canonical order.
using StepGenerator = std::function<std::vector<Edge>(const Framework&)>;

/// Steps the labelling predicate classifies as invariant.
std::vector<Edge> predicate_invariant_steps(const Framework& g, Semantics sigma);
/// Steps that leave the extensions unchanged by recomputation.
std::vector<Edge> oracle_invariant_steps(const Framework& g, Semantics sigma);

/// Longest sequence of allowed additions (exhaustive) or the first-candidate
/// chain (greedy). Each step adds one new attack, so the attack relation
/// grows strictly and a state is identified by its attack set alone; the
/// exhaustive search memoizes on it.
RobustnessResult search_robustness(const Framework& g, const StepGenerator& steps,
                                   const RobustnessOptions& options);

/// Local-expansion robustness degree of `g` for cf or adm.
RobustnessResult robustness_degree(const Framework& g, Semantics sigma,
                                   const RobustnessOptions& options = {});

/// Replays `witness`: each attack must be new and classified invariant for
/// the framework reached so far, and the final framework must have the same
/// extensions as `g`.
bool verify_witness(const Framework& g, Semantics sigma, std::span<const Attack> witness);

}  // namespace afrob
