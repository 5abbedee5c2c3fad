#include "afrob/robustness.hpp"

#include <unordered_map>

#include "afrob/error.hpp"
#include "afrob/invariance.hpp"
#include "afrob/oracle.hpp"

namespace afrob {

std::string_view to_string(Strategy s) {
  return s == Strategy::exhaustive ? "exhaustive" : "greedy";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "exhaustive") return Strategy::exhaustive;
  if (name == "greedy") return Strategy::greedy;
  return std::nullopt;
}

std::vector<Edge> predicate_invariant_steps(const Framework& g, Semantics sigma) {
  const AttackClassifier classifier(g, sigma);
  std::vector<Edge> out;
  for (Edge e : classifier.candidates()) {
    if (classifier.is_invariant(e)) out.push_back(e);
  }
  return out;
}

std::vector<Edge> oracle_invariant_steps(const Framework& g, Semantics sigma) {
  const ExtensionSet before = extensions(g, sigma);
  std::vector<Edge> out;
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    for (std::uint32_t t = 0; t < g.size(); ++t) {
      const Edge e{s, t};
      if (!g.has_attack(e) && extensions(g.with_edge(e), sigma) == before) out.push_back(e);
    }
  }
  return out;
}

namespace {

struct RelationHash {
  std::size_t operator()(const std::vector<ArgSet>& rows) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (ArgSet r : rows) {
      h ^= std::hash<std::uint64_t>{}(r.bits()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct MemoEntry {
  std::size_t remaining = 0;  // longest chain from this state
  std::optional<Edge> next;
};

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const StepGenerator& steps, std::optional<std::size_t> max_steps,
                   std::size_t base_attacks)
      : steps_(steps), max_steps_(max_steps), base_attacks_(base_attacks) {}

  std::size_t explore(const Framework& g) {
    if (auto it = memo_.find(g.relation()); it != memo_.end()) return it->second.remaining;

    MemoEntry entry;
    const std::size_t depth = g.attack_count() - base_attacks_;
    const auto moves = steps_(g);
    if (max_steps_ && depth >= *max_steps_) {
      if (!moves.empty()) capped_ = true;
    } else {
      for (Edge e : moves) {
        const std::size_t length = 1 + explore(g.with_edge(e));
        if (length > entry.remaining) {
          entry.remaining = length;
          entry.next = e;
        }
      }
    }
    memo_.emplace(g.relation(), entry);
    return entry.remaining;
  }

  std::vector<Attack> witness(const Framework& start) const {
    std::vector<Attack> out;
    Framework g = start;
    while (true) {
      const auto it = memo_.find(g.relation());
      if (it == memo_.end() || !it->second.next) break;
      out.push_back(g.attack(*it->second.next));
      g = g.with_edge(*it->second.next);
    }
    return out;
  }

  std::size_t states() const noexcept { return memo_.size(); }
  bool capped() const noexcept { return capped_; }

 private:
  const StepGenerator& steps_;
  std::optional<std::size_t> max_steps_;
  std::size_t base_attacks_;
  bool capped_ = false;
  std::unordered_map<std::vector<ArgSet>, MemoEntry, RelationHash> memo_;
};

}  // namespace

RobustnessResult search_robustness(const Framework& g, const StepGenerator& steps,
                                   const RobustnessOptions& options) {
  RobustnessResult result;
  result.strategy = options.strategy;

  if (options.strategy == Strategy::greedy) {
    Framework current = g;
    result.explored_states = 1;
    while (true) {
      const auto moves = steps(current);
      if (moves.empty()) break;
      if (options.max_steps && result.witness.size() >= *options.max_steps) {
        result.capped = true;
        break;
      }
      result.witness.push_back(current.attack(moves.front()));
      current = current.with_edge(moves.front());
      ++result.explored_states;
    }
    result.degree = result.witness.size();
    return result;
  }

  ExhaustiveSearch search(steps, options.max_steps, g.attack_count());
  result.degree = search.explore(g);
  result.witness = search.witness(g);
  result.explored_states = search.states();
  result.capped = search.capped();
  if (result.witness.size() != result.degree) {
    throw Error(ErrorKind::InternalInvariantViolation, "robustness witness length mismatch");
  }
  return result;
}

RobustnessResult robustness_degree(const Framework& g, Semantics sigma,
                                   const RobustnessOptions& options) {
  if (sigma != Semantics::cf && sigma != Semantics::adm) {
    throw Error(ErrorKind::UnsupportedSemantics, "robustness is defined for cf and adm only");
  }
  require_enumerable(g);

  std::size_t rejections = 0;
  StepGenerator steps = [&](const Framework& current) {
    auto moves = predicate_invariant_steps(current, sigma);
    if (options.paranoid) {
      std::erase_if(moves, [&](Edge e) {
        const bool reject = !oracle_invariant(current, e, sigma);
        rejections += reject ? 1 : 0;
        return reject;
      });
    }
    return moves;
  };
  RobustnessResult result = search_robustness(g, steps, options);
  result.oracle_rejections = rejections;
  return result;
}

bool verify_witness(const Framework& g, Semantics sigma, std::span<const Attack> witness) {
  Framework current = g;
  for (const Attack& a : witness) {
    const Edge e = current.edge(a);
    if (current.has_attack(e)) return false;
    if (!AttackClassifier(current, sigma).is_invariant(e)) return false;
    current = current.with_edge(e);
  }
  return sigma_equivalent(g, current, sigma);
}

}  // namespace afrob
