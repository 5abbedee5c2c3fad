#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "afrob/arg_set.hpp"

namespace afrob {

/// Name of an argument: a non-empty token over [A-Za-z0-9_].
class ArgumentId {
 public:
  /// Throws Error(InvalidArgumentName) on an empty or malformed token.
  explicit ArgumentId(std::string name);

  static bool valid(std::string_view name);

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const ArgumentId&, const ArgumentId&) = default;
  friend auto operator<=>(const ArgumentId&, const ArgumentId&) = default;

 private:
  std::string name_;
};

/// Ordered attack (source, target) between two named arguments.
struct Attack {
  ArgumentId source;
  ArgumentId target;

  friend bool operator==(const Attack&, const Attack&) = default;
  friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// Attack between two argument positions of a specific framework.
struct Edge {
  std::uint32_t source = 0;
  std::uint32_t target = 0;

  friend bool operator==(Edge, Edge) = default;
  friend auto operator<=>(Edge, Edge) = default;
};

/// Immutable abstract argumentation framework.
///
/// Arguments are kept in canonical (lexicographic) name order; position i in
/// that order is bit i of every ArgSet handed out by the framework. Attacks
/// are stored as per-argument attacker and target masks.
class Framework {
 public:
  static constexpr std::size_t kMaxArguments = ArgSet::kCapacity;

  Framework() = default;

  /// Duplicate arguments and attacks are collapsed. Throws UnknownArgument if
  /// an attack endpoint is not among `arguments`, SizeLimit above
  /// kMaxArguments.
  Framework(std::vector<ArgumentId> arguments, std::span<const Attack> attacks);

  /// Convenience for tests and literals: plain names, pairs of names.
  static Framework from_names(std::vector<std::string> arguments,
                              const std::vector<std::pair<std::string, std::string>>& attacks);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  ArgSet all() const noexcept { return ArgSet::first(size()); }

  const std::vector<ArgumentId>& arguments() const noexcept { return names_; }
  const ArgumentId& name(std::size_t i) const { return names_.at(i); }

  bool contains(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;
  /// Position of `name` in canonical order. Throws UnknownArgument.
  std::size_t index_of(std::string_view name) const;
  Edge edge(const Attack& attack) const;
  Attack attack(Edge e) const;

  ArgSet attackers_of(std::size_t i) const { return attackers_[i]; }
  ArgSet targets_of(std::size_t i) const { return targets_[i]; }
  bool has_attack(std::size_t source, std::size_t target) const {
    return targets_[source].contains(target);
  }
  bool has_attack(Edge e) const { return has_attack(e.source, e.target); }

  std::size_t attack_count() const noexcept;
  /// Attacks in canonical (source, target) order.
  std::vector<Edge> edges() const;
  std::vector<Attack> attacks() const;

  /// Targets row of every argument; a compact key for the attack relation.
  const std::vector<ArgSet>& relation() const noexcept { return targets_; }

  /// Copy with `e` added; returns an equal framework when `e` is present.
  Framework with_edge(Edge e) const;

  /// Converts between name lists and masks over this framework.
  ArgSet set_of(std::span<const ArgumentId> names) const;
  ArgSet set_of(std::span<const std::string> names) const;
  std::vector<ArgumentId> names_of(ArgSet set) const;

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.names_ == b.names_ && a.targets_ == b.targets_;
  }

 private:
  void check_edge(Edge e) const;

  std::vector<ArgumentId> names_;
  std::vector<ArgSet> attackers_;
  std::vector<ArgSet> targets_;
};

/// New framework with attacks = attacks(g) ∪ {e}. Throws UnknownArgument.
Framework add_attack(const Framework& g, const Attack& e);

std::vector<ArgumentId> attackers(const Framework& g, const ArgumentId& a);

/// Arguments attacked by some member of `set`.
ArgSet attacked_by(const Framework& g, ArgSet set);

bool set_attacks(const Framework& g, ArgSet set, std::size_t a);
bool set_attacks(const Framework& g, std::span<const ArgumentId> set, const ArgumentId& a);

/// Every attacker of `a` is attacked by `set`.
bool defends(const Framework& g, ArgSet set, std::size_t a);
bool defends(const Framework& g, std::span<const ArgumentId> set, const ArgumentId& a);

/// All-pairs odd-walk reachability: odd(from, to) holds iff some directed
/// walk with an odd number of attacks leads from `from` to `to`. Computed by
/// breadth-first search over (argument, parity) states.
class OddWalkTable {
 public:
  explicit OddWalkTable(const Framework& g);

  bool operator()(std::size_t from, std::size_t to) const { return odd_from_[from].contains(to); }
  /// Arguments reachable from `from` by an odd walk.
  ArgSet reachable_from(std::size_t from) const { return odd_from_[from]; }

 private:
  std::vector<ArgSet> odd_from_;
};

bool odd_walk_exists(const Framework& g, const ArgumentId& from, const ArgumentId& to);

}  // namespace afrob
