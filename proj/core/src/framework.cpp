#include "afrob/framework.hpp"

#include <algorithm>
#include <deque>

#include "afrob/error.hpp"

namespace afrob {

bool ArgumentId::valid(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

ArgumentId::ArgumentId(std::string name) : name_(std::move(name)) {
  if (!valid(name_)) {
    throw Error(ErrorKind::InvalidArgumentName, "invalid argument name '" + name_ + "'");
  }
}

Framework::Framework(std::vector<ArgumentId> arguments, std::span<const Attack> attacks)
    : names_(std::move(arguments)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  if (names_.size() > kMaxArguments) {
    throw Error(ErrorKind::SizeLimit, "framework has " + std::to_string(names_.size()) +
                                          " arguments; at most " +
                                          std::to_string(kMaxArguments) + " are supported");
  }
  attackers_.assign(names_.size(), ArgSet{});
  targets_.assign(names_.size(), ArgSet{});
  for (const Attack& a : attacks) {
    const Edge e = edge(a);
    targets_[e.source].insert(e.target);
    attackers_[e.target].insert(e.source);
  }
}

Framework Framework::from_names(
    std::vector<std::string> arguments,
    const std::vector<std::pair<std::string, std::string>>& attacks) {
  std::vector<ArgumentId> ids;
  ids.reserve(arguments.size());
  for (auto& n : arguments) ids.emplace_back(std::move(n));
  std::vector<Attack> atts;
  atts.reserve(attacks.size());
  for (const auto& [s, t] : attacks) atts.push_back({ArgumentId(s), ArgumentId(t)});
  return Framework(std::move(ids), atts);
}

std::optional<std::size_t> Framework::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const ArgumentId& x, std::string_view n) { return x.str() < n; });
  if (it == names_.end() || it->str() != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool Framework::contains(std::string_view name) const { return find(name).has_value(); }

std::size_t Framework::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownArgument, "unknown argument '" + std::string(name) + "'");
}

Edge Framework::edge(const Attack& attack) const {
  return Edge{static_cast<std::uint32_t>(index_of(attack.source.str())),
              static_cast<std::uint32_t>(index_of(attack.target.str()))};
}

Attack Framework::attack(Edge e) const {
  check_edge(e);
  return Attack{names_[e.source], names_[e.target]};
}

void Framework::check_edge(Edge e) const {
  if (e.source >= size() || e.target >= size()) {
    throw Error(ErrorKind::UnknownArgument, "attack endpoint out of range");
  }
}

std::size_t Framework::attack_count() const noexcept {
  std::size_t total = 0;
  for (ArgSet row : targets_) total += row.size();
  return total;
}

std::vector<Edge> Framework::edges() const {
  std::vector<Edge> out;
  for (std::size_t s = 0; s < size(); ++s) {
    for (std::size_t t : targets_[s]) {
      out.push_back(Edge{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)});
    }
  }
  return out;
}

std::vector<Attack> Framework::attacks() const {
  std::vector<Attack> out;
  for (Edge e : edges()) out.push_back(attack(e));
  return out;
}

Framework Framework::with_edge(Edge e) const {
  check_edge(e);
  Framework copy = *this;
  copy.targets_[e.source].insert(e.target);
  copy.attackers_[e.target].insert(e.source);
  return copy;
}

ArgSet Framework::set_of(std::span<const ArgumentId> names) const {
  ArgSet out;
  for (const auto& n : names) out.insert(index_of(n.str()));
  return out;
}

ArgSet Framework::set_of(std::span<const std::string> names) const {
  ArgSet out;
  for (const auto& n : names) out.insert(index_of(n));
  return out;
}

std::vector<ArgumentId> Framework::names_of(ArgSet set) const {
  std::vector<ArgumentId> out;
  out.reserve(set.size());
  for (std::size_t i : set) out.push_back(names_.at(i));
  return out;
}

Framework add_attack(const Framework& g, const Attack& e) { return g.with_edge(g.edge(e)); }

std::vector<ArgumentId> attackers(const Framework& g, const ArgumentId& a) {
  return g.names_of(g.attackers_of(g.index_of(a.str())));
}

ArgSet attacked_by(const Framework& g, ArgSet set) {
  ArgSet out;
  for (std::size_t i : set) out |= g.targets_of(i);
  return out;
}

bool set_attacks(const Framework& g, ArgSet set, std::size_t a) {
  return g.attackers_of(a).intersects(set);
}

bool set_attacks(const Framework& g, std::span<const ArgumentId> set, const ArgumentId& a) {
  return set_attacks(g, g.set_of(set), g.index_of(a.str()));
}

bool defends(const Framework& g, ArgSet set, std::size_t a) {
  return g.attackers_of(a).subset_of(attacked_by(g, set));
}

bool defends(const Framework& g, std::span<const ArgumentId> set, const ArgumentId& a) {
  return defends(g, g.set_of(set), g.index_of(a.str()));
}

OddWalkTable::OddWalkTable(const Framework& g) : odd_from_(g.size()) {
  const std::size_t n = g.size();
  for (std::size_t start = 0; start < n; ++start) {
    // reached[p] = arguments reachable from `start` by a walk of parity p (length >= 1)
    ArgSet reached[2];
    std::deque<std::pair<std::size_t, int>> queue;
    for (std::size_t t : g.targets_of(start)) {
      reached[1].insert(t);
      queue.emplace_back(t, 1);
    }
    while (!queue.empty()) {
      auto [v, parity] = queue.front();
      queue.pop_front();
      const int next = 1 - parity;
      for (std::size_t t : g.targets_of(v)) {
        if (!reached[next].contains(t)) {
          reached[next].insert(t);
          queue.emplace_back(t, next);
        }
      }
    }
    odd_from_[start] = reached[1];
  }
}

bool odd_walk_exists(const Framework& g, const ArgumentId& from, const ArgumentId& to) {
  const std::size_t f = g.index_of(from.str());
  const std::size_t t = g.index_of(to.str());
  return OddWalkTable(g)(f, t);
}

}  // namespace afrob
