#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "afrob/afrob.hpp"
#include "naive.hpp"

namespace fixtures {

/// ⟨{1,2,3,4}, {(1,2),(2,3)}⟩
inline afrob::Framework g3() {
  return afrob::Framework::from_names({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}});
}

/// ⟨{a,b}, {(a,b),(b,a)}⟩
inline afrob::Framework mutual() {
  return afrob::Framework::from_names({"a", "b"}, {{"a", "b"}, {"b", "a"}});
}

inline afrob::Framework single() { return afrob::Framework::from_names({"a"}, {}); }

inline afrob::Framework self_loop() {
  return afrob::Framework::from_names({"a"}, {{"a", "a"}});
}

inline afrob::Framework empty() { return afrob::Framework(); }

inline afrob::ArgSet set(const afrob::Framework& g, std::initializer_list<std::string> names) {
  return g.set_of(std::vector<std::string>(names));
}

inline afrob::ExtensionSet family(const afrob::Framework& g,
                                  std::initializer_list<std::initializer_list<std::string>> sets) {
  std::vector<afrob::ArgSet> members;
  for (auto s : sets) members.push_back(set(g, s));
  return afrob::ExtensionSet(std::move(members));
}

inline afrob::Attack attack(const std::string& s, const std::string& t) {
  return {afrob::ArgumentId(s), afrob::ArgumentId(t)};
}

/// Converts an ExtensionSet to the naive representation (positions).
inline naive::Family to_naive(const afrob::ExtensionSet& s) {
  naive::Family out;
  for (afrob::ArgSet e : s) {
    naive::Set x;
    for (std::size_t i : e) x.insert(static_cast<int>(i));
    out.insert(x);
  }
  return out;
}

}  // namespace fixtures
