#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"

using namespace afrob;
using fixtures::attack;
using fixtures::g3;

namespace {

std::vector<std::string> strs(const std::vector<ArgumentId>& ids) {
  std::vector<std::string> out;
  for (const auto& i : ids) out.push_back(i.str());
  return out;
}

}  // namespace

TEST(ArgumentId, AcceptsTokenCharacters) {
  EXPECT_EQ(ArgumentId("a_1Z").str(), "a_1Z");
  EXPECT_EQ(ArgumentId("x"), ArgumentId("x"));
  EXPECT_NE(ArgumentId("x"), ArgumentId("y"));
}

TEST(ArgumentId, RejectsEmptyAndPunctuation) {
  for (const char* bad : {"", "a-b", "a b", "a.", "(", "ä"}) {
    try {
      ArgumentId id(bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidArgumentName);
    }
  }
}

TEST(Framework, RejectsAttackOnUnknownArgument) {
  try {
    Framework::from_names({"a"}, {{"a", "b"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownArgument);
  }
}

TEST(Framework, EmptyFramework) {
  const Framework g;
  EXPECT_EQ(g.size(), 0u);
  EXPECT_EQ(g.attack_count(), 0u);
  EXPECT_TRUE(g.edges().empty());
}

TEST(Framework, CanonicalOrderIsLexicographic) {
  const auto g = Framework::from_names({"c", "a", "b", "a"}, {});
  EXPECT_EQ(strs(g.arguments()), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.index_of("b"), 1u);
}

TEST(Framework, RejectsMoreThanSixtyFourArguments) {
  std::vector<std::string> names;
  for (int i = 0; i < 65; ++i) names.push_back("a" + std::to_string(i));
  try {
    Framework::from_names(names, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(AddAttack, AddsReverseOfExistingAttack) {
  const auto g = Framework::from_names({"a", "b"}, {{"a", "b"}});
  const auto g2 = add_attack(g, attack("b", "a"));
  EXPECT_EQ(g2, Framework::from_names({"a", "b"}, {{"a", "b"}, {"b", "a"}}));
  EXPECT_EQ(g.attack_count(), 1u);  // original untouched
}

TEST(AddAttack, ExistingAttackIsIdempotent) {
  const auto g = Framework::from_names({"a", "b"}, {{"a", "b"}});
  EXPECT_EQ(add_attack(g, attack("a", "b")), g);
}

TEST(AddAttack, G3PlusOneFour) {
  const auto g = add_attack(g3(), attack("1", "4"));
  EXPECT_EQ(g.attacks(), (std::vector<Attack>{attack("1", "2"), attack("1", "4"), attack("2", "3")}));
}

TEST(AddAttack, UnknownEndpoint) {
  try {
    add_attack(g3(), attack("1", "9"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownArgument);
  }
}

TEST(Attackers, G3) {
  const auto g = g3();
  EXPECT_EQ(strs(attackers(g, ArgumentId("3"))), (std::vector<std::string>{"2"}));
  EXPECT_TRUE(attackers(g, ArgumentId("1")).empty());
  EXPECT_EQ(strs(attackers(g, ArgumentId("2"))), (std::vector<std::string>{"1"}));
  EXPECT_THROW(attackers(g, ArgumentId("5")), Error);
}

TEST(SetAttacks, G3) {
  const auto g = g3();
  const std::vector<ArgumentId> one{ArgumentId("1")};
  const std::vector<ArgumentId> four{ArgumentId("4")};
  EXPECT_TRUE(set_attacks(g, one, ArgumentId("2")));
  EXPECT_FALSE(set_attacks(g, std::vector<ArgumentId>{}, ArgumentId("2")));
  EXPECT_FALSE(set_attacks(g, four, ArgumentId("3")));
}

TEST(Defends, G3) {
  const auto g = g3();
  const std::vector<ArgumentId> one{ArgumentId("1")};
  EXPECT_TRUE(defends(g, one, ArgumentId("3")));
  EXPECT_FALSE(defends(g, std::vector<ArgumentId>{}, ArgumentId("3")));
  // 4 and 1 are unattacked: vacuously defended by any set
  EXPECT_TRUE(defends(g, std::vector<ArgumentId>{}, ArgumentId("4")));
  EXPECT_TRUE(defends(g, one, ArgumentId("1")));
}

TEST(OddWalk, G3) {
  const auto g = g3();
  EXPECT_TRUE(odd_walk_exists(g, ArgumentId("1"), ArgumentId("2")));
  EXPECT_FALSE(odd_walk_exists(g, ArgumentId("1"), ArgumentId("3")));
  EXPECT_FALSE(odd_walk_exists(g, ArgumentId("2"), ArgumentId("2")));
}

TEST(OddWalk, EvenCycleNeverReturnsOddly) {
  const auto g = Framework::from_names({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  EXPECT_FALSE(odd_walk_exists(g, ArgumentId("a"), ArgumentId("a")));
  EXPECT_TRUE(odd_walk_exists(g, ArgumentId("a"), ArgumentId("b")));
}

TEST(OddWalk, OddCycleReachesEverythingOddly) {
  const auto g = Framework::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  for (const char* x : {"a", "b", "c"}) {
    for (const char* y : {"a", "b", "c"}) {
      EXPECT_TRUE(odd_walk_exists(g, ArgumentId(x), ArgumentId(y))) << x << "->" << y;
    }
  }
}

// Parity BFS agrees with brute-force walk enumeration (walks up to 2·|A|)
// on every framework with up to 3 arguments and 2000 random ones on 4 and 5.
TEST(OddWalk, MatchesWalkEnumeration) {
  auto check = [](const Framework& g) {
    const auto af = naive::from(g);
    const OddWalkTable table(g);
    for (int a = 0; a < af.n; ++a) {
      for (int b = 0; b < af.n; ++b) {
        ASSERT_EQ(table(a, b), naive::odd_walk(af, a, b)) << a << "->" << b;
      }
    }
  };
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << (n * n)); ++r) check(canonical_framework(n, r));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) check(random_framework(4 + i % 2, rng));
}

TEST(AddAttackProperty, MonotoneAndGrowsByAtMostOne) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Framework g = random_framework(1 + i % 4, rng);
    for (const Edge e : std::vector<Edge>{{0, 0}, {0, static_cast<std::uint32_t>(g.size() - 1)}}) {
      const Framework g2 = g.with_edge(e);
      const auto before = g.attacks();
      const auto after = g2.attacks();
      EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
      const std::size_t growth = after.size() - before.size();
      EXPECT_EQ(growth, g.has_attack(e) ? 0u : 1u);
    }
  }
}

TEST(DefendsProperty, MonotoneInDefendingSet) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Framework g = random_framework(4, rng);
    for (std::uint64_t e = 0; e < 16; ++e) {
      for (std::uint64_t f = 0; f < 16; ++f) {
        if ((e & ~f) != 0) continue;
        for (std::size_t a = 0; a < 4; ++a) {
          if (defends(g, ArgSet(e), a)) {
            EXPECT_TRUE(defends(g, ArgSet(f), a));
          }
        }
      }
    }
  }
}

TEST(FrameworkProperty, EqualityIgnoresInsertionOrder) {
  std::mt19937 rng(5);
  const std::vector<std::pair<std::string, std::string>> atts = {
      {"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "a"}, {"d", "b"}};
  const auto reference = Framework::from_names({"a", "b", "c", "d"}, atts);
  auto shuffled = atts;
  for (int i = 0; i < 20; ++i) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<std::string> names = {"d", "c", "b", "a"};
    std::shuffle(names.begin(), names.end(), rng);
    EXPECT_EQ(Framework::from_names(names, shuffled), reference);
  }
}
