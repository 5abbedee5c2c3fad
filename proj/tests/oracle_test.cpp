#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"

using namespace afrob;
using fixtures::attack;
using fixtures::family;
using fixtures::g3;
using fixtures::set;

TEST(OracleInvariant, Examples) {
  const auto g = g3();
  EXPECT_TRUE(oracle_invariant(g, attack("2", "2"), Semantics::adm));
  EXPECT_FALSE(oracle_invariant(g, attack("4", "2"), Semantics::adm));
  for (Semantics s : kAllSemantics) EXPECT_TRUE(oracle_invariant(g, attack("1", "2"), s));
}

TEST(ExtensionDiff, G3FourAttacksTwo) {
  const auto g = g3();
  const auto diff = extension_diff(g, add_attack(g, attack("4", "2")), Semantics::adm);
  EXPECT_TRUE(diff.gained.contains(set(g, {"3", "4"})));
  EXPECT_FALSE(diff.empty());
}

TEST(ExtensionDiff, G3OneAttacksFour) {
  const auto g = g3();
  const auto diff = extension_diff(g, add_attack(g, attack("1", "4")), Semantics::adm);
  EXPECT_TRUE(diff.lost.contains(set(g, {"1", "4"})));
  EXPECT_TRUE(diff.gained.empty());
}

TEST(ExtensionDiff, SameFrameworkIsEmpty) {
  EXPECT_TRUE(extension_diff(g3(), g3(), Semantics::prf).empty());
}

TEST(CrossValidate, G3HasNoDiscrepancies) {
  EXPECT_TRUE(cross_validate(g3(), Semantics::cf).empty());
  EXPECT_TRUE(cross_validate(g3(), Semantics::adm).empty());
  EXPECT_TRUE(cross_validate(Framework(), Semantics::adm).empty());
}

TEST(CrossValidate, ReportCarriesOracleEvidence) {
  const auto g = Framework::from_names({"a", "b"}, {{"a", "a"}, {"a", "b"}});
  const auto reports = cross_validate(g, Semantics::adm);
  ASSERT_FALSE(reports.empty());
  bool found = false;
  for (const auto& r : reports) {
    EXPECT_NE(r.predicate_verdict == Verdict::invariant, r.oracle_verdict);
    EXPECT_EQ(r.oracle_verdict, r.extension_diff.empty());
    if (r.attack == attack("b", "a")) {
      found = true;
      EXPECT_EQ(r.extension_diff.gained, family(g, {{"b"}}));
    }
  }
  EXPECT_TRUE(found);
}

TEST(CanonicalFramework, Encoding) {
  const auto g = canonical_framework(2, 0b0110);
  EXPECT_EQ(g, Framework::from_names({"a", "b"}, {{"a", "b"}, {"b", "a"}}));
  EXPECT_EQ(canonical_framework(0, 0).size(), 0u);
  EXPECT_THROW(canonical_framework(9, 0), Error);
}

TEST(RandomFramework, SeededStreamIsStable) {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(random_framework(5, a), random_framework(5, b));
}

TEST(Audit, OneArgumentConflictFree) {
  AuditOptions o;
  o.arguments = 1;
  o.semantics = Semantics::cf;
  const auto r = exhaustive_audit(o);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.frameworks, 2u);
  EXPECT_EQ(r.candidates, 1u);
  EXPECT_EQ(r.disagreements, 0u);
}

TEST(Audit, ThreeArgumentConflictFree) {
  AuditOptions o;
  o.semantics = Semantics::cf;
  const auto r = exhaustive_audit(o);
  EXPECT_EQ(r.frameworks, 512u);
  EXPECT_EQ(r.disagreements, 0u);
  EXPECT_FALSE(r.seed.has_value());
}

TEST(Audit, TwoArgumentAdmissible) {
  AuditOptions o;
  o.arguments = 2;
  const auto r = exhaustive_audit(o);
  EXPECT_EQ(r.frameworks, 16u);
  EXPECT_EQ(r.candidates, 32u);
  EXPECT_EQ(r.disagreements, r.false_invariant + r.false_violation);
}

TEST(Audit, ExampleCapAndBulletTally) {
  AuditOptions o;
  o.max_examples = 3;
  const auto r = exhaustive_audit(o);
  EXPECT_EQ(r.examples.size(), 3u);
  EXPECT_EQ(r.by_bullet.at("none"), r.false_invariant);
}

TEST(Audit, SampledIsDeterministicAcrossJobCounts) {
  AuditOptions o;
  o.arguments = 4;
  o.samples = 150;
  o.seed = 77;
  const auto one = exhaustive_audit(o);
  o.jobs = 4;
  const auto four = exhaustive_audit(o);
  EXPECT_FALSE(one.exhaustive);
  EXPECT_EQ(one.seed, std::optional<std::uint64_t>(77));
  EXPECT_EQ(one.frameworks, 150u);
  EXPECT_EQ(one.candidates, four.candidates);
  EXPECT_EQ(one.disagreements, four.disagreements);
  EXPECT_EQ(one.by_bullet, four.by_bullet);
  ASSERT_EQ(one.examples.size(), four.examples.size());
  for (std::size_t i = 0; i < one.examples.size(); ++i) {
    EXPECT_EQ(one.examples[i].framework, four.examples[i].framework);
    EXPECT_EQ(one.examples[i].attack, four.examples[i].attack);
  }
}

TEST(Audit, SizeLimit) {
  AuditOptions o;
  o.arguments = 9;
  try {
    exhaustive_audit(o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(Oracle, RenamingInvariance) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_framework(4, rng);
    std::vector<std::string> names;
    for (const auto& id : g.arguments()) names.push_back("n_" + id.str());
    std::vector<std::pair<std::string, std::string>> atts;
    for (const Attack& a : g.attacks()) atts.emplace_back("n_" + a.source.str(), "n_" + a.target.str());
    const auto h = Framework::from_names(names, atts);
    for (std::uint32_t s = 0; s < 4; ++s) {
      for (std::uint32_t t = 0; t < 4; ++t) {
        ASSERT_EQ(oracle_invariant(g, Edge{s, t}, Semantics::adm),
                  oracle_invariant(h, Edge{s, t}, Semantics::adm));
      }
    }
  }
}
