#include "afrob/oracle.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "afrob/error.hpp"

namespace afrob {

ExtensionDiff extension_diff(const Framework& g, const Framework& g2, Semantics sigma) {
  const ExtensionSet before = extensions(g, sigma);
  const ExtensionSet after = extensions(g2, sigma);
  return {before.minus(after), after.minus(before)};
}

bool oracle_invariant(const Framework& g, Edge e, Semantics sigma) {
  if (g.has_attack(e)) return true;
  return extensions(g, sigma) == extensions(g.with_edge(e), sigma);
}

bool oracle_invariant(const Framework& g, const Attack& e, Semantics sigma) {
  return oracle_invariant(g, g.edge(e), sigma);
}

std::vector<DiscrepancyReport> cross_validate(const Framework& g, Semantics sigma,
                                              bool preferred_only) {
  const AttackClassifier classifier(g, sigma, preferred_only);
  const ExtensionSet before = extensions(g, sigma);
  std::vector<DiscrepancyReport> out;
  for (Edge e : classifier.candidates()) {
    AttackClassification c = classifier.classify(e);
    const Framework expanded = g.with_edge(e);
    const ExtensionSet after = extensions(expanded, sigma);
    const bool oracle = before == after;
    if (oracle == c.invariant()) continue;
    out.push_back(DiscrepancyReport{g, c.attack, sigma, c.verdict, oracle,
                                    {before.minus(after), after.minus(before)},
                                    std::move(c.witnesses)});
  }
  return out;
}

Framework canonical_framework(std::size_t n, std::uint64_t relation) {
  if (n * n > 64) {
    throw Error(ErrorKind::SizeLimit, "canonical frameworks encode at most 8 arguments");
  }
  std::vector<ArgumentId> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (n <= 26) {
      names.emplace_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      names.emplace_back((i < 10 ? "x0" : "x") + std::to_string(i));
    }
  }
  std::vector<Attack> attacks;
  for (std::size_t k = 0; k < n * n; ++k) {
    if ((relation >> k) & 1U) attacks.push_back({names[k / n], names[k % n]});
  }
  return Framework(std::move(names), attacks);
}

Framework random_framework(std::size_t n, std::mt19937_64& rng) {
  if (n > kMaxAuditArguments) {
    throw Error(ErrorKind::SizeLimit, "random frameworks are limited to 8 arguments");
  }
  const std::size_t bits = n * n;
  const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  return canonical_framework(n, rng() & mask);
}

namespace {

struct FrameworkAudit {
  std::size_t candidates = 0;
  std::vector<DiscrepancyReport> discrepancies;
};

FrameworkAudit audit_one(const Framework& g, const AuditOptions& options) {
  FrameworkAudit out;
  out.candidates = g.size() * g.size() - g.attack_count();
  out.discrepancies = cross_validate(g, options.semantics, options.preferred_only);
  return out;
}

}  // namespace

AuditReport exhaustive_audit(const AuditOptions& options) {
  const std::size_t n = options.arguments;
  if (n > kMaxAuditArguments) {
    throw Error(ErrorKind::SizeLimit, "audits are limited to 8 arguments");
  }

  AuditReport report;
  report.arguments = n;
  report.semantics = options.semantics;
  report.preferred_only = options.preferred_only;
  report.exhaustive = n <= kExhaustiveAuditLimit;

  std::vector<std::uint64_t> relations;
  if (report.exhaustive) {
    const std::uint64_t count = std::uint64_t{1} << (n * n);
    relations.resize(count);
    for (std::uint64_t r = 0; r < count; ++r) relations[r] = r;
  } else {
    report.seed = options.seed;
    std::mt19937_64 rng(options.seed);
    const std::size_t bits = n * n;
    const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    relations.resize(options.samples);
    for (auto& r : relations) r = rng() & mask;
  }

  std::vector<FrameworkAudit> results(relations.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, relations.size()));
  auto work = [&](std::size_t worker) {
    for (std::size_t i = worker; i < relations.size(); i += jobs) {
      results[i] = audit_one(canonical_framework(n, relations[i]), options);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }

  report.frameworks = relations.size();
  for (auto& r : results) {
    report.candidates += r.candidates;
    for (auto& d : r.discrepancies) {
      ++report.disagreements;
      if (d.predicate_verdict == Verdict::invariant) {
        ++report.false_invariant;
        ++report.by_bullet["none"];
      } else {
        ++report.false_violation;
        std::set<Bullet> named;
        for (const Witness& w : d.witnesses) named.insert(w.bullet);
        for (Bullet b : named) ++report.by_bullet[std::string(to_string(b))];
      }
      if (report.examples.size() < options.max_examples) report.examples.push_back(std::move(d));
    }
  }
  return report;
}

}  // namespace afrob
