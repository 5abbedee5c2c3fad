#include "afrob/invariance.hpp"

#include <algorithm>
#include <string>

#include "afrob/error.hpp"

namespace afrob {

bool extension_set_included(const ExtensionSet& s, const ExtensionSet& s2) {
  return std::all_of(s.begin(), s.end(), [&](ArgSet e) {
    return std::any_of(s2.begin(), s2.end(), [e](ArgSet e2) { return e.subset_of(e2); });
  });
}

bool sigma_equivalent(const Framework& g, const Framework& g2, Semantics sigma) {
  if (g.arguments() != g2.arguments()) {
    throw Error(ErrorKind::ArgumentSetMismatch, "frameworks have different argument sets");
  }
  return extensions(g, sigma) == extensions(g2, sigma);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::invariant: return "invariant";
    case Verdict::breaks_non_decreasing: return "breaks_non_decreasing";
    case Verdict::breaks_non_increasing: return "breaks_non_increasing";
    case Verdict::breaks_both: return "breaks_both";
  }
  return "?";
}

std::string_view to_string(Bullet b) {
  switch (b) {
    case Bullet::cf_existing_conflict: return "CF-existing-conflict";
    case Bullet::cf_never_in: return "CF-never-in";
    case Bullet::nd_in_in: return "ND-in-in";
    case Bullet::nd_out_in_undefended: return "ND-out-in-undefended";
    case Bullet::nd_undec_in: return "ND-undec-in";
    case Bullet::ni_in_in_defends: return "NI-in-in-defends";
    case Bullet::ni_in_out_reinstates: return "NI-in-out-reinstates";
    case Bullet::ni_in_undec_defends_undec: return "NI-in-undec-defends-undec";
    case Bullet::ni_out_self_defense: return "NI-out-self-defense";
  }
  return "?";
}

bool AttackClassification::has_bullet(Bullet b) const {
  return std::any_of(witnesses.begin(), witnesses.end(),
                     [b](const Witness& w) { return w.bullet == b; });
}

namespace {

std::optional<std::uint32_t> first_of(ArgSet s) {
  if (s.empty()) return std::nullopt;
  return static_cast<std::uint32_t>(*s.begin());
}

Verdict verdict_of(bool breaks_nd, bool breaks_ni) {
  if (breaks_nd && breaks_ni) return Verdict::breaks_both;
  if (breaks_nd) return Verdict::breaks_non_decreasing;
  if (breaks_ni) return Verdict::breaks_non_increasing;
  return Verdict::invariant;
}

void require_cf_or_adm(Semantics sigma) {
  if (sigma != Semantics::cf && sigma != Semantics::adm) {
    throw Error(ErrorKind::UnsupportedSemantics,
                "attack invariance is defined for cf and adm only, not '" +
                    std::string(to_string(sigma)) + "'");
  }
}

}  // namespace

std::vector<Witness> adm_non_decreasing_ok(const Framework& g, Edge e,
                                           std::span<const Labelling> labellings) {
  const std::size_t a = e.source;
  const std::size_t b = e.target;
  std::vector<Witness> out;
  for (const Labelling& l : labellings) {
    if (!l.in().contains(b)) continue;  // every bullet needs b in
    if (l.in().contains(a)) out.push_back({l.in(), Bullet::nd_in_in, std::nullopt});
    if (l.out().contains(a) && !g.has_attack(b, a) && !g.attackers_of(b).intersects(l.out())) {
      out.push_back({l.in(), Bullet::nd_out_in_undefended, std::nullopt});
    }
    if (l.undec().contains(a)) out.push_back({l.in(), Bullet::nd_undec_in, std::nullopt});
  }
  return out;
}

std::vector<Witness> adm_non_decreasing_ok(const Framework& g, const Attack& e,
                                           std::span<const Labelling> labellings) {
  return adm_non_decreasing_ok(g, g.edge(e), labellings);
}

std::vector<Witness> adm_non_increasing_ok(const Framework& g, Edge e,
                                           std::span<const Labelling> labellings,
                                           const OddWalkTable& odd) {
  const std::size_t a = e.source;
  const std::size_t b = e.target;
  const ArgSet hit_by_a = g.targets_of(a);
  const ArgSet hit_by_b = g.targets_of(b);

  // The last bullet does not depend on the labelling beyond a ∈ out(L).
  bool self_defense = odd(b, a);
  if (self_defense) {
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (c != b && odd(c, a) && !odd(a, c)) {
        self_defense = false;
        break;
      }
    }
  }

  ArgSet unattacking_self;  // arguments c with (c,c) ∉ R
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (!g.has_attack(c, c)) unattacking_self.insert(c);
  }

  std::vector<Witness> out;
  for (const Labelling& l : labellings) {
    if (l.in().contains(a) && l.in().contains(b)) {
      const ArgSet cs = (l.out() - hit_by_a) & hit_by_b;
      if (!cs.empty()) out.push_back({l.in(), Bullet::ni_in_in_defends, first_of(cs)});
    }
    if (l.in().contains(a) && l.out().contains(b)) {
      const ArgSet cs = l.in() & hit_by_b;
      if (!cs.empty()) out.push_back({l.in(), Bullet::ni_in_out_reinstates, first_of(cs)});
    }
    if (l.in().contains(a) && l.undec().contains(b)) {
      const ArgSet cs = l.undec() & unattacking_self & hit_by_b;
      if (!cs.empty()) out.push_back({l.in(), Bullet::ni_in_undec_defends_undec, first_of(cs)});
    }
    if (l.out().contains(a) && self_defense) {
      out.push_back({l.in(), Bullet::ni_out_self_defense, std::nullopt});
    }
  }
  return out;
}

std::vector<Witness> adm_non_increasing_ok(const Framework& g, const Attack& e,
                                           std::span<const Labelling> labellings) {
  return adm_non_increasing_ok(g, g.edge(e), labellings, OddWalkTable(g));
}

std::vector<Labelling> admissible_labellings(const Framework& g, bool preferred_only) {
  const ExtensionSet sets = preferred_only ? preferred_sets(g) : admissible_sets(g);
  std::vector<Labelling> out;
  out.reserve(sets.size());
  for (ArgSet e : sets) out.push_back(labelling_of_extension(g, e));
  std::sort(out.begin(), out.end(), labelling_less);
  return out;
}

AttackClassifier::AttackClassifier(const Framework& g, Semantics sigma, bool preferred_only)
    : g_(g), sigma_(sigma) {
  require_cf_or_adm(sigma);
  if (sigma == Semantics::cf) {
    credulous_in_ = credulous_sets(g, Semantics::cf).in;
  } else {
    labellings_ = admissible_labellings(g, preferred_only);
    odd_.emplace(g);
  }
}

AttackClassification AttackClassifier::classify(Edge e) const {
  const Framework& g = g_;
  AttackClassification result{g.attack(e), sigma_, Verdict::invariant, {}};
  if (g.has_attack(e)) return result;  // adding an existing attack changes nothing

  if (sigma_ == Semantics::cf) {
    const bool conflict = g.has_attack(e.target, e.source);
    const bool never_in =
        !credulous_in_.contains(e.source) || !credulous_in_.contains(e.target);
    if (!conflict && !never_in) {
      // {a, b} is conflict-free in g and is lost; every addition is
      // non-increasing for conflict-free sets, so only non-decreasing breaks.
      const ArgSet lost = ArgSet{e.source, e.target};
      result.verdict = Verdict::breaks_non_decreasing;
      result.witnesses.push_back({lost, Bullet::cf_existing_conflict, std::nullopt});
      result.witnesses.push_back({lost, Bullet::cf_never_in, std::nullopt});
    }
    return result;
  }

  auto nd = adm_non_decreasing_ok(g, e, labellings_);
  auto ni = adm_non_increasing_ok(g, e, labellings_, *odd_);
  result.verdict = verdict_of(!nd.empty(), !ni.empty());
  result.witnesses = std::move(nd);
  result.witnesses.insert(result.witnesses.end(), ni.begin(), ni.end());
  return result;
}

std::vector<Edge> AttackClassifier::candidates() const {
  std::vector<Edge> out;
  const Framework& g = g_;
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    for (std::uint32_t t = 0; t < g.size(); ++t) {
      if (!g.has_attack(s, t)) out.push_back({s, t});
    }
  }
  return out;
}

AttackClassification classify_cf_attack(const Framework& g, const Attack& e) {
  return AttackClassifier(g, Semantics::cf).classify(g.edge(e));
}

AttackClassification classify_adm_attack(const Framework& g, const Attack& e,
                                         bool use_preferred_only) {
  const Edge edge = g.edge(e);
  return AttackClassifier(g, Semantics::adm, use_preferred_only).classify(edge);
}

std::vector<Attack> enumerate_invariant_attacks(const Framework& g, Semantics sigma) {
  const AttackClassifier classifier(g, sigma);
  std::vector<Attack> out;
  for (Edge e : classifier.candidates()) {
    if (classifier.is_invariant(e)) out.push_back(g.attack(e));
  }
  return out;
}

}  // namespace afrob
