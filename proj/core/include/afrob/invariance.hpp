#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "afrob/arg_set.hpp"
#include "afrob/framework.hpp"
#include "afrob/labelling.hpp"
#include "afrob/semantics.hpp"

namespace afrob {

/// Weak inclusion of extension sets: every member of `s` has a superset (or
/// equal set) in `s2`. Reflexive and transitive, but mutual inclusion does
/// not imply equality: {{a}} and {{a}, {}} include each other.
bool extension_set_included(const ExtensionSet& s, const ExtensionSet& s2);

/// Standard equivalence: equal extension sets under `sigma`. Both frameworks
/// must have the same arguments (ArgumentSetMismatch otherwise).
bool sigma_equivalent(const Framework& g, const Framework& g2, Semantics sigma);

enum class Verdict { invariant, breaks_non_decreasing, breaks_non_increasing, breaks_both };

std::string_view to_string(Verdict v);

/// Labelling conditions under which adding an attack (a, b) changes the
/// conflict-free or admissible sets.
enum class Bullet {
  // conflict-free: the attack is invariant iff a and b already conflict or
  // one of them is never credulously in
  cf_existing_conflict,
  cf_never_in,
  // a non-decreasing addition matches none of these (an extension is lost)
  nd_in_in,              // a, b in
  nd_out_in_undefended,  // a out, b in, (b,a) ∉ R, no out c attacks b
  nd_undec_in,           // a undec, b in
  // a non-increasing addition matches none of these (an extension appears)
  ni_in_in_defends,           // a, b in, some out c with (a,c) ∉ R, (b,c) ∈ R
  ni_in_out_reinstates,       // a in, b out, b attacks some in c
  ni_in_undec_defends_undec,  // a in, b undec, b attacks some undec c, (c,c) ∉ R
  ni_out_self_defense,        // a out, odd walk b ⇝ a, no other odd attacker of a
                              // that a cannot reach back by an odd walk
};

std::string_view to_string(Bullet b);

/// One labelling (identified by its in-set) satisfying one bullet. `pivot` is
/// the argument c named by the bullet, when it has one.
struct Witness {
  ArgSet in_set;
  Bullet bullet;
  std::optional<std::uint32_t> pivot;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AttackClassification {
  Attack attack;
  Semantics semantics;
  Verdict verdict;
  std::vector<Witness> witnesses;

  bool invariant() const noexcept { return verdict == Verdict::invariant; }
  bool has_bullet(Bullet b) const;
};

/// Witnesses against non-decreasing: every (labelling, bullet) pair matching
/// a nd_* bullet for `e`. Empty means adding `e` keeps every admissible set.
std::vector<Witness> adm_non_decreasing_ok(const Framework& g, Edge e,
                                           std::span<const Labelling> labellings);
std::vector<Witness> adm_non_decreasing_ok(const Framework& g, const Attack& e,
                                           std::span<const Labelling> labellings);

/// Witnesses against non-increasing: every (labelling, bullet) pair matching
/// a ni_* bullet for `e`. Empty means adding `e` creates no admissible set.
std::vector<Witness> adm_non_increasing_ok(const Framework& g, Edge e,
                                           std::span<const Labelling> labellings,
                                           const OddWalkTable& odd);
std::vector<Witness> adm_non_increasing_ok(const Framework& g, const Attack& e,
                                           std::span<const Labelling> labellings);

/// Labellings of the admissible extensions of `g`, or of the preferred ones.
std::vector<Labelling> admissible_labellings(const Framework& g, bool preferred_only);

AttackClassification classify_cf_attack(const Framework& g, const Attack& e);
AttackClassification classify_adm_attack(const Framework& g, const Attack& e,
                                         bool use_preferred_only = false);

/// Classifies candidate attacks against one framework, computing the
/// labellings (and odd-walk table) once.
class AttackClassifier {
 public:
  /// `sigma` must be cf or adm (UnsupportedSemantics otherwise).
  AttackClassifier(const Framework& g, Semantics sigma, bool preferred_only = false);

  const Framework& framework() const noexcept { return g_; }
  Semantics semantics() const noexcept { return sigma_; }

  AttackClassification classify(Edge e) const;
  bool is_invariant(Edge e) const { return classify(e).invariant(); }

  /// (A × A) \ R in canonical order.
  std::vector<Edge> candidates() const;

 private:
  Framework g_;
  Semantics sigma_;
  ArgSet credulous_in_;
  std::vector<Labelling> labellings_;
  std::optional<OddWalkTable> odd_;
};

/// Candidate attacks (not already in R) that classify as invariant, in
/// canonical order.
std::vector<Attack> enumerate_invariant_attacks(const Framework& g, Semantics sigma);

}  // namespace afrob
