#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "afrob/afrob.hpp"

namespace afrob::cli {

using nlohmann::ordered_json;

namespace {

struct CommonOptions {
  std::string input;
  std::string format = "text";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Framework load(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  return parse_apx(text);
}

Semantics semantics_arg(const std::string& name) {
  auto s = parse_semantics(name);
  if (!s) throw UsageError("unknown semantics '" + name + "'");
  return *s;
}

ordered_json names_json(const Framework& g, ArgSet set) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i : set) arr.push_back(g.name(i).str());
  return arr;
}

ordered_json extensions_json(const Framework& g, const ExtensionSet& s) {
  ordered_json arr = ordered_json::array();
  for (ArgSet e : s) arr.push_back(names_json(g, e));
  return arr;
}

ordered_json labelling_json(const Framework& g, const Labelling& l) {
  return {{"in", names_json(g, l.in())},
          {"out", names_json(g, l.out())},
          {"undec", names_json(g, l.undec())}};
}

ordered_json attack_json(const Attack& a) {
  return {{"from", a.source.str()}, {"to", a.target.str()}};
}

ordered_json witness_json(const Framework& g, const Witness& w) {
  ordered_json j = {{"in", names_json(g, w.in_set)}, {"bullet", to_string(w.bullet)}};
  if (w.pivot) j["pivot"] = g.name(*w.pivot).str();
  return j;
}

std::string braces(const Framework& g, ArgSet set) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : set) {
    if (!first) s += ",";
    s += g.name(i).str();
    first = false;
  }
  return s + "}";
}

std::string braces_list(const Framework& g, const ExtensionSet& s) {
  std::string out;
  for (ArgSet e : s) {
    if (!out.empty()) out += " ";
    out += braces(g, e);
  }
  return out.empty() ? "(none)" : out;
}

std::string attack_text(const Attack& a) {
  return "(" + a.source.str() + "," + a.target.str() + ")";
}

void emit(std::ostream& out, const std::string& command, ordered_json result) {
  ordered_json doc = {{"schema", kSchema}, {"command", command}, {"result", std::move(result)}};
  out << doc.dump(2) << "\n";
}

bool json_format(const CommonOptions& c) { return c.format == "json"; }

void add_common(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--input", c.input, "apx file, or - for standard input")->required();
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

const std::vector<std::string> kAllSemanticsNames = {"cf", "adm", "com", "stb", "prf", "gde", "sst"};
const std::vector<std::string> kLabellingSemantics = {"com", "stb", "prf", "gde", "sst"};
const std::vector<std::string> kInvarianceSemantics = {"cf", "adm"};

// --- subcommands ---------------------------------------------------------

void cmd_extensions(const CommonOptions& c, const std::string& sem, std::istream& in,
                    std::ostream& out) {
  const Framework g = load(c.input, in);
  const Semantics sigma = semantics_arg(sem);
  const ExtensionSet s = extensions(g, sigma);
  if (json_format(c)) {
    emit(out, "extensions", {{"semantics", sem}, {"count", s.size()},
                             {"extensions", extensions_json(g, s)}});
    return;
  }
  out << sem << ": " << s.size() << " extension" << (s.size() == 1 ? "" : "s") << "\n";
  for (ArgSet e : s) out << braces(g, e) << "\n";
}

void cmd_labellings(const CommonOptions& c, const std::string& sem, std::istream& in,
                    std::ostream& out) {
  const Framework g = load(c.input, in);
  const auto ls = labellings_for(g, semantics_arg(sem));
  if (json_format(c)) {
    ordered_json arr = ordered_json::array();
    for (const auto& l : ls) arr.push_back(labelling_json(g, l));
    emit(out, "labellings", {{"semantics", sem}, {"count", ls.size()}, {"labellings", arr}});
    return;
  }
  out << sem << ": " << ls.size() << " labelling" << (ls.size() == 1 ? "" : "s") << "\n";
  for (const auto& l : ls) {
    out << "in=" << braces(g, l.in()) << " out=" << braces(g, l.out())
        << " undec=" << braces(g, l.undec()) << "\n";
  }
}

struct CheckOptions {
  std::string from;
  std::string to;
  std::string semantics;
  bool oracle = false;
  bool preferred_only = false;
};

void cmd_check_attack(const CommonOptions& c, const CheckOptions& o, std::istream& in,
                      std::ostream& out) {
  const Framework g = load(c.input, in);
  const Semantics sigma = semantics_arg(o.semantics);
  const Attack attack{ArgumentId(o.from), ArgumentId(o.to)};
  const Edge e = g.edge(attack);
  const AttackClassification cls = AttackClassifier(g, sigma, o.preferred_only).classify(e);

  std::optional<ExtensionDiff> diff;
  if (o.oracle) diff = extension_diff(g, g.with_edge(e), sigma);

  if (json_format(c)) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : cls.witnesses) witnesses.push_back(witness_json(g, w));
    ordered_json result = {{"attack", attack_json(cls.attack)},
                           {"semantics", o.semantics},
                           {"preferred_only", o.preferred_only},
                           {"already_present", g.has_attack(e)},
                           {"verdict", to_string(cls.verdict)},
                           {"witnesses", witnesses}};
    if (diff) {
      result["oracle"] = {{"invariant", diff->empty()},
                          {"agrees", diff->empty() == cls.invariant()},
                          {"lost", extensions_json(g, diff->lost)},
                          {"gained", extensions_json(g, diff->gained)}};
    }
    emit(out, "check-attack", std::move(result));
    return;
  }
  out << "attack " << attack_text(cls.attack) << " under " << o.semantics << ": "
      << to_string(cls.verdict) << "\n";
  for (const auto& w : cls.witnesses) {
    out << "  " << to_string(w.bullet) << " in labelling in=" << braces(g, w.in_set);
    if (w.pivot) out << " c=" << g.name(*w.pivot).str();
    out << "\n";
  }
  if (diff) {
    out << "oracle: " << (diff->empty() ? "invariant" : "changed")
        << (diff->empty() == cls.invariant() ? " (agrees)" : " (DISAGREES)") << "\n";
    out << "  lost: " << braces_list(g, diff->lost) << "\n";
    out << "  gained: " << braces_list(g, diff->gained) << "\n";
  }
}

void cmd_invariant_attacks(const CommonOptions& c, const std::string& sem, bool oracle,
                           std::istream& in, std::ostream& out) {
  const Framework g = load(c.input, in);
  const Semantics sigma = semantics_arg(sem);
  const auto attacks = enumerate_invariant_attacks(g, sigma);
  std::vector<Attack> by_oracle;
  if (oracle) {
    for (Edge e : oracle_invariant_steps(g, sigma)) by_oracle.push_back(g.attack(e));
  }
  if (json_format(c)) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : attacks) arr.push_back(attack_json(a));
    ordered_json result = {{"semantics", sem}, {"count", attacks.size()}, {"attacks", arr}};
    if (oracle) {
      ordered_json oarr = ordered_json::array();
      for (const auto& a : by_oracle) oarr.push_back(attack_json(a));
      result["oracle"] = {{"count", by_oracle.size()}, {"attacks", oarr},
                          {"agrees", by_oracle == attacks}};
    }
    emit(out, "invariant-attacks", std::move(result));
    return;
  }
  out << sem << ": " << attacks.size() << " invariant attack"
      << (attacks.size() == 1 ? "" : "s") << "\n";
  for (const auto& a : attacks) out << attack_text(a) << "\n";
  if (oracle) {
    out << "oracle: " << by_oracle.size() << " invariant attack"
        << (by_oracle.size() == 1 ? "" : "s") << (by_oracle == attacks ? " (agrees)" : " (DISAGREES)")
        << "\n";
    for (const auto& a : by_oracle) out << "  " << attack_text(a) << "\n";
  }
}

struct RobustnessCli {
  std::string semantics;
  std::string strategy = "exhaustive";
  std::optional<std::size_t> max_steps;
  bool paranoid = false;
};

void cmd_robustness(const CommonOptions& c, const RobustnessCli& o, std::istream& in,
                    std::ostream& out) {
  const Framework g = load(c.input, in);
  const Semantics sigma = semantics_arg(o.semantics);
  RobustnessOptions options;
  options.strategy = *parse_strategy(o.strategy);
  options.max_steps = o.max_steps;
  options.paranoid = o.paranoid;
  const RobustnessResult r = robustness_degree(g, sigma, options);
  const bool verified = verify_witness(g, sigma, r.witness);

  if (json_format(c)) {
    ordered_json witness = ordered_json::array();
    for (const auto& a : r.witness) witness.push_back(attack_json(a));
    emit(out, "robustness",
         {{"semantics", o.semantics},
          {"strategy", to_string(r.strategy)},
          {"degree", r.degree},
          {"witness", witness},
          {"explored_states", r.explored_states},
          {"lower_bound", r.capped || r.strategy == Strategy::greedy},
          {"capped", r.capped},
          {"paranoid", o.paranoid},
          {"oracle_rejections", r.oracle_rejections},
          {"verified", verified}});
    return;
  }
  out << "robustness degree (" << o.semantics << ", " << to_string(r.strategy) << "): " << r.degree
      << (r.capped ? " (capped, lower bound)" : "") << "\n";
  out << "witness:";
  for (const auto& a : r.witness) out << " " << attack_text(a);
  out << "\nexplored states: " << r.explored_states << "\n";
  if (o.paranoid) out << "oracle rejections: " << r.oracle_rejections << "\n";
  out << "replay verified: " << (verified ? "yes" : "no") << "\n";
}

void cmd_equivalent(const CommonOptions& c, const std::string& sem, const std::string& other,
                    std::istream& in, std::ostream& out) {
  const Framework g = load(c.input, in);
  const Framework g2 = load(other, in);
  const Semantics sigma = semantics_arg(sem);
  const bool eq = sigma_equivalent(g, g2, sigma);
  const ExtensionDiff diff = extension_diff(g, g2, sigma);
  if (json_format(c)) {
    emit(out, "equivalent", {{"semantics", sem},
                             {"equivalent", eq},
                             {"lost", extensions_json(g, diff.lost)},
                             {"gained", extensions_json(g, diff.gained)}});
    return;
  }
  out << (eq ? "equivalent" : "not equivalent") << " under " << sem << "\n";
  out << "  lost: " << braces_list(g, diff.lost) << "\n";
  out << "  gained: " << braces_list(g, diff.gained) << "\n";
}

struct AuditCli {
  std::size_t arguments = 3;
  std::string semantics;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  bool preferred_only = false;
  std::size_t jobs = 1;
  std::size_t examples = 10;
  std::string format = "text";
};

void cmd_audit(const AuditCli& o, std::ostream& out) {
  AuditOptions options;
  options.arguments = o.arguments;
  options.semantics = semantics_arg(o.semantics);
  options.seed = o.seed;
  options.samples = o.samples;
  options.preferred_only = o.preferred_only;
  options.jobs = o.jobs;
  options.max_examples = o.examples;
  const AuditReport r = exhaustive_audit(options);

  if (o.format == "json") {
    ordered_json by_bullet = ordered_json::object();
    for (const auto& [k, v] : r.by_bullet) by_bullet[k] = v;
    ordered_json examples = ordered_json::array();
    for (const auto& d : r.examples) {
      const Framework& g = d.framework;
      ordered_json attacks = ordered_json::array();
      for (const auto& a : g.attacks()) attacks.push_back(attack_json(a));
      ordered_json witnesses = ordered_json::array();
      for (const auto& w : d.witnesses) witnesses.push_back(witness_json(g, w));
      examples.push_back({{"framework", {{"arguments", names_json(g, g.all())}, {"attacks", attacks}}},
                          {"attack", attack_json(d.attack)},
                          {"semantics", to_string(d.semantics)},
                          {"predicate_verdict", to_string(d.predicate_verdict)},
                          {"oracle_invariant", d.oracle_verdict},
                          {"witnesses", witnesses},
                          {"lost", extensions_json(g, d.extension_diff.lost)},
                          {"gained", extensions_json(g, d.extension_diff.gained)}});
    }
    ordered_json result = {{"arguments", r.arguments},
                           {"semantics", to_string(r.semantics)},
                           {"exhaustive", r.exhaustive},
                           {"seed", r.seed ? ordered_json(*r.seed) : ordered_json(nullptr)},
                           {"preferred_only", r.preferred_only},
                           {"frameworks", r.frameworks},
                           {"candidates", r.candidates},
                           {"disagreements", r.disagreements},
                           {"false_invariant", r.false_invariant},
                           {"false_violation", r.false_violation},
                           {"by_bullet", by_bullet},
                           {"examples", examples}};
    emit(out, "audit", std::move(result));
    return;
  }
  out << "audit " << to_string(r.semantics) << " on " << r.arguments << " arguments ("
      << (r.exhaustive ? "exhaustive" : "sampled, seed " + std::to_string(*r.seed)) << ")\n";
  out << "frameworks: " << r.frameworks << "\ncandidates: " << r.candidates
      << "\ndisagreements: " << r.disagreements << " (false invariant " << r.false_invariant
      << ", false violation " << r.false_violation << ")\n";
  for (const auto& [k, v] : r.by_bullet) out << "  " << k << ": " << v << "\n";
  for (const auto& d : r.examples) {
    const Framework& g = d.framework;
    out << "example: attacks";
    for (const auto& a : g.attacks()) out << " " << attack_text(a);
    out << " + " << attack_text(d.attack) << ": predicate " << to_string(d.predicate_verdict)
        << ", oracle " << (d.oracle_verdict ? "invariant" : "changed") << "; lost "
        << braces_list(g, d.extension_diff.lost) << "; gained "
        << braces_list(g, d.extension_diff.gained) << "\n";
  }
}

void cmd_dot(const CommonOptions& c, const std::optional<std::vector<std::string>>& in_set,
             std::istream& in, std::ostream& out) {
  const Framework g = load(c.input, in);
  std::optional<Labelling> labelling;
  if (in_set) labelling = labelling_of_extension(g, g.set_of(std::span<const std::string>(*in_set)));
  const std::string dot = emit_dot(g, labelling);
  if (json_format(c)) {
    emit(out, "dot", {{"dot", dot}});
    return;
  }
  out << dot;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Dung semantics, invariant attack additions and robustness degrees", "afrob"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string semantics;

  auto* ext = app.add_subcommand("extensions", "Enumerate the extensions of a semantics");
  add_common(ext, common);
  ext->add_option("--semantics", semantics)->required()->check(CLI::IsMember(kAllSemanticsNames));

  auto* lab = app.add_subcommand("labellings", "Enumerate complete-labelling based labellings");
  add_common(lab, common);
  lab->add_option("--semantics", semantics)->required()->check(CLI::IsMember(kLabellingSemantics));

  CheckOptions check;
  auto* chk = app.add_subcommand("check-attack", "Classify one candidate attack");
  add_common(chk, common);
  chk->add_option("--from", check.from)->required();
  chk->add_option("--to", check.to)->required();
  chk->add_option("--semantics", check.semantics)
      ->required()
      ->check(CLI::IsMember(kInvarianceSemantics));
  chk->add_flag("--oracle", check.oracle, "append the recomputed extension diff");
  chk->add_flag("--preferred-only", check.preferred_only,
                "only use the labellings of preferred extensions");

  bool oracle = false;
  auto* inv = app.add_subcommand("invariant-attacks", "List every invariant new attack");
  add_common(inv, common);
  inv->add_option("--semantics", semantics)->required()->check(CLI::IsMember(kInvarianceSemantics));
  inv->add_flag("--oracle", oracle, "also list the attacks the oracle finds invariant");

  RobustnessCli rob;
  auto* robc = app.add_subcommand("robustness", "Local-expansion robustness degree");
  add_common(robc, common);
  robc->add_option("--semantics", rob.semantics)
      ->required()
      ->check(CLI::IsMember(kInvarianceSemantics));
  robc->add_option("--strategy", rob.strategy)
      ->check(CLI::IsMember({"exhaustive", "greedy"}))
      ->capture_default_str();
  robc->add_option("--max-steps", rob.max_steps);
  robc->add_flag("--paranoid", rob.paranoid, "verify every accepted step with the oracle");

  std::string other;
  auto* eqc = app.add_subcommand("equivalent", "Compare two frameworks under a semantics");
  add_common(eqc, common);
  eqc->add_option("--semantics", semantics)->required()->check(CLI::IsMember(kAllSemanticsNames));
  eqc->add_option("--other", other, "second apx file")->required();

  AuditCli audit;
  auto* aud = app.add_subcommand("audit", "Cross-validate the predicates against the oracle");
  aud->add_option("--args", audit.arguments, "number of arguments")->required()
      ->check(CLI::Range(std::size_t{0}, kMaxAuditArguments));
  aud->add_option("--semantics", audit.semantics)
      ->required()
      ->check(CLI::IsMember(kInvarianceSemantics));
  aud->add_option("--seed", audit.seed)->capture_default_str();
  aud->add_option("--samples", audit.samples)->capture_default_str();
  aud->add_option("--examples", audit.examples, "discrepancies reported verbatim")
      ->capture_default_str();
  aud->add_flag("--preferred-only", audit.preferred_only);
  aud->add_option("--jobs", audit.jobs)->envname("AFROB_JOBS")->check(CLI::PositiveNumber);
  aud->add_option("--format", audit.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::optional<std::vector<std::string>> dot_in;
  auto* dotc = app.add_subcommand("dot", "Render the framework as a Graphviz digraph");
  add_common(dotc, common);
  dotc->add_option("--in", dot_in, "colour by the labelling of this admissible set")
      ->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "afrob: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (ext->parsed()) cmd_extensions(common, semantics, in, out);
    else if (lab->parsed()) cmd_labellings(common, semantics, in, out);
    else if (chk->parsed()) cmd_check_attack(common, check, in, out);
    else if (inv->parsed()) cmd_invariant_attacks(common, semantics, oracle, in, out);
    else if (robc->parsed()) cmd_robustness(common, rob, in, out);
    else if (eqc->parsed()) cmd_equivalent(common, semantics, other, in, out);
    else if (aud->parsed()) cmd_audit(audit, out);
    else if (dotc->parsed()) cmd_dot(common, dot_in, in, out);
  } catch (const UsageError& e) {
    err << "afrob: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "afrob: " << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::UndeclaredArgument: return kParseError;
      case ErrorKind::SizeLimit: return kSizeLimit;
      case ErrorKind::InternalInvariantViolation: return kInternalError;
      default: return kUsageError;
    }
  }
  return kSuccess;
}

}  // namespace afrob::cli
