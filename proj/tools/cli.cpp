#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "synclab/analysis.hpp"
#include "synclab/errors.hpp"
#include "synclab/families.hpp"
#include "synclab/monoid.hpp"
#include "synclab/permutation_group.hpp"
#include "synclab/pi_chain.hpp"
#include "synclab/text_format.hpp"

namespace synclab::cli {

using Json = nlohmann::ordered_json;

namespace {

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json word_json(const std::optional<Word>& w) {
  if (!w) return nullptr;
  return w->letters;
}

Json partition_json(const std::vector<std::vector<State>>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) out.push_back(b);
  return out;
}

bool is_scalar_list(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar_text(const Json& j) {
  if (j.is_null()) return "none";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i > 0) out += ", ";
      out += scalar_text(j[i]);
    }
    return out + "]";
  }
  return j.dump();
}

/// Plain "key: value" rendering of the same document the JSON mode prints.
void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive() || is_scalar_list(value)) {
        os << pad << key << ": " << scalar_text(value) << '\n';
      } else {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_primitive() || is_scalar_list(item)) {
        os << pad << "- " << scalar_text(item) << '\n';
      } else {
        os << pad << "-\n";
        render_text(item, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

void emit(const Json& doc, const RunConfig& config, std::ostream& out) {
  if (config.format == OutputFormat::json) {
    out << doc.dump(2) << '\n';
  } else {
    render_text(doc, out, 0);
  }
}

Automaton load_automaton(const RunConfig& config, std::istream& in) {
  if (config.family) {
    if (!config.n) throw DomainError("--family needs --n");
    return build_family(family_from_string(*config.family), *config.n);
  }
  std::string text;
  if (config.input.empty() || config.input == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(config.input);
    if (!file) throw DomainError("cannot open " + config.input);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return parse_automaton(text);
}

StateSet parse_target(const std::string& text, std::size_t n) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '{' || c == '}' || c == ',') ? ' ' : c;
  std::istringstream is(cleaned);
  StateSet set(n);
  long long v = 0;
  while (is >> v) {
    if (v < 1 || static_cast<std::size_t>(v) > n) throw DomainError("target state " + std::to_string(v) + " out of range");
    set.insert(static_cast<State>(v));
  }
  if (!is.eof()) throw DomainError("malformed --target '" + text + "'");
  return set;
}

Json classification_json(const Classification& c) {
  Json j;
  j["synchronizing"] = c.synchronizing;
  j["transitive"] = c.transitive;
  j["directable"] = c.directable;
  j["one_point"] = c.one_point;
  j["weakly_singular"] = c.weakly_singular;
  Json perms = Json::array();
  for (const auto& p : c.permutation_part.generators()) perms.push_back(p.name);
  j["permutation_part"] = perms;
  Json singular = Json::array();
  for (const auto& f : c.singular_part) singular.push_back(f.to_string());
  j["singular_part"] = singular;
  return j;
}

Json bounds_json(const BoundsReport& r) {
  Json j;
  j["n"] = r.n;
  j["synchronizing"] = r.synchronizing;
  j["directable"] = r.directable;
  j["is_one_point"] = r.is_one_point;
  j["group_transitive"] = optional_json(r.group_transitive);
  j["group_primitive"] = optional_json(r.group_primitive);
  j["pi_strongly_connected"] = optional_json(r.pi_strongly_connected);
  j["msc"] = optional_json(r.msc);
  j["msc_bound"] = r.msc_bound;
  j["at"] = optional_json(r.at);
  j["at_bound"] = optional_json(r.at_bound);
  j["rt_exact"] = optional_json(r.rt_exact);
  j["rt_bound"] = r.rt_bound;
  j["greedy_word_length"] = optional_json(r.greedy_word_length);
  j["greedy_bound"] = optional_json(r.greedy_bound);
  j["all_ok"] = r.all_ok;
  j["flags"] = r.flags;
  j["violations"] = r.violations;
  return j;
}

Json sweep_json(const SweepReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["instances"] = r.instances;
  j["qualifying"] = r.qualifying;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["checked"] = c.checked;
    cj["violations"] = c.violations;
    cj["examples"] = c.examples;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["ok"] = r.ok();
  return j;
}

int dispatch(const RunConfig& config, std::istream& in, std::ostream& out) {
  const auto& cmd = config.command;
  const auto& gates = config.gates;

  if (cmd == "family") {
    if (!config.n) throw DomainError("family needs --n");
    const auto a = build_family(family_from_string(config.subcommand), *config.n);
    if (config.format == OutputFormat::json) {
      Json j;
      j["family"] = config.subcommand;
      j["n"] = *config.n;
      j["automaton"] = render_automaton(a);
      out << j.dump(2) << '\n';
    } else {
      out << render_automaton(a);
    }
    return kOk;
  }

  if (cmd == "sweep") {
    if (!config.n) throw DomainError("sweep needs --n");
    const auto report = run_sweep(config.subcommand, *config.n, config.samples, config.seed, gates);
    emit(sweep_json(report), config, out);
    return report.ok() ? kOk : kBoundViolation;
  }

  if (cmd == "monoid" && config.subcommand == "thm17") {
    if (!config.n) throw DomainError("monoid thm17 needs --n");
    const auto r = verify_theorem17(*config.n, gates);
    Json j;
    j["n"] = r.n;
    j["monoid_size"] = r.monoid_size;
    j["inverse_monoid_size"] = r.inverse_monoid_size;
    j["phi_injective"] = r.phi_injective;
    j["phi_morphism"] = r.phi_morphism;
    j["phi_surjective"] = r.phi_surjective;
    j["phi_is_isomorphism"] = r.phi_is_isomorphism;
    j["idempotents_commute"] = r.idempotents_commute;
    j["rt"] = r.rt;
    j["rt_expected"] = r.rt_expected;
    emit(j, config, out);
    const bool ok = r.phi_is_isomorphism && r.rt == r.rt_expected && r.idempotents_commute;
    return ok ? kOk : kBoundViolation;
  }

  const auto a = load_automaton(config, in);
  const auto n = a.states();
  Json j;

  if (cmd == "analyze") {
    const auto c = classify(a);
    const auto bounds = verify_bounds(a, gates);
    const auto rt = exact_reset_threshold(a, gates);
    j["n"] = n;
    Json names = Json::array();
    for (const auto& g : a.generators()) names.push_back(g.name);
    j["generators"] = names;
    j["classification"] = classification_json(c);
    j["rt"] = rt ? Json(rt->length) : Json(nullptr);
    j["reset_word"] = rt ? Json(rt->word.letters) : Json(nullptr);
    j["at"] = optional_json(bounds.at);
    j["msc"] = optional_json(bounds.msc);
    j["greedy_word"] = word_json(greedy_reset_word(a, gates));
    j["completely_reachable"] = reachability(a, gates).completely_reachable;
    j["bounds"] = bounds_json(bounds);
    emit(j, config, out);
    return bounds.all_ok ? kOk : kBoundViolation;
  }
  if (cmd == "rt") {
    const auto rt = exact_reset_threshold(a, gates);
    j["rt"] = rt ? Json(rt->length) : Json(nullptr);
    j["word"] = rt ? Json(rt->word.letters) : Json(nullptr);
  } else if (cmd == "word") {
    const auto w = greedy_reset_word(a, gates);
    j["length"] = w ? Json(w->length()) : Json(nullptr);
    j["word"] = word_json(w);
  } else if (cmd == "at") {
    j["at"] = optional_json(augment_threshold(a, gates));
  } else if (cmd == "msc") {
    j["msc"] = optional_json(msc(a));
  } else if (cmd == "pi") {
    const auto parts = one_point_decomposition(a);
    if (!parts) throw NotOnePointError("automaton is not one-point");
    const auto chain = pi_chain(parts->singular, parts->group);
    Json rels = Json::array();
    for (const auto& r : chain.relations) rels.push_back(r.to_string());
    j["singular"] = parts->singular_name;
    j["chain"] = rels;
    j["closure"] = chain.closure.to_string();
    j["closure_strongly_connected"] = is_strongly_connected(chain.closure);
    j["msc"] = optional_json(chain.msc);
  } else if (cmd == "reach") {
    const auto r = reachability(a, gates);
    Json images = Json::array();
    for (const auto& s : r.reachable_images) images.push_back(s.to_string());
    j["count"] = r.reachable_images.size();
    j["completely_reachable"] = r.completely_reachable;
    j["images"] = images;
  } else if (cmd == "witness") {
    const auto target = parse_target(config.target, n);
    const auto w = subset_witness_word(a, target, gates);
    j["target"] = target.to_string();
    j["reachable"] = w.has_value();
    j["word"] = word_json(w);
  } else if (cmd == "primitive") {
    const auto c = classify(a);
    const auto report = primitivity_report(c.permutation_part);
    j["transitive"] = report.transitive;
    j["primitive"] = report.primitive;
    j["higman_sims"] = is_primitive(c.permutation_part, PrimitivityMethod::higman_sims);
    j["block_oracle"] = is_primitive(c.permutation_part, PrimitivityMethod::block_oracle);
    j["orbits"] = partition_json(orbits(c.permutation_part));
    j["blocks"] = report.blocks ? partition_json(*report.blocks) : Json(nullptr);
    j["reason"] = report.reason.empty() ? Json(nullptr) : Json(report.reason);
  } else if (cmd == "bounds") {
    const auto r = verify_bounds(a, gates);
    emit(bounds_json(r), config, out);
    return r.all_ok ? kOk : kBoundViolation;
  } else if (cmd == "monoid") {
    const auto monoid = generate_monoid(a, gates.monoid_cap);
    const auto stats = monoid_stats(monoid);
    if (config.subcommand == "stats") {
      j["size"] = stats.size;
      j["sr"] = optional_json(stats.sr);
      j["has_one_point_of_rank_sr"] = stats.has_one_point_of_rank_sr;
      j["synchronizing"] = stats.synchronizing;
      j["quadratic_bound_applies"] = quadratic_monoid_bound_applies(monoid);
    } else if (config.subcommand == "rt") {
      const auto r = monoid_reset_threshold(monoid, gates);
      Json witness = Json::array();
      for (auto i : r.witness) witness.push_back(monoid.elements()[i].to_string());
      const bool applies = quadratic_monoid_bound_applies(monoid);
      const auto bound = quadratic_rt_bound(n);
      j["rt"] = r.value;
      j["witness"] = witness;
      j["generating_sets"] = r.generating_sets;
      j["quadratic_bound_applies"] = applies;
      j["quadratic_bound"] = bound;
      const auto lemma15 = lemma15_check(monoid, gates);
      j["top_rank_one_point_in_generating_sets"] = lemma15 == Lemma15Outcome::holds       ? "holds"
                     : lemma15 == Lemma15Outcome::violated ? "violated"
                                                           : "not-applicable";
      emit(j, config, out);
      const bool ok = (!applies || static_cast<std::int64_t>(r.value) <= bound) &&
                      lemma15 != Lemma15Outcome::violated;
      return ok ? kOk : kBoundViolation;
    } else {
      throw DomainError("unknown monoid action '" + config.subcommand + "' (stats, rt, thm17)");
    }
  } else {
    throw DomainError("unknown command '" + cmd + "'");
  }
  emit(j, config, out);
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, in, out);
  } catch (const CapacityError& e) {
    err << "scope capped: " << e.what() << '\n';
    return kScopeCapped;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reset thresholds, augmenting maps and transition monoids of finite automata"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto input_options = [&config](CLI::App* sub) {
    sub->add_option("input", config.input, "Automaton file ('-' or omitted: stdin)");
    sub->add_option("--family", config.family, "Built-in family instead of a file (cerny, rn)");
    sub->add_option("--n", config.n, "State count for --family");
  };

  struct Described {
    const char* name;
    const char* help;
  };
  for (const auto& [name, help] : std::initializer_list<Described>{
           {"analyze", "Classification, thresholds and bound report"},
           {"rt", "Exact reset threshold and a shortest reset word"},
           {"word", "Reset word from repeated augmentation"},
           {"at", "Augment threshold"},
           {"msc", "First strongly connected index of the singular chain"},
           {"pi", "The singular relation chain"},
           {"reach", "Reachable images"},
           {"primitive", "Primitivity of the permutation generators"},
           {"bounds", "Check every applicable bound"}}) {
    input_options(app.add_subcommand(name, help));
  }
  auto* witness = app.add_subcommand("witness", "A word whose image is the target set");
  input_options(witness);
  witness->add_option("--target", config.target, "Target subset, e.g. 1,3")->required();

  auto* monoid = app.add_subcommand("monoid", "Transition monoid: stats, rt, thm17");
  monoid->add_option("action", config.subcommand, "stats | rt | thm17")
      ->required()
      ->check(CLI::IsMember({"stats", "rt", "thm17"}));
  input_options(monoid);

  auto* family = app.add_subcommand("family", "Print a built-in automaton");
  family->add_option("kind", config.subcommand, "cerny | rn")->required()->check(CLI::IsMember({"cerny", "rn"}));
  family->add_option("--n", config.n, "State count")->required();

  auto* sweep = app.add_subcommand("sweep", "Exhaustive or sampled bound suites");
  sweep->add_option("suite", config.subcommand, "Suite name")->required()->check(CLI::IsMember(sweep_suites()));
  sweep->add_option("--n", config.n, "State count")->required();
  sweep->add_option("--samples", config.samples, "Random instances (0: exhaustive)");
  sweep->add_option("--seed", config.seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  try {
    config.gates = Gates::from_environment();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return run(config, in, out, err);
}

}  // namespace synclab::cli
