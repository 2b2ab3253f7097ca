#include "limattn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "limattn/census.hpp"
#include "limattn/classify.hpp"
#include "limattn/explain.hpp"
#include "limattn/fixtures.hpp"
#include "limattn/io.hpp"

namespace limattn {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string format = "human";
  std::string path;
  std::string kind;
  std::string cls;
  std::string order;
  int n = 0;
  int workers = 1;

  bool structured() const { return format == "structured"; }
};

ordered_json labels_json(const GroundSet& g, const std::vector<Item>& items) {
  ordered_json arr = ordered_json::array();
  for (Item x : items) arr.push_back(g.label(x));
  return arr;
}

ordered_json edges_json(const Relation& r) {
  ordered_json arr = ordered_json::array();
  for (auto [a, b] : r.edges()) arr.push_back({r.ground().label(a), r.ground().label(b)});
  return arr;
}

std::string edges_text(const Relation& r) {
  std::string out;
  for (auto [a, b] : r.edges()) {
    out += r.ground().label(a) + " -> " + r.ground().label(b) + '\n';
  }
  return out;
}

std::string cycle_text(const GroundSet& g, const std::vector<Item>& cycle) {
  std::string out;
  for (Item x : cycle) out += g.label(x) + " -> ";
  return out + g.label(cycle.front());
}

std::string switch_text(const GroundSet& g, const Switch& s) {
  return "(" + g.format(s.inner) + ", " + g.format(s.outer) + ")";
}

ChoiceFunction load_choice(const Options& o) { return parse_choice_file(read_file(o.path)); }

int cmd_classify(const Options& o, std::ostream& out) {
  const ChoiceFunction c = load_choice(o);
  const GroundSet& g = c.ground();
  const ClassMembership m = classify(c);
  if (o.structured()) {
    ordered_json j;
    for (ModelClass cls : kAllModelClasses) j[to_string(cls)] = m.get(cls);
    ordered_json w;
    for (const auto& [cls, v] : m.verdicts) {
      ordered_json e;
      e["member"] = v.member;
      e["criterion"] = v.criterion;
      if (!v.cycle.empty()) e["cycle"] = labels_json(g, v.cycle);
      if (v.pair) e["pair"] = labels_json(g, {v.pair->first, v.pair->second});
      if (v.first_switch) {
        e["switch"] = {{"inner", g.format(v.first_switch->inner)},
                       {"outer", g.format(v.first_switch->outer)}};
      }
      if (v.relation) e["relation"] = edges_json(*v.relation);
      w[to_string(cls)] = std::move(e);
    }
    j["witnesses"] = std::move(w);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& [cls, v] : m.verdicts) {
    std::string line = to_string(cls);
    line.resize(7, ' ');
    line += v.member ? "yes  " : "no   ";
    line += v.criterion;
    if (!v.cycle.empty()) line += "; cycle " + cycle_text(g, v.cycle);
    if (v.pair) {
      line += "; " + g.label(v.pair->first) + " and " + g.label(v.pair->second) +
              " are each more salient than the other";
    }
    if (v.first_switch) line += "; switch " + switch_text(g, *v.first_switch);
    out << line << '\n';
  }
  return kExitOk;
}

int cmd_relations(const Options& o, std::ostream& out) {
  const auto kind = parse_revealed_kind(o.kind);
  if (!kind) throw ParseError(0, "unknown relation kind '" + o.kind + "'");
  const ChoiceFunction c = load_choice(o);
  const Relation r = reveal(c, *kind);
  if (o.structured()) {
    const RelationProps p = relation_props(r);
    ordered_json j;
    j["kind"] = to_string(*kind);
    j["edges"] = edges_json(r);
    j["asymmetric"] = p.asymmetric;
    j["acyclic"] = p.acyclic;
    j["transitive"] = p.transitive;
    j["complete"] = p.complete;
    out << j.dump(2) << '\n';
  } else {
    out << edges_text(r);
  }
  return kExitOk;
}

int cmd_explain(const Options& o, std::ostream& out) {
  const auto target = parse_explain_target(o.cls);
  if (!target) throw ParseError(0, "unknown class '" + o.cls + "'");
  const ChoiceFunction c = load_choice(o);
  const Explanation e = explain(c, *target);
  std::string comment = std::string(to_string(*target)) + " explanation";
  if (e.certified) comment += "; filter certified " + std::string(to_string(*e.certified));
  const std::string text = print_model_file(e.model, comment);
  if (o.structured()) {
    ordered_json j;
    j["class"] = to_string(*target);
    j["certified"] = e.certified ? ordered_json(to_string(*e.certified)) : ordered_json();
    j["model"] = text;
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_welfare(const Options& o, std::ostream& out) {
  const auto cls = parse_model_class(o.cls);
  if (!cls || (*cls != ModelClass::COLA && *cls != ModelClass::CSLA && *cls != ModelClass::CCLA)) {
    throw ParseError(0, "welfare needs --class cola, csla or ccla");
  }
  const ChoiceFunction c = load_choice(o);
  const GroundSet& g = c.ground();
  const auto facts = welfare_report(c, *cls);
  if (o.structured()) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : facts) {
      ordered_json j;
      j["kind"] = to_string(f.kind);
      if (f.a >= 0) j["a"] = g.label(f.a);
      if (f.b >= 0) j["b"] = g.label(f.b);
      if (!f.menu.empty()) j["menu"] = g.format(f.menu);
      j["text"] = f.describe(g);
      j["source"] = {{"inner", g.format(f.source.inner)},
                     {"outer", g.format(f.source.outer)},
                     {"pattern", f.from_pattern}};
      arr.push_back(std::move(j));
    }
    out << ordered_json{{"class", to_string(*cls)}, {"facts", arr}}.dump(2) << '\n';
  } else {
    for (const auto& f : facts) {
      out << f.describe(g) << "   [" << (f.from_pattern ? "pattern " : "switch ")
          << switch_text(g, f.source) << "]\n";
    }
  }
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const ModelSpec model = parse_model_file(read_file(o.path));
  const ChoiceFunction c = simulate(model);
  if (o.structured()) {
    const GroundSet& g = c.ground();
    ordered_json choices;
    for_each_menu(c.size(), [&](ItemSet a) {
      if (a.size() >= 2) choices[g.format(a)] = g.label(c(a));
    });
    out << ordered_json{{"ground", g.labels()}, {"choices", choices}}.dump(2) << '\n';
  } else {
    out << print_choice_file(c);
  }
  return kExitOk;
}

int cmd_filter(const Options& o, std::ostream& out) {
  const auto kind = parse_filter_kind(o.kind);
  if (!kind) throw ParseError(0, "unknown filter kind '" + o.kind + "'");
  const ChoiceCorrespondence gamma = parse_corr_file(read_file(o.path));
  std::optional<LinearOrder> order;
  if (!o.order.empty()) order = parse_ranking(gamma.ground(), o.order);
  const Check check = is_filter(gamma, *kind, order ? &*order : nullptr);
  if (o.structured()) {
    ordered_json j{{"kind", to_string(*kind)}, {"holds", check.holds}};
    if (check.witness) j["witness"] = check.witness->describe(gamma.ground());
    out << j.dump(2) << '\n';
  } else {
    out << to_string(*kind) << ": " << (check ? "holds" : "fails");
    if (check.witness) out << " (" << check.witness->describe(gamma.ground()) << ")";
    out << '\n';
  }
  return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out) {
  const CensusReport r = run_census(o.n, o.workers);
  if (o.structured()) {
    ordered_json j;
    j["n"] = r.n;
    j["total"] = r.total;
    j["rat"] = r.rat;
    j["cla"] = r.cla;
    j["cola"] = r.cola;
    j["csla"] = r.csla;
    j["cssla"] = r.cssla;
    j["ccla"] = r.ccla;
    j["pilc"] = r.pilc;
    ordered_json regions;
    for (int i = 0; i < kRegionCount; ++i) {
      regions[to_string(static_cast<Region>(i))] = r.regions[i];
    }
    j["regions"] = std::move(regions);
    if (r.n == 4) {
      j["exploratory"] = {{"cla_over_24", static_cast<double>(r.cla) / 24.0}};
    }
    j["consistent"] = r.consistent();
    j["workers"] = r.workers;
    j["elapsed_seconds"] = r.elapsed_seconds;
    out << j.dump(2) << '\n';
  } else {
    out << format_census(r);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto checks = verify_fixtures();
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (o.structured()) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out << ordered_json{{"all_pass", all}, {"checks", arr}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.detail << "]\n";
    }
  }
  return all ? kExitOk : kExitDefect;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze finite choice functions under limited attention", "limattn"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}));

  auto* classify_cmd = app.add_subcommand("classify", "Decide class memberships");
  classify_cmd->add_option("file", o.path, "Choice file")->required();

  auto* relations_cmd = app.add_subcommand("relations", "Print a revealed relation");
  relations_cmd->add_option("file", o.path, "Choice file")->required();
  relations_cmd->add_option("--kind", o.kind, "P, Rc, salience, Fc, PPI or Ptilde")
      ->required();

  auto* explain_cmd = app.add_subcommand("explain", "Build a model reproducing the choices");
  explain_cmd->add_option("file", o.path, "Choice file")->required();
  explain_cmd->add_option("--class", o.cls, "cla, cola, csla, cssla, ccla or cer")
      ->required();

  auto* welfare_cmd = app.add_subcommand("welfare", "Facts implied by switches");
  welfare_cmd->add_option("file", o.path, "Choice file")->required();
  welfare_cmd->add_option("--class", o.cls, "cola, csla or ccla")->required();

  auto* simulate_cmd = app.add_subcommand("simulate", "Choices produced by a model file");
  simulate_cmd->add_option("file", o.path, "Model file")->required();

  auto* filter_cmd = app.add_subcommand("filter", "Check a filter property of a correspondence");
  filter_cmd->add_option("file", o.path, "Correspondence file")->required();
  filter_cmd->add_option("--kind", o.kind,
                         "attention, optimal, salient, selective-salient, competitive, "
                         "competition or path-independent")
      ->required();
  filter_cmd->add_option("--order", o.order, "Preference, best first (\"y w x z\")");

  auto* census_cmd = app.add_subcommand("census", "Classify every choice function on n items");
  census_cmd->add_option("--n", o.n, "Number of items")->required()->check(CLI::Range(2, 4));
  census_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Check the published examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, out);
    if (*relations_cmd) return cmd_relations(o, out);
    if (*explain_cmd) return cmd_explain(o, out);
    if (*welfare_cmd) return cmd_welfare(o, out);
    if (*simulate_cmd) return cmd_simulate(o, out);
    if (*filter_cmd) return cmd_filter(o, out);
    if (*census_cmd) return cmd_census(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.category()) {
      case ErrorCategory::Parse: return kExitParse;
      case ErrorCategory::Precondition: return kExitPrecondition;
      case ErrorCategory::Defect: return kExitDefect;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDefect;
  }
  return kExitParse;
}

}  // namespace limattn
