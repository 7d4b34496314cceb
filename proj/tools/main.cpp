#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semidyn/bisection.hpp"
#include "semidyn/dot_export.hpp"
#include "semidyn/expansion.hpp"
#include "semidyn/fixtures.hpp"
#include "semidyn/generate.hpp"
#include "semidyn/germ_groupoid.hpp"
#include "semidyn/quotient_action.hpp"
#include "semidyn/recurrence.hpp"
#include "semidyn/suite.hpp"

using namespace semidyn;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("IoError", "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) fail("IoError", "cannot write '" + path + "'");
  out << content;
}

IndexSet parse_point_list(const FiniteSpace& space, const std::string& csv) {
  IndexSet out;
  if (csv.empty()) return out;
  std::istringstream in(csv);
  std::string label;
  while (std::getline(in, label, ',')) {
    int p = space.index_of(label);
    if (p < 0) fail("BadArgument", "unknown point '" + label + "'");
    insert_sorted(out, p);
  }
  return out;
}

const InstanceBundle::NamedAction& pick_action(const InstanceBundle& b,
                                               const std::string& name) {
  if (!name.empty()) {
    const auto* a = b.find_action(name);
    if (!a) fail("BadArgument", "no action named '" + name + "'");
    return *a;
  }
  if (b.actions.empty()) fail("BadArgument", "the file holds no action");
  return b.actions.front().second;
}

std::string orbit_line(const std::vector<IndexSet>& parts,
                       const FiniteSpace& space) {
  return join(parts, " ", [&](const IndexSet& o) { return space.format_subset(o); });
}

int cmd_validate(const std::string& path) {
  InstanceBundle b = parse_instances(slurp(path));
  for (const auto& [name, sg] : b.semigroups)
    std::cout << "semigroup " << name << ": ok (" << sg.size() << " elements, "
              << sg.idempotents().size() << " idempotents)\n";
  for (const auto& [name, sp] : b.spaces)
    std::cout << "space " << name << ": ok (" << sp.size() << " points)\n";
  for (const auto& [name, na] : b.actions)
    std::cout << "action " << name << ": ok ("
              << (na.action.genuine() ? "genuine" : "partial") << ")\n";
  for (const auto& [name, nc] : b.congruences)
    std::cout << "congruence " << name << ": ok (" << nc.congruence.size()
              << " classes)\n";
  for (const auto& [name, g] : b.groupoids)
    std::cout << "groupoid " << name << ": ok (" << g.size() << " arrows, "
              << g.units().size() << " units)\n";
  for (const auto& [name, nga] : b.groupoid_actions)
    std::cout << "groupoid-action " << name << ": ok\n";
  return 0;
}

int cmd_orbits(const std::string& path) {
  InstanceBundle b = parse_instances(slurp(path));
  for (const auto& [name, na] : b.actions)
    std::cout << "action " << name << ": "
              << orbit_line(orbits(na.action), na.action.space()) << "\n";
  for (const auto& [name, nga] : b.groupoid_actions)
    std::cout << "groupoid-action " << name << ": "
              << orbit_line(orbits_gaction(nga.action), nga.action.space())
              << "\n";
  return 0;
}

int cmd_recur(const std::string& path, const std::string& action_name,
              const std::string& at, const std::string& target,
              const std::string& mode) {
  InstanceBundle b = parse_instances(slurp(path));
  const auto& na = pick_action(b, action_name);
  const PartialAction& a = na.action;
  int sigma = a.space().index_of(at);
  if (sigma < 0) fail("BadArgument", "unknown point '" + at + "'");
  IndexSet n = parse_point_list(a.space(), target);

  if (mode == "naive") {
    IndexSet rec = naive_recurrence(a, {sigma}, n);
    std::cout << "naive: " << a.sg().format_subset(rec) << "\n";
  } else if (mode == "set") {
    SetRecurrence sr = set_recurrence(a, {sigma}, n);
    std::cout << "set classes (" << sr.classes.size() << "):";
    for (int c : sr.classes)
      std::cout << " " << a.sg().format_subset(sr.congruence.classes[c]);
    std::cout << "\n";
  } else {
    PointRecurrence pr = recurrence(a, sigma, n);
    std::cout << "classes (" << pr.classes.size() << "):";
    for (int c : pr.classes)
      std::cout << " " << a.sg().format_subset(pr.germs.classes[c]);
    std::cout << "\n";
  }
  return 0;
}

int cmd_expand(const std::string& path, const std::string& sg_name, int cap,
               bool table) {
  InstanceBundle b = parse_instances(slurp(path));
  for (const auto& [name, sg] : b.semigroups) {
    if (!sg_name.empty() && name != sg_name) continue;
    ExpansionSemigroup ex = expansion(sg, cap);
    std::cout << "expansion of " << name << ": " << ex.sg.size()
              << " elements\n";
    for (int i = 0; i < ex.sg.size(); ++i)
      std::cout << "  " << ex.sg.label(i) << "\n";
    if (table) {
      for (int i = 0; i < ex.sg.size(); ++i) {
        std::cout << "  mul " << ex.sg.label(i) << " :";
        for (int j = 0; j < ex.sg.size(); ++j)
          std::cout << " " << ex.sg.label(ex.sg.mul(i, j));
        std::cout << "\n";
      }
    }
  }
  return 0;
}

int cmd_quotient(const std::string& path, const std::string& action_name,
                 const std::string& congruence) {
  InstanceBundle b = parse_instances(slurp(path));
  const auto& na = pick_action(b, action_name);
  const PartialAction& a = na.action;

  Congruence c;
  if (congruence == "min-group") {
    c = min_group_congruence(a.sg());
  } else if (congruence == "equality") {
    c = equality_congruence(a.sg());
  } else {
    InstanceBundle extra = parse_instances(slurp(congruence));
    const InstanceBundle::NamedCongruence* found = nullptr;
    for (const auto& [cname, nc] : extra.congruences)
      if (nc.semigroup == na.semigroup) found = &nc;
    if (!found)
      fail("BadArgument",
           "no congruence over '" + na.semigroup + "' in " + congruence);
    c = found->congruence;
  }

  InducedAction ind = induced_action(a, c);
  std::cout << "quotient: " << ind.quot.quotient.size() << " elements"
            << (is_group(ind.quot.quotient) ? " (a group)" : "") << "\n";
  for (int k = 0; k < ind.quot.quotient.size(); ++k) {
    std::cout << "  " << ind.quot.quotient.label(k) << " acts:";
    const PartialBijection& t = ind.action.theta(k);
    for (int p : t.domain())
      std::cout << " " << a.space().points[p] << ">"
                << a.space().points[t.apply(p)];
    std::cout << "\n";
  }
  return 0;
}

int cmd_germ(const std::string& path, const std::string& action_name,
             const std::string& dot) {
  InstanceBundle b = parse_instances(slurp(path));
  const auto* named = action_name.empty()
                          ? (b.actions.empty() ? nullptr : &b.actions.front())
                          : nullptr;
  if (!action_name.empty()) {
    for (const auto& entry : b.actions)
      if (entry.first == action_name) named = &entry;
  }
  if (!named) fail("BadArgument", "no action to build germs from");

  GermGroupoid g = germ_groupoid(named->second.action);
  std::cout << "germ groupoid of " << named->first << ": " << g.size()
            << " arrows over " << g.gpd.units().size() << " units\n";
  if (!dot.empty()) emit(dot, germ_dot(g, named->first));
  return 0;
}

int cmd_bis(const std::string& path, const std::string& gpd_name, int cap,
            const std::string& dot) {
  InstanceBundle b = parse_instances(slurp(path));
  for (const auto& [name, g] : b.groupoids) {
    if (!gpd_name.empty() && name != gpd_name) continue;
    BisectionSemigroup bis = bisections(g, cap);
    std::cout << "bisections of " << name << ": " << bis.sg.size()
              << " elements, " << bis.sg.idempotents().size()
              << " idempotents\n";
    if (!dot.empty()) emit(dot, groupoid_dot(g, name));
  }
  return 0;
}

int cmd_check(const std::string& path, bool use_fixtures,
              const std::string& suite, uint64_t seed) {
  InstanceBundle b =
      use_fixtures ? fixture_catalog() : parse_instances(slurp(path));
  std::vector<CheckReport> reports = run_suite(b, suite, seed);
  std::cout << render_reports(reports);
  return all_pass(reports) ? 0 : 1;
}

int cmd_gen(const std::string& family, int n, uint64_t seed) {
  InstanceBundle b;
  if (family == "symmetric_inverse" || family == "cyclic_group" ||
      family == "semilattice_chain") {
    std::string prefix = family == "symmetric_inverse" ? "I"
                         : family == "cyclic_group"    ? "Z"
                                                       : "E";
    b.semigroups.emplace_back(prefix + std::to_string(n), builtin(family, n));
  } else if (family == "restricted_cyclic") {
    PartialAction global = wagner_preston_action(cyclic_group(n));
    PartialAction restricted = generate_restricted_action(global, seed);
    std::string name = "Z" + std::to_string(n);
    b.semigroups.emplace_back(name, restricted.sg());
    b.spaces.emplace_back(name + "_pts", restricted.space());
    b.actions.emplace_back(
        name + "_restr",
        InstanceBundle::NamedAction{name, name + "_pts", restricted});
  } else {
    fail("UnknownFamily", "no generator family '" + family + "'");
  }
  std::cout << print_instances(b);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite inverse semigroup partial actions: recurrence sets, "
               "expansions, quotients, germ groupoids, bisection actions"};
  app.require_subcommand(1);

  std::string file, action_name, sg_name, gpd_name, at, target, dot, congruence;
  std::string suite = "all";
  std::string mode = "classes";
  std::string family;
  int n = 2, cap_expand = kDefaultExpansionCap, cap_bis = kDefaultBisectionCap;
  bool use_fixtures = false, table = false;
  uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "parse and validate a file");
  validate->add_option("file", file)->required();

  auto* orbits_cmd = app.add_subcommand("orbits", "orbit partitions");
  orbits_cmd->add_option("file", file)->required();

  auto* recur = app.add_subcommand("recur", "recurrence sets at a point");
  recur->add_option("file", file)->required();
  recur->add_option("--action", action_name);
  recur->add_option("--at", at, "base point")->required();
  recur->add_option("--target", target, "comma-separated target points");
  auto* naive_flag = recur->add_flag("--naive", "naive element set");
  auto* classes_flag = recur->add_flag("--classes", "pointwise classes");
  auto* set_flag = recur->add_flag("--set", "global congruence classes");
  naive_flag->excludes(classes_flag)->excludes(set_flag);
  classes_flag->excludes(set_flag);

  auto* expand = app.add_subcommand("expand", "prefix expansion of semigroups");
  expand->add_option("file", file)->required();
  expand->add_option("--semigroup", sg_name);
  expand->add_option("--cap", cap_expand);
  expand->add_flag("--table", table);

  auto* quot = app.add_subcommand("quotient", "induced quotient action");
  quot->add_option("file", file)->required();
  quot->add_option("--action", action_name);
  quot->add_option("--congruence", congruence,
                   "min-group | equality | path to a congruence file")
      ->required();

  auto* germ = app.add_subcommand("germ", "germ groupoid of an action");
  germ->add_option("file", file)->required();
  germ->add_option("--action", action_name);
  germ->add_option("--dot", dot, "write GraphViz output ('-' for stdout)");

  auto* bis = app.add_subcommand("bis", "bisection semigroup of a groupoid");
  bis->add_option("file", file)->required();
  bis->add_option("--groupoid", gpd_name);
  bis->add_option("--cap", cap_bis);
  bis->add_option("--dot", dot);

  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("file", file);
  check->add_flag("--fixtures", use_fixtures, "run on the builtin catalog");
  check->add_option("--suite", suite,
                    "axioms|recurrence|expansion|quotient|germ|gaction|all");
  check->add_option("--seed", seed);

  auto* gen = app.add_subcommand("gen", "print a generated instance file");
  gen->add_option("--family", family,
                  "symmetric_inverse|cyclic_group|semilattice_chain|"
                  "restricted_cyclic")
      ->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (orbits_cmd->parsed()) return cmd_orbits(file);
    if (recur->parsed()) {
      if (*naive_flag) mode = "naive";
      if (*set_flag) mode = "set";
      return cmd_recur(file, action_name, at, target, mode);
    }
    if (expand->parsed()) return cmd_expand(file, sg_name, cap_expand, table);
    if (quot->parsed()) return cmd_quotient(file, action_name, congruence);
    if (germ->parsed()) return cmd_germ(file, action_name, dot);
    if (bis->parsed()) return cmd_bis(file, gpd_name, cap_bis, dot);
    if (check->parsed()) {
      if (!use_fixtures && file.empty())
        fail("BadArgument", "check needs a file or --fixtures");
      return cmd_check(file, use_fixtures, suite, seed);
    }
    if (gen->parsed()) return cmd_gen(family, n, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
