#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "check_suite.hpp"
#include "json.hpp"
#include "logdecomp/error.hpp"
#include "logdecomp/lattice.hpp"
#include "logdecomp/loss_table.hpp"
#include "logdecomp/measure.hpp"
#include "logdecomp/region.hpp"
#include "system_file.hpp"

namespace logdecomp::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string shortest(double v) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

std::string significant(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct CommonOptions {
  std::string file;
  std::string base;
  bool allow_zero = false;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("file", common.file, "System JSON file")->required();
  cmd->add_option("--base", common.base, "Logarithm base (overrides the file)")
      ->check(CLI::IsMember({"2", "e", "10"}));
  cmd->add_flag("--allow-zero", common.allow_zero,
                "Accept zero-probability outcomes (their atoms measure 0)");
  cmd->add_option("--threads", common.threads, "Worker threads for the loss table")
      ->check(CLI::Range(1U, 256U));
}

SystemFile load(const CommonOptions& common) {
  LoadOverrides overrides;
  if (!common.base.empty()) overrides.base = parse_log_base(common.base);
  overrides.allow_zero = common.allow_zero;
  overrides.max_outcomes = max_outcomes_from_environment();
  return load_system(common.file, overrides);
}

std::vector<RandomVariable> lookup(const SystemFile& system, const std::vector<std::string>& names) {
  std::vector<RandomVariable> out;
  for (const std::string& name : names) out.push_back(system.variable(name));
  return out;
}

// Intersection of the named variables' contents, or the region, or (with
// neither) the whole complex.
Content select_content(const SystemFile& system, const std::vector<std::string>& names,
                       const std::string& region) {
  const OutcomeSpace& space = system.space;
  Content selected = Content::all(space);
  for (const RandomVariable& v : lookup(system, names)) selected &= content_of(space, v);
  if (!region.empty()) {
    const std::vector<std::string> declared = system.names();
    selected &= region_content(space, parse_region(region, declared), system.bindings());
  }
  return selected;
}

// ---- atoms ---------------------------------------------------------------

struct AtomsOptions {
  CommonOptions common;
  std::vector<std::string> variables;
  std::string region;
  std::string format = "table";
  std::size_t min_size = 2;
};

int cmd_atoms(const AtomsOptions& opt, std::ostream& out) {
  const SystemFile system = load(opt.common);
  const OutcomeSpace& space = system.space;
  const LossTable table(space, opt.common.threads);
  const Content selected = select_content(system, opt.variables, opt.region);

  std::vector<Atom> atoms;
  selected.for_each([&](Atom a) {
    if (a.size() >= opt.min_size) atoms.push_back(a);
  });

  if (opt.format == "csv") {
    out << "atom,size,measure\n";
    for (Atom a : atoms) {
      out << atom_label(space, a) << ',' << a.size() << ','
          << significant(atom_measure(table, a), 17) << '\n';
    }
  } else if (opt.format == "json") {
    Json doc;
    doc["base"] = std::string(to_string(space.base()));
    doc["outcomes"] = space.size();
    Json rows = Json::array();
    for (Atom a : atoms) {
      Json row;
      row["atom"] = atom_label(space, a);
      row["size"] = a.size();
      row["measure"] = atom_measure(table, a);
      rows.push_back(std::move(row));
    }
    doc["atoms"] = std::move(rows);
    out << doc.dump(2) << '\n';
  } else {
    std::size_t width = 4;
    for (Atom a : atoms) width = std::max(width, atom_label(space, a).size());
    out << std::left << std::setw(static_cast<int>(width)) << "atom" << "  size  measure\n";
    for (Atom a : atoms) {
      out << std::left << std::setw(static_cast<int>(width)) << atom_label(space, a) << "  "
          << std::left << std::setw(4) << a.size() << "  "
          << significant(atom_measure(table, a), 6) << '\n';
    }
    out << std::right;
  }
  return kExitOk;
}

// ---- quantities ----------------------------------------------------------

struct QuantityOptions {
  CommonOptions common;
  std::vector<std::string> variables;
  std::vector<std::string> given;
  std::string expression;
  std::string format = "text";
  bool verbose = false;
};

int print_report(const SystemFile& system, const QuantityReport& report,
                 const std::optional<RandomVariable>& partition, const QuantityOptions& opt,
                 std::ostream& out, std::ostream& err) {
  const OutcomeSpace& space = system.space;
  if (opt.format == "json") {
    Json doc;
    doc["quantity"] = report.quantity;
    doc["value"] = report.value;
    doc["base"] = std::string(to_string(report.base));
    doc["method"] = std::string(to_string(report.method));
    doc["content_measure"] = report.value;
    if (report.oracle_value) doc["shannon_oracle"] = *report.oracle_value;
    doc["routes_agree"] = report.routes_agree;
    doc["tolerance"] = report.tolerance;
    if (partition) doc["partition"] = describe_partition(space, *partition);
    doc["atom_count"] = report.breakdown.size();
    if (opt.verbose) {
      Json rows = Json::array();
      for (const AtomTerm& term : report.breakdown) {
        rows.push_back({{"atom", atom_label(space, term.atom)},
                        {"size", term.atom.size()},
                        {"coefficient", term.coefficient},
                        {"measure", term.interior_loss}});
      }
      doc["atoms"] = std::move(rows);
    }
    out << doc.dump(2) << '\n';
  } else {
    out << report.quantity << " = " << shortest(report.value) << ' ' << unit_name(report.base)
        << '\n';
    if (partition) out << "partition: " << describe_partition(space, *partition) << '\n';
    out << "base: " << to_string(report.base) << '\n';
    out << "method: " << to_string(report.method) << '\n';
    out << "content-measure: " << shortest(report.value) << '\n';
    if (report.oracle_value) {
      out << "shannon-oracle: " << shortest(*report.oracle_value) << '\n';
      out << "routes: " << (report.routes_agree ? "agree" : "DISAGREE") << " (tolerance "
          << significant(report.tolerance, 3) << ")\n";
    }
    out << "atoms: " << report.breakdown.size() << '\n';
    if (opt.verbose) {
      std::size_t width = 4;
      for (const AtomTerm& t : report.breakdown) {
        width = std::max(width, atom_label(space, t.atom).size());
      }
      for (const AtomTerm& t : report.breakdown) {
        out << "  " << std::left << std::setw(static_cast<int>(width))
            << atom_label(space, t.atom) << "  " << std::setw(4) << t.atom.size() << "  "
            << std::setw(3) << t.coefficient << "  " << significant(t.interior_loss, 6) << '\n';
      }
      out << std::right;
    }
  }
  if (!report.routes_agree) {
    err << "error: routes disagree for " << report.quantity << ": content-measure "
        << shortest(report.value) << " vs shannon-oracle " << shortest(*report.oracle_value)
        << '\n';
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_quantity(const std::string& which, const QuantityOptions& opt, std::ostream& out,
                 std::ostream& err) {
  const SystemFile system = load(opt.common);
  const LossTable table(system.space, opt.common.threads);
  const std::vector<RandomVariable> vars = lookup(system, opt.variables);

  if (which == "entropy") {
    const QuantityReport r = vars.size() == 1 ? entropy(table, vars[0]) : joint_entropy(table, vars);
    return print_report(system, r, std::nullopt, opt, out, err);
  }
  if (which == "mi") {
    return print_report(system, mutual_information(table, vars[0], vars[1]), std::nullopt, opt,
                        out, err);
  }
  if (which == "coinfo") {
    const std::vector<RandomVariable> given = lookup(system, opt.given);
    return print_report(system, co_information(table, vars, given), std::nullopt, opt, out, err);
  }
  if (which == "gk") {
    const CommonInformation gk = gk_common_information(table, vars);
    std::string names;
    for (const RandomVariable& v : vars) names += (names.empty() ? "" : ";") + v.name();
    QuantityReport r = entropy(table, gk.common);
    r.quantity = "C_GK(" + names + ")";
    return print_report(system, r, gk.common, opt, out, err);
  }
  // region
  const std::vector<std::string> declared = system.names();
  const RegionExpr expr = parse_region(opt.expression, declared);
  return print_report(system, region_measure(table, expr, system.bindings()), std::nullopt, opt,
                      out, err);
}

// ---- check ---------------------------------------------------------------

struct CheckCommandOptions {
  CommonOptions common;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
};

int cmd_check(const CheckCommandOptions& opt, std::ostream& out) {
  const SystemFile system = load(opt.common);
  const CheckOptions options{opt.trials, opt.seed, opt.common.threads};
  const std::vector<CheckResult> results = run_checks(system, options);
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
    out << status << ' ' << std::left << std::setw(18) << r.name << std::right
        << " cases=" << r.cases << " max_error=" << significant(r.max_error, 3);
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
    if (!r.passed) ++failed;
  }
  out << results.size() << " checks, " << failed << " failed (seed " << opt.seed << ", trials "
      << opt.trials << ")\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

// ---- dot -----------------------------------------------------------------

struct DotOptions {
  CommonOptions common;
  std::vector<std::string> variables;
  std::string region;
  bool dis = false;
};

std::string quoted(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

int cmd_dot(const DotOptions& opt, std::ostream& out) {
  const SystemFile system = load(opt.common);
  const OutcomeSpace& space = system.space;
  const LossTable table(space, opt.common.threads);
  Content selected = select_content(system, opt.variables, opt.region);
  if (opt.dis) selected = dis(space, selected);

  out << "graph logdecomp {\n";
  for (const Outcome& o : space.outcomes()) out << "  " << quoted(o.id) << ";\n";
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      const Atom edge = Atom::from_mask((SubsetMask{1} << i) | (SubsetMask{1} << j));
      out << "  " << quoted(space.id(i)) << " -- " << quoted(space.id(j)) << " [style="
          << (selected.contains(edge) ? "solid" : "dashed") << ", label=\""
          << significant(atom_measure(table, edge), 6) << "\"];\n";
    }
  }
  for_each_atom_mask(space.size(), [&](SubsetMask mask) {
    if (std::popcount(mask) < 3) return;
    const Atom atom = Atom::from_mask(mask);
    out << "  // " << atom_label(space, atom) << ' ' << (selected.contains(atom) ? "in" : "out")
        << ' ' << significant(atom_measure(table, atom), 6) << '\n';
  });
  out << "}\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic decomposition of information for discrete systems", "logdecomp"};
  app.require_subcommand(1);

  AtomsOptions atoms;
  auto* atoms_cmd = app.add_subcommand("atoms", "List atoms with their signed measure");
  add_common(atoms_cmd, atoms.common);
  atoms_cmd->add_option("variables", atoms.variables,
                        "Restrict to the intersection of these variables' contents");
  atoms_cmd->add_option("--region", atoms.region, "Restrict to a region expression");
  atoms_cmd->add_option("--format", atoms.format)->check(CLI::IsMember({"table", "csv", "json"}));
  atoms_cmd->add_option("--min-size", atoms.min_size, "Smallest atom size listed");

  QuantityOptions quantity;
  const auto add_quantity = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    add_common(cmd, quantity.common);
    cmd->add_option("--format", quantity.format)->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("-v,--verbose", quantity.verbose, "Print the per-atom breakdown");
    return cmd;
  };
  add_quantity("entropy", "Entropy (joint entropy for several variables)")
      ->add_option("variables", quantity.variables)
      ->required();
  add_quantity("mi", "Mutual information I(X;Y)")
      ->add_option("variables", quantity.variables)
      ->required()
      ->expected(2);
  auto* coinfo_cmd = add_quantity("coinfo", "Co-information, optionally conditioned");
  coinfo_cmd->add_option("variables", quantity.variables)->required();
  coinfo_cmd->add_option("--given", quantity.given, "Conditioning variables");
  add_quantity("gk", "Gacs-Korner common information")
      ->add_option("variables", quantity.variables)
      ->required();
  add_quantity("region", "Measure of an information-diagram region")
      ->add_option("expression", quantity.expression,
                   "Region over variable names: ~ complement, & intersection, \\ difference, | "
                   "union")
      ->required();

  CheckCommandOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run the invariant suites on a system");
  add_common(check_cmd, check.common);
  check_cmd->add_option("--trials", check.trials, "Randomized trials per check");
  check_cmd->add_option("--seed", check.seed, "Random seed");

  DotOptions dot;
  auto* dot_cmd = app.add_subcommand("dot", "Export the pairwise skeleton as Graphviz DOT");
  add_common(dot_cmd, dot.common);
  dot_cmd->add_option("variables", dot.variables,
                      "Select the intersection of these variables' contents");
  dot_cmd->add_option("--region", dot.region, "Select a region expression");
  dot_cmd->add_flag("--dis", dot.dis, "Reduce the selection to its maximal discernible subset");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (atoms_cmd->parsed()) return cmd_atoms(atoms, out);
    if (check_cmd->parsed()) return cmd_check(check, out);
    if (dot_cmd->parsed()) return cmd_dot(dot, out);
    for (const char* name : {"entropy", "mi", "coinfo", "gk", "region"}) {
      if (app.get_subcommand(name)->parsed()) return cmd_quantity(name, quantity, out, err);
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace logdecomp::cli
