// Copyright 2026 The auraspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "auraspace/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "auraspace/classifiers.hpp"
#include "auraspace/continuity.hpp"
#include "auraspace/corpus.hpp"
#include "auraspace/laws.hpp"
#include "auraspace/query.hpp"
#include "auraspace/search.hpp"
#include "auraspace/space_io.hpp"
#include "auraspace/topologies.hpp"

namespace auraspace {
namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : SpaceError {
  using SpaceError::SpaceError;
};

struct Options {
  std::string format = "text";
  int jobs = 1;
  bool json() const { return format == "json"; }
};

IdealAuraSpace load_input(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  return load_space(path);
}

// ---- validate ----

int cmd_validate(const std::vector<std::string>& files, const Options& opt, std::ostream& out) {
  int status = kExitOk;
  ojson results = ojson::array();
  for (const auto& path : files) {
    if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
    ojson r = {{"file", path}};
    std::string line;
    try {
      const std::string text = read_text_file(path);
      const IdealAuraSpace space = parse_space(text);
      r["valid"] = true;
      r["points"] = space.size();
      r["transitive"] = space.is_transitive();
      line = "valid " + path + ": n=" + std::to_string(space.size()) +
             (space.is_transitive() ? ", transitive" : ", not transitive");
      if (has_witness_block(text)) {
        const Witness w = parse_witness(text);
        const bool ok = verify_witness(w);
        r["witness"] = {{"predicate", w.predicate}, {"verified", ok}};
        line += ok ? ", witness " + w.predicate + " verified" : ", witness " + w.predicate + " NOT reproduced";
        if (!ok) status = kExitFailure;
      }
    } catch (const SpaceFormatError& e) {
      status = kExitFailure;
      r["valid"] = false;
      r["problems"] = e.problems();
      line = "invalid " + path + ":";
      for (const auto& p : e.problems()) line += "\n  " + p;
    } catch (const nlohmann::json::exception& e) {
      status = kExitFailure;
      r["valid"] = false;
      r["problems"] = {std::string("document: ") + e.what()};
      line = "invalid " + path + ":\n  document: " + e.what();
    }
    results.push_back(r);
    if (!opt.json()) out << line << '\n';
  }
  if (opt.json()) out << results.dump(2) << '\n';
  return status;
}

// ---- compute ----

int cmd_compute(const std::string& file, const std::string& op, const std::string& arg, const Options& opt,
                std::ostream& out) {
  const IdealAuraSpace space = load_input(file);
  const QueryValue v = evaluate(space, op, arg);
  if (opt.json()) {
    out << ojson{{"op", op}, {"arg", arg}, {"result", to_json(space.universe(), v)}}.dump(2) << '\n';
  } else {
    out << to_text(space.universe(), v) << '\n';
  }
  return kExitOk;
}

// ---- topology ----

int cmd_topology(const std::string& file, std::string which, const Options& opt, std::ostream& out) {
  const IdealAuraSpace space = load_input(file);
  static const std::vector<std::string> names{"tau", "tau_aura", "tausa", "tausa_c", "tau_star", "beta"};
  std::vector<std::string> selected;
  if (which == "all") {
    selected = names;
  } else if (std::find(names.begin(), names.end(), which) != names.end()) {
    selected = {which};
  } else {
    throw UsageError("unknown family '" + which + "'");
  }
  ojson doc = ojson::object();
  for (const auto& name : selected) {
    const SetFamily f = gen_family(space, name);
    if (opt.json()) {
      doc[name] = to_json(space.universe(), QueryValue{f});
    } else {
      out << std::left << std::setw(9) << name << ' ' << format_family(space.universe(), f) << '\n';
    }
  }
  if (opt.json()) out << doc.dump(2) << '\n';
  return kExitOk;
}

// ---- classify ----

int cmd_classify(const std::string& file, const std::string& composition, const Options& opt, std::ostream& out) {
  const IdealAuraSpace space = load_input(file);
  ClassifierOptions options;
  if (composition == "fixpoint") {
    options.composition = Composition::Fixpoint;
  } else if (composition != "single") {
    throw UsageError("composition must be single or fixpoint");
  }
  const auto table = classify_all(space, options);
  const Universe& u = space.universe();
  if (opt.json()) {
    ojson rows = ojson::array();
    for (std::size_t m = 0; m < table.size(); ++m) {
      ojson row = {{"set", set_to_json(u, PointSet(static_cast<PointSet::Bits>(m)))}};
      for (OpenClass c : kOpenClasses) row[std::string(to_string(c))] = has_class(table[m], c);
      rows.push_back(row);
    }
    out << rows.dump(2) << '\n';
    return kExitOk;
  }
  std::size_t width = 3;
  for (std::size_t m = 0; m < table.size(); ++m) {
    width = std::max(width, format_set(u, PointSet(static_cast<PointSet::Bits>(m))).size());
  }
  out << std::left << std::setw(static_cast<int>(width)) << "set";
  for (OpenClass c : kOpenClasses) out << "  " << to_string(c);
  out << '\n';
  for (std::size_t m = 0; m < table.size(); ++m) {
    out << std::left << std::setw(static_cast<int>(width)) << format_set(u, PointSet(static_cast<PointSet::Bits>(m)));
    for (OpenClass c : kOpenClasses) {
      out << "  " << std::setw(static_cast<int>(to_string(c).size())) << (has_class(table[m], c) ? "1" : "0");
    }
    out << '\n';
  }
  return kExitOk;
}

// ---- continuity ----

int cmd_continuity(const std::string& file, const std::string& target, const Options& opt, std::ostream& out) {
  if (!std::filesystem::exists(file)) throw UsageError("no such file: " + file);
  const SpaceMap map = load_map(file);
  TargetFamily which;
  if (target == "cech") {
    which = TargetFamily::CechIdealAura;
  } else if (target == "sigma") {
    which = TargetFamily::Topology;
  } else {
    throw UsageError("target must be cech or sigma");
  }
  const SetFamily family = target_family(map.target(), which);
  const ContinuityProfile p = ia_continuity_profile(map, family);
  const bool transitive = map.source().is_transitive();
  const DecompositionReport d = decomposition_check(map, family, /*probe=*/!transitive);
  const ComparisonReport c = comparison_chain_check(map, family);
  const Universe& tu = map.target().universe();

  if (opt.json()) {
    ojson doc = {
        {"target_family", target},
        {"family", to_json(tu, QueryValue{family})},
        {"profile",
         {{"continuous", p.continuous}, {"alpha", p.alpha}, {"semi", p.semi}, {"pre", p.pre}, {"beta", p.beta}}},
        {"hierarchy_holds", p.respects_hierarchy()},
        {"decomposition",
         {{"source_transitive", transitive},
          {"asserted", transitive},
          {"tausa_continuous", d.tausa_continuous},
          {"first_holds", d.first_holds},
          {"second_holds", d.second_holds},
          {"witness", d.witness ? ojson(set_to_json(tu, *d.witness)) : ojson(nullptr)}}},
        {"comparison",
         {{"aura_continuous", c.aura_continuous},
          {"tausa_continuous", c.tausa_continuous},
          {"star_continuous", c.star_continuous},
          {"tau_continuous", c.tau_continuous},
          {"chain_holds", c.chain_holds()},
          {"statement_iii_holds", c.statement_iii_holds()},
          {"statement_iii_witness", c.statement_iii_witness ? ojson(set_to_json(tu, *c.statement_iii_witness)) : ojson(nullptr)}}}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  auto b = [](bool v) { return v ? "1" : "0"; };
  out << "target family (" << target << "): " << format_family(tu, family) << '\n';
  out << "profile: continuous=" << b(p.continuous) << " alpha=" << b(p.alpha) << " semi=" << b(p.semi)
      << " pre=" << b(p.pre) << " beta=" << b(p.beta) << '\n';
  out << "decomposition" << (transitive ? "" : " (probe: source not transitive)") << ": "
      << (d.holds() ? "holds" : "fails");
  if (d.witness) out << ", " << format_set(tu, *d.witness) << " has an alpha-open preimage outside τ*a";
  out << '\n';
  out << "comparison: aura=" << b(c.aura_continuous) << " tausa=" << b(c.tausa_continuous)
      << " star=" << b(c.star_continuous) << " tau=" << b(c.tau_continuous)
      << " chain=" << (c.chain_holds() ? "holds" : "fails");
  out << " statement-iii=" << (c.statement_iii_holds() ? "holds" : "fails");
  if (c.statement_iii_witness) {
    out << " (" << format_set(tu, *c.statement_iii_witness) << ": refutes statement / consistent with proof)";
  }
  out << '\n';
  return kExitOk;
}

// ---- check ----

int cmd_check(const std::vector<std::string>& law_ids, bool all, bool list, const std::string& spaces,
              std::uint64_t seed, const Options& opt, std::ostream& out) {
  if (list) {
    if (opt.json()) {
      ojson arr = ojson::array();
      for (const auto& l : law_registry()) {
        arr.push_back({{"id", l.id},
                       {"kind", std::string(to_string(l.kind))},
                       {"scope", l.scope == LawScope::Space ? "space" : "map"},
                       {"hypothesis", std::string(to_string(l.hypothesis))},
                       {"topic", l.topic},
                       {"statement", l.statement}});
      }
      out << arr.dump(2) << '\n';
    } else {
      for (const auto& l : law_registry()) {
        out << std::left << std::setw(44) << l.id << std::setw(9) << to_string(l.kind) << std::setw(18)
            << to_string(l.hypothesis) << l.statement << '\n';
      }
    }
    return kExitOk;
  }
  if (all == !law_ids.empty()) throw UsageError("give either --law (repeatable) or --all");
  const std::vector<std::string> ids = all ? all_law_ids() : law_ids;
  for (const auto& id : ids) find_law(id);
  const SpaceSource source = SpaceSource::parse(spaces, seed);
  const auto reports = run_laws(ids, source, opt.jobs);
  int pass = 0, fail = 0, probes = 0;
  for (const auto& r : reports) {
    if (r.kind == LawKind::Probe) {
      ++probes;
    } else if (r.ok()) {
      ++pass;
    } else {
      ++fail;
    }
  }
  if (opt.json()) {
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(law_report_to_json(r));
    out << ojson{{"spaces", source.description()}, {"reports", arr}, {"pass", pass}, {"fail", fail},
                 {"probes", probes}}
               .dump(2)
        << '\n';
  } else {
    out << "spaces: " << source.description() << " (" << source.size() << ")\n";
    for (const auto& r : reports) out << format_law_report(r);
    out << reports.size() << " laws: " << pass << " pass, " << fail << " fail, " << probes << " probes\n";
  }
  return fail == 0 ? kExitOk : kExitFailure;
}

// ---- repro ----

int cmd_repro(const std::string& only, const Options& opt, std::ostream& out) {
  const CorpusReport report = run_corpus(only);
  if (opt.json()) {
    ojson rows = ojson::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"fixture", r.fixture},
                      {"op", r.op},
                      {"arg", r.arg},
                      {"expected", r.expected},
                      {"got", r.got},
                      {"location", r.location},
                      {"ok", r.ok}});
    }
    out << ojson{{"rows", rows}, {"failures", report.failures()}}.dump(2) << '\n';
  } else {
    for (const auto& r : report.rows) {
      out << (r.ok ? "PASS " : "FAIL ") << r.fixture << "  " << r.op;
      if (!r.arg.empty()) out << ' ' << r.arg;
      out << "  = " << r.got;
      if (!r.ok) out << "  (expected " << r.expected << ")";
      out << "  [" << r.location << "]\n";
    }
    out << (report.rows.size() - report.failures()) << '/' << report.rows.size() << " expectations match\n";
  }
  return report.ok() ? kExitOk : kExitFailure;
}

// ---- search ----

struct SearchArgs {
  std::string predicate;
  int n = 3;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::uint64_t budget = 10000;
  std::string topologies = "all";
  std::string ideals = "all";
  bool canonicalize = false;
  std::string out_file;
  bool census = false;
  bool list = false;
};

SearchConfig make_config(const SearchArgs& a, const Options& opt) {
  SearchConfig c;
  c.n = a.n;
  c.seed = a.seed;
  c.budget = a.budget;
  c.canonicalize = a.canonicalize;
  c.jobs = opt.jobs;
  if (a.mode == "random") {
    c.mode = SearchMode::Random;
  } else if (a.mode != "exhaustive") {
    throw UsageError("mode must be exhaustive or random");
  }
  if (a.topologies == "discrete") {
    c.topology_source = TopologySource::Discrete;
  } else if (a.topologies != "all") {
    c.topology_source = TopologySource::Fixed;
    c.fixed_topology = load_input(a.topologies).topology();
  }
  if (a.ideals == "principal") {
    c.ideal_source = IdealSource::PrincipalOnly;
  } else if (a.ideals != "all") {
    c.ideal_source = IdealSource::Fixed;
    c.fixed_ideal = load_input(a.ideals).ideal();
  }
  return c;
}

int cmd_search(const SearchArgs& a, const Options& opt, std::ostream& out) {
  if (a.list) {
    for (const auto& p : predicate_registry()) out << std::left << std::setw(38) << p.id << p.description << '\n';
    return kExitOk;
  }
  const SearchConfig config = make_config(a, opt);
  if (a.census) {
    const StabilizationCensus c = stabilization_census(config);
    if (opt.json()) {
      ojson doc = census_to_json(c);
      doc["config"] = describe_config(config);
      out << doc.dump(2) << '\n';
    } else {
      out << describe_config(config) << '\n' << format_census(c);
    }
    return kExitOk;
  }
  if (a.predicate.empty()) throw UsageError("--predicate is required (or use --census / --list)");
  const PredicateSpec spec = parse_predicate(a.predicate);
  const SearchResult r = find_witness(spec, config);
  if (r.witness && !a.out_file.empty()) {
    std::ofstream f(a.out_file);
    if (!f) throw UsageError("cannot write " + a.out_file);
    f << serialize_witness(*r.witness);
  }
  if (opt.json()) {
    ojson doc = {{"predicate", spec.text()},
                 {"config", r.config},
                 {"found", r.witness.has_value()},
                 {"examined", r.examined},
                 {"budget_exhausted", r.budget_exhausted},
                 {"outcome", describe_outcome(spec, r)}};
    if (r.witness) doc["witness"] = ojson::parse(serialize_witness(*r.witness));
    out << doc.dump(2) << '\n';
  } else {
    out << describe_outcome(spec, r) << '\n';
    if (r.witness) {
      const Universe& u = r.witness->space.universe();
      for (const auto& [name, set] : r.witness->subsets) out << "  " << name << " = " << format_set(u, set) << '\n';
      if (!r.witness->metrics.empty()) out << "  metrics " << r.witness->metrics.dump() << '\n';
      if (a.out_file.empty()) out << serialize_witness(*r.witness);
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ideal-aura topological spaces: operators, topologies, law checks and witness search",
               "auraspace"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for check and search")->check(CLI::PositiveNumber);

  std::vector<std::string> validate_files;
  auto* validate = app.add_subcommand("validate", "Check space files (and verify witness blocks)");
  validate->add_option("files", validate_files, "Space files")->required();

  std::string file, op, arg;
  auto* compute = app.add_subcommand("compute", "Evaluate an operator on a set");
  compute->add_option("space", file, "Space file")->required();
  compute->add_option("op", op, "Operation, e.g. auralocal, clsa, trace, family:tausa")->required();
  compute->add_option("arg", arg, "Set like {a,c}, or a point for nbhd");

  std::string family = "all";
  auto* topology = app.add_subcommand("topology", "Print the generated topologies and basis");
  topology->add_option("space", file, "Space file")->required();
  topology->add_option("--family", family, "tau|tau_aura|tausa|tausa_c|tau_star|beta|all");

  std::string composition = "single";
  auto* classify_cmd = app.add_subcommand("classify", "Table of generalized-open classes for every subset");
  classify_cmd->add_option("space", file, "Space file")->required();
  classify_cmd->add_option("--composition", composition, "single|fixpoint closure in the class tests");

  std::string target = "cech";
  auto* continuity = app.add_subcommand("continuity", "Continuity profile of a map file");
  continuity->add_option("map", file, "Map file")->required();
  continuity->add_option("--target", target, "cech (target's single-step ideal-aura topology) or sigma");

  std::vector<std::string> laws;
  bool all = false, list_laws = false;
  std::string spaces = "enum:n=1..3";
  std::uint64_t seed = 1;
  auto* check = app.add_subcommand("check", "Run the law suite");
  check->add_option("--law", laws, "Law id (repeatable)");
  check->add_flag("--all", all, "Run every law");
  check->add_flag("--list", list_laws, "List registered laws");
  check->add_option("--spaces", spaces, "enum:n=K | enum:n=A..B | random:n=A..B:count=C | file[,file...]");
  check->add_option("--seed", seed, "Seed for random sources");

  std::string only;
  auto* repro = app.add_subcommand("repro", "Reproduce the worked-example corpus");
  repro->add_option("--only", only, "Single fixture name");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Find a witness space for a predicate");
  search->add_option("--predicate", sa.predicate, "Predicate id, e.g. NONIDEMPOTENT_K(3)");
  search->add_option("--n", sa.n, "Number of points");
  search->add_option("--mode", sa.mode, "exhaustive|random");
  search->add_option("--seed", sa.seed, "Random seed");
  search->add_option("--budget", sa.budget, "Samples in random mode");
  search->add_option("--topologies", sa.topologies, "all|discrete|<space file>");
  search->add_option("--ideals", sa.ideals, "all|principal|<space file>");
  search->add_flag("--canonicalize", sa.canonicalize, "Skip spaces that are relabelings of earlier ones");
  search->add_option("--out", sa.out_file, "Write the witness file here");
  search->add_flag("--census", sa.census, "Histogram of stabilization indices instead of a witness");
  search->add_flag("--list", sa.list, "List predicates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(validate_files, opt, out);
    if (*compute) return cmd_compute(file, op, arg, opt, out);
    if (*topology) return cmd_topology(file, family, opt, out);
    if (*classify_cmd) return cmd_classify(file, composition, opt, out);
    if (*continuity) return cmd_continuity(file, target, opt, out);
    if (*check) return cmd_check(laws, all, list_laws, spaces, seed, opt, out);
    if (*repro) return cmd_repro(only, opt, out);
    if (*search) return cmd_search(sa, opt, out);
  } catch (const ScaleRefused& e) {
    err << "error: " << e.what() << '\n';
    return kExitScale;
  } catch (const SpaceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace auraspace
