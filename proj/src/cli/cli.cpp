#include "precubical/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "precubical/model_io.hpp"

namespace precubical::cli {

using nlohmann::json;

namespace {

// Input/usage problems that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Complex load(const std::string& path) { return parse(read_file(path)); }

std::string join_refs(const std::set<CellRef>& cells) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : cells) {
    out += (first ? "" : ", ") + c.id;
    first = false;
  }
  return out + "}";
}

json refs_json(const auto& cells) {
  json out = json::array();
  for (const auto& c : cells) out.push_back({{"dim", c.degree}, {"id", c.id}});
  return out;
}

json path_json(const EdgePath& p) { return {{"start", p.start}, {"edges", p.edges}}; }

}  // namespace

std::string format_certificate(const ReductionCertificate& cert) {
  std::ostringstream os;
  os << "reduction: " << to_string(cert.kind) << "\n";
  os << "cell: " << cert.cell.id << " (dim " << cert.cell.degree << ")\n";
  os << "params:";
  if (cert.kind == ReductionKind::square_two_free) os << " a=" << cert.a;
  os << " b=" << cert.b << "\n";
  os << "conditions:\n";
  for (const auto& c : cert.conditions) {
    os << "  " << (c.holds ? "[ ok ] " : "[FAIL] ") << "(" << c.label << ") " << c.description;
    if (!c.witnesses.empty()) {
      os << "; witnesses:";
      for (const auto& w : c.witnesses) os << " " << w.id;
    }
    os << "\n";
  }
  if (cert.y) os << "Y: " << join_refs(*cert.y) << "\n";
  if (cert.r) os << "R: " << join_refs(*cert.r) << "\n";
  os << "removed: " << join_refs(cert.removed) << "\n";
  if (!cert.redirected.empty()) {
    os << "redirected:\n";
    for (const auto& [slot, value] : cert.redirected) {
      os << "  " << slot.cell.id << ".d" << slot.i << "_" << slot.k << " -> " << value << "\n";
    }
  }
  os << "fbg_guaranteed: " << (cert.fbg_guaranteed ? "yes" : "no") << "\n";
  return os.str();
}

json certificate_json(const ReductionCertificate& cert) {
  json j;
  j["kind"] = to_string(cert.kind);
  j["cell"] = {{"dim", cert.cell.degree}, {"id", cert.cell.id}};
  j["params"] = {{"b", cert.b}};
  if (cert.kind == ReductionKind::square_two_free) j["params"]["a"] = cert.a;
  j["conditions"] = json::array();
  for (const auto& c : cert.conditions) {
    j["conditions"].push_back(
        {{"label", c.label}, {"description", c.description}, {"holds", c.holds}, {"witnesses", refs_json(c.witnesses)}});
  }
  j["removed"] = refs_json(cert.removed);
  j["redirected"] = json::array();
  for (const auto& [slot, value] : cert.redirected) {
    j["redirected"].push_back({{"cell", slot.cell.id}, {"i", slot.i}, {"k", slot.k}, {"value", value}});
  }
  j["Y"] = cert.y ? refs_json(*cert.y) : json(nullptr);
  j["R"] = cert.r ? refs_json(*cert.r) : json(nullptr);
  j["fbg_guaranteed"] = cert.fbg_guaranteed;
  j["conditions_hold"] = cert.conditions_hold();
  return j;
}

std::string format_fbg(const FbgTable& table, bool representatives) {
  std::ostringstream os;
  for (const auto& [key, summary] : table.classes) {
    os << key.first << " -> " << key.second << ": " << summary.count << (summary.count == 1 ? " class" : " classes")
       << "\n";
    if (!representatives) continue;
    for (const auto& path : summary.representatives) {
      os << "    " << path.start;
      for (const auto& e : path.edges) os << " " << e;
      os << "\n";
    }
  }
  return os.str();
}

json fbg_json(const FbgTable& table) {
  json j;
  j["minimals"] = table.minimals;
  j["maximals"] = table.maximals;
  j["classes"] = json::array();
  for (const auto& [key, summary] : table.classes) {
    json reps = json::array();
    for (const auto& p : summary.representatives) reps.push_back(path_json(p));
    j["classes"].push_back({{"from", key.first}, {"to", key.second}, {"count", summary.count}, {"representatives", reps}});
  }
  return j;
}

namespace {

struct Options {
  std::string input, second, output, op, cell, fixture, recipe_path, recipe_out, policy = "greedy";
  int a = 1, b = 0;
  bool allow_empty_y = false, check_only = false, as_json = false, representatives = false, profile = false;
  std::size_t max_paths = kDefaultMaxPaths;
  std::vector<int> grid;
  std::vector<std::string> holes;
};

void emit_complex(const Options& o, const Complex& p, std::ostream& out, const std::optional<std::string>& name) {
  auto text = serialize(p, name);
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
}

int cmd_validate(const Options& o, std::ostream& out) {
  auto doc = parse_document(read_file(o.input));
  auto report = validate(doc.cells);
  if (report.ok()) {
    out << "valid: " << doc.cells.size() << " cells\n";
    return kOk;
  }
  out << "invalid: " << report.violations.size() << " violation(s)\n" << report.to_string();
  return kDomainFailure;
}

int cmd_info(const Options& o, std::ostream& out) {
  auto p = load(o.input);
  out << "dimension: " << (p.dimension() ? std::to_string(*p.dimension()) : "empty") << "\n";
  for (int d = 0; d < p.num_levels(); ++d) out << "cells[" << d << "]: " << p.count(d) << "\n";
  out << "euler characteristic: " << euler_characteristic(p) << "\n";
  auto list = [](const std::set<std::string>& s) {
    std::string r;
    for (const auto& v : s) r += " " + v;
    return r;
  };
  out << "minimal:" << list(minimal_vertices(p)) << "\n";
  out << "maximal:" << list(maximal_vertices(p)) << "\n";
  out << "acyclic 1-skeleton: " << (one_skeleton_is_acyclic(p) ? "yes" : "no") << "\n";
  std::size_t irregular = 0;
  for (const auto& c : p.cells()) irregular += is_regular(p, c) ? 0 : 1;
  out << "irregular cells: " << irregular << "\n";
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (!o.fixture.empty() == !o.grid.empty()) throw UsageError("gen needs exactly one of --fixture or --grid");
  Complex p;
  std::optional<std::string> name;
  if (!o.fixture.empty()) {
    p = named_fixture(o.fixture);
    name = o.fixture;
  } else {
    GridSpec spec{o.grid.at(0), o.grid.at(1), {}};
    for (const auto& h : o.holes) {
      int i = 0, j = 0;
      char comma = 0;
      std::istringstream in(h);
      if (!(in >> i >> comma >> j) || comma != ',') throw UsageError("bad --hole '" + h + "', expected i,j");
      spec.holes.insert({i, j});
    }
    p = grid_with_holes(spec);
    name = "grid_" + std::to_string(spec.m) + "x" + std::to_string(spec.n);
  }
  emit_complex(o, p, out, name);
  if (!o.recipe_out.empty()) {
    if (o.fixture.empty()) throw UsageError("--recipe-out needs --fixture");
    write_file(o.recipe_out, format_recipe(example_recipe(o.fixture)));
  }
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  auto kind = parse_reduction_kind(o.op);
  if (!kind) throw UsageError("unknown --op '" + o.op + "'");
  if (o.cell.empty()) throw UsageError("reduce needs --cell");
  auto p = load(o.input);
  RecipeStep step{*kind, o.cell, *kind == ReductionKind::square_two_free ? o.a : 0, o.b};
  ApplyOptions options{o.allow_empty_y};

  auto checked = apply_step(p, step, Mode::check, options);
  const auto& cert = checked.certificate;
  bool refused = !cert.conditions_hold() ||
                 (!cert.fbg_guaranteed && !options.allow_empty_y);
  if (o.as_json) {
    json j = certificate_json(cert);
    j["applied"] = !refused && !o.check_only;
    out << j.dump(2) << "\n";
  } else {
    out << format_certificate(cert);
  }
  if (!cert.conditions_hold()) {
    if (!o.as_json) out << "result: refused (conditions failed)\n";
    return kDomainFailure;
  }
  if (refused) {
    if (!o.as_json) out << "result: refused (Y is empty; pass --allow-empty-y to apply)\n";
    return kDomainFailure;
  }
  if (o.check_only) return kOk;
  auto applied = apply_step(p, step, Mode::apply, options);
  if (!o.as_json) out << "result: applied\n";
  if (!o.output.empty()) write_file(o.output, serialize(*applied.complex));
  return kOk;
}

int cmd_auto_reduce(const Options& o, std::ostream& out) {
  auto p = load(o.input);
  Policy policy;
  std::vector<RecipeStep> recipe;
  if (o.policy == "greedy") {
    policy = Policy::greedy;
    if (!o.recipe_path.empty()) policy = Policy::recipe;
  } else if (o.policy == "recipe") {
    policy = Policy::recipe;
  } else {
    throw UsageError("unknown --policy '" + o.policy + "'");
  }
  if (policy == Policy::recipe) {
    if (o.recipe_path.empty()) throw UsageError("recipe policy needs --recipe <path>");
    recipe = parse_recipe(read_file(o.recipe_path));
  }

  AutoReduceResult result;
  try {
    result = auto_reduce(p, policy, recipe);
  } catch (const RecipeStepFailed& e) {
    if (o.as_json) {
      out << json{{"failed_step", e.index()}, {"certificate", certificate_json(e.certificate())}}.dump(2) << "\n";
    } else {
      out << "recipe step " << e.index() << " failed\n" << format_certificate(e.certificate());
    }
    return kDomainFailure;
  }

  if (o.as_json) {
    json trail = json::array();
    for (const auto& c : result.trail) trail.push_back(certificate_json(c));
    out << json{{"steps", result.trail.size()}, {"trail", trail}}.dump(2) << "\n";
  } else {
    out << "steps: " << result.trail.size() << "\n";
    for (std::size_t t = 0; t < result.trail.size(); ++t) {
      const auto& c = result.trail[t];
      out << "  " << t << ": " << to_string(c.kind) << " " << c.cell.id;
      if (c.kind == ReductionKind::square_two_free) out << " a=" << c.a;
      out << " b=" << c.b << "\n";
    }
    const auto& q = result.complex;
    out << "final:";
    for (int d = 0; d < q.num_levels(); ++d) out << (d ? ", " : " ") << q.count(d) << " cells of dim " << d;
    out << "\n";
  }
  if (!o.output.empty()) write_file(o.output, serialize(result.complex));
  return kOk;
}

int cmd_fbg(const Options& o, std::ostream& out) {
  auto table = fundamental_bipartite_graph(load(o.input), o.max_paths);
  if (o.as_json) {
    out << fbg_json(table).dump(2) << "\n";
  } else {
    out << format_fbg(table, o.representatives);
  }
  return kOk;
}

int cmd_compare_fbg(const Options& o, std::ostream& out) {
  auto a = fundamental_bipartite_graph(load(o.input), o.max_paths);
  auto b = fundamental_bipartite_graph(load(o.second), o.max_paths);
  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& [k, _] : a.classes) keys.insert(k);
  for (const auto& [k, _] : b.classes) keys.insert(k);
  for (const auto& k : keys) {
    out << k.first << " -> " << k.second << ": " << a.count(k.first, k.second) << " vs "
        << b.count(k.first, k.second) << "\n";
  }
  bool same = o.profile ? fbg_count_profile_equal(a, b) : fbg_equal(a, b);
  out << (same ? "equal" : "different") << "\n";
  return same ? kOk : kDomainFailure;
}

int cmd_iso(const Options& o, std::ostream& out) {
  auto iso = are_isomorphic(load(o.input), load(o.second));
  if (!iso) {
    out << "not isomorphic\n";
    return kDomainFailure;
  }
  out << "isomorphic\n";
  for (const auto& [from, to] : *iso) out << "  " << from.id << " -> " << to.id << "\n";
  return kOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  auto text = export_dot(load(o.input));
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Precubical set reduction and fundamental bipartite graph tool", "pcs"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_output = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "Output path"); };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "Machine-readable output"); };
  auto add_max_paths = [&](CLI::App* c) {
    c->add_option("--max-paths", o.max_paths, "Path enumeration cap")->capture_default_str();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a document against the precubical identities");
  validate_cmd->add_option("file", o.input)->required();

  auto* info = app.add_subcommand("info", "Summarise a complex");
  info->add_option("file", o.input)->required();

  auto* gen = app.add_subcommand("gen", "Generate a fixture or holed grid");
  gen->add_option("--fixture", o.fixture, "Fixture name");
  gen->add_option("--grid", o.grid, "Grid size M N")->expected(2);
  gen->add_option("--hole", o.holes, "Hole i,j (repeatable)");
  gen->add_option("--recipe-out", o.recipe_out, "Write the fixture's worked reduction script");
  add_output(gen);

  auto* reduce = app.add_subcommand("reduce", "Check and apply one reduction");
  reduce->add_option("file", o.input)->required();
  reduce->add_option("--op", o.op, "edge-collapse | square-one-free | square-two-free")->required();
  reduce->add_option("--cell", o.cell)->required();
  reduce->add_option("--a", o.a)->check(CLI::IsMember({1, 2}));
  reduce->add_option("--b", o.b)->check(CLI::IsMember({0, 1}));
  reduce->add_flag("--allow-empty-y", o.allow_empty_y, "Apply even if Y is empty");
  reduce->add_flag("--check", o.check_only, "Only print the certificate");
  add_output(reduce);
  add_json(reduce);

  auto* autored = app.add_subcommand("auto-reduce", "Apply reductions greedily or from a recipe");
  autored->add_option("file", o.input)->required();
  autored->add_option("--policy", o.policy)->check(CLI::IsMember({"greedy", "recipe"}));
  autored->add_option("--recipe", o.recipe_path, "Recipe file");
  add_output(autored);
  add_json(autored);

  auto* fbg = app.add_subcommand("fbg", "Count dihomotopy classes between extremal vertices");
  fbg->add_option("file", o.input)->required();
  fbg->add_flag("--representatives", o.representatives, "List one path per class");
  add_max_paths(fbg);
  add_json(fbg);

  auto* compare = app.add_subcommand("compare-fbg", "Compare the FBG tables of two complexes");
  compare->add_option("first", o.input)->required();
  compare->add_option("second", o.second)->required();
  compare->add_flag("--profile", o.profile, "Compare count profiles only, ignoring vertex names");
  add_max_paths(compare);

  auto* iso = app.add_subcommand("iso", "Test two complexes for isomorphism");
  iso->add_option("first", o.input)->required();
  iso->add_option("second", o.second)->required();

  auto* dot = app.add_subcommand("export-dot", "Render a complex as Graphviz DOT");
  dot->add_option("file", o.input)->required();
  add_output(dot);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    auto* cmd = app.get_subcommands().front();
    const auto& name = cmd->get_name();
    if (name == "validate") return cmd_validate(o, out);
    if (name == "info") return cmd_info(o, out);
    if (name == "gen") return cmd_gen(o, out);
    if (name == "reduce") return cmd_reduce(o, out);
    if (name == "auto-reduce") return cmd_auto_reduce(o, out);
    if (name == "fbg") return cmd_fbg(o, out);
    if (name == "compare-fbg") return cmd_compare_fbg(o, out);
    if (name == "iso") return cmd_iso(o, out);
    if (name == "export-dot") return cmd_export_dot(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationFailed& e) {
    err << "error: " << e.what();
    return kUsage;
  } catch (const UnknownFixture& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}

}  // namespace precubical::cli
