#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "softtop/softtop.hpp"

namespace {

using namespace softtop;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::size_t cell_bound() {
  const char* env = std::getenv("SOFTTOP_MAX_CELLS");
  if (!env) return kDefaultMaxCells;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v == 0 || v > kHardMaxCells)
    throw std::invalid_argument("SOFTTOP_MAX_CELLS must be an integer in [1, " +
                                std::to_string(kHardMaxCells) + "]");
  return static_cast<std::size_t>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SpaceDocument load_document(const std::string& path) {
  return SpaceDocument::parse(read_file(path), cell_bound());
}

std::string show(const SoftSet& s, const SpaceDocument* doc) {
  if (doc) {
    if (auto name = doc->display_name(s)) return *name + " = " + to_string(s);
  }
  return to_string(s);
}

void print_verdict(const Verdict& v, const SpaceDocument* doc) {
  std::cout << (v.holds ? "holds" : "fails");
  if (v.vacuous) std::cout << " (vacuous)";
  std::cout << ": " << v.detail << "\n";
  for (const auto& p : v.points) std::cout << "  witness point: " << p << "\n";
  for (const auto& s : v.sets) std::cout << "  witness set: " << show(s, doc) << "\n";
}

/// Commands that need an actual topology reject non-topology families with
/// the axiom witness (exit 1), mirroring `validate`.
std::optional<Topology> require_topology(const SpaceDocument& doc) {
  Verdict v = doc.validate_topology();
  if (!v.holds) {
    std::cout << "not a soft topology\n";
    print_verdict(v, &doc);
    return std::nullopt;
  }
  return doc.to_topology();
}

int cmd_validate(const std::string& file) {
  SpaceDocument doc = load_document(file);
  Verdict v = doc.validate_topology();
  if (!v.holds) {
    std::cout << "not a soft topology\n";
    print_verdict(v, &doc);
    return kExitCheckFailed;
  }
  std::cout << "valid soft topology: " << v.detail << "\n";
  return kExitOk;
}

int cmd_profile(const std::string& file, bool as_json,
                const std::vector<std::string>& asserted) {
  SpaceDocument doc = load_document(file);
  std::vector<Property> assert_props;
  for (const auto& name : asserted) assert_props.push_back(parse_property(name));

  Verdict valid = doc.validate_topology();
  if (!valid.holds) {
    std::cout << "not a soft topology\n";
    print_verdict(valid, &doc);
    return kExitCheckFailed;
  }
  Topology t = doc.to_topology();

  std::vector<std::pair<Property, Verdict>> checks;
  for (Property p : all_properties()) checks.emplace_back(p, evaluate_property(t, p));

  bool asserts_ok = true;
  for (Property p : assert_props)
    for (const auto& [q, v] : checks)
      if (p == q && !v.holds) asserts_ok = false;
  int exit_code = asserts_ok ? kExitOk : kExitCheckFailed;

  if (as_json) {
    std::vector<std::pair<std::string, Verdict>> named;
    for (const auto& [p, v] : checks) named.emplace_back(property_name(p), v);
    std::vector<std::string> assert_names;
    for (Property p : assert_props) assert_names.emplace_back(property_name(p));
    std::cout << profile_report("profile", file, doc, named, assert_names, exit_code).dump(2)
              << "\n";
  } else {
    for (const auto& [p, v] : checks) {
      std::cout << property_name(p) << ": " << (v.holds ? "holds" : "fails");
      if (v.vacuous) std::cout << " (vacuous)";
      std::cout << "\n";
      if (!v.holds) {
        std::cout << "  " << v.detail << "\n";
        for (const auto& pt : v.points) std::cout << "  witness point: " << pt << "\n";
        for (const auto& s : v.sets) std::cout << "  witness set: " << show(s, &doc) << "\n";
      }
    }
    if (!assert_props.empty())
      std::cout << (asserts_ok ? "all asserted properties hold"
                               : "an asserted property fails")
                << "\n";
  }
  return exit_code;
}

int cmd_closure(const std::string& file, const std::string& set_name, bool interior) {
  SpaceDocument doc = load_document(file);
  auto topo = require_topology(doc);
  if (!topo) return kExitCheckFailed;
  SoftSet a = doc.set_named(set_name);
  SoftSet r = interior ? topo->interior(a) : topo->closure(a);
  std::cout << (interior ? "interior(" : "closure(") << set_name << ") = ";
  if (auto name = doc.display_name(r))
    std::cout << *name << " = " << to_string(r) << "\n";
  else
    std::cout << to_string(r) << "\n";
  return kExitOk;
}

int cmd_subspace(const std::string& file, const std::vector<std::string>& point_names) {
  SpaceDocument doc = load_document(file);
  auto topo = require_topology(doc);
  if (!topo) return kExitCheckFailed;
  Topology sub = topo->subspace(point_names);
  std::cout << SpaceDocument::for_topology(sub).serialize();
  return kExitOk;
}

int cmd_subcover(const std::string& file, const std::string& target_name,
                 const std::vector<std::string>& member_names, const std::string& strategy) {
  SpaceDocument doc = load_document(file);
  SoftSet target = doc.set_named(target_name);
  std::vector<SoftSet> members;
  for (const auto& n : member_names) members.push_back(doc.set_named(n));
  SubcoverStrategy st;
  if (strategy == "exact")
    st = SubcoverStrategy::exact;
  else if (strategy == "greedy")
    st = SubcoverStrategy::greedy;
  else
    throw std::invalid_argument("subcover: strategy must be 'exact' or 'greedy'");
  std::vector<SoftSet> chosen = minimal_subcover(Cover::of(target, members), st);
  std::cout << "subcover of " << target_name << " (" << strategy << ", " << chosen.size()
            << " of " << members.size() << " members):\n";
  for (const auto& s : chosen) std::cout << "  " << show(s, &doc) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& theorem_id, const std::string& file,
               std::size_t max_points, std::size_t max_params) {
  Theorem thm = parse_theorem(theorem_id);
  Verdict v;
  const SpaceDocument* doc_ptr = nullptr;
  std::optional<SpaceDocument> doc;
  if (!file.empty()) {
    doc = load_document(file);
    doc_ptr = &*doc;
    auto topo = require_topology(*doc);
    if (!topo) return kExitCheckFailed;
    v = verify_theorem(thm, *topo);
  } else {
    v = verify_theorem(thm, EnumBounds{max_points, max_params});
  }
  std::cout << theorem_id << " ";
  print_verdict(v, doc_ptr);
  return v.holds ? kExitOk : kExitCheckFailed;
}

int cmd_search(const std::vector<std::string>& holds_names,
               const std::vector<std::string>& fails_names, bool exhaustive, bool random_mode,
               std::size_t max_points, std::size_t max_params, std::size_t budget,
               std::uint64_t seed) {
  if (exhaustive == random_mode)
    throw std::invalid_argument("search: pick exactly one of --exhaustive and --random");
  std::vector<Property> holds, fails;
  for (const auto& n : holds_names) holds.push_back(parse_property(n));
  for (const auto& n : fails_names) fails.push_back(parse_property(n));
  SearchBudget b;
  b.max_points = max_points;
  b.max_params = max_params;
  b.max_topologies = budget;
  b.random_seed = seed;
  b.mode = exhaustive ? SearchBudget::Mode::exhaustive : SearchBudget::Mode::random;
  auto hit = find_counterexample(holds, fails, b);
  if (!hit) {
    std::cout << "no space found";
    if (exhaustive)
      std::cout << " (bounded non-existence over |X|<=" << max_points
                << ", |E|<=" << max_params << ")";
    std::cout << "\n";
    return kExitCheckFailed;
  }
  SpaceDocument doc = SpaceDocument::for_topology(hit->space);
  for (const auto& [p, v] : hit->verdicts) {
    std::cout << "# " << property_name(p) << ": " << (v.holds ? "holds" : "fails");
    if (v.vacuous) std::cout << " (vacuous)";
    std::cout << "\n";
  }
  std::cout << doc.serialize();
  return kExitOk;
}

int cmd_catalog(const std::string& id, const std::string& emit) {
  CatalogEntry entry = example(id);
  SpaceDocument doc = SpaceDocument::make(entry.sig, entry.named_sets);
  std::cout << entry.id << ": " << entry.note << "\n";
  for (const auto& e : entry.expectations) {
    std::cout << "  " << property_name(e.property) << ": "
              << (e.expected ? "holds" : "fails");
    if (e.vacuous) std::cout << " (vacuous)";
    std::cout << "\n";
  }
  if (!emit.empty()) {
    std::ofstream out(emit, std::ios::binary);
    if (!out) throw std::invalid_argument("catalog: cannot write to '" + emit + "'");
    out << doc.serialize();
    std::cout << "wrote " << emit << "\n";
  } else {
    std::cout << doc.serialize();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"softtop: a verification workbench for finite soft topological spaces"};
  app.require_subcommand(1);

  std::string file, set_name, target_name, strategy = "exact", theorem_id, catalog_id, emit;
  std::vector<std::string> asserted, point_names, member_names, holds_names, fails_names;
  bool as_json = false, exhaustive = false, random_mode = false;
  std::size_t max_points = 2, max_params = 2, budget = 1 << 20;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "check the three soft topology axioms");
  validate->add_option("FILE", file)->required();

  auto* profile = app.add_subcommand("profile", "decide every named property of a space");
  profile->add_option("FILE", file)->required();
  profile->add_flag("--json", as_json, "emit a machine-readable report");
  profile->add_option("--assert", asserted, "properties that must hold (exit 1 otherwise)")
      ->delimiter(',');

  auto* closure = app.add_subcommand("closure", "soft closure of a named set");
  closure->add_option("FILE", file)->required();
  closure->add_option("--set", set_name)->required();

  auto* interior = app.add_subcommand("interior", "soft interior of a named set");
  interior->add_option("FILE", file)->required();
  interior->add_option("--set", set_name)->required();

  auto* subspace = app.add_subcommand("subspace", "soft relative topology on a point subset");
  subspace->add_option("FILE", file)->required();
  subspace->add_option("--points", point_names)->required()->delimiter(',');

  auto* subcover = app.add_subcommand("subcover", "minimal subcover extraction");
  subcover->add_option("FILE", file)->required();
  subcover->add_option("--target", target_name)->required();
  subcover->add_option("--members", member_names)->required()->delimiter(',');
  subcover->add_option("--strategy", strategy)->check(CLI::IsMember({"exact", "greedy"}));

  auto* verify = app.add_subcommand("verify", "replay a named theorem check");
  verify->add_option("--theorem", theorem_id)->required();
  verify->add_option("--file", file);
  verify->add_option("--max-points", max_points);
  verify->add_option("--max-params", max_params);

  auto* search = app.add_subcommand("search", "hunt a space by property profile");
  search->add_option("--holds", holds_names)->delimiter(',');
  search->add_option("--fails", fails_names)->delimiter(',');
  search->add_flag("--exhaustive", exhaustive);
  search->add_flag("--random", random_mode);
  search->add_option("--max-points", max_points);
  search->add_option("--max-params", max_params);
  search->add_option("--budget", budget);
  search->add_option("--seed", seed);

  auto* catalog = app.add_subcommand("catalog", "golden example spaces");
  catalog->add_option("--id", catalog_id)->required();
  catalog->add_option("--emit", emit, "write the space document to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*profile) return cmd_profile(file, as_json, asserted);
    if (*closure) return cmd_closure(file, set_name, false);
    if (*interior) return cmd_closure(file, set_name, true);
    if (*subspace) return cmd_subspace(file, point_names);
    if (*subcover) return cmd_subcover(file, target_name, member_names, strategy);
    if (*verify) return cmd_verify(theorem_id, file, max_points, max_params);
    if (*search)
      return cmd_search(holds_names, fails_names, exhaustive, random_mode, max_points,
                        max_params, budget, seed);
    if (*catalog) return cmd_catalog(catalog_id, emit);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
