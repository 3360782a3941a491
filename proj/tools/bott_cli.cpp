#include "bott/bbw.hpp"
#include "bott/errors.hpp"
#include "bott/json_io.hpp"
#include "bott/ledger.hpp"
#include "bott/parabolic.hpp"
#include "bott/presets.hpp"
#include "bott/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bott::io::json;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kEngine = 3 };

constexpr const char* kLedgerHeader =
    "character-level check: identities are compared in the Grothendieck group of the Levi; "
    "exact sequences are checked only through their alternating sum, which is necessary but "
    "blind to extension data";

struct RunConfig {
  std::string subcommand;
  std::string preset = "E6-paper";
  std::string cartan_file;
  std::size_t crossed = 1;
  bool crossed_given = false;
  std::string weight;
  std::string weight2;
  std::string format = "text";
  unsigned jobs = 0;
  bool no_cache = false;
  std::string target;
  bool dump = false;

  bool json() const { return format == "json"; }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bott::Weight parse_weight(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  std::vector<bott::Weight::value_type> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bott::Weight::value_type v{};
    const auto* end = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (ec != std::errc{} || ptr != end)
      throw UsageError(std::string(flag) + ": '" + item + "' is not an integer");
    coords.push_back(v);
  }
  return bott::Weight(std::span<const bott::Weight::value_type>(coords));
}

bott::RootSystemPtr root_system(const RunConfig& cfg) {
  if (!cfg.cartan_file.empty()) return bott::build_root_system(bott::load_cartan_file(cfg.cartan_file));
  return bott::preset(cfg.preset);
}

bott::ParabolicSetup setup_for(const RunConfig& cfg) {
  auto rs = root_system(cfg);
  if (cfg.crossed < 1 || cfg.crossed > rs->rank())
    throw UsageError("--crossed must lie in 1.." + std::to_string(rs->rank()));
  return bott::make_setup(rs, cfg.crossed - 1);
}

bott::Weight checked_weight(const bott::RootSystem& rs, const std::string& text, const char* flag) {
  auto w = parse_weight(text, flag);
  rs.check_rank(w);
  return w;
}

void print(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string dual_label(const bott::ParabolicSetup& setup, const bott::Weight& g_weight) {
  return "V" + g_weight.to_string() + "^* = V" +
         bott::dual_dominant(setup.rs(), setup.full(), g_weight).to_string();
}

// dim/char/tensor act on G unless --crossed is given, in which case they act on the Levi.
bott::Subsystem group_for(const RunConfig& cfg, const bott::ParabolicSetup& setup) {
  return cfg.crossed_given ? setup.levi() : setup.full();
}

int cmd_dim(const RunConfig& cfg) {
  auto setup = setup_for(cfg);
  auto w = checked_weight(setup.rs(), cfg.weight, "--weight");
  auto sub = group_for(cfg, setup);
  auto d = bott::weyl_dim(setup.rs(), sub, w);
  if (cfg.json())
    print({{"weight", bott::io::to_json(w)}, {"levi", cfg.crossed_given}, {"dim", bott::io::to_json(d)}});
  else
    std::cout << d << '\n';
  return kOk;
}

int cmd_char(const RunConfig& cfg) {
  auto setup = setup_for(cfg);
  auto w = checked_weight(setup.rs(), cfg.weight, "--weight");
  auto sub = group_for(cfg, setup);
  auto ch = bott::irrep_character(setup.rs(), sub, w);
  if (cfg.json()) {
    print({{"weight", bott::io::to_json(w)},
           {"levi", cfg.crossed_given},
           {"dim", ch->total()},
           {"terms", bott::io::to_json(*ch)}});
  } else {
    std::cout << "dim " << ch->total() << ", " << ch->size() << " distinct weights\n";
    for (const auto& [wt, m] : ch->sorted()) std::cout << wt.to_string() << ' ' << m << '\n';
  }
  return kOk;
}

void print_terms(const bott::RootSystem& rs, const bott::Subsystem& sub, const bott::IrrepSum& terms) {
  for (const auto& t : terms)
    std::cout << t.highest.to_string() << " x" << t.mult << "  dim " << bott::weyl_dim(rs, sub, t.highest)
              << '\n';
}

int cmd_tensor(const RunConfig& cfg) {
  auto setup = setup_for(cfg);
  auto a = checked_weight(setup.rs(), cfg.weight, "--weight");
  auto b = checked_weight(setup.rs(), cfg.weight2, "--weight2");
  auto sub = group_for(cfg, setup);
  auto terms = bott::tensor_decompose(setup.rs(), sub, a, b);
  if (cfg.json()) {
    print({{"weight", bott::io::to_json(a)},
           {"weight2", bott::io::to_json(b)},
           {"levi", cfg.crossed_given},
           {"terms", bott::io::to_json(terms)}});
  } else {
    print_terms(setup.rs(), sub, terms);
  }
  return kOk;
}

int cmd_branch(const RunConfig& cfg) {
  auto setup = setup_for(cfg);
  auto w = checked_weight(setup.rs(), cfg.weight, "--weight");
  auto terms = bott::branch(setup, w);
  if (cfg.json()) {
    json a = json::array();
    for (const auto& t : terms)
      a.push_back({{"weight", bott::io::to_json(t.highest)},
                   {"mult", t.mult},
                   {"rank", bott::io::to_json(bott::bundle_rank(setup, t.highest))}});
    print({{"weight", bott::io::to_json(w)}, {"crossed", cfg.crossed}, {"terms", std::move(a)}});
  } else {
    print_terms(setup.rs(), setup.levi(), terms);
  }
  return kOk;
}

int cmd_cohomology(const RunConfig& cfg) {
  auto setup = setup_for(cfg);
  auto w = checked_weight(setup.rs(), cfg.weight, "--weight");
  auto h = bott::cohomology(setup, w);
  if (cfg.json()) {
    auto doc = bott::io::cohomology_json(setup, h);
    doc["weight"] = bott::io::to_json(w);
    print(doc);
  } else if (!h) {
    std::cout << "all cohomology vanishes\n";
  } else {
    std::cout << "H^" << h->degree << " = " << dual_label(setup, h->g_weight) << ", dim " << h->dim << '\n';
  }
  return kOk;
}

int cmd_ext(const RunConfig& cfg) {
  auto setup = setup_for(cfg);
  auto a = checked_weight(setup.rs(), cfg.weight, "--weight");
  auto b = checked_weight(setup.rs(), cfg.weight2, "--weight2");
  auto table = bott::ext_table(setup, a, b);
  if (cfg.json()) {
    print({{"weight", bott::io::to_json(a)},
           {"weight2", bott::io::to_json(b)},
           {"table", bott::io::ext_table_json(setup, table)}});
    return kOk;
  }
  bool any = false;
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k].dim == 0) continue;
    any = true;
    std::cout << "Ext^" << k << " dim " << table[k].dim << ':';
    for (const auto& t : table[k].weights) std::cout << "  " << t.mult << " x " << dual_label(setup, t.highest);
    std::cout << '\n';
  }
  if (!any) std::cout << "Ext^* = 0\n";
  return kOk;
}

int cmd_c1(const RunConfig& cfg) {
  auto setup = setup_for(cfg);
  auto w = checked_weight(setup.rs(), cfg.weight, "--weight");
  auto c1 = bott::bundle_c1(setup, w);
  auto rank = bott::bundle_rank(setup, w);
  if (cfg.json())
    print({{"weight", bott::io::to_json(w)}, {"rank", bott::io::to_json(rank)}, {"c1", c1}});
  else
    std::cout << c1 << '\n';
  return kOk;
}

bott::Collection load_target(const std::string& target) {
  for (const auto& name : bott::builtin_collection_names())
    if (name == target) return bott::builtin_collection(name);
  return bott::io::load_collection_file(target);
}

int cmd_verify(const RunConfig& cfg) {
  auto collection = load_target(cfg.target);
  auto report = bott::verify_strong_exceptional(collection, cfg.jobs);
  std::ostream& summary = cfg.json() ? std::cerr : std::cout;
  summary << collection.name << ": pairs " << report.size * report.size << ", violations "
          << report.violations.size() << ", time " << report.seconds << " s, "
          << (report.pass ? "PASS" : "FAIL") << '\n';
  if (cfg.json()) {
    print(bott::io::report_json(collection, report));
  } else {
    for (const auto& v : report.violations)
      std::cout << "violation (" << v.row + 1 << ',' << v.col + 1 << ") degree " << v.degree << " dim " << v.dim
                << ": " << v.rule << '\n';
    std::cout << "Hom matrix:\n";
    for (const auto& row : bott::hom_matrix(report)) {
      for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
      std::cout << '\n';
    }
  }
  return report.pass ? kOk : kFail;
}

int cmd_ledger(const RunConfig& cfg) {
  const bool builtin = cfg.target.empty() || cfg.target == "builtin";
  auto ids = builtin ? bott::ledger::builtin_ledger() : bott::io::load_ledger_file(cfg.target);
  if (cfg.dump) {
    print(bott::io::ledger_json(ids));
    return kOk;
  }
  auto setup = builtin ? bott::make_setup(bott::preset("E6-paper"), 0) : setup_for(cfg);
  json results = json::array();
  bool all = true;
  if (!cfg.json()) std::cout << "# " << kLedgerHeader << '\n';
  for (const auto& id : ids) {
    auto r = bott::ledger::check_identity(setup, id);
    all = all && r.pass;
    if (cfg.json()) {
      results.push_back({{"name", id.name},
                         {"kind", std::string(bott::ledger::kind_name(id.kind))},
                         {"terms", bott::ledger::identity_terms(id)},
                         {"pass", r.pass},
                         {"difference", bott::io::to_json(r.difference_terms)}});
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << id.name << "  " << id.note << '\n';
      for (const auto& t : r.difference_terms)
        std::cout << "    difference " << t.highest.to_string() << " x" << t.mult << '\n';
    }
  }
  if (cfg.json())
    print({{"header", kLedgerHeader}, {"verdict", all ? "pass" : "fail"}, {"identities", std::move(results)}});
  else
    std::cout << ids.size() << " identities, " << (all ? "all pass" : "some fail") << '\n';
  return all ? kOk : kFail;
}

int cmd_presets(const RunConfig& cfg) {
  json a = json::array();
  for (const auto& name : bott::preset_names()) {
    auto rs = bott::preset(name);
    if (cfg.json())
      a.push_back({{"name", name}, {"rank", rs->rank()}, {"positive_roots", rs->positive_roots().size()}});
    else
      std::cout << name << "  rank " << rs->rank() << ", " << rs->positive_roots().size() << " positive roots\n";
  }
  if (cfg.json()) print(a);
  return kOk;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.subcommand == "dim") return cmd_dim(cfg);
  if (cfg.subcommand == "char") return cmd_char(cfg);
  if (cfg.subcommand == "tensor") return cmd_tensor(cfg);
  if (cfg.subcommand == "branch") return cmd_branch(cfg);
  if (cfg.subcommand == "cohomology") return cmd_cohomology(cfg);
  if (cfg.subcommand == "ext") return cmd_ext(cfg);
  if (cfg.subcommand == "c1") return cmd_c1(cfg);
  if (cfg.subcommand == "verify") return cmd_verify(cfg);
  if (cfg.subcommand == "ledger") return cmd_ledger(cfg);
  return cmd_presets(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Bott-Borel-Weil cohomology and exceptional collection checker"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub, bool weights, bool two) {
    sub->add_option("--preset", cfg.preset, "Built-in Cartan matrix (see `presets`)")
        ->check(CLI::IsMember(bott::preset_names()));
    sub->add_option("--cartan", cfg.cartan_file, "Cartan matrix JSON file {rank, entries}")->check(CLI::ExistingFile);
    sub->add_option_function<std::size_t>(
        "--crossed", [&](std::size_t k) { cfg.crossed = k; cfg.crossed_given = true; },
        "Crossed node of the maximal parabolic, 1-based (default 1)");
    if (weights) sub->add_option("--weight", cfg.weight, "Comma-separated weight")->allow_extra_args(false);
    if (two) sub->add_option("--weight2", cfg.weight2, "Second comma-separated weight");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", cfg.jobs, "Concurrent Ext computations (0 = all cores)");
    sub->add_flag("--no-cache", cfg.no_cache, "Disable the character cache");
  };

  struct Spec {
    const char* name;
    const char* help;
    bool weights;
    bool two;
  };
  const Spec specs[] = {
      {"dim", "Weyl dimension of an irreducible representation", true, false},
      {"char", "Full weight multiset of an irreducible representation", true, false},
      {"tensor", "Decompose a tensor product of irreducibles", true, true},
      {"branch", "Restrict a G-irreducible to the Levi", true, false},
      {"cohomology", "Cohomology of an irreducible homogeneous bundle", true, false},
      {"ext", "Ext^*(E_weight, E_weight2)", true, true},
      {"c1", "First Chern class of an irreducible homogeneous bundle", true, false},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, s.weights, s.two);
    add_output(sub);
  }
  auto* verify = app.add_subcommand("verify", "Check strong exceptionality of a collection");
  verify->add_option("target", cfg.target, "cayley27, kapranovQ7, or a collection JSON file")->required();
  add_output(verify);
  auto* ledger = app.add_subcommand("ledger", "Check bundle identities at the character level");
  ledger->add_option("target", cfg.target, "builtin (default) or a ledger JSON file");
  ledger->add_flag("--dump", cfg.dump, "Print the identities as JSON instead of checking them");
  add_common(ledger, false, false);
  add_output(ledger);
  auto* presets = app.add_subcommand("presets", "List built-in Cartan matrices");
  add_output(presets);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.no_cache) bott::set_character_cache_enabled(false);

  try {
    return dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.get_subcommands().front()->help();
    return kUsage;
  } catch (const bott::RankMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEngine;
  }
}
