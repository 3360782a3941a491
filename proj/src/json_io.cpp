#include "bott/json_io.hpp"

#include "bott/presets.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace bott::io {

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return json::parse(in);
}

json weighted(const Weight& w, Mult m) { return json{{"weight", to_json(w)}, {"mult", m}}; }

}  // namespace

json to_json(const Weight& w) {
  json a = json::array();
  for (auto c : w.coords()) a.push_back(c);
  return a;
}

Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be a JSON array of integers");
  std::vector<Weight::value_type> coords;
  for (const auto& x : j) coords.push_back(x.get<Weight::value_type>());
  return Weight(std::span<const Weight::value_type>(coords));
}

json to_json(const BigInt& n) {
  if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(n);
  return n.str();
}

json to_json(const Character& c) {
  json a = json::array();
  for (const auto& [w, m] : c.sorted()) a.push_back(weighted(w, m));
  return a;
}

json to_json(const IrrepSum& terms) {
  json a = json::array();
  for (const auto& t : terms) a.push_back(weighted(t.highest, t.mult));
  return a;
}

json cohomology_json(const ParabolicSetup& setup, const std::optional<Cohomology>& h) {
  if (!h) return json{{"vanishes", true}};
  return json{{"vanishes", false},
              {"degree", h->degree},
              {"g_weight", to_json(h->g_weight)},
              {"dual_weight", to_json(dual_dominant(setup.rs(), setup.full(), h->g_weight))},
              {"dim", to_json(h->dim)}};
}

json ext_table_json(const ParabolicSetup& setup, const ExtTable& table) {
  json a = json::array();
  for (std::size_t k = 0; k < table.size(); ++k) {
    json weights = json::array();
    for (const auto& t : table[k].weights) {
      weights.push_back({{"weight", to_json(t.highest)},
                         {"dual", to_json(dual_dominant(setup.rs(), setup.full(), t.highest))},
                         {"mult", t.mult}});
    }
    a.push_back({{"degree", k}, {"dim", to_json(table[k].dim)}, {"weights", std::move(weights)}});
  }
  return a;
}

json report_json(const Collection& c, const VerificationReport& report) {
  json pairs = json::array();
  for (std::size_t i = 0; i < report.size; ++i)
    for (std::size_t j = 0; j < report.size; ++j)
      pairs.push_back({{"pair", {i + 1, j + 1}}, {"table", ext_table_json(c.setup, report.table(i, j))}});

  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"pair", {v.row + 1, v.col + 1}},
                          {"degree", v.degree},
                          {"dim", to_json(v.dim)},
                          {"rule", v.rule}});
  }
  json hom = json::array();
  for (const auto& row : hom_matrix(report)) {
    json r = json::array();
    for (const auto& d : row) r.push_back(to_json(d));
    hom.push_back(std::move(r));
  }
  return json{{"collection", collection_json(c)},
              {"name", c.name},
              {"pairs_checked", report.size * report.size},
              {"verdict", report.pass ? "pass" : "fail"},
              {"violations", std::move(violations)},
              {"hom_matrix", std::move(hom)},
              {"pairs", std::move(pairs)}};
}

json cartan_json(const CartanMatrix& a) {
  return json{{"rank", a.rank()}, {"entries", a.rows()}};
}

Collection collection_from_json(const json& j, std::string name) {
  RootSystemPtr rs;
  std::string preset_name;
  if (j.contains("preset")) {
    preset_name = j.at("preset").get<std::string>();
    rs = preset(preset_name);
  } else if (j.contains("cartan")) {
    rs = build_root_system(cartan_from_json_text(j.at("cartan").dump()));
  } else {
    throw std::invalid_argument("collection needs 'preset' or 'cartan'");
  }
  const auto crossed = j.value("crossed", std::size_t{1});
  if (crossed < 1 || crossed > rs->rank()) throw std::invalid_argument("'crossed' out of range");
  Collection c{j.value("name", std::move(name)), preset_name, make_setup(rs, crossed - 1), {}};
  for (const auto& b : j.at("bundles")) c.bundles.push_back(weight_from_json(b.at("weight")));
  validate_collection(c);
  return c;
}

Collection load_collection_file(const std::string& path) {
  return collection_from_json(parse_file(path), path);
}

json collection_json(const Collection& c) {
  json bundles = json::array();
  for (const auto& w : c.bundles) bundles.push_back({{"weight", to_json(w)}});
  json out;
  if (!c.preset.empty())
    out["preset"] = c.preset;
  else
    out["cartan"] = cartan_json(c.setup.rs().cartan());
  out["crossed"] = c.setup.crossed() + 1;
  out["bundles"] = std::move(bundles);
  return out;
}

std::vector<ledger::Identity> ledger_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("ledger file must be a JSON list");
  std::vector<ledger::Identity> out;
  for (const auto& item : j) {
    out.push_back(ledger::make_identity(item.at("name").get<std::string>(),
                                        ledger::kind_from_name(item.at("kind").get<std::string>()),
                                        item.at("terms").get<std::vector<std::string>>(),
                                        item.value("note", std::string{})));
  }
  return out;
}

std::vector<ledger::Identity> load_ledger_file(const std::string& path) {
  return ledger_from_json(parse_file(path));
}

json ledger_json(const std::vector<ledger::Identity>& ids) {
  json a = json::array();
  for (const auto& id : ids) {
    json item{{"name", id.name},
              {"kind", std::string(ledger::kind_name(id.kind))},
              {"terms", ledger::identity_terms(id)}};
    if (!id.note.empty()) item["note"] = id.note;
    a.push_back(std::move(item));
  }
  return a;
}

}  // namespace bott::io
