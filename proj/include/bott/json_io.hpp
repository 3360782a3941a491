#pragma once

#include "bott/bbw.hpp"
#include "bott/ledger.hpp"
#include "bott/verify.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bott::io {

using json = nlohmann::json;

json to_json(const Weight& w);
Weight weight_from_json(const json& j);
/// Integer when it fits in 64 bits, decimal string otherwise.
json to_json(const BigInt& n);

/// [{"weight": [...], "mult": m}, ...] in canonical order.
json to_json(const Character& c);
json to_json(const IrrepSum& terms);

/// {"vanishes": true} or {"vanishes": false, "degree", "g_weight", "dual_weight", "dim"}.
json cohomology_json(const ParabolicSetup& setup, const std::optional<Cohomology>& h);
/// [{"degree": k, "dim": d, "weights": [{"weight", "dual", "mult"}]}], every degree present.
json ext_table_json(const ParabolicSetup& setup, const ExtTable& table);

json report_json(const Collection& c, const VerificationReport& report);

/// {"preset": name, "crossed": k (1-based), "bundles": [{"weight": [...]}, ...]},
/// optionally {"cartan": {"rank", "entries"}} instead of "preset".
Collection collection_from_json(const json& j, std::string name = "file");
Collection load_collection_file(const std::string& path);
json collection_json(const Collection& c);

/// [{"name", "kind": "Iso"|"ExactSeq", "terms": [...]}, ...]
std::vector<ledger::Identity> ledger_from_json(const json& j);
std::vector<ledger::Identity> load_ledger_file(const std::string& path);
json ledger_json(const std::vector<ledger::Identity>& ids);

json cartan_json(const CartanMatrix& a);

}  // namespace bott::io
