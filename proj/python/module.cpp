#include "bott/bbw.hpp"
#include "bott/errors.hpp"
#include "bott/json_io.hpp"
#include "bott/ledger.hpp"
#include "bott/presets.hpp"
#include "bott/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using bott::io::json;

namespace {

using Coords = std::vector<std::int64_t>;

bott::Weight to_weight(const Coords& c) { return bott::Weight(std::span<const std::int64_t>(c)); }

// Node numbers are 1-based on this side, as on the command line.
bott::ParabolicSetup setup_for(const std::string& preset, std::size_t crossed) {
  auto rs = bott::preset(preset);
  if (crossed < 1 || crossed > rs->rank())
    throw py::value_error("crossed must lie in 1.." + std::to_string(rs->rank()));
  return bott::make_setup(rs, crossed - 1);
}

bott::Subsystem group(const bott::ParabolicSetup& setup, std::optional<std::size_t> crossed) {
  return crossed ? setup.levi() : setup.full();
}

std::string dim(const std::string& preset, const Coords& weight, std::optional<std::size_t> crossed) {
  auto setup = setup_for(preset, crossed.value_or(1));
  auto w = to_weight(weight);
  setup.rs().check_rank(w);
  return bott::weyl_dim(setup.rs(), group(setup, crossed), w).str();
}

std::string character(const std::string& preset, const Coords& weight, std::optional<std::size_t> crossed) {
  auto setup = setup_for(preset, crossed.value_or(1));
  auto w = to_weight(weight);
  setup.rs().check_rank(w);
  return bott::io::to_json(*bott::irrep_character(setup.rs(), group(setup, crossed), w)).dump();
}

std::string tensor(const std::string& preset, const Coords& a, const Coords& b, std::optional<std::size_t> crossed) {
  auto setup = setup_for(preset, crossed.value_or(1));
  auto wa = to_weight(a), wb = to_weight(b);
  setup.rs().check_rank(wa);
  setup.rs().check_rank(wb);
  return bott::io::to_json(bott::tensor_decompose(setup.rs(), group(setup, crossed), wa, wb)).dump();
}

std::string branch(const std::string& preset, const Coords& weight, std::size_t crossed) {
  auto setup = setup_for(preset, crossed);
  return bott::io::to_json(bott::branch(setup, to_weight(weight))).dump();
}

std::string cohomology(const std::string& preset, const Coords& weight, std::size_t crossed) {
  auto setup = setup_for(preset, crossed);
  return bott::io::cohomology_json(setup, bott::cohomology(setup, to_weight(weight))).dump();
}

std::string ext(const std::string& preset, const Coords& a, const Coords& b, std::size_t crossed) {
  auto setup = setup_for(preset, crossed);
  return bott::io::ext_table_json(setup, bott::ext_table(setup, to_weight(a), to_weight(b))).dump();
}

std::string verify(const std::string& target, unsigned jobs) {
  bott::Collection c = [&] {
    for (const auto& name : bott::builtin_collection_names())
      if (name == target) return bott::builtin_collection(name);
    return bott::io::load_collection_file(target);
  }();
  py::gil_scoped_release release;
  auto report = bott::verify_strong_exceptional(c, jobs);
  return bott::io::report_json(c, report).dump();
}

std::string check_identity(const std::string& text, const std::string& preset, std::size_t crossed) {
  auto setup = setup_for(preset, crossed);
  auto r = bott::ledger::check_identity(setup, bott::ledger::parse_identity("user", text));
  return json{{"pass", r.pass}, {"difference", bott::io::to_json(r.difference_terms)}}.dump();
}

std::string builtin_ledger() {
  auto setup = bott::make_setup(bott::preset("E6-paper"), 0);
  json out = json::array();
  for (const auto& id : bott::ledger::builtin_ledger()) {
    auto r = bott::ledger::check_identity(setup, id);
    out.push_back({{"name", id.name},
                   {"kind", std::string(bott::ledger::kind_name(id.kind))},
                   {"terms", bott::ledger::identity_terms(id)},
                   {"note", id.note},
                   {"pass", r.pass}});
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Representation theory and Bott vanishing on generalized flag varieties";

  auto base = py::register_exception<bott::Error>(m, "BottError", PyExc_ValueError);
  py::register_exception<bott::RankMismatch>(m, "RankMismatch", base.ptr());
  py::register_exception<bott::NotDominant>(m, "NotDominant", base.ptr());
  py::register_exception<bott::ParseError>(m, "ParseError", base.ptr());

  m.def("presets", &bott::preset_names);
  m.def("dim", &dim, py::arg("preset"), py::arg("weight"), py::arg("crossed") = std::nullopt);
  m.def("character", &character, py::arg("preset"), py::arg("weight"), py::arg("crossed") = std::nullopt);
  m.def("tensor", &tensor, py::arg("preset"), py::arg("a"), py::arg("b"), py::arg("crossed") = std::nullopt);
  m.def("branch", &branch, py::arg("preset"), py::arg("weight"), py::arg("crossed") = 1);
  m.def("cohomology", &cohomology, py::arg("preset"), py::arg("weight"), py::arg("crossed") = 1);
  m.def("ext", &ext, py::arg("preset"), py::arg("a"), py::arg("b"), py::arg("crossed") = 1);
  m.def(
      "c1",
      [](const std::string& preset, const Coords& weight, std::size_t crossed) {
        return bott::bundle_c1(setup_for(preset, crossed), to_weight(weight));
      },
      py::arg("preset"), py::arg("weight"), py::arg("crossed") = 1);
  m.def(
      "dual",
      [](const std::string& preset, const Coords& weight, std::size_t crossed) {
        auto w = bott::bundle_dual(setup_for(preset, crossed), to_weight(weight));
        return Coords(w.coords().begin(), w.coords().end());
      },
      py::arg("preset"), py::arg("weight"), py::arg("crossed") = 1);
  m.def("verify", &verify, py::arg("target"), py::arg("jobs") = 0u);
  m.def("check_identity", &check_identity, py::arg("text"), py::arg("preset") = "E6-paper",
        py::arg("crossed") = 1);
  m.def("builtin_ledger", &builtin_ledger);
  m.def("set_cache_enabled", &bott::set_character_cache_enabled);
}
