#pragma once

#include "bott/root_system.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bott {

/// Built-in Cartan matrices. "E6-paper" uses the labeling with the chain
/// 1-2-3-5-6 and node 4 attached to node 3; "E6-bourbaki" is the Bourbaki
/// labeling (chain 1-3-4-5-6, node 2 attached to node 4).
std::vector<std::string> preset_names();
CartanMatrix preset_cartan(std::string_view name);
RootSystemPtr preset(std::string_view name);

/// {"rank": n, "entries": [[...], ...]}
CartanMatrix cartan_from_json_text(const std::string& text);
CartanMatrix load_cartan_file(const std::string& path);

}  // namespace bott
