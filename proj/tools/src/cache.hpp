#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "isoendo/graph.hpp"

namespace isoendo::tools {

nlohmann::json snapshot_to_json(const GraphSnapshot& s);
// Throws BadInput on malformed data.
GraphSnapshot snapshot_from_json(const nlohmann::json& j);

// 64-bit FNV-1a of the text, as 16 hex digits.
std::string checksum(const std::string& text);

// Cache directory: the explicit flag, else $ISOGENY_ENDO_CACHE, else none.
std::optional<std::filesystem::path> cache_dir(const std::string& flag);

// Builds G(p, ell), reading and writing `<dir>/graph-<p>-<ell>.json` when a
// directory is given. A corrupt or inconsistent file is reported on `diag`
// and replaced.
IsogenyGraph load_or_build_graph(const Integer& p, int ell, const std::optional<std::filesystem::path>& dir,
                                 std::ostream& diag);

}  // namespace isoendo::tools
