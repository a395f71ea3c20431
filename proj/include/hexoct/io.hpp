#pragma once

// Artifact formats and the on-disk cache.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hexoct/ggraph.hpp"
#include "hexoct/icosa_reps.hpp"
#include "hexoct/projection.hpp"

namespace hexoct {

using Json = nlohmann::json;

std::string sha256_hex(std::string_view data);
std::string read_file(const std::filesystem::path& p);
// Writes through a temporary file in the same directory, then renames.
void write_file(const std::filesystem::path& p, std::string_view content);
// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

// --- enumerate.json: the A5 subgroups of B6 as generator pairs.
Json enumerate_to_json(std::size_t b6_order, std::size_t b6_plus_order, const std::vector<IcosaRep>& reps);
// Rebuilds each group by closure; throws ParseError on malformed input.
std::vector<IcosaRep> reps_from_json(const Json& j);

// --- catalog.json: the classified crystallographic class.
Json catalog_to_json(const RepCatalog& cat, const std::string& enumerate_sha256);
// Throws StaleCache when the embedded hash differs from `enumerate_sha256`.
RepCatalog catalog_from_json(const Json& j, const std::string& enumerate_sha256);
// Manifest of a subgroup class: representative and members as element lists.
Json subgroup_class_to_json(const SubgroupClass& cls);

// --- projection.json / orbit.csv
struct ProjectionBundle {
  QfMat p1, p2, r, pi_par, pi_perp;
  IrrepPair irreps;
  std::vector<QfMat> orbit;
};
ProjectionBundle compute_projection(const IcosaRep& rep);
// {a_num, a_den, b_num, b_den} for a + b sqrt5.
Json qf_to_json(const QfElem& x);
QfElem qf_from_json(const Json& j);
Json qfmat_to_json(const QfMat& m, bool with_float);
Json projection_to_json(const ProjectionBundle& b, bool with_float);
std::string orbit_csv(const std::vector<QfMat>& points);

// --- ggraph-<name>.json
Json ggraph_to_json(const GGraph& g, const SpectrumReport& s, const std::string& catalog_sha256);
// Adjacency of a cached graph, if it was built from the same catalog.
std::optional<IntMatrix> cached_adjacency(const Json& j, const std::string& catalog_sha256);

// Paths inside the cache directory.
struct CacheLayout {
  std::filesystem::path dir;
  std::filesystem::path enumerate() const { return dir / "enumerate.json"; }
  std::filesystem::path catalog() const { return dir / "catalog.json"; }
  std::filesystem::path ggraph(std::string_view name) const { return dir / ("ggraph-" + std::string(name) + ".json"); }
};

}  // namespace hexoct
