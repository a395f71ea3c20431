#pragma once

// The claim checklist behind `hexoct report` and `hexoct verify-all`.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hexoct/ggraph.hpp"
#include "hexoct/io.hpp"

namespace hexoct {

struct Workspace {
  GroupSet b6;
  GroupSet b6_plus;
  std::vector<IcosaRep> a5;
  RepCatalog catalog;
  std::vector<SubgroupCatalogEntry> subgroups;  // indexed by SubgroupName
  IntMatrix subgroup_matrix;
  std::map<SubgroupName, GGraph> graphs;
  std::map<SubgroupName, SpectrumReport> spectra;
  int jobs = 1;

  const SubgroupCatalogEntry& entry(SubgroupName n) const { return subgroups.at(static_cast<int>(n)); }
  const std::vector<GroupSet>& vertices() const { return catalog.cryst_class.members; }
};

// Fills subgroups, subgroup_matrix, graphs and spectra from b6 and catalog.
void complete_workspace(Workspace& ws);
// Everything from scratch, no cache.
Workspace build_workspace(int jobs);

enum class ClaimStatus { Pass, Fail, Info };
const char* claim_status_name(ClaimStatus s);

struct Claim {
  std::string id;
  std::string statement;
  std::string expected;
  std::string observed;
  ClaimStatus status = ClaimStatus::Fail;
};

std::vector<Claim> group_claims(const Workspace& ws, std::optional<std::uint64_t> seed);
std::vector<Claim> subgroup_claims(const Workspace& ws);
std::vector<Claim> projection_claims(const Workspace& ws);
std::vector<Claim> graph_claims(const Workspace& ws);
std::vector<Claim> all_claims(const Workspace& ws, std::optional<std::uint64_t> seed);

// Checks of a single graph against its published spectrum and components.
std::vector<Claim> spectrum_claims(const GGraph& g, const SpectrumReport& s);
std::vector<Claim> component_claims(const GGraph& g, const SpectrumReport& s);

bool all_pass(const std::vector<Claim>& claims);
std::string render_markdown(const std::vector<Claim>& claims);
Json render_json(const std::vector<Claim>& claims);

std::string format_spectrum(const std::map<std::int64_t, int>& spectrum);

}  // namespace hexoct
