#pragma once

// Subgroups of the icosahedral group embedded in the reference
// crystallographic representation, and their B6 conjugacy classes.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexoct/group_set.hpp"
#include "hexoct/qfield.hpp"
#include "hexoct/reference.hpp"

namespace hexoct {

enum class SubgroupName { T = 0, D10, D6, C5, D4, C3, C2, Trivial };
inline constexpr int kSubgroupCount = 8;
inline constexpr std::array<SubgroupName, kSubgroupCount> kAllSubgroups{
    SubgroupName::T,  SubgroupName::D10, SubgroupName::D6, SubgroupName::C5,
    SubgroupName::D4, SubgroupName::C3,  SubgroupName::C2, SubgroupName::Trivial};

std::string_view subgroup_name(SubgroupName n);
// Accepts "T", "D10", "D6", "C5", "D4", "C3", "C2", "trivial" (also "e").
std::optional<SubgroupName> parse_subgroup_name(std::string_view text);
const published::SubgroupFacts& facts(SubgroupName n);
bool is_maximal(SubgroupName n);

// The explicit generator matrices of K_G (none for the trivial group).
std::vector<SignedPerm> explicit_generators(SubgroupName n);
// The same subgroup from the generator words g2, g2d, g3, g3d, g5d of the
// icosahedral group, taken through their S12 permutations.
std::vector<SignedPerm> word_generators(SubgroupName n);
// S12 permutation of a named icosahedral element: "g2", "g2d", "g3", "g3d", "g5", "g5d".
Perm12 icosahedral_permutation(std::string_view element);

// A real irreducible character of a small subgroup (complex conjugate pairs
// are merged into one real character).
struct SmallIrrep {
  std::string name;
  std::vector<QfElem> values;  // aligned with the group's canonical order
};
// The real irreducible characters of K_G, classes fixed by its explicit generators.
std::vector<SmallIrrep> small_irreps(SubgroupName n, const GroupSet& group);
// Multiplicities of the 6D natural character of `group`, formatted as e.g.
// "2A2 + E1 + E2". Throws NotACharacter on non-integral multiplicities.
std::string decompose_natural(SubgroupName n, const GroupSet& group);

struct SubgroupCatalogEntry {
  SubgroupName name;
  std::vector<SignedPerm> generators;
  GroupSet group;
  int order = 0;
  int n_g = 0;             // subgroups of the reference group of this order
  bool friendly = false;   // all of them conjugate inside the reference group
  SubgroupClass b6_class;  // conjugacy class of group in B6
  std::string decomposition;
  int class_size_b6() const { return static_cast<int>(b6_class.size()); }
};

// All subgroups of `h`, from closures of every pair of its elements (enough
// for the groups handled here, whose subgroups are all 2-generated).
std::vector<GroupSet> all_subgroups(const GroupSet& h);

// Builds the eight entries. With `strict`, throws CatalogMismatch when the two
// generator routes disagree, a group leaves the reference representation, or
// a recomputed order, n_G, class size or decomposition differs from the
// published value.
std::vector<SubgroupCatalogEntry> build_subgroup_catalog(const GroupSet& b6, int jobs = 1, bool strict = true);

}  // namespace hexoct
