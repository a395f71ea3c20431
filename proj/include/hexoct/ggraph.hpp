#pragma once

// G-graphs on the crystallographic representations: two representations are
// adjacent when their intersection has the order of G (equivalently, lies in
// the B6 class of K_G).

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "hexoct/icosa_reps.hpp"
#include "hexoct/spectrum.hpp"
#include "hexoct/subgroups.hpp"

namespace hexoct {

// S_ij = |H_i cap H_j|.
IntMatrix subgroup_matrix(const std::vector<GroupSet>& reps, int jobs = 1);

struct GGraph {
  SubgroupName subgroup = SubgroupName::Trivial;
  int subgroup_order = 1;
  IntMatrix adjacency;
  std::size_t size() const { return adjacency.size(); }
};

// Every j != i with |H_i cap H_j| = g_order.
std::vector<std::size_t> vertex_star(const std::vector<GroupSet>& reps, std::size_t i, std::size_t g_order);
GGraph build_ggraph(const IntMatrix& subgroup_matrix, SubgroupName subgroup);
GGraph build_ggraph(const std::vector<GroupSet>& reps, SubgroupName subgroup, int jobs = 1);
// True when every edge's intersection is a member of entry.b6_class.
bool edges_in_class(const std::vector<GroupSet>& reps, const GGraph& g, const SubgroupCatalogEntry& entry);

std::vector<std::vector<std::size_t>> connected_components(const IntMatrix& adjacency);
// Diagonal of A^3 is zero.
bool triangle_free(const IntMatrix& adjacency);
// 2-colourability of each component (reported, not asserted).
std::vector<bool> bipartite_components(const IntMatrix& adjacency,
                                       const std::vector<std::vector<std::size_t>>& components);

struct SpectrumReport {
  std::map<std::int64_t, int> eigenvalues;  // exact, integral
  std::int64_t degree = 0;                  // largest eigenvalue
  bool regular = false;                     // all row sums equal degree
  std::int64_t trace = 0;                   // sum of lambda * mult
  std::int64_t trace_sq = 0;                // sum of lambda^2 * mult
  std::vector<std::vector<std::size_t>> components;
  bool triangle_free = false;
  std::vector<bool> bipartite;
};
// Throws NonIntegralSpectrum when integer eigenvalues do not exhaust the
// dimension.
SpectrumReport spectrum(const GGraph& g, int jobs = 1);

struct PairingResult {
  std::size_t class_size = 0;
  std::map<int, std::size_t> containment_counts;  // reps containing P -> number of P
  int degree = 0;
  bool ok = false;  // every count is 2 and degree == n_G
};
// For every P in the B6 class of K_G, count the representations containing P.
PairingResult maximal_pairing_check(const std::vector<GroupSet>& reps, const SubgroupCatalogEntry& entry,
                                    const GGraph& g);

// Partition of the vertices into blocks of pairwise adjacent vertices. Each
// block is the unique maximum clique through its smallest vertex. Throws
// NoPartition when that clique is not unique, overlaps an earlier block or
// the blocks differ in size.
std::vector<std::vector<std::size_t>> clique_decomposition(const IntMatrix& adjacency);

struct NullGraphResult {
  std::array<bool, 2> within_class_empty{false, false};
  std::size_t edges = 0;
  std::size_t conjugators_checked = 0;
  bool all_conjugators_det_minus_one = false;
  bool ok() const { return within_class_empty[0] && within_class_empty[1] && all_conjugators_det_minus_one; }
};
// The G-graph restricted to each B6+ class is empty, and for every edge all
// conjugating elements of B6 have determinant -1.
NullGraphResult b6plus_nullgraph_check(const RepCatalog& catalog, const GGraph& g, const GroupSet& b6, int jobs = 1);

// m h1 m^-1 = h2 and m p m^-1 = p.
bool is_normalizer_witness(const SignedPerm& m, const GroupSet& h1, const GroupSet& h2, const GroupSet& p);
// Smallest element of N_ambient(p) conjugating h1 onto h2; throws WitnessNotFound.
SignedPerm normalizer_witness(const GroupSet& h1, const GroupSet& h2, const GroupSet& p, const GroupSet& ambient,
                              int jobs = 1);

}  // namespace hexoct
