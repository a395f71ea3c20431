#pragma once

// Classification of the subgroups of B6 isomorphic to the icosahedral group.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hexoct/character.hpp"
#include "hexoct/group_set.hpp"

namespace hexoct {

enum class IsoType {
  Cryst,   // T1 + T2
  Perm,    // 2A + G
  Exotic,  // A + H
};
const char* iso_type_name(IsoType t);

struct IcosaRep {
  GroupSet group;
  SignedPerm g2;
  SignedPerm g3;
  CharacterVector character;
  IsoType iso_type = IsoType::Cryst;
};

// Validates the generating pair, computes the character and its type.
IcosaRep make_icosa_rep(GroupSet group, const SignedPerm& g2, const SignedPerm& g3);
IcosaRep make_icosa_rep(const SignedPerm& g2, const SignedPerm& g3);

// The reference crystallographic representation, generated by the images of
// sigma(g2) = (1,6)(2,5)(3,9)(4,10)(7,12)(8,11) and
// sigma(g3) = (1,5,6)(2,9,4)(7,11,12)(3,10,8) in B6.
IcosaRep build_ihat();
// Representative of the second B6+ class of crystallographic representations.
IcosaRep build_khat();
// The representation sharing the D10 subgroup of Ihat that is conjugate to
// Ihat by diag(1,-1,1,1,1,1).
IcosaRep build_h0();
IntMat6 h0_conjugator_matrix();

struct PairSearchOptions {
  int jobs = 1;
  // Shuffle both candidate lists before searching (result must not change).
  std::optional<std::uint64_t> shuffle_seed;
};

// Every subgroup of `ambient` isomorphic to A5, found by closing all pairs
// (x, y) with |x| = 2, |y| = 3, |xy| = 5. Results are canonically ordered and
// carry the smallest such pair (by element code) as generators.
std::vector<IcosaRep> find_all_icosahedral_subgroups(const GroupSet& ambient, const PairSearchOptions& opts = {});

struct ClassSummary {
  IsoType iso_type;
  IcosaRep representative;
  std::size_t size;
};

struct RepCatalog {
  // The crystallographic class in B6; cryst_reps[i] describes cryst_class.members[i]
  // with generators conjugated from Ihat by cryst_witness[i].
  SubgroupClass cryst_class;
  std::vector<IcosaRep> cryst_reps;
  std::vector<SignedPerm> cryst_witness;
  // The two B6+ classes (Ihat's first) and each member's class id.
  std::array<SubgroupClass, 2> b6plus_split;
  std::vector<int> b6plus_class_id;
  // One entry per B6 conjugacy class of A5 subgroups, Cryst first.
  std::vector<ClassSummary> classes;
  std::size_t total_a5_subgroups = 0;
};

// Throws IncompleteInput when the search results disagree with the
// conjugation sweep from Ihat or the classes do not partition the input.
RepCatalog classify(const std::vector<IcosaRep>& reps, const GroupSet& b6, const GroupSet& b6_plus, int jobs = 1);

// An element of the full icosahedral group realised as m (x) s, s = +-1.
struct IhElement {
  SignedPerm m;
  int sign = 1;

  int trace() const { return sign * m.trace(); }
  IntMat6 matrix() const;
  friend IhElement operator*(const IhElement& a, const IhElement& b) { return {a.m * b.m, a.sign * b.sign}; }
  friend bool operator==(const IhElement&, const IhElement&) = default;
  friend auto operator<=>(const IhElement& a, const IhElement& b) {
    if (auto c = a.m <=> b.m; c != 0) return c;
    return a.sign <=> b.sign;
  }
};

std::vector<IhElement> build_ih_rep(const IcosaRep& h);

// Some g in ambient with g h1 g^-1 = h2; throws NotConjugate otherwise.
SignedPerm equivalence_witness(const IcosaRep& h1, const IcosaRep& h2, const GroupSet& ambient);

}  // namespace hexoct
