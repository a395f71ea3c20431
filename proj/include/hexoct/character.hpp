#pragma once

// Characters of 6D representations of the icosahedral group and their
// decomposition into irreducibles.

#include <array>
#include <string>

#include "hexoct/group_set.hpp"
#include "hexoct/qfield.hpp"

namespace hexoct {

// Conjugacy classes of the icosahedral group, in table order.
enum class IcoClass { E = 0, C5 = 1, C5sq = 2, C2 = 3, C3 = 4 };
inline constexpr int kIcoClasses = 5;
inline constexpr std::array<int, kIcoClasses> kIcoClassSizes{1, 12, 12, 15, 20};
const char* ico_class_name(IcoClass c);

enum class IcoIrrep { A = 0, T1 = 1, T2 = 2, G = 3, H = 4 };
inline constexpr int kIcoIrreps = 5;
const char* ico_irrep_name(IcoIrrep r);

// Exact character value of an irrep on a class (tau-valued for T1, T2).
QfElem ico_character(IcoIrrep irrep, IcoClass cls);

struct CharacterVector {
  // Traces at E, g2g3, (g2g3)^2, g2, g3.
  std::array<int, kIcoClasses> values{};

  int operator[](IcoClass c) const { return values[static_cast<int>(c)]; }
  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

using Multiplicities = std::array<int, kIcoIrreps>;
std::string format_decomposition(const Multiplicities& m);

// Throws BadGenerators unless g2, g3 lie in h with |g2| = 2, |g3| = 3, |g2 g3| = 5.
CharacterVector character_vector(const GroupSet& h, const SignedPerm& g2, const SignedPerm& g3);

// m_i = (1/60) sum_c |c| chi(c) chi_i(c); throws NotACharacter unless every
// m_i is a nonnegative integer.
Multiplicities decompose_character(const CharacterVector& cv);

// The abstract class of each element of h (aligned with h's canonical order),
// given a (2,3,5) generating pair. Order-5 elements are split by conjugacy in
// h into the class of g2 g3 and that of (g2 g3)^2.
std::vector<IcoClass> element_class_labels(const GroupSet& h, const SignedPerm& g2, const SignedPerm& g3);

}  // namespace hexoct
