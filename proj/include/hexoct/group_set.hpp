#pragma once

// Finite subgroups of B6 stored as canonically sorted element lists, and the
// subgroup-level operations built on them (closure, conjugation, classes,
// normalisers, intersections).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hexoct/signed_perm.hpp"

namespace hexoct {

class GroupSet {
 public:
  GroupSet() = default;
  // Sorts and deduplicates; closure is not checked (see is_group()).
  explicit GroupSet(std::vector<SignedPerm> elements);

  const std::vector<SignedPerm>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const SignedPerm& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const SignedPerm& x) const;
  bool is_subset_of(const GroupSet& other) const;
  // Nonempty, contains identity, closed under products and inverses.
  bool is_group() const;
  std::uint64_t fingerprint() const;

  // Newline-delimited element notation in canonical order.
  std::string serialize() const;
  static GroupSet deserialize(std::string_view text);

  friend bool operator==(const GroupSet& a, const GroupSet& b) { return a.elements_ == b.elements_; }
  friend auto operator<=>(const GroupSet& a, const GroupSet& b) { return a.elements_ <=> b.elements_; }

 private:
  std::vector<SignedPerm> elements_;
};

struct GroupSetHash {
  std::size_t operator()(const GroupSet& g) const { return static_cast<std::size_t>(g.fingerprint()); }
};

struct SubgroupClass {
  GroupSet representative;
  std::vector<GroupSet> members;  // distinct, canonically ordered

  std::size_t size() const { return members.size(); }
  // Index of `h` in members, if present.
  std::optional<std::size_t> find(const GroupSet& h) const;
};

GroupSet enumerate_b6();
GroupSet enumerate_b6_plus();

// The wreath-product generators alpha, beta, gamma of B6.
std::vector<SignedPerm> b6_generators();
// The four S12 generators of B6+ mapped into B6.
std::vector<SignedPerm> b6_plus_generators();

// Smallest subgroup containing `generators`. An empty list gives the trivial group.
GroupSet closure(std::span<const SignedPerm> generators);
// As closure(), but gives up and returns nullopt once more than `max_size`
// elements have been reached.
std::optional<GroupSet> bounded_closure(std::span<const SignedPerm> generators, std::size_t max_size);

GroupSet conjugate_subgroup(const GroupSet& h, const SignedPerm& g);
GroupSet intersect(const GroupSet& a, const GroupSet& b);

// All distinct g h g^-1 for g in ambient, by a full conjugation sweep.
SubgroupClass conjugacy_class_of_subgroup(const GroupSet& h, const GroupSet& ambient, int jobs = 1);
GroupSet normalizer(const GroupSet& h, const GroupSet& ambient, int jobs = 1);
// Some g in ambient with g a g^-1 = b, scanning ambient in canonical order.
std::optional<SignedPerm> find_conjugator(const GroupSet& a, const GroupSet& b, const GroupSet& ambient);
// Every g in ambient with g a g^-1 = b.
std::vector<SignedPerm> all_conjugators(const GroupSet& a, const GroupSet& b, const GroupSet& ambient);

// element order -> count
std::map<int, int> order_census(const GroupSet& h);
bool is_icosahedral(const GroupSet& h);

// Conjugacy classes of elements of h (each sorted, classes ordered by their
// smallest element).
std::vector<std::vector<SignedPerm>> element_classes(const GroupSet& h);

}  // namespace hexoct
