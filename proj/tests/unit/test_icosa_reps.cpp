#include <doctest.h>

#include <algorithm>
#include <set>

#include "hexoct/error.hpp"
#include "hexoct/icosa_reps.hpp"

using namespace hexoct;

namespace {

// The unsigned permutation matrices, a copy of S6 inside B6.
GroupSet s6() {
  std::vector<SignedPerm> v;
  for (const auto& x : enumerate_b6())
    if (x.signs() == std::array<std::uint8_t, kDim>{}) v.push_back(x);
  return GroupSet(v);
}

}  // namespace

TEST_CASE("reference representations") {
  const IcosaRep ihat = build_ihat();
  CHECK(ihat.group.size() == 60);
  CHECK(ihat.iso_type == IsoType::Cryst);
  CHECK(ihat.g2.order() == 2);
  CHECK(ihat.g3.order() == 3);
  CHECK((ihat.g2 * ihat.g3).order() == 5);
  CHECK(order_census(ihat.group) == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
  for (const auto& x : ihat.group) CHECK(x.determinant() == 1);

  const IcosaRep khat = build_khat();
  CHECK(khat.iso_type == IsoType::Cryst);
  CHECK(khat.group != ihat.group);

  const IcosaRep h0 = build_h0();
  CHECK(h0.iso_type == IsoType::Cryst);
  CHECK(intersect(ihat.group, h0.group).size() == 10);
  const SignedPerm m = from_matrix(h0_conjugator_matrix());
  CHECK(m.determinant() == -1);
  CHECK(conjugate_subgroup(ihat.group, m) == h0.group);
}

TEST_CASE("make_icosa_rep rejects bad generators") {
  const IcosaRep ihat = build_ihat();
  CHECK_THROWS_AS(make_icosa_rep(ihat.g3, ihat.g2), BadGenerators);
  CHECK_THROWS_AS(make_icosa_rep(ihat.g2, ihat.g2), BadGenerators);
  // Commuting elements of orders 2 and 3 generate only C6.
  CHECK_THROWS_AS(make_icosa_rep(SignedPerm::parse("[000000|(1 2)]"), SignedPerm::parse("[000000|(3 4 5)]")),
                  BadGenerators);
}

TEST_CASE("A5 subgroups of S6: two classes of six") {
  const GroupSet sym = s6();
  REQUIRE(sym.size() == 720);
  const auto reps = find_all_icosahedral_subgroups(sym);
  CHECK(reps.size() == 12);
  int perm = 0, exotic = 0;
  for (const auto& r : reps) {
    CHECK(r.group.size() == 60);
    CHECK(is_icosahedral(r.group));
    if (r.iso_type == IsoType::Perm) ++perm;
    if (r.iso_type == IsoType::Exotic) ++exotic;
  }
  // Point stabilisers give 1 + (1 + G); the transitive copies give A + H.
  CHECK(perm == 6);
  CHECK(exotic == 6);
  CHECK(std::is_sorted(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.group < b.group; }));

  const auto shuffled = find_all_icosahedral_subgroups(sym, {2, 12345});
  REQUIRE(shuffled.size() == reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(shuffled[i].group == reps[i].group);
    CHECK(shuffled[i].g2 == reps[i].g2);
    CHECK(shuffled[i].g3 == reps[i].g3);
  }
}

TEST_CASE("ambient without A5 subgroups") {
  const GroupSet small = closure(std::vector<SignedPerm>{SignedPerm::parse("[000000|(1 2 3)]")});
  CHECK(find_all_icosahedral_subgroups(small).empty());
}

TEST_CASE("full icosahedral group") {
  const IcosaRep ihat = build_ihat();
  const auto ih = build_ih_rep(ihat);
  CHECK(ih.size() == 120);
  std::set<std::pair<std::uint16_t, int>> keys;
  for (const auto& e : ih) keys.insert({e.m.code(), e.sign});
  for (int i = 0; i < 120; i += 7)
    for (int j = 0; j < 120; j += 11) {
      const IhElement p = ih[i] * ih[j];
      CHECK(keys.count({p.m.code(), p.sign}) == 1);
      CHECK(p.matrix() == ih[i].matrix() * ih[j].matrix());
    }
  // -I appears exactly once, as (e, -1).
  int minus_identity = 0;
  for (const auto& e : ih)
    if (e.trace() == -6) ++minus_identity;
  CHECK(minus_identity == 1);
}

TEST_CASE("equivalence witness") {
  const GroupSet b6 = enumerate_b6();
  const IcosaRep ihat = build_ihat(), h0 = build_h0();
  const SignedPerm g = equivalence_witness(ihat, h0, b6);
  CHECK(conjugate_subgroup(ihat.group, g) == h0.group);
  CHECK(equivalence_witness(ihat, ihat, b6).is_identity());
  CHECK_THROWS_AS(equivalence_witness(ihat, h0, enumerate_b6_plus()), NotConjugate);
}
