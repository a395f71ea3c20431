#include "hexoct/icosa_reps.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hexoct/error.hpp"
#include "hexoct/parallel.hpp"

namespace hexoct {

namespace {

bool has_order_five(const SignedPerm& z) {
  if (z.is_identity()) return false;
  SignedPerm p = z * z;
  p = p * p * z;
  return p.is_identity();
}

IsoType iso_type_of(const Multiplicities& m) {
  using enum IcoIrrep;
  auto at = [&](IcoIrrep r) { return m[static_cast<int>(r)]; };
  if (at(A) == 0 && at(T1) == 1 && at(T2) == 1 && at(G) == 0 && at(H) == 0) return IsoType::Cryst;
  if (at(A) == 2 && at(T1) == 0 && at(T2) == 0 && at(G) == 1 && at(H) == 0) return IsoType::Perm;
  if (at(A) == 1 && at(T1) == 0 && at(T2) == 0 && at(G) == 0 && at(H) == 1) return IsoType::Exotic;
  throw NotACharacter("unexpected 6D decomposition " + format_decomposition(m));
}

// Lexicographically smallest (x, y) with |x| = 2, |y| = 3, |xy| = 5.
std::pair<SignedPerm, SignedPerm> canonical_pair(const GroupSet& h) {
  std::vector<SignedPerm> twos, threes;
  for (const auto& x : h) {
    int o = x.order();
    if (o == 2) twos.push_back(x);
    else if (o == 3) threes.push_back(x);
  }
  for (const auto& x : twos)
    for (const auto& y : threes)
      if (has_order_five(x * y)) return {x, y};
  throw BadGenerators("group has no (2,3,5) generating pair");
}

}  // namespace

const char* iso_type_name(IsoType t) {
  switch (t) {
    case IsoType::Cryst: return "T1+T2";
    case IsoType::Perm: return "2A+G";
    case IsoType::Exotic: return "A+H";
  }
  return "?";
}

IcosaRep make_icosa_rep(GroupSet group, const SignedPerm& g2, const SignedPerm& g3) {
  IcosaRep rep;
  rep.character = character_vector(group, g2, g3);
  rep.iso_type = iso_type_of(decompose_character(rep.character));
  rep.group = std::move(group);
  rep.g2 = g2;
  rep.g3 = g3;
  return rep;
}

IcosaRep make_icosa_rep(const SignedPerm& g2, const SignedPerm& g3) {
  const SignedPerm gens[] = {g2, g3};
  GroupSet group = closure(gens);
  if (group.size() != 60) throw BadGenerators("generators do not close to a group of order 60");
  return make_icosa_rep(std::move(group), g2, g3);
}

IcosaRep build_ihat() {
  return make_icosa_rep(from_s12(Perm12::parse("(1,6)(2,5)(3,9)(4,10)(7,12)(8,11)")),
                        from_s12(Perm12::parse("(1,5,6)(2,9,4)(7,11,12)(3,10,8)")));
}

IcosaRep build_khat() {
  return make_icosa_rep(from_matrix(IntMat6::from_rows({{0, 1, 0, 0, 0, 0},
                                                        {1, 0, 0, 0, 0, 0},
                                                        {0, 0, -1, 0, 0, 0},
                                                        {0, 0, 0, 0, 0, 1},
                                                        {0, 0, 0, 0, -1, 0},
                                                        {0, 0, 0, 1, 0, 0}})),
                        from_matrix(IntMat6::from_rows({{0, 0, 0, 1, 0, 0},
                                                        {1, 0, 0, 0, 0, 0},
                                                        {0, 0, 0, 0, 0, -1},
                                                        {0, 1, 0, 0, 0, 0},
                                                        {0, 0, -1, 0, 0, 0},
                                                        {0, 0, 0, 0, 1, 0}})));
}

IcosaRep build_h0() {
  return make_icosa_rep(from_matrix(IntMat6::from_rows({{0, 0, 0, 0, -1, 0},
                                                        {0, 0, 0, 1, 0, 0},
                                                        {0, 0, -1, 0, 0, 0},
                                                        {0, 1, 0, 0, 0, 0},
                                                        {-1, 0, 0, 0, 0, 0},
                                                        {0, 0, 0, 0, 0, -1}})),
                        from_matrix(IntMat6::from_rows({{0, 0, 0, 0, -1, 0},
                                                        {0, 0, -1, 0, 0, 0},
                                                        {0, 0, 0, 0, 0, 1},
                                                        {1, 0, 0, 0, 0, 0},
                                                        {0, 0, 0, -1, 0, 0},
                                                        {0, -1, 0, 0, 0, 0}})));
}

IntMat6 h0_conjugator_matrix() {
  IntMat6 m = IntMat6::identity();
  m.entries[1][1] = -1;
  return m;
}

std::vector<IcosaRep> find_all_icosahedral_subgroups(const GroupSet& ambient, const PairSearchOptions& opts) {
  std::vector<SignedPerm> twos, threes;
  for (const auto& x : ambient) {
    int o = x.order();
    if (o == 2) twos.push_back(x);
    else if (o == 3) threes.push_back(x);
  }
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed);
    std::shuffle(twos.begin(), twos.end(), rng);
    std::shuffle(threes.begin(), threes.end(), rng);
  }

  const int jobs = std::max(1, opts.jobs);
  std::vector<std::vector<GroupSet>> found(jobs);
  parallel_for(twos.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t w) {
    auto& mine = found[w];
    // element code -> indices into `mine` of groups containing it
    std::vector<std::vector<std::uint32_t>> containing(kOrderB6);
    for (std::size_t i = b; i < e; ++i) {
      const SignedPerm& x = twos[i];
      std::vector<std::uint32_t> with_x = containing[x.code()];
      for (const auto& y : threes) {
        if (!has_order_five(x * y)) continue;
        // an A5 holding x and y is generated by them, so the closure is known
        bool known = std::any_of(with_x.begin(), with_x.end(),
                                 [&](std::uint32_t id) { return mine[id].contains(y); });
        if (known) continue;
        const SignedPerm gens[] = {x, y};
        auto group = bounded_closure(gens, 60);
        if (!group || group->size() != 60) continue;
        auto id = static_cast<std::uint32_t>(mine.size());
        for (const auto& g : *group) containing[g.code()].push_back(id);
        with_x.push_back(id);
        mine.push_back(std::move(*group));
      }
    }
  });

  std::vector<GroupSet> all;
  for (auto& f : found)
    for (auto& g : f) all.push_back(std::move(g));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<IcosaRep> reps;
  reps.reserve(all.size());
  for (auto& g : all) {
    auto [x, y] = canonical_pair(g);
    reps.push_back(make_icosa_rep(std::move(g), x, y));
  }
  return reps;
}

RepCatalog classify(const std::vector<IcosaRep>& reps, const GroupSet& b6, const GroupSet& b6_plus, int jobs) {
  RepCatalog cat;
  cat.total_a5_subgroups = reps.size();
  const IcosaRep ihat = build_ihat();

  // Constructive route: every conjugate of Ihat, with its first conjugator.
  std::map<GroupSet, SignedPerm> sweep;
  for (const auto& g : b6) sweep.try_emplace(conjugate_subgroup(ihat.group, g), g);

  std::set<GroupSet> searched_cryst;
  std::map<IsoType, std::set<GroupSet>> by_type;
  for (const auto& r : reps) {
    if (r.iso_type == IsoType::Cryst) searched_cryst.insert(r.group);
    else by_type[r.iso_type].insert(r.group);
  }
  if (searched_cryst.size() != sweep.size() ||
      !std::equal(searched_cryst.begin(), searched_cryst.end(), sweep.begin(),
                  [](const GroupSet& a, const auto& kv) { return a == kv.first; }))
    throw IncompleteInput("pair search found " + std::to_string(searched_cryst.size()) +
                          " crystallographic groups, conjugation sweep found " + std::to_string(sweep.size()));

  cat.cryst_class.representative = ihat.group;
  for (const auto& [group, g] : sweep) {
    cat.cryst_class.members.push_back(group);
    cat.cryst_witness.push_back(g);
    cat.cryst_reps.push_back(make_icosa_rep(group, conjugate(ihat.g2, g), conjugate(ihat.g3, g)));
  }
  cat.classes.push_back({IsoType::Cryst, ihat, cat.cryst_class.size()});

  for (auto& [type, remaining] : by_type) {
    while (!remaining.empty()) {
      const GroupSet seed = *remaining.begin();
      SubgroupClass cls = conjugacy_class_of_subgroup(seed, b6, jobs);
      for (const auto& m : cls.members)
        if (remaining.erase(m) == 0)
          throw IncompleteInput(std::string("conjugate of a ") + iso_type_name(type) +
                                " subgroup is missing from the search results");
      auto rep_it = std::find_if(reps.begin(), reps.end(), [&](const IcosaRep& r) { return r.group == seed; });
      cat.classes.push_back({type, *rep_it, cls.size()});
    }
  }

  cat.b6plus_split[0] = conjugacy_class_of_subgroup(ihat.group, b6_plus, jobs);
  auto outside = std::find_if(cat.cryst_class.members.begin(), cat.cryst_class.members.end(),
                              [&](const GroupSet& g) { return !cat.b6plus_split[0].find(g); });
  if (outside != cat.cryst_class.members.end()) {
    // prefer the published second representative when it seeds the other class
    GroupSet seed = *outside;
    const GroupSet khat = build_khat().group;
    if (cat.cryst_class.find(khat) && !cat.b6plus_split[0].find(khat)) seed = khat;
    cat.b6plus_split[1] = conjugacy_class_of_subgroup(seed, b6_plus, jobs);
  }
  cat.b6plus_class_id.resize(cat.cryst_class.size(), -1);
  for (std::size_t i = 0; i < cat.cryst_class.size(); ++i) {
    for (int c = 0; c < 2; ++c)
      if (cat.b6plus_split[c].find(cat.cryst_class.members[i])) cat.b6plus_class_id[i] = c;
    if (cat.b6plus_class_id[i] < 0)
      throw IncompleteInput("crystallographic group outside both B6+ classes");
  }
  if (cat.b6plus_split[0].size() + cat.b6plus_split[1].size() != cat.cryst_class.size())
    throw IncompleteInput("B6+ classes do not partition the crystallographic class");
  return cat;
}

IntMat6 IhElement::matrix() const {
  IntMat6 m = to_matrix(this->m);
  if (sign < 0)
    for (auto& row : m.entries)
      for (auto& v : row) v = -v;
  return m;
}

std::vector<IhElement> build_ih_rep(const IcosaRep& h) {
  std::vector<IhElement> out;
  out.reserve(2 * h.group.size());
  for (const auto& m : h.group) {
    out.push_back({m, 1});
    out.push_back({m, -1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedPerm equivalence_witness(const IcosaRep& h1, const IcosaRep& h2, const GroupSet& ambient) {
  if (auto g = find_conjugator(h1.group, h2.group, ambient)) return *g;
  throw NotConjugate("no element of the ambient group conjugates the two representations");
}

}  // namespace hexoct
