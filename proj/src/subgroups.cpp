#include "hexoct/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hexoct/error.hpp"
#include "hexoct/icosa_reps.hpp"

namespace hexoct {

namespace {

SignedPerm mat(std::initializer_list<std::initializer_list<int>> rows) {
  return from_matrix(IntMat6::from_rows(rows));
}

SignedPerm g2_matrix() {
  return mat({{0, 0, 0, 0, 0, 1},
              {0, 0, 0, 0, 1, 0},
              {0, 0, -1, 0, 0, 0},
              {0, 0, 0, -1, 0, 0},
              {0, 1, 0, 0, 0, 0},
              {1, 0, 0, 0, 0, 0}});
}

SignedPerm g2d_matrix() {
  return mat({{0, 0, 0, 0, 0, -1},
              {0, -1, 0, 0, 0, 0},
              {0, 0, 0, 1, 0, 0},
              {0, 0, 1, 0, 0, 0},
              {0, 0, 0, 0, -1, 0},
              {-1, 0, 0, 0, 0, 0}});
}

SignedPerm g3_matrix() {
  return mat({{0, 0, 0, 0, 0, 1},
              {0, 0, 0, 1, 0, 0},
              {0, -1, 0, 0, 0, 0},
              {0, 0, -1, 0, 0, 0},
              {1, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 1, 0}});
}

SignedPerm g3d_matrix() {
  return mat({{0, 1, 0, 0, 0, 0},
              {0, 0, 0, -1, 0, 0},
              {0, 0, 0, 0, 0, -1},
              {-1, 0, 0, 0, 0, 0},
              {0, 0, 1, 0, 0, 0},
              {0, 0, 0, 0, -1, 0}});
}

SignedPerm g5d_matrix() {
  return mat({{0, 0, 0, 0, 0, 1},
              {0, 1, 0, 0, 0, 0},
              {0, 0, 0, 0, -1, 0},
              {-1, 0, 0, 0, 0, 0},
              {0, 0, 0, 1, 0, 0},
              {0, 0, 1, 0, 0, 0}});
}

SignedPerm word(std::string_view element) { return from_s12(icosahedral_permutation(element)); }

// 2cos(2 pi/5) and 2cos(4 pi/5)
QfElem gamma() { return QfElem::tau() - QfElem(1); }
QfElem gamma_prime() { return -QfElem::tau(); }

SmallIrrep by_order(std::string name, const GroupSet& g, std::map<int, QfElem> by) {
  SmallIrrep r{std::move(name), {}};
  for (const auto& x : g) r.values.push_back(by.at(x.order()));
  return r;
}

SmallIrrep trivial_irrep(std::string name, const GroupSet& g) {
  return {std::move(name), std::vector<QfElem>(g.size(), QfElem(1))};
}

// Real 2D characters of a group with a distinguished element r of order 5:
// gamma on r^{+-1}, gamma' on r^{+-2} for E1, swapped for E2.
std::pair<SmallIrrep, SmallIrrep> five_fold_pair(const GroupSet& g, const SignedPerm& r) {
  const SignedPerm r2 = r * r, r3 = r2 * r, r4 = r3 * r;
  SmallIrrep e1{"E1", {}}, e2{"E2", {}};
  for (const auto& x : g) {
    if (x.is_identity()) {
      e1.values.push_back(2);
      e2.values.push_back(2);
    } else if (x == r || x == r4) {
      e1.values.push_back(gamma());
      e2.values.push_back(gamma_prime());
    } else if (x == r2 || x == r3) {
      e1.values.push_back(gamma_prime());
      e2.values.push_back(gamma());
    } else {
      e1.values.push_back(0);
      e2.values.push_back(0);
    }
  }
  return {e1, e2};
}

SignedPerm first_of_order(const std::vector<SignedPerm>& gens, int order) {
  for (const auto& g : gens)
    if (g.order() == order) return g;
  throw BadGenerators("no generator of order " + std::to_string(order));
}

}  // namespace

std::string_view subgroup_name(SubgroupName n) { return facts(n).name; }

std::optional<SubgroupName> parse_subgroup_name(std::string_view text) {
  if (text == "e" || text == "{e}") return SubgroupName::Trivial;
  for (auto n : kAllSubgroups)
    if (subgroup_name(n) == text) return n;
  return std::nullopt;
}

const published::SubgroupFacts& facts(SubgroupName n) { return published::subgroup_facts()[static_cast<int>(n)]; }

bool is_maximal(SubgroupName n) { return n == SubgroupName::T || n == SubgroupName::D10 || n == SubgroupName::D6; }

Perm12 icosahedral_permutation(std::string_view element) {
  static const std::map<std::string_view, std::string_view> table{
      {"g2", "(1,6)(2,5)(3,9)(4,10)(7,12)(8,11)"}, {"g2d", "(1,12)(2,8)(3,4)(5,11)(6,7)(9,10)"},
      {"g3", "(1,5,6)(2,9,4)(7,11,12)(3,10,8)"},   {"g3d", "(1,10,2)(3,5,12)(4,8,7)(6,9,11)"},
      {"g5", "(1,2,3,4,5)(7,8,9,10,11)"},          {"g5d", "(1,10,11,3,6)(4,5,9,12,7)"},
  };
  auto it = table.find(element);
  if (it == table.end()) throw ParseError("unknown icosahedral element '" + std::string(element) + "'");
  return Perm12::parse(it->second);
}

std::vector<SignedPerm> explicit_generators(SubgroupName n) {
  switch (n) {
    case SubgroupName::T: return {g2_matrix(), g3d_matrix()};
    case SubgroupName::D10: return {g2d_matrix(), g5d_matrix()};
    case SubgroupName::D6: return {g2d_matrix(), g3_matrix()};
    case SubgroupName::C5: return {g5d_matrix()};
    case SubgroupName::D4: return {g2d_matrix(), g2_matrix()};
    case SubgroupName::C3: return {g3_matrix()};
    case SubgroupName::C2: return {g2_matrix()};
    case SubgroupName::Trivial: return {};
  }
  return {};
}

std::vector<SignedPerm> word_generators(SubgroupName n) {
  switch (n) {
    case SubgroupName::T: return {word("g2"), word("g3d")};
    case SubgroupName::D10: return {word("g2d"), word("g5d")};
    case SubgroupName::D6: return {word("g2d"), word("g3")};
    case SubgroupName::C5: return {word("g5d")};
    case SubgroupName::D4: return {word("g2d"), word("g2")};
    case SubgroupName::C3: return {word("g3")};
    case SubgroupName::C2: return {word("g2")};
    case SubgroupName::Trivial: return {};
  }
  return {};
}

std::vector<SmallIrrep> small_irreps(SubgroupName n, const GroupSet& g) {
  const auto gens = explicit_generators(n);
  std::vector<SmallIrrep> out;
  switch (n) {
    case SubgroupName::T:
      out.push_back(trivial_irrep("A", g));
      out.push_back(by_order("E", g, {{1, 2}, {2, 2}, {3, -1}}));
      out.push_back(by_order("T", g, {{1, 3}, {2, -1}, {3, 0}}));
      break;
    case SubgroupName::D10: {
      out.push_back(trivial_irrep("A1", g));
      out.push_back(by_order("A2", g, {{1, 1}, {2, -1}, {5, 1}}));
      auto [e1, e2] = five_fold_pair(g, first_of_order(gens, 5));
      out.push_back(e1);
      out.push_back(e2);
      break;
    }
    case SubgroupName::D6:
      out.push_back(trivial_irrep("A1", g));
      out.push_back(by_order("A2", g, {{1, 1}, {2, -1}, {3, 1}}));
      out.push_back(by_order("E", g, {{1, 2}, {2, 0}, {3, -1}}));
      break;
    case SubgroupName::C5: {
      out.push_back(trivial_irrep("A", g));
      auto [e1, e2] = five_fold_pair(g, gens.at(0));
      out.push_back(e1);
      out.push_back(e2);
      break;
    }
    case SubgroupName::D4: {
      const SignedPerm x = gens.at(0), y = gens.at(1), z = x * y;
      out.push_back(trivial_irrep("A", g));
      // signs on (x, y, z)
      const std::array<std::array<int, 3>, 3> signs{{{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
      for (int b = 0; b < 3; ++b) {
        SmallIrrep r{"B" + std::to_string(b + 1), {}};
        for (const auto& e : g) {
          if (e == x) r.values.push_back(signs[b][0]);
          else if (e == y) r.values.push_back(signs[b][1]);
          else if (e == z) r.values.push_back(signs[b][2]);
          else r.values.push_back(1);
        }
        out.push_back(std::move(r));
      }
      break;
    }
    case SubgroupName::C3:
      out.push_back(trivial_irrep("A", g));
      out.push_back(by_order("E", g, {{1, 2}, {3, -1}}));
      break;
    case SubgroupName::C2:
      out.push_back(trivial_irrep("A", g));
      out.push_back(by_order("B", g, {{1, 1}, {2, -1}}));
      break;
    case SubgroupName::Trivial:
      out.push_back(trivial_irrep("A", g));
      break;
  }
  return out;
}

std::string decompose_natural(SubgroupName n, const GroupSet& g) {
  std::string out;
  for (const auto& irrep : small_irreps(n, g)) {
    QfElem num, den;
    for (std::size_t i = 0; i < g.size(); ++i) {
      num += QfElem(g[i].trace()) * irrep.values[i];
      den += irrep.values[i] * irrep.values[i];
    }
    const QfElem m = num / den;
    if (!m.is_integer() || m.sign() < 0)
      throw NotACharacter("multiplicity of " + irrep.name + " is " + m.to_string());
    const long k = m.rational_part().get_num().get_si();
    if (k == 0) continue;
    if (!out.empty()) out += " + ";
    if (k != 1) out += std::to_string(k);
    out += irrep.name;
  }
  return out;
}

std::vector<GroupSet> all_subgroups(const GroupSet& h) {
  std::set<GroupSet> found;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i; j < h.size(); ++j) {
      const SignedPerm gens[] = {h[i], h[j]};
      found.insert(closure(gens));
    }
  return {found.begin(), found.end()};
}

std::vector<SubgroupCatalogEntry> build_subgroup_catalog(const GroupSet& b6, int jobs, bool strict) {
  const IcosaRep ihat = build_ihat();
  const auto subs = all_subgroups(ihat.group);
  auto fail = [&](SubgroupName n, const std::string& what) {
    if (strict) throw CatalogMismatch(std::string(subgroup_name(n)) + ": " + what);
  };

  std::vector<SubgroupCatalogEntry> catalog;
  for (auto n : kAllSubgroups) {
    const auto& pub = facts(n);
    SubgroupCatalogEntry e;
    e.name = n;
    e.generators = explicit_generators(n);
    e.group = closure(e.generators);
    e.order = static_cast<int>(e.group.size());
    if (closure(word_generators(n)) != e.group) fail(n, "explicit generators and generator words differ");
    if (!e.group.is_subset_of(ihat.group)) fail(n, "not a subgroup of the reference representation");
    if (e.order != pub.order) fail(n, "order " + std::to_string(e.order));

    std::vector<GroupSet> same_order;
    for (const auto& s : subs)
      if (s.size() == e.group.size()) same_order.push_back(s);
    e.n_g = static_cast<int>(same_order.size());
    e.friendly = conjugacy_class_of_subgroup(e.group, ihat.group).members == same_order;
    if (!e.friendly) fail(n, "subgroups of this order are not all conjugate");
    if (e.n_g != pub.n_g) fail(n, "n_G " + std::to_string(e.n_g));

    e.b6_class = conjugacy_class_of_subgroup(e.group, b6, jobs);
    if (e.class_size_b6() != pub.class_size_b6) fail(n, "B6 class size " + std::to_string(e.class_size_b6()));

    e.decomposition = decompose_natural(n, e.group);
    if (e.decomposition != pub.decomposition) fail(n, "decomposition " + e.decomposition);
    catalog.push_back(std::move(e));
  }
  return catalog;
}

}  // namespace hexoct
