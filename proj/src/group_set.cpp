#include "hexoct/group_set.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "hexoct/error.hpp"
#include "hexoct/parallel.hpp"

namespace hexoct {

namespace {

// Greedy generating set: walk h in canonical order and keep every element
// not already in the closure of those kept so far.
std::vector<SignedPerm> generating_set(const GroupSet& h) {
  std::vector<SignedPerm> gens;
  GroupSet current = closure({});
  for (const auto& x : h) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = closure(gens);
    if (current.size() == h.size()) break;
  }
  return gens;
}

bool conjugates_into(const std::vector<SignedPerm>& gens, const SignedPerm& g, const SignedPerm& g_inv,
                     const GroupSet& target) {
  for (const auto& s : gens)
    if (!target.contains(g * s * g_inv)) return false;
  return true;
}

}  // namespace

GroupSet::GroupSet(std::vector<SignedPerm> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool GroupSet::contains(const SignedPerm& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool GroupSet::is_subset_of(const GroupSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

bool GroupSet::is_group() const {
  if (elements_.empty() || !elements_.front().is_identity()) return false;
  for (const auto& x : elements_) {
    if (!contains(x.inverse())) return false;
    for (const auto& y : elements_)
      if (!contains(x * y)) return false;
  }
  return true;
}

std::uint64_t GroupSet::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& x : elements_) {
    h ^= x.code();
    h *= 1099511628211ULL;
  }
  return h ^ elements_.size();
}

std::string GroupSet::serialize() const {
  std::string out;
  out.reserve(elements_.size() * 24);
  for (const auto& x : elements_) {
    out += x.to_string();
    out += '\n';
  }
  return out;
}

GroupSet GroupSet::deserialize(std::string_view text) {
  std::vector<SignedPerm> elems;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) elems.push_back(SignedPerm::parse(line));
    pos = nl + 1;
  }
  return GroupSet(std::move(elems));
}

std::optional<std::size_t> SubgroupClass::find(const GroupSet& h) const {
  auto it = std::lower_bound(members.begin(), members.end(), h);
  if (it == members.end() || *it != h) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

GroupSet enumerate_b6() {
  std::vector<SignedPerm> all;
  all.reserve(kOrderB6);
  for (int c = 0; c < kOrderB6; ++c) all.push_back(SignedPerm::from_code(static_cast<std::uint16_t>(c)));
  return GroupSet(std::move(all));
}

GroupSet enumerate_b6_plus() {
  std::vector<SignedPerm> plus;
  plus.reserve(kOrderB6 / 2);
  for (int c = 0; c < kOrderB6; ++c) {
    auto x = SignedPerm::from_code(static_cast<std::uint16_t>(c));
    if (x.determinant() == 1) plus.push_back(x);
  }
  return GroupSet(std::move(plus));
}

std::vector<SignedPerm> b6_generators() {
  return {
      SignedPerm({0, 0, 0, 0, 0, 0}, Perm6::parse("(1,2)")),
      SignedPerm({0, 0, 0, 0, 0, 0}, Perm6::parse("(1,2,3,4,5,6)")),
      SignedPerm({0, 0, 0, 0, 0, 1}, Perm6::identity()),
  };
}

std::vector<SignedPerm> b6_plus_generators() {
  return {
      from_s12(Perm12::parse("(1,2,6,4,3)(7,8,12,10,9)")),
      from_s12(Perm12::parse("(5,11)(6,12)")),
      from_s12(Perm12::parse("(1,2,6,5,3)(7,8,12,11,9)")),
      from_s12(Perm12::parse("(5,12,11,6)")),
  };
}

std::optional<GroupSet> bounded_closure(std::span<const SignedPerm> generators, std::size_t max_size) {
  thread_local std::vector<std::uint8_t> mark(kOrderB6, 0);
  std::vector<SignedPerm> found{SignedPerm()};
  mark[0] = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < found.size() && !overflow; ++i) {
    for (const auto& s : generators) {
      SignedPerm p = found[i] * s;
      if (mark[p.code()]) continue;
      mark[p.code()] = 1;
      found.push_back(p);
      if (found.size() > max_size) {
        overflow = true;
        break;
      }
    }
  }
  for (const auto& x : found) mark[x.code()] = 0;
  if (overflow) return std::nullopt;
  return GroupSet(std::move(found));
}

GroupSet closure(std::span<const SignedPerm> generators) {
  return *bounded_closure(generators, kOrderB6);
}

GroupSet conjugate_subgroup(const GroupSet& h, const SignedPerm& g) {
  const SignedPerm g_inv = g.inverse();
  std::vector<SignedPerm> out;
  out.reserve(h.size());
  for (const auto& x : h) out.push_back(g * x * g_inv);
  return GroupSet(std::move(out));
}

GroupSet intersect(const GroupSet& a, const GroupSet& b) {
  std::vector<SignedPerm> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return GroupSet(std::move(out));
}

SubgroupClass conjugacy_class_of_subgroup(const GroupSet& h, const GroupSet& ambient, int jobs) {
  std::vector<std::vector<GroupSet>> partial(std::max(1, jobs));
  parallel_for(ambient.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t w) {
    std::unordered_set<GroupSet, GroupSetHash> seen;
    for (std::size_t i = b; i < e; ++i) {
      GroupSet c = conjugate_subgroup(h, ambient[i]);
      if (seen.insert(c).second) partial[w].push_back(std::move(c));
    }
  });
  SubgroupClass cls;
  cls.representative = h;
  for (auto& p : partial)
    for (auto& g : p) cls.members.push_back(std::move(g));
  std::sort(cls.members.begin(), cls.members.end());
  cls.members.erase(std::unique(cls.members.begin(), cls.members.end()), cls.members.end());
  return cls;
}

GroupSet normalizer(const GroupSet& h, const GroupSet& ambient, int jobs) {
  const auto gens = generating_set(h);
  std::vector<std::vector<SignedPerm>> partial(std::max(1, jobs));
  parallel_for(ambient.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t w) {
    for (std::size_t i = b; i < e; ++i) {
      const auto& g = ambient[i];
      if (conjugates_into(gens, g, g.inverse(), h)) partial[w].push_back(g);
    }
  });
  std::vector<SignedPerm> all;
  for (auto& p : partial) all.insert(all.end(), p.begin(), p.end());
  return GroupSet(std::move(all));
}

std::optional<SignedPerm> find_conjugator(const GroupSet& a, const GroupSet& b, const GroupSet& ambient) {
  if (a.size() != b.size()) return std::nullopt;
  const auto gens = generating_set(a);
  for (const auto& g : ambient)
    if (conjugates_into(gens, g, g.inverse(), b)) return g;
  return std::nullopt;
}

std::vector<SignedPerm> all_conjugators(const GroupSet& a, const GroupSet& b, const GroupSet& ambient) {
  std::vector<SignedPerm> out;
  if (a.size() != b.size()) return out;
  const auto gens = generating_set(a);
  for (const auto& g : ambient)
    if (conjugates_into(gens, g, g.inverse(), b)) out.push_back(g);
  return out;
}

std::map<int, int> order_census(const GroupSet& h) {
  std::map<int, int> census;
  for (const auto& x : h) ++census[x.order()];
  return census;
}

bool is_icosahedral(const GroupSet& h) {
  static const std::map<int, int> kA5Census{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  if (h.size() != 60 || order_census(h) != kA5Census) return false;
  SignedPerm involution;
  for (const auto& x : h)
    if (x.order() == 2) {
      involution = x;
      break;
    }
  for (const auto& y : h) {
    if (y.order() != 3 || (involution * y).order() != 5) continue;
    const SignedPerm gens[] = {involution, y};
    return closure(gens) == h;
  }
  return false;
}

std::vector<std::vector<SignedPerm>> element_classes(const GroupSet& h) {
  std::vector<std::vector<SignedPerm>> classes;
  std::vector<bool> assigned(h.size(), false);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<SignedPerm> cls;
    for (const auto& g : h) cls.push_back(conjugate(h[i], g));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (const auto& x : cls) {
      auto it = std::lower_bound(h.begin(), h.end(), x);
      assigned[it - h.begin()] = true;
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace hexoct
