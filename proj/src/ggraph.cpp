#include "hexoct/ggraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "hexoct/error.hpp"
#include "hexoct/parallel.hpp"

namespace hexoct {

namespace {

std::size_t intersection_size(const GroupSet& a, const GroupSet& b) {
  std::size_t n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_list(const IntMatrix& a) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i][j]) edges.emplace_back(i, j);
  return edges;
}

}  // namespace

IntMatrix subgroup_matrix(const std::vector<GroupSet>& reps, int jobs) {
  const std::size_t n = reps.size();
  IntMatrix s(n, std::vector<std::int64_t>(n, 0));
  parallel_for(n, jobs, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t j = 0; j < n; ++j) s[i][j] = static_cast<std::int64_t>(intersection_size(reps[i], reps[j]));
  });
  return s;
}

std::vector<std::size_t> vertex_star(const std::vector<GroupSet>& reps, std::size_t i, std::size_t g_order) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < reps.size(); ++j)
    if (j != i && intersection_size(reps[i], reps[j]) == g_order) out.push_back(j);
  return out;
}

GGraph build_ggraph(const IntMatrix& s, SubgroupName subgroup) {
  GGraph g;
  g.subgroup = subgroup;
  g.subgroup_order = facts(subgroup).order;
  const std::size_t n = s.size();
  g.adjacency.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && s[i][j] == g.subgroup_order) g.adjacency[i][j] = 1;
  return g;
}

GGraph build_ggraph(const std::vector<GroupSet>& reps, SubgroupName subgroup, int jobs) {
  return build_ggraph(subgroup_matrix(reps, jobs), subgroup);
}

bool edges_in_class(const std::vector<GroupSet>& reps, const GGraph& g, const SubgroupCatalogEntry& entry) {
  for (auto [i, j] : edge_list(g.adjacency))
    if (!entry.b6_class.find(intersect(reps[i], reps[j]))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> connected_components(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      comp.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (a[v][w] && !seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool triangle_free(const IntMatrix& a) {
  const std::size_t n = a.size();
  // (A^3)_ii = sum_{j,k} A_ij A_jk A_ki
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t closed = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) closed += a[i][j] * a[j][k] * a[k][i];
    }
    if (closed != 0) return false;
  }
  return true;
}

std::vector<bool> bipartite_components(const IntMatrix& a, const std::vector<std::vector<std::size_t>>& comps) {
  const std::size_t n = a.size();
  std::vector<int> colour(n, -1);
  std::vector<bool> out;
  for (const auto& comp : comps) {
    bool ok = true;
    std::queue<std::size_t> q;
    colour[comp.front()] = 0;
    q.push(comp.front());
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t w = 0; w < n; ++w) {
        if (!a[v][w]) continue;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          ok = false;
        }
      }
    }
    out.push_back(ok);
  }
  return out;
}

SpectrumReport spectrum(const GGraph& g, int jobs) {
  SpectrumReport r;
  r.eigenvalues = integer_spectrum(g.adjacency, jobs);
  r.degree = r.eigenvalues.empty() ? 0 : r.eigenvalues.rbegin()->first;
  r.regular = std::all_of(g.adjacency.begin(), g.adjacency.end(), [&](const std::vector<std::int64_t>& row) {
    std::int64_t s = 0;
    for (auto v : row) s += v;
    return s == r.degree;
  });
  for (const auto& [lambda, m] : r.eigenvalues) {
    r.trace += lambda * m;
    r.trace_sq += lambda * lambda * m;
  }
  r.components = connected_components(g.adjacency);
  r.triangle_free = triangle_free(g.adjacency);
  r.bipartite = bipartite_components(g.adjacency, r.components);
  return r;
}

PairingResult maximal_pairing_check(const std::vector<GroupSet>& reps, const SubgroupCatalogEntry& entry,
                                    const GGraph& g) {
  PairingResult res;
  res.class_size = entry.b6_class.size();
  for (const auto& p : entry.b6_class.members) {
    int count = 0;
    for (const auto& h : reps)
      if (p.is_subset_of(h)) ++count;
    ++res.containment_counts[count];
  }
  std::int64_t deg = 0;
  if (!g.adjacency.empty())
    for (auto v : g.adjacency[0]) deg += v;
  res.degree = static_cast<int>(deg);
  res.ok = res.containment_counts.size() == 1 && res.containment_counts.begin()->first == 2 && res.degree == entry.n_g;
  return res;
}

std::vector<std::vector<std::size_t>> clique_decomposition(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    std::vector<std::size_t> nbrs;
    for (std::size_t w = 0; w < n; ++w)
      if (a[v][w]) nbrs.push_back(w);

    // Bron-Kerbosch with pivoting, restricted to the neighbourhood of v.
    std::vector<std::vector<std::size_t>> best;
    std::size_t best_size = 0;
    std::function<void(std::vector<std::size_t>&, std::vector<std::size_t>, std::vector<std::size_t>)> bk =
        [&](std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
          if (p.empty() && x.empty()) {
            if (r.size() > best_size) {
              best_size = r.size();
              best.clear();
            }
            if (r.size() == best_size) best.push_back(r);
            return;
          }
          std::size_t pivot = p.empty() ? x.front() : p.front();
          std::vector<std::size_t> candidates;
          for (auto u : p)
            if (!a[pivot][u]) candidates.push_back(u);
          for (auto u : candidates) {
            std::vector<std::size_t> p2, x2;
            for (auto w : p)
              if (a[u][w]) p2.push_back(w);
            for (auto w : x)
              if (a[u][w]) x2.push_back(w);
            r.push_back(u);
            bk(r, std::move(p2), std::move(x2));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), u));
            x.push_back(u);
          }
        };
    std::vector<std::size_t> r{v};
    bk(r, nbrs, {});

    if (best.size() != 1)
      throw NoPartition("vertex " + std::to_string(v) + " lies in " + std::to_string(best.size()) +
                        " maximum cliques of size " + std::to_string(best_size));
    auto block = best.front();
    std::sort(block.begin(), block.end());
    for (auto u : block) {
      if (assigned[u]) throw NoPartition("clique through vertex " + std::to_string(v) + " overlaps an earlier block");
      assigned[u] = true;
    }
    if (!blocks.empty() && block.size() != blocks.front().size())
      throw NoPartition("blocks of sizes " + std::to_string(blocks.front().size()) + " and " +
                        std::to_string(block.size()));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

NullGraphResult b6plus_nullgraph_check(const RepCatalog& catalog, const GGraph& g, const GroupSet& b6, int jobs) {
  NullGraphResult res;
  res.within_class_empty = {true, true};
  const auto edges = edge_list(g.adjacency);
  res.edges = edges.size();
  for (auto [i, j] : edges) {
    const int ci = catalog.b6plus_class_id[i];
    if (ci == catalog.b6plus_class_id[j]) res.within_class_empty[ci] = false;
  }
  const auto& members = catalog.cryst_class.members;
  std::vector<std::size_t> checked(std::max(1, jobs), 0);
  std::vector<char> bad(std::max(1, jobs), 0);
  parallel_for(edges.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t w) {
    for (std::size_t k = b; k < e; ++k) {
      const auto conj = all_conjugators(members[edges[k].first], members[edges[k].second], b6);
      checked[w] += conj.size();
      if (conj.empty()) bad[w] = 1;
      for (const auto& m : conj)
        if (m.determinant() != -1) bad[w] = 1;
    }
  });
  for (auto c : checked) res.conjugators_checked += c;
  res.all_conjugators_det_minus_one = std::none_of(bad.begin(), bad.end(), [](char c) { return c != 0; });
  return res;
}

bool is_normalizer_witness(const SignedPerm& m, const GroupSet& h1, const GroupSet& h2, const GroupSet& p) {
  return conjugate_subgroup(h1, m) == h2 && conjugate_subgroup(p, m) == p;
}

SignedPerm normalizer_witness(const GroupSet& h1, const GroupSet& h2, const GroupSet& p, const GroupSet& ambient,
                              int jobs) {
  for (const auto& m : normalizer(p, ambient, jobs))
    if (conjugate_subgroup(h1, m) == h2) return m;
  throw WitnessNotFound("no element of the normaliser conjugates the two representations");
}

}  // namespace hexoct
