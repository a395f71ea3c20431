#include "hexoct/claims.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hexoct/error.hpp"
#include "hexoct/reference.hpp"

namespace hexoct {

namespace {

void add(std::vector<Claim>& out, std::string id, std::string statement, std::string expected, std::string observed,
         bool pass) {
  out.push_back({std::move(id), std::move(statement), std::move(expected), std::move(observed),
                 pass ? ClaimStatus::Pass : ClaimStatus::Fail});
}

void info(std::vector<Claim>& out, std::string id, std::string statement, std::string observed) {
  out.push_back({std::move(id), std::move(statement), "-", std::move(observed), ClaimStatus::Info});
}

template <class Range>
std::string join(const Range& r, const char* sep = ", ") {
  std::ostringstream ss;
  bool first = true;
  for (const auto& x : r) {
    if (!first) ss << sep;
    ss << x;
    first = false;
  }
  return ss.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string subgroup_id(SubgroupName n) {
  std::string s(subgroup_name(n));
  return s;
}

std::map<std::int64_t, int> published_spectrum(SubgroupName n) {
  std::map<std::int64_t, int> m;
  for (const auto& [l, k] : facts(n).spectrum) m[l] = k;
  return m;
}

std::string component_summary(const std::vector<std::vector<std::size_t>>& comps) {
  std::map<std::size_t, int> by_size;
  for (const auto& c : comps) ++by_size[c.size()];
  std::vector<std::string> parts;
  for (auto it = by_size.rbegin(); it != by_size.rend(); ++it)
    parts.push_back(std::to_string(it->second) + " x " + std::to_string(it->first));
  return join(parts);
}

QfMat h(const SignedPerm& x) { return rep_matrix(x); }

}  // namespace

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Info: return "INFO";
  }
  return "?";
}

std::string format_spectrum(const std::map<std::int64_t, int>& spectrum) {
  std::vector<std::string> parts;
  for (auto it = spectrum.rbegin(); it != spectrum.rend(); ++it)
    parts.push_back(std::to_string(it->first) + "^" + std::to_string(it->second));
  return join(parts, " ");
}

void complete_workspace(Workspace& ws) {
  ws.subgroups = build_subgroup_catalog(ws.b6, ws.jobs, false);
  ws.subgroup_matrix = subgroup_matrix(ws.vertices(), ws.jobs);
  for (auto n : kAllSubgroups) {
    GGraph g = build_ggraph(ws.subgroup_matrix, n);
    ws.spectra[n] = spectrum(g, ws.jobs);
    ws.graphs[n] = std::move(g);
  }
}

Workspace build_workspace(int jobs) {
  Workspace ws;
  ws.jobs = jobs;
  ws.b6 = enumerate_b6();
  ws.b6_plus = enumerate_b6_plus();
  ws.a5 = find_all_icosahedral_subgroups(ws.b6, {jobs, std::nullopt});
  ws.catalog = classify(ws.a5, ws.b6, ws.b6_plus, jobs);
  complete_workspace(ws);
  return ws;
}

std::vector<Claim> group_claims(const Workspace& ws, std::optional<std::uint64_t> seed) {
  std::vector<Claim> out;
  const auto& cat = ws.catalog;

  {
    const GroupSet gen = closure(b6_generators());
    add(out, "b6.order", "closure of the three wreath-product generators is all of B6", "46080",
        std::to_string(gen.size()) + (gen == ws.b6 ? "" : " (differs from the full sweep)"),
        gen.size() == 46080 && gen == ws.b6);
    const GroupSet plus = closure(b6_plus_generators());
    add(out, "b6plus.order", "the four S12 generators of B6+ close to the determinant-one subgroup", "23040",
        std::to_string(plus.size()), plus.size() == 23040 && plus == ws.b6_plus);
  }

  const IcosaRep ihat = build_ihat();
  add(out, "ihat.character", "reference representation has chi(C2) = -2, chi(C3) = 0, type T1 + T2", "-2, 0, T1+T2",
      std::to_string(ihat.character[IcoClass::C2]) + ", " + std::to_string(ihat.character[IcoClass::C3]) + ", " +
          iso_type_name(ihat.iso_type),
      ihat.character[IcoClass::C2] == -2 && ihat.character[IcoClass::C3] == 0 && ihat.iso_type == IsoType::Cryst);

  {
    std::set<std::tuple<std::string, int, int>> seen;
    std::vector<std::string> obs;
    std::size_t total = 0;
    for (const auto& c : cat.classes) {
      const int c2 = c.representative.character[IcoClass::C2], c3 = c.representative.character[IcoClass::C3];
      seen.insert({iso_type_name(c.iso_type), c2, c3});
      obs.push_back(std::string(iso_type_name(c.iso_type)) + " (" + std::to_string(c2) + "," + std::to_string(c3) +
                    ") x" + std::to_string(c.size));
      total += c.size;
    }
    const std::set<std::tuple<std::string, int, int>> want{{"2A+G", 2, 3}, {"T1+T2", -2, 0}, {"A+H", 2, 0}};
    add(out, "a5.classes", "three B6 classes of A5 subgroups with signatures (2,3), (-2,0), (2,0)",
        "2A+G (2,3); T1+T2 (-2,0); A+H (2,0)", join(obs, "; "), cat.classes.size() == 3 && seen == want);
    add(out, "a5.partition", "the three classes partition every A5 subgroup found by the pair search",
        std::to_string(cat.total_a5_subgroups), std::to_string(total), total == cat.total_a5_subgroups);
  }

  add(out, "cryst.class_size", "the crystallographic class has 192 members", "192",
      std::to_string(cat.cryst_class.size()), cat.cryst_class.size() == published::kCrystClassSize);

  {
    std::vector<GroupSet> searched;
    for (const auto& r : ws.a5)
      if (r.iso_type == IsoType::Cryst) searched.push_back(r.group);
    std::sort(searched.begin(), searched.end());
    add(out, "cryst.two_routes", "pair search and conjugation sweep from the reference give the same 192 groups",
        "identical", searched == cat.cryst_class.members ? "identical" : "differ",
        searched == cat.cryst_class.members);
  }

  {
    bool inside = true, same_char = true;
    for (std::size_t i = 0; i < cat.cryst_reps.size(); ++i) {
      const auto& r = cat.cryst_reps[i];
      inside = inside && r.group.is_subset_of(ws.b6_plus) && r.g2.determinant() == 1 && r.g3.determinant() == 1;
      same_char = same_char && r.character == ihat.character;
    }
    add(out, "cryst.in_b6plus", "every crystallographic representation lies in B6+", "all 192", yes_no(inside),
        inside);
    add(out, "cryst.character", "all crystallographic representations have the same character", "identical",
        yes_no(same_char), same_char);
  }

  add(out, "b6plus.split", "in B6+ the crystallographic class splits into two classes of 96", "96 + 96",
      std::to_string(cat.b6plus_split[0].size()) + " + " + std::to_string(cat.b6plus_split[1].size()),
      cat.b6plus_split[0].size() == 96 && cat.b6plus_split[1].size() == 96);

  {
    const IcosaRep khat = build_khat();
    auto ki = cat.cryst_class.find(khat.group);
    auto ii = cat.cryst_class.find(ihat.group);
    const bool separate = ki && ii && cat.b6plus_class_id[*ki] != cat.b6plus_class_id[*ii];
    add(out, "b6plus.khat", "the second published representative lies in the other B6+ class", "different classes",
        separate ? "different classes" : "same class or missing", separate);
    bool not_conj = false;
    try {
      equivalence_witness(ihat, khat, ws.b6_plus);
    } catch (const NotConjugate&) {
      not_conj = true;
    }
    add(out, "b6plus.khat_witness", "no element of B6+ conjugates the two representatives", "NotConjugate",
        not_conj ? "NotConjugate" : "witness found", not_conj);
  }

  if (seed) {
    const auto shuffled = find_all_icosahedral_subgroups(ws.b6, {ws.jobs, *seed});
    bool same = shuffled.size() == ws.a5.size();
    for (std::size_t i = 0; same && i < shuffled.size(); ++i) same = shuffled[i].group == ws.a5[i].group;
    add(out, "a5.shuffled_search", "pair search with shuffled candidate order (seed " + std::to_string(*seed) + ")",
        "same groups", same ? "same groups" : "differs", same);
  }

  {
    const auto ih = build_ih_rep(ihat);
    int full_trace = 0;
    for (const auto& e : ih)
      if (std::abs(e.trace()) == 6) ++full_trace;
    add(out, "ih.order", "the full icosahedral group built as H (x) {1,-1} has 120 elements, two with trace +-6",
        "120, 2", std::to_string(ih.size()) + ", " + std::to_string(full_trace), ih.size() == 120 && full_trace == 2);
  }
  return out;
}

std::vector<Claim> subgroup_claims(const Workspace& ws) {
  std::vector<Claim> out;
  std::vector<std::string> sizes, want_sizes, ng, want_ng;
  const SubgroupName table3_order[] = {SubgroupName::T,  SubgroupName::D10, SubgroupName::D6, SubgroupName::D4,
                                       SubgroupName::C5, SubgroupName::C3,  SubgroupName::C2};
  for (auto n : table3_order) {
    sizes.push_back(std::to_string(ws.entry(n).class_size_b6()));
    want_sizes.push_back(std::to_string(facts(n).class_size_b6));
    ng.push_back(std::to_string(ws.entry(n).n_g));
    want_ng.push_back(std::to_string(facts(n).n_g));
  }
  add(out, "subgroups.class_sizes", "B6 class sizes of K_G for T, D10, D6, D4, C5, C3, C2", join(want_sizes),
      join(sizes), sizes == want_sizes);
  add(out, "subgroups.n_g", "copies of G inside the icosahedral group for T, D10, D6, D4, C5, C3, C2", join(want_ng),
      join(ng), ng == want_ng);

  const IcosaRep ihat = build_ihat();
  for (auto n : kAllSubgroups) {
    if (n == SubgroupName::Trivial) continue;
    const auto& e = ws.entry(n);
    const std::string id = "subgroups." + subgroup_id(n);
    const bool routes = closure(word_generators(n)) == e.group;
    add(out, id + ".construction",
        "explicit generators and generator words give the same subgroup of the reference representation, order " +
            std::to_string(facts(n).order),
        std::to_string(facts(n).order),
        std::to_string(e.order) + (routes ? "" : ", routes differ") +
            (e.group.is_subset_of(ihat.group) ? "" : ", not in reference"),
        routes && e.order == facts(n).order && e.group.is_subset_of(ihat.group));
    add(out, id + ".friendly", "all subgroups of this order in the reference representation are conjugate there",
        "yes", yes_no(e.friendly), e.friendly);
    add(out, id + ".decomposition", "decomposition of K_G into irreducibles of G", std::string(facts(n).decomposition),
        e.decomposition, e.decomposition == facts(n).decomposition);
    const std::size_t norm = normalizer(e.group, ws.b6, ws.jobs).size();
    info(out, id + ".normalizer_order", "order of the normalizer of K_G in B6 (|B6| / class size)",
         std::to_string(norm) + (norm * e.b6_class.size() == ws.b6.size() ? "" : " (inconsistent with class size)"));
  }
  return out;
}

std::vector<Claim> projection_claims(const Workspace& ws) {
  std::vector<Claim> out;
  const IcosaRep ihat = build_ihat();
  const ProjectionBundle b = compute_projection(ihat);
  const QfElem two_sqrt5 = QfElem(2) * QfElem::sqrt5();
  const QfMat id6 = QfMat::identity(kDim);

  add(out, "projection.p1", "P1 of the reference representation equals the printed matrix", "exact",
      b.p1 * two_sqrt5 == QfMat::from_literal(published::p1_times_2sqrt5()) ? "exact" : "differs",
      b.p1 * two_sqrt5 == QfMat::from_literal(published::p1_times_2sqrt5()));
  add(out, "projection.p2", "P2 of the reference representation equals the printed matrix", "exact",
      b.p2 * two_sqrt5 == QfMat::from_literal(published::p2_times_2sqrt5()) ? "exact" : "differs",
      b.p2 * two_sqrt5 == QfMat::from_literal(published::p2_times_2sqrt5()));

  {
    bool ok = b.p1 * b.p1 == b.p1 && b.p2 * b.p2 == b.p2 && b.p1 + b.p2 == id6 && (b.p1 * b.p2).is_zero() &&
              b.p1.transpose() == b.p1 && b.p2.transpose() == b.p2;
    for (const auto& g : {ihat.g2, ihat.g3}) ok = ok && b.p1 * h(g) == h(g) * b.p1 && b.p2 * h(g) == h(g) * b.p2;
    add(out, "projection.algebra", "P^2 = P, P1 + P2 = I, P1 P2 = 0, P symmetric and commuting with H(g)", "all hold",
        ok ? "all hold" : "violated", ok);
    add(out, "projection.rank", "rank of P1 and P2", "3, 3",
        std::to_string(b.p1.rank()) + ", " + std::to_string(b.p2.rank()), b.p1.rank() == 3 && b.p2.rank() == 3);
  }

  {
    const bool pattern = b.r * two_sqrt5 == QfMat::from_literal(published::r_pattern());
    const QfMat d = b.r.transpose() * b.r;
    bool scalar = d.is_diagonal() && d(0, 0).sign() > 0;
    for (int i = 1; i < kDim; ++i) scalar = scalar && d(i, i) == d(0, 0);
    add(out, "projection.r", "2 sqrt5 R equals the printed integer/tau pattern and R^T R = lambda I, lambda > 0",
        "pattern, lambda I", std::string(pattern ? "pattern" : "pattern differs") + ", lambda = " + d(0, 0).to_string(),
        pattern && scalar);
  }

  {
    const QfMat want[4] = {QfMat::from_literal(published::t1_g2_times_2()),
                           QfMat::from_literal(published::t1_g3_times_2()),
                           QfMat::from_literal(published::t2_g2_times_2()),
                           QfMat::from_literal(published::t2_g3_times_2())};
    const QfElem two(2);
    const bool exact = b.irreps.t1[0] * two == want[0] && b.irreps.t1[1] * two == want[1] &&
                       b.irreps.t2[0] * two == want[2] && b.irreps.t2[1] * two == want[3];
    std::string observed = "exact";
    bool pass = exact;
    if (!exact) {
      auto q1 = signed_permutation_match({b.irreps.t1[0] * two, b.irreps.t1[1] * two}, {want[0], want[1]});
      auto q2 = signed_permutation_match({b.irreps.t2[0] * two, b.irreps.t2[1] * two}, {want[2], want[3]});
      pass = q1 && q2;
      observed = pass ? "equal up to a signed permutation of basis vectors" : "differs";
    }
    add(out, "projection.irreps", "reduced blocks of g2 and g3 equal the printed T1 and T2 matrices", "exact",
        observed, pass);

    const QfMat t1_c5 = b.irreps.t1[0] * b.irreps.t1[1];
    const QfMat t2_c5 = b.irreps.t2[0] * b.irreps.t2[1];
    const bool traces = b.irreps.t1[0].trace() == QfElem(-1) && b.irreps.t1[1].trace() == QfElem(0) &&
                        t1_c5.trace() == QfElem::tau() && t2_c5.trace() == QfElem(1) - QfElem::tau();
    add(out, "projection.block_traces", "traces of T1(g2), T1(g3), T1(g2 g3), T2(g2 g3)", "-1, 0, tau, 1-tau",
        b.irreps.t1[0].trace().to_string() + ", " + b.irreps.t1[1].trace().to_string() + ", " +
            t1_c5.trace().to_string() + ", " + t2_c5.trace().to_string(),
        traces);
    bool orth = true;
    for (const auto* blocks : {&b.irreps.t1, &b.irreps.t2})
      for (const auto& m : *blocks) orth = orth && m.transpose() * m == QfMat::identity(3);
    add(out, "projection.block_orthogonal", "each reduced block B satisfies B^T B = I", "yes", yes_no(orth), orth);
  }

  {
    const bool comm = commutation_check(ihat, b.r, b.irreps);
    IrrepPair swapped{b.irreps.t2, b.irreps.t1};
    const bool swapped_fails = !commutation_check(ihat, b.r, swapped);
    add(out, "projection.commutation", "pi_par H(g) = T1(g) pi_par and pi_perp H(g) = T2(g) pi_perp; fails if swapped",
        "holds; swapped fails", std::string(comm ? "holds" : "fails") + "; swapped " + (swapped_fails ? "fails" : "holds"),
        comm && swapped_fails);
  }

  {
    const OrbitShape s = orbit_shape(b.orbit);
    const QfMat printed = QfMat::from_literal(published::pi_parallel_pattern());
    std::vector<QfMat> printed_pts;
    for (int j = 0; j < kDim; ++j) printed_pts.push_back(printed.column(j));
    const OrbitShape ps = orbit_shape(printed_pts);
    const QfElem ratio = s.norm_sq / s.off_diagonal;
    const QfElem printed_ratio = ps.norm_sq / ps.off_diagonal;
    add(out, "projection.orbit",
        "12 projected points have equal norms and a two-valued Gram matrix, norm^2/|Gram| as for the printed pi_par",
        "equal, two-valued, ratio " + printed_ratio.to_string(),
        std::string(s.equal_norms ? "equal" : "unequal") + ", " + (s.two_valued ? "two-valued" : "not two-valued") +
            ", ratio " + ratio.to_string(),
        s.equal_norms && s.two_valued && ratio == printed_ratio && b.orbit.size() == 12);
  }

  {
    // Every member reduced by its own greedy basis, and by S = M R.
    const auto& cat = ws.catalog;
    std::size_t own = 0, shared = 0;
    const QfMat r_inv = inverse_reducing(b.r);
    for (std::size_t i = 0; i < cat.cryst_reps.size(); ++i) {
      const IcosaRep& rep = cat.cryst_reps[i];
      const QfMat r = reducing_matrix(rep);
      if (commutation_check(rep, r, reduce_rep(rep, r))) ++own;
      const QfMat m = h(cat.cryst_witness[i]);
      const QfMat s = m * b.r;
      const QfMat s_inv = r_inv * m.transpose();
      bool same = true;
      const SignedPerm gens[] = {rep.g2, rep.g3};
      for (int k = 0; k < 2; ++k) {
        const QfMat red = s_inv * h(gens[k]) * s;
        same = same && red.block(0, 0, 3, 3) == b.irreps.t1[k] && red.block(3, 3, 3, 3) == b.irreps.t2[k] &&
               red.block(0, 3, 3, 3).is_zero() && red.block(3, 0, 3, 3).is_zero();
      }
      if (same) ++shared;
    }
    add(out, "projection.all_members", "every crystallographic representation is reduced by its own basis",
        "192", std::to_string(own), own == cat.cryst_reps.size() && own == 192);
    add(out, "projection.shared_irreps", "S = M R reduces each representation into the reference T1 and T2 blocks",
        "192", std::to_string(shared), shared == cat.cryst_reps.size() && shared == 192);
  }
  return out;
}

std::vector<Claim> spectrum_claims(const GGraph& g, const SpectrumReport& s) {
  std::vector<Claim> out;
  const auto& f = facts(g.subgroup);
  const std::string id = "ggraph." + subgroup_id(g.subgroup);
  const auto want = published_spectrum(g.subgroup);
  add(out, id + ".spectrum", "exact integer spectrum of the " + std::string(f.name) + "-graph", format_spectrum(want),
      format_spectrum(s.eigenvalues), s.eigenvalues == want);
  const auto n = static_cast<std::int64_t>(g.size());
  const bool regular = s.regular && s.degree == f.degree && s.trace == 0 && s.trace_sq == n * s.degree;
  add(out, id + ".regular", "regular of degree d_G with sum(lambda) = 0 and sum(lambda^2)/n = d_G",
      "d = " + std::to_string(f.degree),
      "d = " + std::to_string(s.degree) + (s.regular ? ", regular" : ", irregular") + ", sum = " +
          std::to_string(s.trace) + ", sum sq / n = " + std::to_string(n ? s.trace_sq / n : 0),
      regular);
  return out;
}

std::vector<Claim> component_claims(const GGraph& g, const SpectrumReport& s) {
  std::vector<Claim> out;
  const auto& f = facts(g.subgroup);
  const std::string id = "ggraph." + subgroup_id(g.subgroup);
  bool sizes_ok = static_cast<int>(s.components.size()) == f.components;
  for (const auto& c : s.components) sizes_ok = sizes_ok && static_cast<int>(c.size()) == f.component_size;
  const int index_mult = s.eigenvalues.count(s.degree) ? s.eigenvalues.at(s.degree) : 0;
  add(out, id + ".components", "connected components; their number equals the multiplicity of the index",
      std::to_string(f.components) + " x " + std::to_string(f.component_size),
      component_summary(s.components) + ", index multiplicity " + std::to_string(index_mult),
      sizes_ok && index_mult == static_cast<int>(s.components.size()));
  return out;
}

std::vector<Claim> graph_claims(const Workspace& ws) {
  std::vector<Claim> out;
  const auto& verts = ws.vertices();

  for (auto n : kAllSubgroups) {
    const GGraph& g = ws.graphs.at(n);
    const SpectrumReport& s = ws.spectra.at(n);
    const std::string id = "ggraph." + subgroup_id(n);
    for (auto& c : spectrum_claims(g, s)) out.push_back(std::move(c));
    for (auto& c : component_claims(g, s)) out.push_back(std::move(c));
    const bool in_class = edges_in_class(verts, g, ws.entry(n));
    add(out, id + ".edges_in_class", "every edge's intersection lies in the B6 class of K_G", "yes", yes_no(in_class),
        in_class);
    if (is_maximal(n)) {
      add(out, id + ".triangle_free", "diagonal of A^3 is zero", "yes", yes_no(s.triangle_free), s.triangle_free);
      bool symmetric = true;
      for (const auto& [l, m] : s.eigenvalues) symmetric = symmetric && s.eigenvalues.count(-l) && s.eigenvalues.at(-l) == m;
      add(out, id + ".symmetric_spectrum", "spectrum is symmetric about 0", "yes", yes_no(symmetric), symmetric);
    }
    std::size_t bip = std::count(s.bipartite.begin(), s.bipartite.end(), true);
    info(out, id + ".bipartite", "2-colourable components (reported only)",
         std::to_string(bip) + " of " + std::to_string(s.components.size()));
  }

  {
    const GGraph& d4 = ws.graphs.at(SubgroupName::D4);
    const bool tf = ws.spectra.at(SubgroupName::D4).triangle_free;
    add(out, "ggraph.D4.has_triangles", "the D4-graph contains triangles (diagonal of A^3 nonzero)", "yes",
        yes_no(!tf), !tf);
    std::string observed;
    bool ok = false;
    try {
      const auto blocks = clique_decomposition(d4.adjacency);
      ok = static_cast<int>(blocks.size()) == published::kD4Blocks &&
           std::all_of(blocks.begin(), blocks.end(),
                       [](const auto& bl) { return static_cast<int>(bl.size()) == published::kD4BlockSize; });
      observed = std::to_string(blocks.size()) + " x " + std::to_string(blocks.empty() ? 0 : blocks[0].size());
    } catch (const NoPartition& e) {
      observed = e.what();
    }
    add(out, "ggraph.D4.blocks", "D4-graph vertices split into complete blocks", "12 x 16", observed, ok);
  }

  {
    const GGraph& t = ws.graphs.at(SubgroupName::T);
    const auto n = t.size();
    bool walks = true;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t w = 0;
      for (std::size_t j = 0; j < n; ++j) w += t.adjacency[i][j] * t.adjacency[j][i];
      walks = walks && w == facts(SubgroupName::T).degree;
    }
    add(out, "ggraph.T.closed_walks", "closed walks of length 2 at every vertex of the T-graph", "5", yes_no(walks),
        walks);
  }

  {
    const auto& s = ws.subgroup_matrix;
    bool diag = true, sym = true, rows = true;
    const auto& want = published::subgroup_matrix_row();
    for (std::size_t i = 0; i < s.size(); ++i) {
      diag = diag && s[i][i] == 60;
      std::map<int, int> row;
      for (std::size_t j = 0; j < s.size(); ++j) {
        sym = sym && s[i][j] == s[j][i];
        if (j != i) ++row[static_cast<int>(s[i][j])];
      }
      rows = rows && row == std::map<int, int>(want.begin(), want.end());
    }
    add(out, "smatrix.shape", "S_ii = 60, S symmetric, each row holds d_G entries equal to |G|",
        "12^5 10^6 6^10 4^30 3^20 2^60 1^60",
        std::string(diag ? "diagonal 60" : "diagonal differs") + ", " + (sym ? "symmetric" : "asymmetric") + ", " +
            (rows ? "rows match" : "rows differ"),
        diag && sym && rows);
  }

  for (auto n : {SubgroupName::T, SubgroupName::D10, SubgroupName::D6}) {
    const std::string id = "pairing." + subgroup_id(n);
    const auto& e = ws.entry(n);
    const PairingResult p = maximal_pairing_check(verts, e, ws.graphs.at(n));
    std::vector<std::string> counts;
    for (auto [k, v] : p.containment_counts) counts.push_back(std::to_string(v) + " in " + std::to_string(k));
    add(out, id, "every member of the class of K_G lies in exactly 2 representations and d_G = n_G",
        std::to_string(facts(n).class_size_b6) + " in 2, d = " + std::to_string(facts(n).n_g),
        join(counts) + ", d = " + std::to_string(p.degree), p.ok);
    const bool dc = 192 * e.n_g == 2 * e.class_size_b6();
    add(out, id + ".double_count", "192 n_G = 2 |class|",
        std::to_string(192 * facts(n).n_g) + " = " + std::to_string(2 * facts(n).class_size_b6),
        std::to_string(192 * e.n_g) + " = " + std::to_string(2 * e.class_size_b6()), dc);

    const NullGraphResult r = b6plus_nullgraph_check(ws.catalog, ws.graphs.at(n), ws.b6, ws.jobs);
    add(out, "b6plus." + subgroup_id(n) + ".null",
        "the G-graph inside each B6+ class is empty and all cross conjugators have determinant -1",
        "empty, empty, det -1",
        std::string(r.within_class_empty[0] ? "empty" : "edges") + ", " + (r.within_class_empty[1] ? "empty" : "edges") +
            ", " + std::to_string(r.conjugators_checked) + " conjugators over " + std::to_string(r.edges) +
            " edges " + (r.all_conjugators_det_minus_one ? "det -1" : "not all det -1"),
        r.ok());
  }

  {
    const IcosaRep ihat = build_ihat(), h0 = build_h0();
    const GroupSet p = intersect(ihat.group, h0.group);
    const auto& d10 = ws.entry(SubgroupName::D10);
    const SignedPerm paper_m = from_matrix(h0_conjugator_matrix());
    const bool setup = p == d10.group && ws.catalog.cryst_class.find(h0.group).has_value();
    const bool paper_ok = is_normalizer_witness(paper_m, ihat.group, h0.group, p) && paper_m.determinant() == -1;
    std::string found = "none";
    bool found_ok = false;
    try {
      const SignedPerm m = normalizer_witness(ihat.group, h0.group, p, ws.b6, ws.jobs);
      found = m.to_string() + " det " + std::to_string(m.determinant());
      found_ok = m.determinant() == -1;
    } catch (const WitnessNotFound&) {
    }
    add(out, "normalizer.witness",
        "K_D10 = I ∩ H0; some M in N(K_D10) conjugates I to H0; diag(1,-1,1,1,1,1) is one, det -1",
        "exists, det -1; printed M passes",
        std::string(setup ? "" : "setup differs; ") + found + "; printed M " + (paper_ok ? "passes" : "fails"),
        setup && paper_ok && found_ok);
    bool not_conj = false;
    try {
      equivalence_witness(ihat, h0, ws.b6_plus);
    } catch (const NotConjugate&) {
      not_conj = true;
    }
    add(out, "normalizer.not_in_b6plus", "the D10-sharing pair is not conjugate in B6+", "NotConjugate",
        not_conj ? "NotConjugate" : "witness found", not_conj);
  }
  return out;
}

std::vector<Claim> all_claims(const Workspace& ws, std::optional<std::uint64_t> seed) {
  std::vector<Claim> out = group_claims(ws, seed);
  for (auto* part : {&subgroup_claims, &projection_claims, &graph_claims})
    for (auto& c : (*part)(ws)) out.push_back(std::move(c));
  return out;
}

bool all_pass(const std::vector<Claim>& claims) {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Fail; });
}

std::string render_markdown(const std::vector<Claim>& claims) {
  std::size_t pass = 0, fail = 0;
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::Pass) ++pass;
    if (c.status == ClaimStatus::Fail) ++fail;
  }
  std::ostringstream md;
  md << "# hexoct verification report\n\n";
  md << pass << " passed, " << fail << " failed, " << claims.size() - pass - fail << " informational.\n\n";
  md << "| status | claim | statement | expected | observed |\n";
  md << "|---|---|---|---|---|\n";
  auto cell = [](std::string s) {
    std::string out;
    for (char ch : s) out += ch == '|' ? std::string("\\|") : std::string(1, ch);
    return out;
  };
  for (const auto& c : claims)
    md << "| " << claim_status_name(c.status) << " | `" << c.id << "` | " << cell(c.statement) << " | "
       << cell(c.expected) << " | " << cell(c.observed) << " |\n";
  return md.str();
}

Json render_json(const std::vector<Claim>& claims) {
  Json arr = Json::array();
  for (const auto& c : claims)
    arr.push_back({{"id", c.id},
                   {"status", claim_status_name(c.status)},
                   {"statement", c.statement},
                   {"expected", c.expected},
                   {"observed", c.observed}});
  return {{"format", "hexoct-report-1"}, {"all_pass", all_pass(claims)}, {"claims", arr}};
}

}  // namespace hexoct
