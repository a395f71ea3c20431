#include "hexoct/projection.hpp"

#include <algorithm>
#include <numeric>

#include "hexoct/error.hpp"

namespace hexoct {

QfMat rep_matrix(const SignedPerm& x) { return QfMat::from_int(to_matrix(x)); }

QfMat projector(const IcosaRep& rep, Subspace which) {
  const IcoIrrep irrep = which == Subspace::Parallel ? IcoIrrep::T1 : IcoIrrep::T2;
  const auto labels = element_class_labels(rep.group, rep.g2, rep.g3);
  QfMat p(kDim, kDim);
  for (std::size_t i = 0; i < rep.group.size(); ++i) {
    const QfElem chi = ico_character(irrep, labels[i]);
    if (chi.is_zero()) continue;
    const IntMat6 m = to_matrix(rep.group[i]);
    for (int r = 0; r < kDim; ++r)
      for (int c = 0; c < kDim; ++c)
        if (m.entries[r][c] != 0) p(r, c) += m.entries[r][c] > 0 ? chi : -chi;
  }
  p *= QfElem(Rational(3, static_cast<long>(rep.group.size())));
  return p;
}

QfMat reducing_matrix_recipe(const IcosaRep& rep) {
  const QfMat p1 = projector(rep, Subspace::Parallel);
  const QfMat p2 = projector(rep, Subspace::Perpendicular);
  const QfElem half(Rational(1, 2));
  auto combo = [&](const QfMat& p, int a, int b, int s) {
    QfMat c = s > 0 ? p.column(a) + p.column(b) : p.column(a) - p.column(b);
    return c * half;
  };
  QfMat r = hconcat({combo(p1, 0, 4, +1), combo(p1, 1, 3, -1), combo(p1, 2, 5, +1),
                     combo(p2, 0, 4, -1), combo(p2, 1, 3, +1), combo(p2, 2, 5, -1)});
  if (r.rank() != kDim) throw DegenerateBasis("recipe columns have rank " + std::to_string(r.rank()));
  return r;
}

QfMat reducing_matrix_greedy(const IcosaRep& rep) {
  std::vector<QfMat> cols;
  for (auto which : {Subspace::Parallel, Subspace::Perpendicular}) {
    const QfMat p = projector(rep, which);
    std::vector<QfMat> picked;
    for (int j = 0; j < kDim && picked.size() < 3; ++j) {
      picked.push_back(p.column(j));
      if (hconcat(picked).rank() < picked.size()) picked.pop_back();
    }
    if (picked.size() != 3) throw DegenerateBasis("projector image is not 3-dimensional");
    cols.insert(cols.end(), picked.begin(), picked.end());
  }
  return hconcat(cols);
}

QfMat reducing_matrix(const IcosaRep& rep) {
  const IcosaRep ihat = build_ihat();
  if (rep.group == ihat.group && rep.g2 == ihat.g2 && rep.g3 == ihat.g3) return reducing_matrix_recipe(rep);
  return reducing_matrix_greedy(rep);
}

QfMat inverse_reducing(const QfMat& r) {
  const QfMat rt = r.transpose();
  QfMat d = rt * r;
  if (!d.is_diagonal()) return r.inverse();
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (d(i, i).is_zero()) throw DegenerateBasis("zero column in reducing matrix");
    d(i, i) = d(i, i).inverse();
  }
  return d * rt;
}

IrrepPair reduce_rep(const IcosaRep& rep, const QfMat& r) {
  const QfMat r_inv = inverse_reducing(r);
  IrrepPair out;
  const SignedPerm gens[] = {rep.g2, rep.g3};
  for (int k = 0; k < 2; ++k) {
    const QfMat reduced = r_inv * rep_matrix(gens[k]) * r;
    if (!reduced.block(0, 3, 3, 3).is_zero() || !reduced.block(3, 0, 3, 3).is_zero())
      throw NotReduced("off-diagonal blocks are nonzero");
    out.t1[k] = reduced.block(0, 0, 3, 3);
    out.t2[k] = reduced.block(3, 3, 3, 3);
  }
  return out;
}

bool commutation_check(const IcosaRep& rep, const QfMat& r, const IrrepPair& irreps) {
  const QfMat r_inv = inverse_reducing(r);
  const QfMat pi_par = r_inv.block(0, 0, 3, kDim);
  const QfMat pi_perp = r_inv.block(3, 0, 3, kDim);
  const SignedPerm gens[] = {rep.g2, rep.g3};
  for (int k = 0; k < 2; ++k) {
    const QfMat h = rep_matrix(gens[k]);
    if (!(pi_par * h == irreps.t1[k] * pi_par)) return false;
    if (!(pi_perp * h == irreps.t2[k] * pi_perp)) return false;
  }
  return true;
}

std::vector<QfMat> icosahedron_orbit(const IcosaRep& /*rep*/, const QfMat& r) {
  const QfMat pi_par = inverse_reducing(r).block(0, 0, 3, kDim);
  std::vector<QfMat> points;
  for (int j = 0; j < kDim; ++j) points.push_back(pi_par.column(j));
  for (int j = 0; j < kDim; ++j) points.push_back(pi_par.column(j) * QfElem(-1));
  return points;
}

OrbitShape orbit_shape(const std::vector<QfMat>& points) {
  OrbitShape s;
  if (points.size() < 2) return s;
  auto dot = [](const QfMat& a, const QfMat& b) { return (a.transpose() * b)(0, 0); };
  s.norm_sq = dot(points[0], points[0]);
  s.equal_norms = std::all_of(points.begin(), points.end(), [&](const QfMat& p) { return dot(p, p) == s.norm_sq; });
  const std::size_t n = std::min<std::size_t>(kDim, points.size());
  s.off_diagonal = dot(points[0], points[1]);
  if (s.off_diagonal.sign() < 0) s.off_diagonal = -s.off_diagonal;
  s.two_valued = !s.off_diagonal.is_zero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QfElem g = dot(points[i], points[j]);
      if (g != s.off_diagonal && g != -s.off_diagonal) s.two_valued = false;
    }
  return s;
}

std::optional<QfMat> signed_permutation_match(const std::vector<QfMat>& a, const std::vector<QfMat>& b) {
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      QfMat q(3, 3);
      for (int j = 0; j < 3; ++j) q(perm[j], j) = (signs >> j) & 1 ? -1 : 1;
      const QfMat qt = q.transpose();
      bool ok = a.size() == b.size();
      for (std::size_t k = 0; ok && k < a.size(); ++k) ok = qt * a[k] * q == b[k];
      if (ok) return q;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool lattice_membership(const LatticePoint& p, LatticeKind kind) {
  if (kind == LatticeKind::SC)
    return std::all_of(p.coords.begin(), p.coords.end(), [](const Rational& x) { return x.get_den() == 1; });
  std::array<mpz_class, kDim> twice;
  for (int i = 0; i < kDim; ++i) {
    Rational t = p.coords[i] * 2;
    if (t.get_den() != 1) return false;
    twice[i] = t.get_num();
  }
  auto odd = [](const mpz_class& v) { return mpz_odd_p(v.get_mpz_t()) != 0; };
  if (kind == LatticeKind::BCC)
    return std::all_of(twice.begin(), twice.end(), [&](const mpz_class& v) { return odd(v) == odd(twice[0]); });
  mpz_class sum = 0;
  for (const auto& v : twice) sum += v;
  return !odd(sum);
}

}  // namespace hexoct
