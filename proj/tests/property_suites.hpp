#pragma once

// Randomised property suites, shared by the standalone property binary and
// the acceptance runner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hexoct/group_set.hpp"
#include "hexoct/icosa_reps.hpp"
#include "hexoct/projection.hpp"
#include "hexoct/signed_perm.hpp"

namespace hexoct::props {

struct SuiteResult {
  std::string name;
  int cases = 0;   // randomised inputs drawn
  int checks = 0;  // assertions over those inputs
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
  void check(bool cond, const std::string& what) {
    ++checks;
    if (!cond && failures++ == 0) first_failure = what;
  }
};

inline SignedPerm random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, kOrderB6 - 1);
  return SignedPerm::from_code(static_cast<std::uint16_t>(d(rng)));
}

// Determinant of a 6x6 integer matrix by cofactor expansion (independent of
// the signed-permutation formula used by the library).
inline long det_cofactor(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * det_cofactor(minor);
  }
  return det;
}

inline std::vector<std::vector<long>> as_rows(const IntMat6& m) {
  std::vector<std::vector<long>> rows(kDim, std::vector<long>(kDim));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) rows[i][j] = m.entries[i][j];
  return rows;
}

// Associativity, identity, inverses and closure in B6.
inline SuiteResult group_axioms(int cases, std::uint64_t seed) {
  SuiteResult r{"group axioms"};
  std::mt19937_64 rng(seed);
  const SignedPerm e;
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const SignedPerm x = random_element(rng), y = random_element(rng), z = random_element(rng);
    const std::string tag = x.to_string() + " " + y.to_string() + " " + z.to_string();
    r.check((x * y) * z == x * (y * z), "associativity " + tag);
    r.check(x * e == x && e * x == x, "identity " + tag);
    r.check(x * x.inverse() == e && x.inverse() * x == e, "inverse " + tag);
    r.check(SignedPerm::from_code((x * y).code()) == x * y && (x * y).code() < kOrderB6, "closure " + tag);
  }
  return r;
}

// T (matrices) and phi (S12) are injective homomorphisms and agree with each other.
inline SuiteResult homomorphy(int cases, std::uint64_t seed) {
  SuiteResult r{"isomorphism homomorphy"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const SignedPerm x = random_element(rng), y = random_element(rng);
    const std::string tag = x.to_string() + " " + y.to_string();
    r.check(to_matrix(x * y) == to_matrix(x) * to_matrix(y), "T(xy) " + tag);
    r.check(to_s12(x * y) == to_s12(x) * to_s12(y), "phi(xy) " + tag);
    r.check(from_matrix(to_matrix(x)) == x && from_s12(to_s12(x)) == x, "round trip " + tag);
    r.check(x == y || (to_matrix(x) != to_matrix(y) && !(to_s12(x) == to_s12(y))), "injective " + tag);
    r.check(det_cofactor(as_rows(to_matrix(x))) == x.determinant(), "determinant " + tag);
    // The S12 image of +e_k must be the signed image under T.
    const IntMat6 m = to_matrix(x);
    const Perm12 p = to_s12(x);
    bool agree = true;
    for (int k = 0; k < kDim; ++k) {
      const int target = p.images[k] % kDim;
      const int sign = p.images[k] < kDim ? 1 : -1;
      agree = agree && m.entries[target][k] == sign;
    }
    r.check(agree, "T and phi agree " + tag);
  }
  return r;
}

// Projectors of random conjugates of the reference representation.
inline SuiteResult projector_algebra(int cases, std::uint64_t seed) {
  SuiteResult r{"projector algebra"};
  std::mt19937_64 rng(seed);
  const IcosaRep ihat = build_ihat();
  const QfMat p1 = projector(ihat, Subspace::Parallel);
  const QfMat p2 = projector(ihat, Subspace::Perpendicular);
  const QfMat id = QfMat::identity(kDim);
  std::uniform_int_distribution<std::size_t> pick(0, ihat.group.size() - 1);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const SignedPerm w = random_element(rng);
    const SignedPerm g = ihat.group[pick(rng)];
    const QfMat hw = rep_matrix(w), hg = rep_matrix(g);
    const QfMat q1 = hw * p1 * hw.transpose(), q2 = hw * p2 * hw.transpose();
    const QfMat hgw = rep_matrix(conjugate(g, w));
    const std::string tag = w.to_string() + " " + g.to_string();
    r.check(q1 * q1 == q1 && q2 * q2 == q2, "idempotent " + tag);
    r.check(q1 + q2 == id && (q1 * q2).is_zero(), "complementary " + tag);
    r.check(q1 * hgw == hgw * q1 && q2 * hgw == hgw * q2, "commutes " + tag);
    r.check(q1.trace() == QfElem(3) && q1.transpose() == q1, "trace and symmetry " + tag);
    r.check(p1 * hg == hg * p1, "reference commutes " + tag);
  }
  // The library's projector on a handful of conjugates must equal the
  // transported one.
  for (int i = 0; i < std::max(1, cases / 100); ++i) {
    const SignedPerm w = random_element(rng);
    const IcosaRep rep = make_icosa_rep(conjugate(ihat.g2, w), conjugate(ihat.g3, w));
    const QfMat hw = rep_matrix(w);
    r.check(projector(rep, Subspace::Parallel) == hw * p1 * hw.transpose(), "transport " + w.to_string());
  }
  return r;
}

// |class(x)| |C(x)| = |B6| with both sides counted by direct sweeps.
inline SuiteResult orbit_stabilizer(int cases, std::uint64_t seed) {
  SuiteResult r{"orbit-stabilizer"};
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> seen(kOrderB6);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const SignedPerm x = random_element(rng);
    std::fill(seen.begin(), seen.end(), 0);
    long orbit = 0, stab = 0;
    for (int c = 0; c < kOrderB6; ++c) {
      const SignedPerm g = SignedPerm::from_code(static_cast<std::uint16_t>(c));
      const SignedPerm y = conjugate(x, g);
      if (y == x) ++stab;
      if (!seen[y.code()]) {
        seen[y.code()] = 1;
        ++orbit;
      }
    }
    r.check(orbit * stab == kOrderB6, x.to_string() + ": " + std::to_string(orbit) + " * " + std::to_string(stab));
  }
  return r;
}

}  // namespace hexoct::props
