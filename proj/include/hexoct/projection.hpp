#pragma once

// Exact projection of a crystallographic representation onto its two
// invariant 3D subspaces (parallel and perpendicular space).

#include <array>
#include <optional>
#include <vector>

#include "hexoct/icosa_reps.hpp"
#include "hexoct/qfield.hpp"

namespace hexoct {

enum class Subspace { Parallel, Perpendicular };

QfMat rep_matrix(const SignedPerm& x);

// (3/60) sum_g chi(g) H(g), with chi = chi_T1 (parallel) or chi_T2 (perpendicular).
// Classes are labelled relative to rep.g2, rep.g3.
QfMat projector(const IcosaRep& rep, Subspace which);

// Columns ((c1+c5)/2, (c2-c4)/2, (c3+c6)/2) of P1 followed by
// ((c1-c5)/2, (c2+c4)/2, (c3-c6)/2) of P2, unnormalised.
// Throws DegenerateBasis when the six columns are not independent.
QfMat reducing_matrix_recipe(const IcosaRep& rep);
// First three columns of P1 (then of P2) that raise the rank.
QfMat reducing_matrix_greedy(const IcosaRep& rep);
// Recipe for the reference representation, greedy selection for any other.
QfMat reducing_matrix(const IcosaRep& rep);
// D^-1 R^T when D = R^T R is diagonal, otherwise the Gauss-Jordan inverse.
QfMat inverse_reducing(const QfMat& r);

// 3x3 blocks of R^-1 H(g) R for g = g2 (index 0) and g = g3 (index 1).
struct IrrepPair {
  std::array<QfMat, 2> t1;
  std::array<QfMat, 2> t2;
};

// Throws NotReduced when R^-1 H R is not block diagonal.
IrrepPair reduce_rep(const IcosaRep& rep, const QfMat& r);
inline IrrepPair reduce_rep(const IcosaRep& rep) { return reduce_rep(rep, reducing_matrix(rep)); }

// pi_par H(g) == T1(g) pi_par and pi_perp H(g) == T2(g) pi_perp for g2, g3,
// where (pi_par; pi_perp) = R^-1.
bool commutation_check(const IcosaRep& rep, const QfMat& r, const IrrepPair& irreps);

// pi_par applied to +-e_j, j = 1..6 (12 column vectors, +e_j first).
std::vector<QfMat> icosahedron_orbit(const IcosaRep& rep, const QfMat& r);

struct OrbitShape {
  QfElem norm_sq;        // common squared norm of the 12 points
  QfElem off_diagonal;   // |Gram off-diagonal| for the 6 vectors +e_j
  bool equal_norms = false;
  bool two_valued = false;  // every off-diagonal Gram entry is +-off_diagonal
};
OrbitShape orbit_shape(const std::vector<QfMat>& points);

// A signed permutation matrix Q (3x3) with Q^T A_k Q = B_k for every k, if any.
std::optional<QfMat> signed_permutation_match(const std::vector<QfMat>& a, const std::vector<QfMat>& b);

// A point of R^6 with rational coordinates.
struct LatticePoint {
  std::array<Rational, kDim> coords;
};

enum class LatticeKind { SC, BCC, FCC };

// SC: coordinates integral. BCC: 2x integral with all 2x_i of equal parity.
// FCC: 2x integral with sum of 2x_i even.
bool lattice_membership(const LatticePoint& p, LatticeKind kind);

}  // namespace hexoct
