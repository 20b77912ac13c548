// Relation catalog of the universal C*-algebra A_n(0) and a checker for
// arbitrary generator assignments, plus the partial-isometry diagnostics for
// the rank-2 case.

#pragma once

#include "qzero/rep.hpp"

namespace qz {

// Fully instantiated relation list for rank n:
//   comm-z1  z_{i,j} z_{i,l} = 0                      (j < l)
//   comm-z2  z_{i,j} z_{k,j} = 0                      (i < k)
//   comm-z3  z_{i,l} z_{k,j} = 0                      (i<k, j<l, max{i,j} >= min{k,l})
//   comm-z4  [z_{i,l}, z_{k,j}] = 0                   (i<k, j<l)
//   comm-z5  [z_{i,j}, z_{k,l}] = 0                   (i<k, j<l, max{i,j}+1 < min{k,l})
//   comm-z6  [z_{i,j}, z_{k,l}] = z_{i,l} z_{k,j}     (i<k, j<l, max{i,j}+1 = min{k,l})
//   z7a      z_{1,1} z_{2,2} ... z_{n+1,n+1} = 1
//   comm-z7  z_{r,s}* = explicit diagonal/staircase product, one per (r,s)
//   comm-z8  z_{i,j}* z_{r,s} = z_{r,s} z_{i,j}*      (i != r, j != s)
//   comm-z9  row sums sum_{k<=j} z_{j,k} z_{j,k}* = 1 (indices [j,0]) and
//            column sums sum_{k>=j} z_{k,j}* z_{k,j} = 1 (indices [j,1])
// Schemas whose side conditions admit no tuple at small n are absent.
std::vector<Relation> relation_catalog(int n);

// The staircase product appearing in the comm-z7 star formula for (r,s).
StarPolynomial star_formula_rhs(int n, int r, int s);

// Interior residual of every catalog relation; margin < 0 uses the
// per-relation degree.
RelationReport check_relations(const Rep& r, double tol, int margin = -1);
RelationReport check_relations(const DenseRep& r, double tol, int margin = -1);

// Appendix diagnostics for n = 2: the family p_{i,j} = z*z, q_{i,j} = zz*
// (i >= j) is checked for idempotency, self-adjointness, pairwise
// commutation, the unitarity sums, the five derived equalities
// (p31=q31, p11=q22, p22=q33, p21=q21-q31, p32=q32+q31), the single-generator
// partial-isometry law, and the partial-isometry law for every length-2
// product of generators/adjoints with i >= j.
RelationReport projection_diagnostics(const Rep& r, double tol, int margin);

// The defining relation set of A_1(0) in its conventional form, for
// cross-checking against relation_catalog(1).
std::vector<Relation> su02_relations();

}  // namespace qz
