// Truncations of the irreducible representations of A_n(q) for 0 < q < 1 and
// the rank-n q-level identity checks (commutation relations, unitarity,
// quantum determinant, cofactor star formula).

#pragma once

#include <optional>

#include "qzero/rep.hpp"

namespace qz {

struct QRep : Rep {
    std::optional<double> q;  // empty for a bare character chi_lambda
    std::vector<Cplx> phases;
    ReducedWord word;
};

// One-dimensional representation determined by n unit phases.
QRep chi_lambda(int n, const std::vector<Cplx>& phases);

// Elementary representation attached to the transposition s_k on one
// truncated half-line factor.
QRep psi_sk(int n, int k, double q, int dim);

// Convolution (a (x) b) o Delta_q: gens(i,j) = sum_k a(i,k) (x) b(k,j).
QRep convolve(const QRep& a, const QRep& b);

// chi * psi_{s_{k_1}} * ... * psi_{s_{k_l}} over the letters of a reduced word.
QRep build_qrep(int n, const std::vector<Cplx>& phases, const ReducedWord& word, double q,
                int dim);

// Relation list for the q-level identities:
//   t1 t_{i,j}t_{i,l} = q t_{i,l}t_{i,j}                (j<l)
//   t2 t_{i,j}t_{k,j} = q t_{k,j}t_{i,j}                (i<k)
//   t3 [t_{i,l}, t_{k,j}] = 0                           (i<k, j<l)
//   t4 [t_{i,j}, t_{k,l}] = (q - 1/q) t_{i,l}t_{k,j}    (i<k, j<l)
//   t8 [t_{i,j}, t_{r,s}*] = 0                          (i!=r, j!=s)
//   unit-row  sum_k t_{i,k}t_{j,k}* = delta_{i,j}
//   unit-col  sum_k t_{k,i}*t_{k,j} = delta_{i,j}
std::vector<Relation> t_relation_catalog(int n, double q);

RelationReport check_t_relations(const QRep& r, double tol, int margin);

// Quantum determinant sum_{sigma} (-q)^{l(sigma)} t_{1,sigma(1)}...t_{n+1,sigma(n+1)}.
KronOp quantum_determinant_kron(const QRep& r);
TruncatedOperator quantum_determinant(const QRep& r);

// Interior residual of D_q against the identity.
double qdet_residual(const QRep& r, int margin);

// Quantum cofactor D_q^{r,s}: signed permutation sum over the minor obtained
// by deleting row r and column s.
KronOp cofactor_kron(const QRep& rep, int r, int s);
TruncatedOperator cofactor(const QRep& rep, int r, int s);

// Residuals of t_{r,s}* = (-q)^{s-r} D_q^{r,s} for all (r,s).
RelationReport check_star_formula(const QRep& r, double tol, int margin);

// min over sigma in S_n of sum_{k: j_{sigma(k)} > i_k} (j_{sigma(k)} - i_k)
// for the index families attached to 1 <= s < r <= n+1.
int lemma_perm_min(int n, int r, int s);

}  // namespace qz
