// Sum-of-Kronecker-terms representation of operators on tensor-product
// truncations.  Generators of convolved representations are short sums of
// elementary tensor words; keeping that structure makes relation residuals on
// large spaces cheap (per-factor products are small, and interior Frobenius
// norms factor through per-position orthonormalization).

#pragma once

#include <optional>
#include <vector>

#include "qzero/core.hpp"

namespace qz {

enum class BlockKind { id, shift, shift_adj, ground, fwd, fwd_adj, custom };

// One tensor-factor of a Kronecker term.  `kind` is retained so that symbolic
// maps (Toeplitz symbol, circle evaluation) can act on block decompositions.
struct Block {
    BlockKind kind = BlockKind::id;
    int dim = 2;
    CMat mat;

    static Block id(int dim);
    static Block shift(int dim);       // S
    static Block shift_adj(int dim);   // S*
    static Block ground(int dim);      // P0 = |e0><e0|
    static Block fwd(int dim);         // bilateral shift u (line factor)
    static Block fwd_adj(int dim);     // u*
    static Block custom(CMat m);

    Block adjoint() const;
    bool is_zero() const;
    bool same_entries(const Block& o) const;  // exact bitwise entry equality
};

// coeff = ordered product of `coeff_factors` (left to right).  Keeping the
// factor list unevaluated makes coefficients of re-associated tensor
// expressions bit-identical, which the coassociativity checks rely on.
struct KronTerm {
    std::vector<Cplx> coeff_factors;
    std::vector<Block> blocks;

    Cplx coeff() const;
};

struct KronOp {
    SpaceShape shape;
    std::vector<KronTerm> terms;  // empty = zero operator

    static KronOp zero(SpaceShape shape);
    static KronOp identity(SpaceShape shape);
    static KronOp scalar(Cplx c);  // on the scalar (zero-factor) space

    bool is_structural_zero() const { return terms.empty(); }
    int total_dim() const { return shape.total_dim(); }
};

KronOp kadd(const KronOp& a, const KronOp& b);
KronOp ksub(const KronOp& a, const KronOp& b);
KronOp kscale(const Cplx& c, const KronOp& a);
KronOp kmul(const KronOp& a, const KronOp& b);
KronOp kadjoint(const KronOp& a);
KronOp ktensor(const KronOp& a, const KronOp& b);

// Merge terms with identical block content (exact entry equality), summing
// coefficients; terms with exactly zero coefficient or a zero block factor
// are dropped.
KronOp merge_terms(const KronOp& a);

// Dense materialization (checked against the dense capacity cap).
CMat materialize(const KronOp& a);
TruncatedOperator to_truncated(const KronOp& a);

// Dense materialization restricted to the interior index set at `margin`.
CMat materialize_interior(const KronOp& a, int margin);

// Interior residual machinery.  Returns the exact spectral norm of the
// compressed operator when the interior space is small enough to materialize;
// otherwise returns a certified upper bound (orthonormalized-factor Frobenius
// norm plus truncation slack).  `*exact` reports which branch was taken.
double interior_norm(const KronOp& a, int margin, bool* exact = nullptr,
                     int dense_cutoff = 1024);

// Frobenius norm of the interior compression, computed without materializing
// the product space.  Exact up to per-position rank truncation at relative
// threshold ~1e-15 whose effect is added to the returned bound.
double interior_frobenius_bound(const KronOp& a, int margin);

// Dimension-free comparison of two operators presented as term sums: groups
// terms by exact block content and compares the per-group coefficient sums.
// Returns the largest coefficient deviation (0.0 when the term structures
// agree exactly).
double symbolic_term_diff(const KronOp& a, const KronOp& b);

}  // namespace qz
