// The rescaled q -> 0 limit: crystallised elementary blocks, the truncated
// crystal convolution, numeric limit scans, and the crystallised relation
// checks on rescaled q-generators.

#pragma once

#include "qzero/qrep.hpp"
#include "qzero/rep.hpp"

namespace qz {

// Representation of A_n(0) tagged with its construction parameters.
struct ZRep : Rep {
    std::vector<Cplx> phases;
    ReducedWord word;
};

// (-q)^{min(i-j,0)}
Cplx rescale_factor(int i, int j, double q);

// q = 0 elementary blocks: z_{k,k} = S, z_{k+1,k+1} = S*, z_{k,k+1} = P0,
// z_{k+1,k} = P0, delta_{i,j} I otherwise.
ZRep crystal_psi_sk(int n, int k, int dim);

// Diagonal character at q = 0 (same phase pattern as chi_lambda).
ZRep crystal_chi(int n, const std::vector<Cplx>& phases);

// Truncated convolution gens(i,j) = sum_{k = i^j}^{i v j} a(i,k) (x) b(k,j).
ZRep crystal_convolve(const ZRep& a, const ZRep& b);

// chi * elementary blocks over the letters of a reduced word.
ZRep crystal_gens_limit(int n, const std::vector<Cplx>& phases, const ReducedWord& word,
                        int dim);

// Generators of a q-representation scaled by rescale_factor(i,j,q).
Rep rescaled_gens(const QRep& r);

struct LimitScanReport {
    std::vector<double> q_grid;      // strictly decreasing
    std::vector<double> deviations;  // max interior residual per q
    std::vector<double> slopes;      // deviations[k+1] / deviations[k]
    std::string verdict;             // "converged" | "inconclusive"
};

// For each q: build the q-representation, rescale, and compare against the
// crystal limit.  Verdict "converged" iff deviations strictly decrease and
// the final deviation is below `threshold` (default 2 * q_min).
LimitScanReport limit_scan(int n, const std::vector<Cplx>& phases, const ReducedWord& word,
                           int dim, const std::vector<double>& q_grid, int margin = 2,
                           double threshold = -1.0);

// Crystallised commutation relations (the product schemas and the diagonal
// product identity, no star relations) evaluated on arbitrary generators;
// residuals decay like O(q) on rescaled q-generators.
RelationReport check_y_relations(const Rep& r, double tol, int margin);

}  // namespace qz
