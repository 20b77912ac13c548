// Coproduct and counit layer: Delta on generator pairs, relation preservation
// of Delta images, coassociativity and counit laws, the A_1(0) quotient, and
// the antipode obstruction demonstration.

#pragma once

#include "qzero/azero.hpp"
#include "qzero/rep.hpp"

namespace qz {

// Delta(z_{i,j}) = sum_{k = i^j}^{i v j} z_{i,k} (x) z_{k,j} evaluated in a (x) b.
KronOp delta_on_models(const Rep& a, const Rep& b, int i, int j);

// All generators at once, as a representation on the concatenated space.
Rep delta_rep(const Rep& a, const Rep& b);

struct BialgebraReport {
    RelationReport relations;                    // catalog on the Delta image
    std::vector<RelationEntry> coassociativity;  // per generator (i,j)
    std::vector<RelationEntry> counit;           // both laws per generator
    bool pass = false;
    double max_residual = 0.0;
};

// Relation preservation on delta_rep(a,b); coassociativity over (a,b,c) and
// the counit laws compared term-by-term on the block decompositions, which
// keeps those checks exact whatever the model dimensions are.
BialgebraReport check_bialgebra(const Rep& a, const Rep& b, const Rep& c, double tol,
                                int margin = -1);

// w_{i,j} = y_{i,j} for i,j <= 2 and delta_{i,j} otherwise; requires the
// input to satisfy the rank-1 catalog, returns the rank-2 family.
Rep a1_quotient(const Rep& r1, double tol = 1e-10);

// max deviation of (phi (x) phi) Delta from Delta^(1) phi on generators.
double a1_quotient_intertwining_residual(const Rep& r1);

// || y11* y11 - I || on the canonical rank-1 shift model; the antipode law
// would force this to vanish, and it equals 1 identically.
double antipode_obstruction(int dim);

}  // namespace qz
