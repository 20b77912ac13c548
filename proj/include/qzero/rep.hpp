// Generator assignments (i,j) -> operator for the (n+1)^2 generators, in two
// storage forms: structured sums of Kronecker terms (the checking engine) and
// dense matrices (the interchange currency, used by the classifier and JSON).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qzero/kron.hpp"
#include "qzero/starpoly.hpp"
#include "qzero/weyl.hpp"

namespace qz {

struct Rep {
    int n = 1;
    SpaceShape shape;
    std::vector<KronOp> gens;  // row-major, (i,j) with 1 <= i,j <= n+1

    const KronOp& z(int i, int j) const;
    KronOp& z(int i, int j);

    static Rep zeros(int n, SpaceShape shape);
    // z_{i,j} = delta_{i,j} I on the given shape
    static Rep trivial(int n, SpaceShape shape);
};

struct DenseRep {
    int n = 1;
    SpaceShape shape;
    std::vector<CMat> gens;

    const CMat& z(int i, int j) const;
    CMat& z(int i, int j);

    static DenseRep zeros(int n, const SpaceShape& shape);
};

DenseRep materialize(const Rep& r);

// Evaluation algebras for star polynomials.
struct KronAlg {
    using Value = KronOp;
    const Rep& rep;

    Value gen(int i, int j) const;
    Value scalar(Cplx c) const { return kscale(c, KronOp::identity(rep.shape)); }
    Value add(const Value& a, const Value& b) const { return kadd(a, b); }
    Value sub(const Value& a, const Value& b) const { return ksub(a, b); }
    Value mul(const Value& a, const Value& b) const { return kmul(a, b); }
    Value adjoint(const Value& a) const { return kadjoint(a); }
};

struct DenseAlg {
    using Value = CMat;
    const DenseRep& rep;

    Value gen(int i, int j) const;
    Value scalar(Cplx c) const {
        const int d = rep.shape.total_dim();
        return c * CMat::Identity(d, d);
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value adjoint(const Value& a) const { return a.adjoint(); }
};

// Scalar algebra: z_{i,j} |-> delta_{i,j}; used by characters and the
// Toeplitz-gap demonstration.
struct CharacterAlg {
    using Value = Cplx;
    int n = 2;

    Value gen(int i, int j) const;
    Value scalar(Cplx c) const { return c; }
    Value add(Value a, Value b) const { return a + b; }
    Value sub(Value a, Value b) const { return a - b; }
    Value mul(Value a, Value b) const { return a * b; }
    Value adjoint(Value a) const { return std::conj(a); }
};

struct Relation {
    std::string id;            // schema tag, e.g. "comm-z6"
    std::vector<int> indices;  // instantiated index tuple
    StarPolynomial lhs, rhs;
    int degree = 0;  // max generator word length across both sides
};

struct RelationEntry {
    std::string id;
    std::vector<int> indices;
    double residual = 0.0;
    bool exact_norm = true;  // spectral norm vs certified Frobenius bound
};

struct RelationReport {
    std::vector<RelationEntry> entries;
    double tol = 0.0;
    bool pass = false;
    double max_residual = 0.0;

    void finalize(double tolerance);
};

// Residuals of a relation list on a representation.  margin < 0 selects the
// per-relation default margin = relation degree.
RelationReport check_relation_list(const Rep& r, const std::vector<Relation>& rels,
                                   double tol, int margin);
RelationReport check_relation_list(const DenseRep& r, const std::vector<Relation>& rels,
                                   double tol, int margin);

}  // namespace qz
