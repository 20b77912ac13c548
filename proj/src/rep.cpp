#include "qzero/rep.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qz {

namespace {
int flat(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n + 1 || j > n + 1)
        throw Error("invalid-parameter", "generator index out of range");
    return (i - 1) * (n + 1) + (j - 1);
}
}  // namespace

const KronOp& Rep::z(int i, int j) const { return gens[flat(n, i, j)]; }
KronOp& Rep::z(int i, int j) { return gens[flat(n, i, j)]; }

Rep Rep::zeros(int n, SpaceShape shape) {
    Rep r;
    r.n = n;
    r.shape = shape;
    r.gens.assign(static_cast<size_t>(n + 1) * (n + 1), KronOp::zero(shape));
    return r;
}

Rep Rep::trivial(int n, SpaceShape shape) {
    Rep r = zeros(n, shape);
    for (int i = 1; i <= n + 1; ++i) r.z(i, i) = KronOp::identity(shape);
    return r;
}

const CMat& DenseRep::z(int i, int j) const { return gens[flat(n, i, j)]; }
CMat& DenseRep::z(int i, int j) { return gens[flat(n, i, j)]; }

DenseRep DenseRep::zeros(int n, const SpaceShape& shape) {
    DenseRep r;
    r.n = n;
    r.shape = shape;
    const int d = shape.total_dim();
    r.gens.assign(static_cast<size_t>(n + 1) * (n + 1), CMat::Zero(d, d));
    return r;
}

DenseRep materialize(const Rep& r) {
    DenseRep d;
    d.n = r.n;
    d.shape = r.shape;
    d.gens.reserve(r.gens.size());
    for (const auto& g : r.gens) d.gens.push_back(materialize(g));
    return d;
}

KronOp KronAlg::gen(int i, int j) const {
    if (i > rep.n + 1 || j > rep.n + 1)
        throw Error("invalid-parameter", "generator index out of range for rank");
    return rep.z(i, j);
}

CMat DenseAlg::gen(int i, int j) const {
    if (i > rep.n + 1 || j > rep.n + 1)
        throw Error("invalid-parameter", "generator index out of range for rank");
    return rep.z(i, j);
}

Cplx CharacterAlg::gen(int i, int j) const {
    if (i > n + 1 || j > n + 1)
        throw Error("invalid-parameter", "generator index out of range for rank");
    return i == j ? Cplx(1.0) : Cplx(0.0);
}

void RelationReport::finalize(double tolerance) {
    tol = tolerance;
    std::sort(entries.begin(), entries.end(), [](const RelationEntry& a, const RelationEntry& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.indices < b.indices;
    });
    max_residual = 0.0;
    for (const auto& e : entries) max_residual = std::max(max_residual, e.residual);
    pass = max_residual <= tolerance;
}

namespace {

template <class RepT, class AlgT>
RelationReport check_impl(const RepT& r, const std::vector<Relation>& rels, double tol,
                          int margin) {
    RelationReport report;
    report.entries.resize(rels.size());
    AlgT alg{r};
    std::string failure;
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(rels.size()); ++k) {
        try {
            const Relation& rel = rels[k];
            const int m = margin >= 0 ? margin : rel.degree;
            RelationEntry e;
            e.id = rel.id;
            e.indices = rel.indices;
            auto lhs = eval_star_poly(rel.lhs, alg);
            auto rhs = eval_star_poly(rel.rhs, alg);
            if constexpr (std::is_same_v<AlgT, KronAlg>) {
                const KronOp diff = merge_terms(ksub(lhs, rhs));
                bool exact = false;
                double v = interior_norm(diff, m, &exact);
                // a certified bound that misses the tolerance gets one exact retry
                if (!exact && v > tol) {
                    try {
                        v = op_norm(materialize_interior(diff, m));
                        exact = true;
                    } catch (const Error&) {
                    }
                }
                e.residual = v;
                e.exact_norm = exact;
            } else {
                e.residual = op_norm(compress_interior(r.shape, lhs - rhs, m));
                e.exact_norm = true;
            }
            report.entries[k] = std::move(e);
        } catch (const std::exception& ex) {
#pragma omp critical
            if (failure.empty()) failure = ex.what();
        }
    }
    if (!failure.empty()) {
        const auto colon = failure.find(':');
        throw Error(colon == std::string::npos ? "check-failed" : failure.substr(0, colon),
                    colon == std::string::npos ? failure : failure.substr(colon + 2));
    }
    report.finalize(tol);
    return report;
}

}  // namespace

RelationReport check_relation_list(const Rep& r, const std::vector<Relation>& rels, double tol,
                                   int margin) {
    return check_impl<Rep, KronAlg>(r, rels, tol, margin);
}

RelationReport check_relation_list(const DenseRep& r, const std::vector<Relation>& rels,
                                   double tol, int margin) {
    return check_impl<DenseRep, DenseAlg>(r, rels, tol, margin);
}

}  // namespace qz
