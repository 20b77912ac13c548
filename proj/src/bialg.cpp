#include "qzero/bialg.hpp"

#include <algorithm>

namespace qz {

KronOp delta_on_models(const Rep& a, const Rep& b, int i, int j) {
    if (a.n != b.n) throw Error("incompatible-representations", "rank mismatch");
    KronOp acc = KronOp::zero(concat(a.shape, b.shape));
    for (int k = std::min(i, j); k <= std::max(i, j); ++k)
        acc = kadd(acc, ktensor(a.z(i, k), b.z(k, j)));
    return acc;
}

Rep delta_rep(const Rep& a, const Rep& b) {
    Rep out = Rep::zeros(a.n, concat(a.shape, b.shape));
    for (int i = 1; i <= a.n + 1; ++i)
        for (int j = 1; j <= a.n + 1; ++j) out.z(i, j) = delta_on_models(a, b, i, j);
    return out;
}

BialgebraReport check_bialgebra(const Rep& a, const Rep& b, const Rep& c, double tol,
                                int margin) {
    if (a.n != b.n || b.n != c.n)
        throw Error("incompatible-representations", "rank mismatch");
    BialgebraReport report;
    report.relations = check_relations(delta_rep(a, b), tol, margin);

    for (int i = 1; i <= a.n + 1; ++i)
        for (int j = 1; j <= a.n + 1; ++j) {
            const SpaceShape full = concat(concat(a.shape, b.shape), c.shape);
            KronOp lhs = KronOp::zero(full);
            KronOp rhs = KronOp::zero(full);
            for (int k = std::min(i, j); k <= std::max(i, j); ++k) {
                lhs = kadd(lhs, ktensor(delta_on_models(a, b, i, k), c.z(k, j)));
                rhs = kadd(rhs, ktensor(a.z(i, k), delta_on_models(b, c, k, j)));
            }
            RelationEntry e;
            e.id = "coassoc";
            e.indices = {i, j};
            e.residual = symbolic_term_diff(lhs, rhs);
            report.coassociativity.push_back(std::move(e));
        }

    const Rep eps = Rep::trivial(a.n, scalar_shape());
    for (int i = 1; i <= a.n + 1; ++i)
        for (int j = 1; j <= a.n + 1; ++j) {
            RelationEntry l;
            l.id = "counit-left";
            l.indices = {i, j};
            l.residual = symbolic_term_diff(delta_on_models(eps, b, i, j), b.z(i, j));
            report.counit.push_back(std::move(l));
            RelationEntry r;
            r.id = "counit-right";
            r.indices = {i, j};
            r.residual = symbolic_term_diff(delta_on_models(a, eps, i, j), a.z(i, j));
            report.counit.push_back(std::move(r));
        }

    report.max_residual = report.relations.max_residual;
    for (const auto& e : report.coassociativity)
        report.max_residual = std::max(report.max_residual, e.residual);
    for (const auto& e : report.counit)
        report.max_residual = std::max(report.max_residual, e.residual);
    report.pass = report.relations.pass && report.max_residual <= std::max(tol, 1e-12);
    return report;
}

Rep a1_quotient(const Rep& r1, double tol) {
    if (r1.n != 1) throw Error("invalid-parameter", "input must have rank 1");
    const RelationReport check = check_relations(r1, tol, -1);
    if (!check.pass)
        throw Error("not-a-representation",
                    "input violates the rank-1 relations (max residual " +
                        std::to_string(check.max_residual) + ")");
    Rep out = Rep::zeros(2, r1.shape);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i <= 2 && j <= 2)
                out.z(i, j) = r1.z(i, j);
            else if (i == j)
                out.z(i, j) = KronOp::identity(r1.shape);
        }
    return out;
}

double a1_quotient_intertwining_residual(const Rep& r1) {
    const Rep w = a1_quotient(r1);
    // Delta^(1) on the rank-1 family, extended by w over the rank-2 indices
    double worst = 0.0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const KronOp lhs = delta_on_models(w, w, i, j);
            KronOp rhs = KronOp::zero(concat(r1.shape, r1.shape));
            if (i <= 2 && j <= 2) {
                for (int k = std::min(i, j); k <= std::max(i, j); ++k)
                    rhs = kadd(rhs, ktensor(r1.z(i, k), r1.z(k, j)));
            } else if (i == j) {
                rhs = KronOp::identity(rhs.shape);
            }
            double d = symbolic_term_diff(lhs, rhs);
            if (d != 0.0) {
                // fall back to a dense comparison; term structures may differ
                // even when the operators agree
                const CMat dm = materialize(lhs) - materialize(rhs);
                d = dm.cwiseAbs().maxCoeff();
            }
            worst = std::max(worst, d);
        }
    return worst;
}

double antipode_obstruction(int dim) {
    if (dim < 2) throw Error("invalid-dimension", "need dim >= 2");
    const TruncatedOperator s = make_shift(dim);
    return op_norm(s.adjoint() * s - identity_op(s.shape));
}

}  // namespace qz
