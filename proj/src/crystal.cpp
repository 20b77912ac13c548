#include "qzero/crystal.hpp"

#include <algorithm>
#include <cmath>

#include "qzero/azero.hpp"

namespace qz {

Cplx rescale_factor(int i, int j, double q) {
    if (!(q > 0.0 && q < 1.0)) throw Error("invalid-parameter", "q must lie in (0,1)");
    const int e = std::min(i - j, 0);
    if (e == 0) return 1.0;
    double v = 1.0;
    for (int k = 0; k < -e; ++k) v *= -q;
    return Cplx(1.0 / v);
}

ZRep crystal_psi_sk(int n, int k, int dim) {
    if (k < 1 || k > n) throw Error("invalid-parameter", "letter out of range");
    ZRep r;
    static_cast<Rep&>(r) = Rep::zeros(n, half_shape(dim));
    r.word.n = n;
    r.word.letters = {k};
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            KronTerm t;
            if (i == k && j == k)
                t.blocks.push_back(Block::shift(dim));
            else if (i == k + 1 && j == k + 1)
                t.blocks.push_back(Block::shift_adj(dim));
            else if ((i == k && j == k + 1) || (i == k + 1 && j == k))
                t.blocks.push_back(Block::ground(dim));
            else if (i == j)
                t.blocks.push_back(Block::id(dim));
            else
                continue;
            r.z(i, j).terms.push_back(std::move(t));
        }
    return r;
}

ZRep crystal_chi(int n, const std::vector<Cplx>& phases) {
    if (static_cast<int>(phases.size()) != n)
        throw Error("invalid-phase", "need exactly n phases");
    for (const Cplx& p : phases)
        if (std::abs(std::abs(p) - 1.0) > 1e-12)
            throw Error("invalid-phase", "phase is not unit modulus");
    ZRep r;
    static_cast<Rep&>(r) = Rep::zeros(n, scalar_shape());
    r.phases = phases;
    r.word.n = n;
    for (int i = 1; i <= n + 1; ++i) {
        Cplx v;
        if (i == 1)
            v = phases[0];
        else if (i == n + 1)
            v = std::conj(phases[n - 1]);
        else
            v = std::conj(phases[i - 2]) * phases[i - 1];
        r.z(i, i) = KronOp::scalar(v);
    }
    return r;
}

ZRep crystal_convolve(const ZRep& a, const ZRep& b) {
    if (a.n != b.n) throw Error("incompatible-representations", "rank mismatch");
    ZRep r;
    static_cast<Rep&>(r) = Rep::zeros(a.n, concat(a.shape, b.shape));
    r.phases = a.phases.empty() ? b.phases : a.phases;
    r.word.n = a.n;
    r.word.letters = a.word.letters;
    r.word.letters.insert(r.word.letters.end(), b.word.letters.begin(), b.word.letters.end());
    for (int i = 1; i <= a.n + 1; ++i)
        for (int j = 1; j <= a.n + 1; ++j) {
            KronOp acc = KronOp::zero(r.shape);
            for (int k = std::min(i, j); k <= std::max(i, j); ++k)
                acc = kadd(acc, ktensor(a.z(i, k), b.z(k, j)));
            r.z(i, j) = std::move(acc);
        }
    return r;
}

ZRep crystal_gens_limit(int n, const std::vector<Cplx>& phases, const ReducedWord& word,
                        int dim) {
    if (word.n != n) throw Error("invalid-word", "word rank does not match n");
    word.validate();
    ZRep r = crystal_chi(n, phases);
    for (int k : word.letters) r = crystal_convolve(r, crystal_psi_sk(n, k, dim));
    r.word = word;
    return r;
}

Rep rescaled_gens(const QRep& r) {
    if (!r.q) throw Error("invalid-parameter", "representation carries no q");
    Rep out = Rep::zeros(r.n, r.shape);
    for (int i = 1; i <= r.n + 1; ++i)
        for (int j = 1; j <= r.n + 1; ++j)
            out.z(i, j) = kscale(rescale_factor(i, j, *r.q), r.z(i, j));
    return out;
}

LimitScanReport limit_scan(int n, const std::vector<Cplx>& phases, const ReducedWord& word,
                           int dim, const std::vector<double>& q_grid, int margin,
                           double threshold) {
    if (q_grid.empty()) throw Error("invalid-parameter", "empty q grid");
    for (size_t k = 0; k + 1 < q_grid.size(); ++k)
        if (!(q_grid[k] > q_grid[k + 1]))
            throw Error("invalid-parameter", "q grid must be strictly decreasing");
    for (double q : q_grid)
        if (!(q > 0.0 && q < 1.0)) throw Error("invalid-parameter", "q grid must lie in (0,1)");

    const ZRep target = crystal_gens_limit(n, phases, word, dim);
    LimitScanReport report;
    report.q_grid = q_grid;
    for (double q : q_grid) {
        const Rep scaled = rescaled_gens(build_qrep(n, phases, word, q, dim));
        double dev = 0.0;
        for (int i = 1; i <= n + 1; ++i)
            for (int j = 1; j <= n + 1; ++j)
                dev = std::max(dev, interior_norm(ksub(scaled.z(i, j), target.z(i, j)), margin));
        report.deviations.push_back(dev);
    }
    for (size_t k = 0; k + 1 < report.deviations.size(); ++k) {
        const double a = report.deviations[k], b = report.deviations[k + 1];
        report.slopes.push_back(a > 0.0 ? b / a : 0.0);
    }
    const double thr = threshold > 0.0 ? threshold : 2.0 * q_grid.back();
    bool decreasing = true;
    for (size_t k = 0; k + 1 < report.deviations.size(); ++k)
        if (!(report.deviations[k + 1] < report.deviations[k])) decreasing = false;
    const bool small = report.deviations.back() < thr;
    report.verdict = (decreasing && small) ? "converged" : "inconclusive";
    return report;
}

RelationReport check_y_relations(const Rep& r, double tol, int margin) {
    std::vector<Relation> rels;
    for (auto& rel : relation_catalog(r.n)) {
        if (rel.id == "comm-z7" || rel.id == "comm-z8" || rel.id == "comm-z9") continue;
        rels.push_back(std::move(rel));
    }
    return check_relation_list(r, rels, tol, margin);
}

}  // namespace qz
