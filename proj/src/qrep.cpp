#include "qzero/qrep.hpp"

#include <cmath>

namespace qz {

namespace {

void validate_phases(const std::vector<Cplx>& phases) {
    for (const Cplx& p : phases)
        if (std::abs(std::abs(p) - 1.0) > 1e-12)
            throw Error("invalid-phase", "phase is not unit modulus");
}

Cplx ipow(double base, int e) {
    double v = 1.0;
    for (int k = 0; k < std::abs(e); ++k) v *= base;
    return e >= 0 ? Cplx(v) : Cplx(1.0 / v);
}

}  // namespace

QRep chi_lambda(int n, const std::vector<Cplx>& phases) {
    if (static_cast<int>(phases.size()) != n)
        throw Error("invalid-phase", "need exactly n phases");
    validate_phases(phases);
    QRep r;
    static_cast<Rep&>(r) = Rep::zeros(n, scalar_shape());
    r.q = std::nullopt;
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

QRep psi_sk(int n, int k, double q, int dim) {
    if (!(q > 0.0 && q < 1.0)) throw Error("invalid-parameter", "q must lie in (0,1)");
    if (k < 1 || k > n) throw Error("invalid-parameter", "letter out of range");
    const SpaceShape shape = half_shape(dim);
    QRep r;
    static_cast<Rep&>(r) = Rep::zeros(n, shape);
    r.q = q;
    r.word.n = n;
    r.word.letters = {k};

    const CMat shift_damped = make_shift(dim).entries *
                              make_diag(dim, [&](int j) { return std::sqrt(1.0 - std::pow(q, 2 * j)); }).entries;
    const CMat up = make_diag(dim, [&](int j) { return -std::pow(q, j + 1); }).entries;
    const CMat down = make_diag(dim, [&](int j) { return std::pow(q, j); }).entries;

    for (int i = 1; i <= n + 1; ++i) {
        for (int j = 1; j <= n + 1; ++j) {
            KronTerm t;
            if (i == k && j == k)
                t.blocks.push_back(Block::custom(shift_damped));
            else if (i == k + 1 && j == k + 1)
                t.blocks.push_back(Block::custom(shift_damped.adjoint()));
            else if (i == k && j == k + 1)
                t.blocks.push_back(Block::custom(up));
            else if (i == k + 1 && j == k)
                t.blocks.push_back(Block::custom(down));
            else if (i == j)
                t.blocks.push_back(Block::id(dim));
            else
                continue;
            r.z(i, j).terms.push_back(std::move(t));
        }
    }
    return r;
}

QRep convolve(const QRep& a, const QRep& b) {
    if (a.n != b.n) throw Error("incompatible-representations", "rank mismatch");
    if (a.q && b.q && *a.q != *b.q)
        throw Error("incompatible-representations", "deformation parameter mismatch");
    QRep r;
    static_cast<Rep&>(r) = Rep::zeros(a.n, concat(a.shape, b.shape));
    r.q = a.q ? a.q : b.q;
    r.phases = a.phases.empty() ? b.phases : a.phases;
    r.word.n = a.n;
    r.word.letters = a.word.letters;
    r.word.letters.insert(r.word.letters.end(), b.word.letters.begin(), b.word.letters.end());
    for (int i = 1; i <= a.n + 1; ++i)
        for (int j = 1; j <= a.n + 1; ++j) {
            KronOp acc = KronOp::zero(r.shape);
            for (int k = 1; k <= a.n + 1; ++k)
                acc = kadd(acc, ktensor(a.z(i, k), b.z(k, j)));
            r.z(i, j) = std::move(acc);
        }
    return r;
}

QRep build_qrep(int n, const std::vector<Cplx>& phases, const ReducedWord& word, double q,
                int dim) {
    if (word.n != n) throw Error("invalid-word", "word rank does not match n");
    word.validate();
    QRep r = chi_lambda(n, phases);
    r.q = q;
    for (int k : word.letters) r = convolve(r, psi_sk(n, k, q, dim));
    r.word = word;
    return r;
}

std::vector<Relation> t_relation_catalog(int n, double q) {
    if (!(q > 0.0 && q < 1.0)) throw Error("invalid-parameter", "q must lie in (0,1)");
    const int m = n + 1;
    std::vector<Relation> out;
    auto zg = [](int i, int j) { return poly_gen(i, j); };
    auto make = [](const std::string& id, std::vector<int> idx, StarPolynomial lhs,
                   StarPolynomial rhs) {
        Relation r;
        r.id = id;
        r.indices = std::move(idx);
        r.degree = std::max(lhs.degree(), rhs.degree());
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        return r;
    };
    const StarPolynomial zero = poly_scalar(0.0);

    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int l = j + 1; l <= m; ++l)
                out.push_back(make("t1", {i, j, l}, poly_prod({zg(i, j), zg(i, l)}),
                                   poly_prod({poly_scalar(q), zg(i, l), zg(i, j)})));
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= m; ++i)
            for (int k = i + 1; k <= m; ++k)
                out.push_back(make("t2", {i, k, j}, poly_prod({zg(i, j), zg(k, j)}),
                                   poly_prod({poly_scalar(q), zg(k, j), zg(i, j)})));
    for (int i = 1; i <= m; ++i)
        for (int k = i + 1; k <= m; ++k)
            for (int j = 1; j <= m; ++j)
                for (int l = j + 1; l <= m; ++l) {
                    out.push_back(make("t3", {i, j, k, l},
                                       poly_sum({{+1, poly_prod({zg(i, l), zg(k, j)})},
                                                 {-1, poly_prod({zg(k, j), zg(i, l)})}}),
                                       zero));
                    out.push_back(make("t4", {i, j, k, l},
                                       poly_sum({{+1, poly_prod({zg(i, j), zg(k, l)})},
                                                 {-1, poly_prod({zg(k, l), zg(i, j)})}}),
                                       poly_prod({poly_scalar(q - 1.0 / q), zg(i, l), zg(k, j)})));
                }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int r = 1; r <= m; ++r)
                for (int s = 1; s <= m; ++s) {
                    if (i == r || j == s) continue;
                    out.push_back(make("t8", {i, j, r, s},
                                       poly_prod({zg(i, j), poly_adj(zg(r, s))}),
                                       poly_prod({poly_adj(zg(r, s)), zg(i, j)})));
                }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            std::vector<std::pair<int, StarPolynomial>> row, col;
            for (int k = 1; k <= m; ++k) {
                row.emplace_back(+1, poly_prod({zg(i, k), poly_adj(zg(j, k))}));
                col.emplace_back(+1, poly_prod({poly_adj(zg(k, i)), zg(k, j)}));
            }
            const StarPolynomial delta = poly_scalar(i == j ? 1.0 : 0.0);
            out.push_back(make("unit-row", {i, j}, poly_sum(row), delta));
            out.push_back(make("unit-col", {i, j}, poly_sum(col), delta));
        }
    return out;
}

RelationReport check_t_relations(const QRep& r, double tol, int margin) {
    if (!r.q) throw Error("invalid-parameter", "representation carries no q");
    return check_relation_list(r, t_relation_catalog(r.n, *r.q), tol, margin);
}

KronOp quantum_determinant_kron(const QRep& r) {
    if (r.n > 6) throw Error("capacity-exceeded", "determinant enumeration limited to n <= 6");
    const double q = r.q.value_or(0.0);
    KronOp acc = KronOp::zero(r.shape);
    for (const auto& sigma : all_permutations(r.n + 1)) {
        // merge as the product grows: paths through identity blocks coincide
        // and the term count stays small
        KronOp prod = r.z(1, sigma.images[0]);
        for (int k = 2; k <= r.n + 1; ++k)
            prod = merge_terms(kmul(prod, r.z(k, sigma.images[k - 1])));
        acc = merge_terms(kadd(acc, kscale(ipow(-q, sigma.length()), prod)));
    }
    return acc;
}

TruncatedOperator quantum_determinant(const QRep& r) {
    return to_truncated(quantum_determinant_kron(r));
}

double qdet_residual(const QRep& r, int margin) {
    return interior_norm(ksub(quantum_determinant_kron(r), KronOp::identity(r.shape)), margin);
}

KronOp cofactor_kron(const QRep& rep, int r, int s) {
    if (rep.n > 6) throw Error("capacity-exceeded", "cofactor enumeration limited to n <= 6");
    if (r < 1 || r > rep.n + 1 || s < 1 || s > rep.n + 1)
        throw Error("invalid-parameter", "cofactor indices out of range");
    const double q = rep.q.value_or(0.0);
    std::vector<int> rows, cols;
    for (int k = 1; k <= rep.n + 1; ++k) {
        if (k != r) rows.push_back(k);
        if (k != s) cols.push_back(k);
    }
    KronOp acc = KronOp::zero(rep.shape);
    if (rep.n == 0) return KronOp::identity(rep.shape);
    for (const auto& sigma : all_permutations(rep.n)) {
        KronOp prod = rep.z(rows[0], cols[sigma.images[0] - 1]);
        for (int k = 2; k <= rep.n; ++k)
            prod = merge_terms(kmul(prod, rep.z(rows[k - 1], cols[sigma.images[k - 1] - 1])));
        acc = merge_terms(kadd(acc, kscale(ipow(-q, sigma.length()), prod)));
    }
    return acc;
}

TruncatedOperator cofactor(const QRep& rep, int r, int s) {
    return to_truncated(cofactor_kron(rep, r, s));
}

RelationReport check_star_formula(const QRep& rep, double tol, int margin) {
    if (!rep.q) throw Error("invalid-parameter", "representation carries no q");
    const double q = *rep.q;
    RelationReport report;
    for (int r = 1; r <= rep.n + 1; ++r)
        for (int s = 1; s <= rep.n + 1; ++s) {
            RelationEntry e;
            e.id = "star";
            e.indices = {r, s};
            const KronOp lhs = kadjoint(rep.z(r, s));
            const KronOp rhs = kscale(ipow(-q, s - r), cofactor_kron(rep, r, s));
            bool exact = false;
            e.residual = interior_norm(ksub(lhs, rhs), margin, &exact);
            e.exact_norm = exact;
            report.entries.push_back(std::move(e));
        }
    report.finalize(tol);
    return report;
}

int lemma_perm_min(int n, int r, int s) {
    if (!(1 <= s && s < r && r <= n + 1))
        throw Error("invalid-parameter", "need 1 <= s < r <= n+1");
    if (n > 7) throw Error("capacity-exceeded", "enumeration limited to n <= 7");
    std::vector<int> iv(n), jv(n);
    for (int k = 1; k <= n; ++k) {
        iv[k - 1] = k < r ? k : k + 1;
        jv[k - 1] = k < s ? k : k + 1;
    }
    int best = -1;
    for (const auto& sigma : all_permutations(n)) {
        int sum = 0;
        for (int k = 1; k <= n; ++k) {
            const int d = jv[sigma.images[k - 1] - 1] - iv[k - 1];
            if (d > 0) sum += d;
        }
        if (best < 0 || sum < best) best = sum;
    }
    return best;
}

}  // namespace qz
