#include "qzero/azero.hpp"

namespace qz {

namespace {

StarPolynomial zg(int i, int j) { return poly_gen(i, j); }

StarPolynomial commutator(const StarPolynomial& a, const StarPolynomial& b) {
    return poly_sum({{+1, poly_prod({a, b})}, {-1, poly_prod({b, a})}});
}

Relation make(const std::string& id, std::vector<int> idx, StarPolynomial lhs,
              StarPolynomial rhs) {
    Relation r;
    r.id = id;
    r.indices = std::move(idx);
    r.degree = std::max(lhs.degree(), rhs.degree());
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

}  // namespace

StarPolynomial star_formula_rhs(int n, int r, int s) {
    std::vector<StarPolynomial> fs;
    if (r > s) {
        for (int k = 1; k <= s - 1; ++k) fs.push_back(zg(k, k));
        for (int k = s; k <= r - 1; ++k) fs.push_back(zg(k, k + 1));
        for (int k = r + 1; k <= n + 1; ++k) fs.push_back(zg(k, k));
    } else if (r < s) {
        for (int k = 1; k <= r - 1; ++k) fs.push_back(zg(k, k));
        for (int k = r + 1; k <= s; ++k) fs.push_back(zg(k, k - 1));
        for (int k = s + 1; k <= n + 1; ++k) fs.push_back(zg(k, k));
    } else {
        for (int k = 1; k <= n + 1; ++k)
            if (k != s) fs.push_back(zg(k, k));
    }
    return poly_prod(fs);
}

std::vector<Relation> relation_catalog(int n) {
    if (n < 1) throw Error("invalid-parameter", "rank must be >= 1");
    const int m = n + 1;
    std::vector<Relation> out;
    const StarPolynomial zero = poly_scalar(0.0);
    const StarPolynomial one = poly_scalar(1.0);

    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int l = j + 1; l <= m; ++l)
                out.push_back(make("comm-z1", {i, j, l}, poly_prod({zg(i, j), zg(i, l)}), zero));

    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= m; ++i)
            for (int k = i + 1; k <= m; ++k)
                out.push_back(make("comm-z2", {i, k, j}, poly_prod({zg(i, j), zg(k, j)}), zero));

    for (int i = 1; i <= m; ++i)
        for (int k = i + 1; k <= m; ++k)
            for (int j = 1; j <= m; ++j)
                for (int l = j + 1; l <= m; ++l) {
                    if (std::max(i, j) >= std::min(k, l))
                        out.push_back(
                            make("comm-z3", {i, j, k, l}, poly_prod({zg(i, l), zg(k, j)}), zero));
                    out.push_back(
                        make("comm-z4", {i, j, k, l}, commutator(zg(i, l), zg(k, j)), zero));
                    if (std::max(i, j) + 1 < std::min(k, l))
                        out.push_back(
                            make("comm-z5", {i, j, k, l}, commutator(zg(i, j), zg(k, l)), zero));
                    if (std::max(i, j) + 1 == std::min(k, l))
                        out.push_back(make("comm-z6", {i, j, k, l}, commutator(zg(i, j), zg(k, l)),
                                           poly_prod({zg(i, l), zg(k, j)})));
                }

    {
        std::vector<StarPolynomial> diag;
        for (int k = 1; k <= m; ++k) diag.push_back(zg(k, k));
        out.push_back(make("z7a", {}, poly_prod(diag), one));
    }

    for (int r = 1; r <= m; ++r)
        for (int s = 1; s <= m; ++s)
            out.push_back(make("comm-z7", {r, s}, poly_adj(zg(r, s)), star_formula_rhs(n, r, s)));

    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int r = 1; r <= m; ++r)
                for (int s = 1; s <= m; ++s) {
                    if (i == r || j == s) continue;
                    out.push_back(make("comm-z8", {i, j, r, s},
                                       poly_prod({poly_adj(zg(i, j)), zg(r, s)}),
                                       poly_prod({zg(r, s), poly_adj(zg(i, j))})));
                }

    for (int j = 1; j <= m; ++j) {
        std::vector<std::pair<int, StarPolynomial>> row, col;
        for (int k = 1; k <= j; ++k)
            row.emplace_back(+1, poly_prod({zg(j, k), poly_adj(zg(j, k))}));
        for (int k = j; k <= m; ++k)
            col.emplace_back(+1, poly_prod({poly_adj(zg(k, j)), zg(k, j)}));
        out.push_back(make("comm-z9", {j, 0}, poly_sum(row), one));
        out.push_back(make("comm-z9", {j, 1}, poly_sum(col), one));
    }
    return out;
}

RelationReport check_relations(const Rep& r, double tol, int margin) {
    return check_relation_list(r, relation_catalog(r.n), tol, margin);
}

RelationReport check_relations(const DenseRep& r, double tol, int margin) {
    return check_relation_list(r, relation_catalog(r.n), tol, margin);
}

RelationReport projection_diagnostics(const Rep& r, double tol, int margin) {
    if (r.n != 2) throw Error("invalid-parameter", "projection diagnostics cover rank 2");
    std::vector<Relation> rels;
    const StarPolynomial zero = poly_scalar(0.0);
    const StarPolynomial one = poly_scalar(1.0);

    auto p = [&](int i, int j) { return poly_prod({poly_adj(zg(i, j)), zg(i, j)}); };
    auto q = [&](int i, int j) { return poly_prod({zg(i, j), poly_adj(zg(i, j))}); };

    std::vector<std::pair<int, int>> lower;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= i; ++j) lower.emplace_back(i, j);

    for (auto [i, j] : lower) {
        rels.push_back(make("proj-idem", {i, j, 0}, poly_prod({p(i, j), p(i, j)}), p(i, j)));
        rels.push_back(make("proj-idem", {i, j, 1}, poly_prod({q(i, j), q(i, j)}), q(i, j)));
        rels.push_back(make("proj-selfadj", {i, j, 0}, poly_adj(p(i, j)), p(i, j)));
        rels.push_back(make("proj-selfadj", {i, j, 1}, poly_adj(q(i, j)), q(i, j)));
        rels.push_back(make("gen-partial-isometry", {i, j},
                            poly_prod({zg(i, j), poly_adj(zg(i, j)), zg(i, j)}), zg(i, j)));
    }

    // pairwise commutators of the full p/q family
    std::vector<std::pair<std::vector<int>, StarPolynomial>> fam;
    for (auto [i, j] : lower) {
        fam.push_back({{i, j, 0}, p(i, j)});
        fam.push_back({{i, j, 1}, q(i, j)});
    }
    for (size_t a = 0; a < fam.size(); ++a)
        for (size_t b = a + 1; b < fam.size(); ++b) {
            std::vector<int> idx = fam[a].first;
            idx.insert(idx.end(), fam[b].first.begin(), fam[b].first.end());
            rels.push_back(
                make("proj-commute", idx, commutator(fam[a].second, fam[b].second), zero));
        }

    rels.push_back(make("unitary-sum", {0},
                        poly_sum({{+1, p(1, 1)}, {+1, p(2, 1)}, {+1, p(3, 1)}}), one));
    rels.push_back(make("unitary-sum", {1}, poly_sum({{+1, p(2, 2)}, {+1, p(3, 2)}}), one));
    rels.push_back(make("unitary-sum", {2}, p(3, 3), one));
    rels.push_back(make("unitary-sum", {3},
                        poly_sum({{+1, q(3, 1)}, {+1, q(3, 2)}, {+1, q(3, 3)}}), one));
    rels.push_back(make("unitary-sum", {4}, poly_sum({{+1, q(2, 1)}, {+1, q(2, 2)}}), one));
    rels.push_back(make("unitary-sum", {5}, q(1, 1), one));

    rels.push_back(make("derived-eq", {0}, p(3, 1), q(3, 1)));
    rels.push_back(make("derived-eq", {1}, p(1, 1), q(2, 2)));
    rels.push_back(make("derived-eq", {2}, p(2, 2), q(3, 3)));
    rels.push_back(make("derived-eq", {3}, p(2, 1), poly_sum({{+1, q(2, 1)}, {-1, q(3, 1)}})));
    rels.push_back(make("derived-eq", {4}, p(3, 2), poly_sum({{+1, q(3, 2)}, {+1, q(3, 1)}})));

    // partial isometry of every length-2 product of generators/adjoints, i >= j
    std::vector<std::pair<std::vector<int>, StarPolynomial>> atoms;
    for (auto [i, j] : lower) {
        atoms.push_back({{i, j, 0}, zg(i, j)});
        atoms.push_back({{i, j, 1}, poly_adj(zg(i, j))});
    }
    for (const auto& [ia, fa] : atoms)
        for (const auto& [ib, fb] : atoms) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            const StarPolynomial v = poly_prod({fa, fb});
            rels.push_back(make("pair-partial-isometry", idx,
                                poly_prod({v, poly_adj(v), v}), v));
        }

    return check_relation_list(r, rels, tol, margin);
}

std::vector<Relation> su02_relations() {
    std::vector<Relation> out;
    const StarPolynomial zero = poly_scalar(0.0);
    const StarPolynomial one = poly_scalar(1.0);
    out.push_back(make("su02", {0},
                       poly_sum({{+1, poly_prod({poly_adj(zg(1, 1)), zg(1, 1)})},
                                 {+1, poly_prod({poly_adj(zg(2, 1)), zg(2, 1)})}}),
                       one));
    out.push_back(make("su02", {1}, poly_prod({zg(1, 1), poly_adj(zg(1, 1))}), one));
    out.push_back(make("su02", {2}, poly_prod({zg(1, 1), zg(1, 2)}), zero));
    out.push_back(make("su02", {3}, poly_prod({zg(1, 1), zg(2, 1)}), zero));
    out.push_back(make("su02", {4}, poly_prod({zg(2, 1), zg(1, 2)}),
                       poly_prod({zg(1, 2), zg(2, 1)})));
    out.push_back(make("su02", {5}, poly_adj(zg(1, 1)), zg(2, 2)));
    out.push_back(make("su02", {6}, poly_adj(zg(2, 1)), zg(1, 2)));
    return out;
}

}  // namespace qz
