#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qzero/azero.hpp"
#include "qzero/crystal.hpp"
#include "qzero/qrep.hpp"

using namespace qz;

namespace {

const Cplx I1(0.0, 1.0);

CMat diag_pow(int dim, double q, int offset, double sign) {
    return make_diag(dim, [&](int k) { return sign * std::pow(q, k + offset); }).entries;
}

}  // namespace

TEST_CASE("character assignments") {
    const QRep chi = chi_lambda(2, {I1, 1.0});
    CHECK(materialize(chi.z(1, 1))(0, 0) == I1);
    CHECK(materialize(chi.z(2, 2))(0, 0) == -I1);
    CHECK(materialize(chi.z(3, 3))(0, 0) == Cplx(1.0));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) CHECK(chi.z(i, j).is_structural_zero());

    const QRep one = chi_lambda(1, {1.0});
    CHECK(materialize(one.z(1, 1))(0, 0) == Cplx(1.0));
    CHECK(materialize(one.z(2, 2))(0, 0) == Cplx(1.0));

    CHECK_THROWS_WITH_AS(chi_lambda(2, {2.0, 1.0}), doctest::Contains("invalid-phase"), Error);
    CHECK_THROWS_WITH_AS(chi_lambda(2, {1.0}), doctest::Contains("invalid-phase"), Error);
}

TEST_CASE("elementary representation blocks") {
    const double q = 0.5;
    const QRep psi = psi_sk(2, 1, q, 3);
    CHECK((materialize(psi.z(1, 2)) - diag_pow(3, q, 1, -1.0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((materialize(psi.z(2, 1)) - diag_pow(3, q, 0, 1.0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((materialize(psi.z(3, 3)) - CMat::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(psi.z(1, 3).is_structural_zero());
    CHECK(psi.z(3, 1).is_structural_zero());

    CHECK_THROWS_WITH_AS(psi_sk(2, 1, 1.5, 3), doctest::Contains("invalid-parameter"), Error);
}

TEST_CASE("convolution expands the block sum") {
    const double q = 0.5;
    const QRep a = psi_sk(2, 1, q, 4), b = psi_sk(2, 2, q, 4);
    const QRep conv = convolve(a, b);
    // only the k = 2 path contributes to t_{1,3}
    const CMat up = diag_pow(4, q, 1, -1.0);
    const CMat want = tensor(TruncatedOperator(half_shape(4), up),
                             TruncatedOperator(half_shape(4), up))
                          .entries;
    CHECK((materialize(conv.z(1, 3)) - want).cwiseAbs().maxCoeff() < 1e-15);

    // convolving with the all-ones character changes nothing
    const QRep neutral = convolve(chi_lambda(2, {1.0, 1.0}), a);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK((materialize(neutral.z(i, j)) - materialize(a.z(i, j)))
                      .cwiseAbs()
                      .maxCoeff() == 0.0);

    CHECK_THROWS_WITH_AS(convolve(a, psi_sk(1, 1, q, 4)),
                         doctest::Contains("incompatible-representations"), Error);
}

TEST_CASE("building representations from reduced words") {
    const QRep chi_only = build_qrep(2, {I1, 1.0}, ReducedWord{2, {}}, 0.5, 5);
    CHECK(chi_only.shape.factors.empty());

    const QRep w1 = build_qrep(2, {1.0, 1.0}, ReducedWord{2, {1}}, 0.5, 5);
    CHECK(w1.shape.factors.size() == 1);

    const QRep w3 = build_qrep(2, {1.0, 1.0}, ReducedWord{2, {1, 2, 1}}, 0.5, 5);
    CHECK(w3.shape.factors.size() == 3);
    CHECK(w3.shape.total_dim() == 125);

    CHECK_THROWS_WITH_AS(build_qrep(2, {1.0, 1.0}, ReducedWord{2, {1, 1}}, 0.5, 5),
                         doctest::Contains("invalid-word"), Error);
}

TEST_CASE("q-level relations hold on the elementary and convolved models") {
    const RelationReport chi_rep = check_t_relations(
        [] {
            QRep r = build_qrep(2, {I1, -1.0}, ReducedWord{2, {}}, 0.3, 4);
            return r;
        }(),
        1e-15, 0);
    CHECK(chi_rep.pass);
    CHECK(chi_rep.max_residual == 0.0);

    const QRep psi = build_qrep(2, {1.0, 1.0}, ReducedWord{2, {1}}, 0.5, 8);
    const RelationReport rep = check_t_relations(psi, 1e-12, 2);
    CHECK(rep.pass);

    // small sweep; the acceptance suite runs the full grid
    for (double q : {0.1, 0.5})
        for (int n : {1, 2})
            for (const auto& w : canonical_reduced_words(n)) {
                const QRep r = build_qrep(n, std::vector<Cplx>(n, I1), w, q, 6);
                const RelationReport rr = check_t_relations(r, 1e-10, 2);
                INFO("n=", n, " q=", q, " word=", w.str());
                CHECK(rr.pass);
            }
}

TEST_CASE("corrupting a generator breaks unitarity by the predicted amount") {
    QRep psi = build_qrep(2, {1.0, 1.0}, ReducedWord{2, {1}}, 0.5, 8);
    psi.z(1, 1) = kscale(1.1, psi.z(1, 1));
    const RelationReport rep = check_t_relations(psi, 1e-10, 2);
    CHECK(!rep.pass);
    double unit_row_11 = 0.0;
    for (const auto& e : rep.entries)
        if (e.id == "unit-row" && e.indices == std::vector<int>{1, 1}) unit_row_11 = e.residual;
    CHECK(unit_row_11 == doctest::Approx(0.21).epsilon(0.02));
}

TEST_CASE("quantum determinant is the identity on the interior") {
    const QRep n1 = build_qrep(1, {1.0}, ReducedWord{1, {1}}, 0.5, 8);
    CHECK(qdet_residual(n1, 2) < 1e-12);

    // scalar characters give exactly 1
    const QRep chi = build_qrep(2, {I1, -I1}, ReducedWord{2, {}}, 0.5, 4);
    const TruncatedOperator d = quantum_determinant(chi);
    CHECK(std::abs(d.entries(0, 0) - Cplx(1.0)) < 1e-15);

    const QRep n2 = build_qrep(2, {I1, 1.0}, ReducedWord{2, {1, 2}}, 0.3, 6);
    CHECK(qdet_residual(n2, 3) < 1e-12);
}

TEST_CASE("cofactor star formula") {
    const double q = 0.5;
    const QRep n1 = build_qrep(1, {1.0}, ReducedWord{1, {1}}, q, 8);
    // D^{2,2} = t_{1,1}, so t_{2,2}* = D^{2,2}
    CHECK(interior_norm(ksub(cofactor_kron(n1, 2, 2), n1.z(1, 1)), 0) < 1e-15);
    CHECK(interior_norm(ksub(kadjoint(n1.z(2, 2)), n1.z(1, 1)), 2) < 1e-14);

    // all-diagonal characters: off-diagonal adjoints vanish together with
    // their cofactors
    const QRep chi = build_qrep(2, {I1, 1.0}, ReducedWord{2, {}}, q, 4);
    CHECK(interior_norm(kadjoint(chi.z(2, 1)), 0) == 0.0);
    CHECK(interior_norm(cofactor_kron(chi, 2, 1), 0) == 0.0);

    const QRep n2 = build_qrep(2, {1.0, I1}, ReducedWord{2, {1, 2}}, 0.3, 8);
    const RelationReport rep = check_star_formula(n2, 1e-12, 3);
    CHECK(rep.pass);
}

TEST_CASE("permutation minimum lemma") {
    CHECK(lemma_perm_min(2, 3, 1) == 2);
    CHECK(lemma_perm_min(2, 2, 1) == 1);
    for (int n = 1; n <= 4; ++n)
        for (int s = 1; s <= n; ++s)
            for (int r = s + 1; r <= n + 1; ++r) CHECK(lemma_perm_min(n, r, s) >= r - s);
    CHECK_THROWS_WITH_AS(lemma_perm_min(2, 1, 1), doctest::Contains("invalid-parameter"), Error);
}

TEST_CASE("rescale factors") {
    CHECK(rescale_factor(2, 1, 0.7) == Cplx(1.0));
    CHECK(rescale_factor(1, 3, 0.5) == Cplx(4.0));
    CHECK(rescale_factor(1, 2, 0.5) == Cplx(-2.0));
}

TEST_CASE("crystal limits match the tabulated canonical matrices") {
    const Cplx L = std::polar(1.0, 0.9), U = std::polar(1.0, -2.0);
    const int d = 5;
    const CMat S = make_shift(d).entries;
    const CMat P0 = rank_one_ground(d).entries;
    const CMat Id = CMat::Identity(d, d);
    auto T2 = [&](const CMat& a, const CMat& b) {
        return tensor(TruncatedOperator(half_shape(d), a), TruncatedOperator(half_shape(d), b))
            .entries;
    };
    auto T3 = [&](const CMat& a, const CMat& b, const CMat& c) {
        return tensor(TruncatedOperator(concat(half_shape(d), half_shape(d)), T2(a, b)),
                      TruncatedOperator(half_shape(d), c))
            .entries;
    };
    auto expect = [&](const KronOp& got, const CMat& want) {
        CHECK((materialize(got) - want).cwiseAbs().maxCoeff() < 1e-15);
    };

    // word e: diagonal phases only
    const ZRep we = crystal_gens_limit(2, {L, U}, ReducedWord{2, {}}, d);
    CHECK(materialize(we.z(1, 1))(0, 0) == L);
    CHECK(materialize(we.z(2, 2))(0, 0) == std::conj(L) * U);
    CHECK(materialize(we.z(3, 3))(0, 0) == std::conj(U));

    // word s1
    const ZRep w1 = crystal_gens_limit(2, {L, U}, ReducedWord{2, {1}}, d);
    expect(w1.z(1, 1), L * S);
    expect(w1.z(1, 2), L * P0);
    expect(w1.z(2, 1), std::conj(L) * U * P0);
    expect(w1.z(2, 2), std::conj(L) * U * CMat(S.adjoint()));
    expect(w1.z(3, 3), std::conj(U) * Id);
    CHECK(w1.z(1, 3).is_structural_zero());
    CHECK(w1.z(2, 3).is_structural_zero());
    CHECK(w1.z(3, 1).is_structural_zero());
    CHECK(w1.z(3, 2).is_structural_zero());

    // word s1s2
    const ZRep w12 = crystal_gens_limit(2, {L, U}, ReducedWord{2, {1, 2}}, d);
    expect(w12.z(1, 1), L * T2(S, Id));
    expect(w12.z(1, 2), L * T2(P0, S));
    expect(w12.z(1, 3), L * T2(P0, P0));
    expect(w12.z(2, 1), std::conj(L) * U * T2(P0, Id));
    expect(w12.z(2, 2), std::conj(L) * U * T2(S.adjoint(), S));
    expect(w12.z(2, 3), std::conj(L) * U * T2(S.adjoint(), P0));
    CHECK(w12.z(3, 1).is_structural_zero());
    expect(w12.z(3, 2), std::conj(U) * T2(Id, P0));
    expect(w12.z(3, 3), std::conj(U) * T2(Id, S.adjoint()));

    // word s1s2s1; the two-term generators carry the character phase on both
    // terms, which is what the full relation catalog forces
    const ZRep w121 = crystal_gens_limit(2, {L, U}, ReducedWord{2, {1, 2, 1}}, d);
    expect(w121.z(1, 1), L * T3(S, Id, S));
    expect(w121.z(1, 2), L * (T3(P0, S, S.adjoint()) + T3(S, Id, P0)));
    expect(w121.z(1, 3), L * T3(P0, P0, Id));
    expect(w121.z(2, 1), std::conj(L) * U * (T3(P0, Id, S) + T3(S.adjoint(), S, P0)));
    expect(w121.z(2, 2), std::conj(L) * U * T3(S.adjoint(), S, S.adjoint()));
    expect(w121.z(2, 3), std::conj(L) * U * T3(S.adjoint(), P0, Id));
    expect(w121.z(3, 1), std::conj(U) * T3(Id, P0, P0));
    expect(w121.z(3, 2), std::conj(U) * T3(Id, P0, S.adjoint()));
    expect(w121.z(3, 3), std::conj(U) * T3(Id, S.adjoint(), Id));
}

TEST_CASE("crystal convolution follows the truncated index range") {
    const Cplx L = std::polar(1.0, 0.4), U = std::polar(1.0, 1.1);
    const ZRep a = crystal_gens_limit(2, {L, U}, ReducedWord{2, {1}}, 4);
    const ZRep b = crystal_gens_limit(2, {1.0, 1.0}, ReducedWord{2, {2}}, 4);
    const ZRep ab = crystal_convolve(a, b);
    // z13 runs over k in {1,2,3}
    KronOp want = ktensor(a.z(1, 1), b.z(1, 3));
    want = kadd(want, ktensor(a.z(1, 2), b.z(2, 3)));
    want = kadd(want, ktensor(a.z(1, 3), b.z(3, 3)));
    CHECK((materialize(ab.z(1, 3)) - materialize(want)).cwiseAbs().maxCoeff() == 0.0);

    // convolution with the trivial one-dimensional model is the identity
    const ZRep triv = crystal_gens_limit(2, {1.0, 1.0}, ReducedWord{2, {}}, 4);
    const ZRep same = crystal_convolve(a, triv);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK((materialize(same.z(i, j)) - materialize(a.z(i, j))).cwiseAbs().maxCoeff() ==
                  0.0);

    // matches the q -> 0 limit of the full convolution entrywise
    const double q = 1e-5;
    const QRep qa = build_qrep(2, {L, U}, ReducedWord{2, {1, 2}}, q, 4);
    const Rep scaled = rescaled_gens(qa);
    const ZRep lim = crystal_convolve(a, b);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK((materialize(scaled.z(i, j)) - materialize(lim.z(i, j)))
                      .cwiseAbs()
                      .maxCoeff() < 3e-5);
}

TEST_CASE("limit scan converges at rate one") {
    std::vector<double> grid;
    for (int k = 1; k <= 10; ++k) grid.push_back(std::pow(2.0, -k));

    const LimitScanReport r1 =
        limit_scan(2, {1.0, 1.0}, ReducedWord{2, {1}}, 8, {1e-1, 1e-2, 1e-3});
    for (size_t k = 0; k < r1.q_grid.size(); ++k)
        CHECK(std::abs(r1.deviations[k] - r1.q_grid[k]) < 1e-9);

    const LimitScanReport r2 = limit_scan(2, {I1, -1.0}, ReducedWord{2, {1, 2, 1}}, 8, grid);
    CHECK(r2.verdict == "converged");
    for (size_t k = 0; k < grid.size(); ++k)
        if (grid[k] <= 0.1) CHECK(r2.deviations[k] <= 1.5 * grid[k]);

    const LimitScanReport r0 = limit_scan(2, {I1, 1.0}, ReducedWord{2, {}}, 8, {0.5, 0.25});
    CHECK(r0.deviations[0] == 0.0);
    CHECK(r0.deviations[1] == 0.0);

    CHECK_THROWS_WITH_AS(limit_scan(2, {1.0, 1.0}, ReducedWord{2, {1}}, 8, {}),
                         doctest::Contains("invalid-parameter"), Error);
}

TEST_CASE("crystallised relations decay linearly in q") {
    // exactly zero on the q = 0 model
    const ZRep zero_model = crystal_gens_limit(2, {I1, 1.0}, ReducedWord{2, {1, 2, 1}}, 6);
    const RelationReport at0 = check_y_relations(zero_model, 1e-12, 4);
    CHECK(at0.pass);

    // bounded by a multiple of q on rescaled q-generators, decreasing
    double prev = 1e9;
    for (double q : {0.2, 0.1, 0.05}) {
        const Rep scaled = rescaled_gens(build_qrep(2, {1.0, 1.0}, ReducedWord{2, {1, 2, 1}}, q, 6));
        const RelationReport rr = check_y_relations(scaled, 1e9, 3);
        CHECK(rr.max_residual < 2.0 * q);
        CHECK(rr.max_residual < prev);
        prev = rr.max_residual;
    }
}
