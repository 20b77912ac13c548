#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "qzero/kron.hpp"
#include "qzero/weyl.hpp"

using namespace qz;

namespace {

CMat random_matrix(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = Cplx(g(rng), g(rng));
    return m;
}

}  // namespace

TEST_CASE("left shift matrix and action") {
    const TruncatedOperator s = make_shift(3);
    CHECK(s.entries(0, 1) == Cplx(1.0));
    CHECK(s.entries(1, 2) == Cplx(1.0));
    CHECK(s.entries.cwiseAbs().sum() == doctest::Approx(2.0));

    // S e_0 = 0
    CVec e0 = CVec::Zero(3);
    e0(0) = 1.0;
    CHECK((s.entries * e0).norm() == 0.0);

    CHECK_THROWS_WITH_AS(make_shift(1), doctest::Contains("invalid-dimension"), Error);
}

TEST_CASE("shift truncation defects sit at the top index") {
    const TruncatedOperator s = make_shift(4);
    const TruncatedOperator id = identity_op(s.shape);
    // S S* = I holds on the interior once the top index is compressed away
    CHECK(interior_residual(s * s.adjoint(), id, 0) == doctest::Approx(1.0));
    CHECK(interior_residual(s * s.adjoint(), id, 1) == doctest::Approx(0.0));
    // S* S = I - P0 exactly; the ground defect is interior by convention
    const TruncatedOperator p0 = rank_one_ground(4);
    CHECK(op_norm(s.adjoint() * s - (id - p0)) == doctest::Approx(0.0));
    CHECK(interior_residual(s.adjoint() * s, id, 0) == doctest::Approx(1.0));
    CHECK(interior_residual(s.adjoint() * s, id, 1) == doctest::Approx(1.0));
    CHECK(interior_residual(s, s, 0) == 0.0);
}

TEST_CASE("diagonal construction") {
    const double q = 0.5;
    const TruncatedOperator d1 = make_diag(3, [&](int k) { return std::pow(q, k); });
    CHECK(d1.entries(0, 0) == Cplx(1.0));
    CHECK(d1.entries(1, 1) == Cplx(0.5));
    CHECK(d1.entries(2, 2) == Cplx(0.25));

    const TruncatedOperator d2 =
        make_diag(3, [&](int k) { return std::sqrt(1.0 - std::pow(q, 2 * k)); });
    CHECK(std::abs(d2.entries(0, 0)) == 0.0);
    CHECK(d2.entries(1, 1).real() == doctest::Approx(std::sqrt(0.75)));
    CHECK(d2.entries(2, 2).real() == doctest::Approx(std::sqrt(0.9375)));

    const TruncatedOperator one = make_diag(5, [](int) { return 1.0; });
    CHECK(op_norm(one - identity_op(one.shape)) == 0.0);

    CHECK_THROWS_WITH_AS(
        make_diag(3, [](int) { return Cplx(std::numeric_limits<double>::infinity(), 0.0); }),
        doctest::Contains("invalid-entry"), Error);
}

TEST_CASE("ground projection") {
    const TruncatedOperator p = rank_one_ground(2);
    CHECK(p.entries(0, 0) == Cplx(1.0));
    CHECK(p.entries(1, 1) == Cplx(0.0));
    CHECK(op_norm(p * p - p) == 0.0);
    const TruncatedOperator s = make_shift(5);
    CHECK(op_norm(rank_one_ground(5) - (identity_op(s.shape) - s.adjoint() * s)) == 0.0);
}

TEST_CASE("tensor products") {
    const TruncatedOperator s3 = make_shift(3);
    const TruncatedOperator i2 = identity_op(half_shape(2));
    const TruncatedOperator t = tensor(i2, s3);
    CHECK(t.dim() == 6);
    CHECK(t.entries.block(0, 0, 3, 3) == s3.entries);
    CHECK(t.entries.block(3, 3, 3, 3) == s3.entries);
    CHECK(t.entries.block(0, 3, 3, 3).isZero(0.0));

    const TruncatedOperator p2 = rank_one_ground(2);
    const TruncatedOperator pp = tensor(p2, p2);
    CHECK(pp.entries(0, 0) == Cplx(1.0));
    CHECK(pp.entries.cwiseAbs().sum() == doctest::Approx(1.0));

    const TruncatedOperator a = tensor(s3, identity_op(half_shape(3)));
    const TruncatedOperator b = tensor(identity_op(half_shape(3)), s3);
    CHECK(op_norm(a * b - tensor(s3, s3)) == 0.0);

    // associativity is exact on entries
    const TruncatedOperator x = tensor(tensor(s3, p2), s3);
    const TruncatedOperator y = tensor(s3, tensor(p2, s3));
    CHECK((x.entries - y.entries).cwiseAbs().maxCoeff() == 0.0);
    CHECK(x.shape == y.shape);

    set_dense_capacity_cap(50);
    CHECK_THROWS_WITH_AS(tensor(tensor(s3, s3), tensor(s3, s3)),
                         doctest::Contains("capacity-exceeded"), Error);
    set_dense_capacity_cap(20000);
}

TEST_CASE("operator norms") {
    CHECK(op_norm(make_shift(8)) == doctest::Approx(1.0));
    const TruncatedOperator id = identity_op(half_shape(4));
    CHECK(op_norm(Cplx(2.0) * id) == doctest::Approx(2.0));

    const double q = 0.3;
    const TruncatedOperator d = make_diag(3, [&](int k) { return std::pow(q, k); });
    CHECK(op_norm(d - rank_one_ground(3)) == doctest::Approx(0.3));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const CMat a = random_matrix(12, rng), b = random_matrix(12, rng);
        CHECK(op_norm(CMat(a * b)) <= op_norm(a) * op_norm(b) + 1e-10);
    }
}

TEST_CASE("normal spectra with clustering") {
    auto clusters = spectrum_normal(rank_one_ground(3), 1e-12);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].value == Cplx(0.0));
    CHECK(clusters[0].multiplicity == 2);
    CHECK(clusters[1].value == Cplx(1.0));

    const TruncatedOperator li = Cplx(0, 1) * identity_op(half_shape(4));
    clusters = spectrum_normal(li, 1e-12);
    REQUIRE(clusters.size() == 1);
    CHECK(std::abs(clusters[0].value - Cplx(0, 1)) < 1e-12);
    CHECK(clusters[0].multiplicity == 4);

    clusters = spectrum_normal(Cplx(0, -1) * rank_one_ground(2), 1e-12);
    REQUIRE(clusters.size() == 2);
    CHECK(std::abs(clusters[0].value - Cplx(0, -1)) < 1e-12);
    CHECK(std::abs(clusters[1].value) < 1e-12);

    CHECK_THROWS_WITH_AS(spectrum_normal(make_shift(4), 1e-12),
                         doctest::Contains("non-normal-operator"), Error);

    // unitary diagonal spectra stay on the unit circle
    const TruncatedOperator u =
        make_diag(6, [](int k) { return std::polar(1.0, 0.7 * k); });
    for (const auto& c : spectrum_normal(u, 1e-12))
        CHECK(std::abs(std::abs(c.value) - 1.0) < 1e-10);
}

TEST_CASE("interior compression shapes and errors") {
    CHECK_THROWS_WITH_AS(interior_indices(FactorSpec{FactorKind::half, 3}, 3),
                         doctest::Contains("empty-interior"), Error);
    // line factors lose both ends
    const auto idx = interior_indices(FactorSpec{FactorKind::line, 5}, 1);
    CHECK(idx == std::vector<int>({1, 2, 3}));
}

TEST_CASE("kron terms materialize like dense tensors") {
    std::mt19937_64 rng(11);
    const CMat a = random_matrix(3, rng), b = random_matrix(4, rng);
    KronOp op = KronOp::zero(concat(half_shape(3), half_shape(4)));
    KronTerm t;
    t.coeff_factors = {Cplx(0.5, -1.0)};
    t.blocks = {Block::custom(a), Block::custom(b)};
    op.terms.push_back(t);
    const CMat dense =
        Cplx(0.5, -1.0) * tensor(TruncatedOperator(half_shape(3), a),
                                 TruncatedOperator(half_shape(4), b))
            .entries;
    CHECK((materialize(op) - dense).cwiseAbs().maxCoeff() < 1e-14);

    // products agree with dense products
    KronOp op2 = kmul(op, op);
    const CMat dense2 = dense * dense;
    CHECK((materialize(op2) - dense2).cwiseAbs().maxCoeff() < 1e-12);

    // adjoint
    CHECK((materialize(kadjoint(op)) - CMat(dense.adjoint())).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("kron interior norms agree with dense compression") {
    std::mt19937_64 rng(23);
    const SpaceShape shape = concat(half_shape(5), half_shape(5));
    for (int trial = 0; trial < 10; ++trial) {
        KronOp op = KronOp::zero(shape);
        for (int t = 0; t < 4; ++t) {
            KronTerm term;
            term.coeff_factors = {Cplx(0.3 * t - 0.5, 0.1)};
            term.blocks = {Block::custom(random_matrix(5, rng)),
                           Block::custom(random_matrix(5, rng))};
            op.terms.push_back(term);
        }
        const CMat dense = materialize(op);
        const double want = op_norm(compress_interior(shape, dense, 1));
        bool exact = false;
        const double got = interior_norm(op, 1, &exact);
        CHECK(exact);
        CHECK(got == doctest::Approx(want).epsilon(1e-10));

        // certified Frobenius bound dominates the spectral norm and matches
        // the true Frobenius norm of the compressed matrix
        const double fro = interior_frobenius_bound(op, 1);
        const double fro_dense = compress_interior(shape, dense, 1).norm();
        CHECK(fro == doctest::Approx(fro_dense).epsilon(1e-9));
        CHECK(fro >= want - 1e-12);
    }
}

TEST_CASE("term merging and symbolic comparison") {
    const SpaceShape shape = half_shape(4);
    KronOp x = KronOp::zero(shape);
    KronTerm t;
    t.coeff_factors = {Cplx(1.0)};
    t.blocks = {Block::shift(4)};
    x.terms.push_back(t);
    const KronOp two_x = merge_terms(kadd(x, x));
    REQUIRE(two_x.terms.size() == 1);
    CHECK(two_x.terms[0].coeff() == Cplx(2.0));

    // x - x collapses to zero
    CHECK(merge_terms(ksub(x, x)).terms.empty());
    CHECK(symbolic_term_diff(kadd(x, x), kscale(2.0, x)) == 0.0);

    // re-associated tensor coefficients stay bit-identical
    const Cplx ca(0.12, 0.7), cb(-0.4, 0.33), cc(0.9, -0.2);
    KronOp a = kscale(ca, KronOp::identity(half_shape(2)));
    KronOp b = kscale(cb, KronOp::identity(half_shape(2)));
    KronOp c = kscale(cc, KronOp::identity(half_shape(2)));
    CHECK(symbolic_term_diff(ktensor(ktensor(a, b), c), ktensor(a, ktensor(b, c))) == 0.0);
}

TEST_CASE("permutations and reduced words") {
    CHECK(Permutation::identity(4).length() == 0);
    const Permutation w0 = ReducedWord{3, {1, 2, 1, 3, 2, 1}}.permutation();
    CHECK(w0.length() == 6);

    ReducedWord good{2, {1, 2, 1}};
    CHECK(good.is_reduced());
    ReducedWord bad{2, {1, 1}};
    CHECK(!bad.is_reduced());
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("invalid-word"), Error);

    const auto canon2 = canonical_reduced_words(2);
    CHECK(canon2.size() == 6);
    const auto canon3 = canonical_reduced_words(3);
    CHECK(canon3.size() == 24);
    std::vector<int> by_len(7, 0);
    for (const auto& w : canon3) {
        CHECK(w.is_reduced());
        ++by_len[w.length()];
    }
    CHECK(by_len == std::vector<int>({1, 3, 5, 6, 5, 3, 1}));

    CHECK(all_reduced_expressions(2).size() == 7);
}
