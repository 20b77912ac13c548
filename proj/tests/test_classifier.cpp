#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qzero/classifier.hpp"

using namespace qz;

namespace {
const Cplx I1(0.0, 1.0);
}

TEST_CASE("trivial and shift models classify to their words") {
    const DenseRep triv = materialize(canonical_model(1.0, 1.0, Word6::e, 2).rep);
    const ClassificationReport r0 = classify(triv);
    CHECK(r0.case_id == 1);
    CHECK(r0.word == Word6::e);
    CHECK(std::abs(r0.canon_lambda - 1.0) < 1e-12);

    const DenseRep s1 = materialize(canonical_model(I1, 1.0, Word6::s1, 6).rep);
    const ClassificationReport r1 = classify(s1);
    CHECK(r1.case_id == 2);
    CHECK(r1.word == Word6::s1);
    CHECK(std::abs(r1.extracted_lambda - (-I1)) < 1e-10);
    CHECK(std::abs(r1.extracted_mu - 1.0) < 1e-10);
    CHECK(std::abs(r1.canon_lambda - I1) < 1e-10);
    CHECK(std::abs(r1.canon_mu - 1.0) < 1e-10);
}

TEST_CASE("round trip over all six words") {
    const Cplx L = std::polar(1.0, 2.0 * M_PI * 5 / 24), U = std::polar(1.0, -2.0 * M_PI * 7 / 24);
    for (Word6 w : all_words6()) {
        const CanonicalModel m = canonical_model(L, U, w, 6);
        const ClassificationReport rep = classify(materialize(m.rep));
        INFO("word=", word6_str(w));
        CHECK(rep.word == w);
        CHECK(std::abs(rep.canon_lambda - L) < 1e-8);
        if (w != Word6::e) CHECK(std::abs(rep.canon_mu - U) < 1e-8);

        const Intertwiner u = build_intertwiner(materialize(m.rep), rep, 6, 4);
        CHECK(u.residual < 1e-8);
        CHECK(u.orthonormality < 1e-8);
    }
}

TEST_CASE("self-intertwiner of the shift model is the identity up to phase") {
    const CanonicalModel m = canonical_model(I1, 1.0, Word6::s1, 6);
    const DenseRep d = materialize(m.rep);
    const Intertwiner u = build_intertwiner(d, classify(d), 6, 4);
    CHECK(u.residual < 1e-12);
    // columns are basis vectors up to a global phase
    for (int k = 0; k < 6; ++k)
        CHECK(std::abs(std::abs(u.u(k, k)) - 1.0) < 1e-12);
}

TEST_CASE("classification is conjugation invariant") {
    std::mt19937_64 rng(99);
    const Cplx L = std::polar(1.0, 0.7), U = std::polar(1.0, 2.9);
    for (Word6 w : {Word6::s1, Word6::s12, Word6::s121}) {
        const CanonicalModel m = canonical_model(L, U, w, 5);
        const DenseRep base = materialize(m.rep);
        const ClassificationReport want = classify(base);
        for (int trial = 0; trial < 3; ++trial) {
            const CMat v = haar_unitary(base.shape.total_dim(), rng);
            const DenseRep conj_rep = conjugate(base, v);
            const ClassificationReport got = classify(conj_rep);
            INFO("word=", word6_str(w), " trial=", trial);
            CHECK(got.case_id == want.case_id);
            CHECK(std::abs(got.canon_lambda - want.canon_lambda) < 1e-6);
            CHECK(std::abs(got.canon_mu - want.canon_mu) < 1e-6);
            const Intertwiner u = build_intertwiner(conj_rep, got, 5, 3);
            CHECK(u.residual < 1e-8);
        }
    }
}

TEST_CASE("ambiguous norms raise indeterminate") {
    CanonicalModel m = canonical_model(1.0, 1.0, Word6::s1, 6);
    KronTerm t;
    t.coeff_factors = {Cplx(1e-6)};
    t.blocks = {Block::ground(6)};
    m.rep.z(3, 1).terms.push_back(t);
    CHECK_THROWS_WITH_AS(classify(materialize(m.rep)), doctest::Contains("indeterminate"),
                         Error);
}

TEST_CASE("a norm pattern violating the relations is rejected") {
    // z21 and z32 nonzero with orthogonal ranges: z21 z32 = 0 while z31 = 0
    DenseRep r = DenseRep::zeros(2, half_shape(4));
    const CMat p0 = rank_one_ground(4).entries;
    const CMat id = CMat::Identity(4, 4);
    r.z(1, 1) = id;
    r.z(2, 2) = id;
    r.z(3, 3) = id;
    r.z(2, 1) = p0;
    r.z(3, 2) = id - p0;
    CHECK_THROWS_WITH_AS(classify(r), doctest::Contains("not-a-representation"), Error);
}

TEST_CASE("orbit columns of the big cell are orthonormal") {
    const CanonicalModel m =
        canonical_model(std::polar(1.0, 1.1), std::polar(1.0, -2.3), Word6::s121, 5);
    const DenseRep d = materialize(m.rep);
    const Intertwiner u = build_intertwiner(d, classify(d), 5, 2);
    CHECK(u.orthonormality < 1e-12);
    CHECK(u.residual < 1e-12);
}
