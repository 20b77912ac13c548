#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qzero/areps.hpp"
#include "qzero/azero.hpp"

using namespace qz;

namespace {
const Cplx I1(0.0, 1.0);

std::vector<Cplx> roots_of_unity(int n) {
    std::vector<Cplx> out;
    for (int k = 0; k < n; ++k) out.push_back(std::polar(1.0, 2.0 * M_PI * k / n));
    return out;
}
}  // namespace

TEST_CASE("all six canonical models satisfy the catalog") {
    const auto phases = roots_of_unity(12);
    for (Word6 w : all_words6()) {
        // a few phase pairs here; the acceptance suite runs the full grid
        for (int a : {1, 5}) {
            for (int b : {2, 7}) {
                const CanonicalModel m = canonical_model(phases[a], phases[b], w, 6);
                const RelationReport rep = check_relations(m.rep, 1e-12, 4);
                INFO("word=", word6_str(w), " a=", a, " b=", b);
                CHECK(rep.pass);
            }
        }
    }
}

TEST_CASE("witness formulas reproduce literal matrix units") {
    // lambda^{-1} z12 = P0 in the shift model
    const CanonicalModel s1 = canonical_model(I1, 1.0, Word6::s1, 6);
    const CMat z12 = materialize(s1.rep.z(1, 2));
    CHECK(((1.0 / I1) * z12 - rank_one_ground(6).entries).cwiseAbs().maxCoeff() < 1e-15);

    for (Word6 w : {Word6::s1, Word6::s2, Word6::s12, Word6::s21}) {
        const CanonicalModel m = canonical_model(std::polar(1.0, 0.8), std::polar(1.0, -1.4), w, 6);
        const RelationReport rep = irreducibility_witness(m, 2, 0);
        INFO("word=", word6_str(w));
        CHECK(rep.pass);
    }
    const CanonicalModel full =
        canonical_model(std::polar(1.0, 2.2), std::polar(1.0, 0.3), Word6::s121, 6);
    CHECK(irreducibility_witness(full, 2, 0).pass);

    CHECK_THROWS_WITH_AS(irreducibility_witness(canonical_model(1.0, 1.0, Word6::e, 6), 1, 0),
                         doctest::Contains("invalid-parameter"), Error);
}

TEST_CASE("classifier-facing spectra of the convolved models") {
    const Cplx L = std::polar(1.0, 0.6), U = std::polar(1.0, -0.9);
    const CanonicalModel s2 = canonical_model(L, U, Word6::s2, 6);
    const auto spec32 = spectrum_normal(to_truncated(s2.rep.z(3, 2)), 1e-10);
    REQUIRE(spec32.size() == 2);
    bool has_zero = false, has_phase = false;
    for (const auto& c : spec32) {
        if (std::abs(c.value) < 1e-12) has_zero = true;
        if (std::abs(c.value - std::conj(U)) < 1e-12) has_phase = true;
    }
    CHECK(has_zero);
    CHECK(has_phase);

    const CanonicalModel s21 = canonical_model(L, U, Word6::s21, 5);
    const auto spec31 = spectrum_normal(to_truncated(s21.rep.z(3, 1)), 1e-10);
    REQUIRE(spec31.size() == 2);
}

TEST_CASE("embedding generators and relations") {
    const int M = 2, N = 4, Ld = 2 * M + 1;
    const Rep phi = phi_embedding(M, N);
    REQUIRE(phi.shape.factors.size() == 5);
    CHECK(phi.shape.factors[0].kind == FactorKind::line);
    CHECK(phi.shape.factors[2].kind == FactorKind::half);

    const CMat u = make_bilateral_shift(Ld).entries;
    const CMat idL = CMat::Identity(Ld, Ld);
    const CMat S = make_shift(N).entries;
    const CMat idN = CMat::Identity(N, N);
    auto T = [](const CMat& a, const CMat& b) {
        CMat out(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        return out;
    };
    CHECK((materialize(phi.z(1, 1)) - T(T(T(T(u, idL), S), idN), S)).cwiseAbs().maxCoeff() ==
          0.0);
    CHECK((materialize(phi.z(3, 3)) -
           T(T(T(T(idL, CMat(u.adjoint())), idN), CMat(S.adjoint())), idN))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    // both line ends and the half-line tops margined away
    const Rep phi2 = phi_embedding(3, 5);
    const RelationReport rep = check_relations(phi2, 1e-12, 2);
    CHECK(rep.pass);
}

TEST_CASE("character factorization recovers every canonical model exactly") {
    const Cplx L = std::polar(1.0, 1.9), U = std::polar(1.0, -0.5);
    for (Word6 w : all_words6()) {
        const ThetaReport rep = theta_factorize(L, U, w, 2, 5);
        INFO("word=", word6_str(w));
        CHECK(rep.exact);
        CHECK(rep.max_deviation == 0.0);
    }
}

TEST_CASE("character gap bound") {
    CHECK(toeplitz_gap_demo(parse_star_poly("1"), eighth_roots()) == doctest::Approx(2.0));
    CHECK(toeplitz_gap_demo(parse_star_poly("0"), eighth_roots()) == doctest::Approx(1.0));
    CHECK(toeplitz_gap_demo(parse_star_poly("z[1,1]*z[2,2] + z[1,2]'"), eighth_roots()) >= 1.0);
    CHECK(toeplitz_gap_demo(parse_star_poly("z[3,3]'*z[3,3]*z[2,1]"), eighth_roots()) >= 1.0);
}
