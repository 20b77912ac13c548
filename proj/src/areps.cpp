#include "qzero/areps.hpp"

#include <cmath>
#include <numbers>

namespace qz {

namespace {

Cplx phase_pow(Cplx base, int e) {
    Cplx v = 1.0;
    for (int k = 0; k < std::abs(e); ++k) v *= (e >= 0 ? base : std::conj(base));
    return v;
}

CMat matrix_unit(int dim, int j, int k) {
    CMat m = CMat::Zero(dim, dim);
    m(j, k) = 1.0;
    return m;
}

CMat kron_unit(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace

std::string word6_str(Word6 w) {
    switch (w) {
        case Word6::e: return "e";
        case Word6::s1: return "s1";
        case Word6::s2: return "s2";
        case Word6::s12: return "s1s2";
        case Word6::s21: return "s2s1";
        case Word6::s121: return "s1s2s1";
    }
    throw Error("invalid-word", "unknown word");
}

Word6 word6_parse(const std::string& s) {
    for (Word6 w : all_words6())
        if (word6_str(w) == s) return w;
    throw Error("invalid-word", "expected one of e,s1,s2,s1s2,s2s1,s1s2s1: got " + s);
}

ReducedWord word6_reduced_word(Word6 w) {
    ReducedWord r;
    r.n = 2;
    switch (w) {
        case Word6::e: break;
        case Word6::s1: r.letters = {1}; break;
        case Word6::s2: r.letters = {2}; break;
        case Word6::s12: r.letters = {1, 2}; break;
        case Word6::s21: r.letters = {2, 1}; break;
        case Word6::s121: r.letters = {1, 2, 1}; break;
    }
    return r;
}

const std::vector<Word6>& all_words6() {
    static const std::vector<Word6> all = {Word6::e,   Word6::s1,  Word6::s2,
                                           Word6::s12, Word6::s21, Word6::s121};
    return all;
}

CanonicalModel canonical_model(Cplx lambda, Cplx mu, Word6 word, int dim) {
    CanonicalModel m;
    m.lambda = lambda;
    m.mu = mu;
    m.word = word;
    m.rep = crystal_gens_limit(2, {lambda, mu}, word6_reduced_word(word), dim);
    return m;
}

RelationReport irreducibility_witness(const CanonicalModel& m, int max_index, int margin) {
    if (m.word == Word6::e)
        throw Error("invalid-parameter", "witness needs an infinite-dimensional model");
    const Cplx L = m.lambda, U = m.mu;
    const DenseRep r = materialize(m.rep);
    const int d = m.rep.shape.factors.empty() ? 1 : m.rep.shape.factors[0].dim;

    auto pw = [](const CMat& a, int e) {
        CMat out = CMat::Identity(a.rows(), a.cols());
        for (int k = 0; k < e; ++k) out = out * a;
        return out;
    };

    RelationReport report;
    auto push = [&](std::vector<int> idx, const CMat& got, const CMat& want) {
        RelationEntry e;
        e.id = "witness";
        e.indices = std::move(idx);
        e.residual = op_norm(compress_interior(m.rep.shape, got - want, margin));
        report.entries.push_back(std::move(e));
    };

    const CMat id1 = CMat::Identity(d, d);
    for (int j = 0; j <= max_index; ++j) {
        for (int k = 0; k <= max_index; ++k) {
            const CMat unit = matrix_unit(d, j, k);
            switch (m.word) {
                case Word6::s1: {
                    const CMat got = phase_pow(L, j - k - 1) * pw(r.z(1, 1).adjoint(), j) *
                                     r.z(1, 2) * pw(r.z(1, 1), k);
                    push({0, j, k}, got, unit);
                    break;
                }
                case Word6::s2: {
                    const CMat got = phase_pow(U, j - k + 1) * pw(r.z(3, 3), j) * r.z(3, 2) *
                                     pw(r.z(3, 3).adjoint(), k);
                    push({0, j, k}, got, unit);
                    break;
                }
                case Word6::s12: {
                    CMat got = phase_pow(L, j - k + 1) * std::conj(U) *
                               pw(r.z(1, 1).adjoint(), j) * r.z(2, 1) * pw(r.z(1, 1), k);
                    push({0, j, k}, got, kron_unit(unit, id1));
                    got = phase_pow(U, j - k + 1) * pw(r.z(3, 3), j) * r.z(3, 2) *
                          pw(r.z(3, 3).adjoint(), k);
                    push({1, j, k}, got, kron_unit(id1, unit));
                    break;
                }
                case Word6::s21: {
                    CMat got = phase_pow(L, j - k - 1) * pw(r.z(1, 1).adjoint(), j) * r.z(1, 2) *
                               pw(r.z(1, 1), k);
                    push({0, j, k}, got, kron_unit(id1, unit));
                    got = L * phase_pow(U, j - k - 1) * pw(r.z(3, 3), j) * r.z(2, 3) *
                          pw(r.z(3, 3).adjoint(), k);
                    push({1, j, k}, got, kron_unit(unit, id1));
                    break;
                }
                case Word6::s121: {
                    for (int mm = 0; mm <= max_index; ++mm)
                        for (int nn = 0; nn <= max_index; ++nn) {
                            CMat got = phase_pow(L, j - k - 1) *
                                       phase_pow(U, k - j + mm - nn) * pw(r.z(3, 3), mm) *
                                       pw(r.z(2, 3), j) * r.z(1, 3) *
                                       pw(r.z(2, 3).adjoint(), k) * pw(r.z(3, 3).adjoint(), nn);
                            push({0, j, k, mm, nn}, got,
                                 kron_unit(kron_unit(matrix_unit(d, j, k), matrix_unit(d, mm, nn)),
                                           id1));
                            got = phase_pow(U, 1 + mm + j - nn - k) * pw(r.z(3, 3), j) *
                                  pw(r.z(3, 2), mm) * r.z(3, 1) *
                                  pw(r.z(3, 2).adjoint(), nn) * pw(r.z(3, 3).adjoint(), k);
                            push({1, j, k, mm, nn}, got,
                                 kron_unit(kron_unit(id1, matrix_unit(d, j, k)),
                                           matrix_unit(d, mm, nn)));
                        }
                    break;
                }
                default: break;
            }
        }
    }
    report.finalize(1e-12);
    return report;
}

Rep phi_embedding(int M, int N) {
    if (M < 2 || N < 2) throw Error("invalid-parameter", "need M >= 2 and N >= 2");
    const int L = 2 * M + 1;
    const CanonicalModel base = canonical_model(1.0, 1.0, Word6::s121, N);
    SpaceShape shape = concat(line_shape(L), line_shape(L));
    shape = concat(shape, base.rep.shape);

    Rep out = Rep::zeros(2, shape);
    for (int i = 1; i <= 3; ++i) {
        KronOp row = KronOp::zero(concat(line_shape(L), line_shape(L)));
        KronTerm t;
        if (i == 1) {
            t.blocks = {Block::fwd(L), Block::id(L)};
        } else if (i == 2) {
            t.blocks = {Block::fwd_adj(L), Block::fwd(L)};
        } else {
            t.blocks = {Block::id(L), Block::fwd_adj(L)};
        }
        row.terms.push_back(std::move(t));
        for (int j = 1; j <= 3; ++j) out.z(i, j) = ktensor(row, base.rep.z(i, j));
    }
    return out;
}

ThetaReport theta_factorize(Cplx lambda, Cplx mu, Word6 word, int M, int dim) {
    const Rep phi = phi_embedding(M, dim);
    // which of the three half-line factors survive for each word
    std::vector<bool> keep(3, false);
    switch (word) {
        case Word6::e: break;
        case Word6::s1: keep = {true, false, false}; break;
        case Word6::s2: keep = {false, true, false}; break;
        case Word6::s12: keep = {true, true, false}; break;
        case Word6::s21: keep = {false, true, true}; break;
        case Word6::s121: keep = {true, true, true}; break;
    }
    const CanonicalModel target = canonical_model(lambda, mu, word, dim);

    Rep reduced = Rep::zeros(2, target.rep.shape);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            KronOp acc = KronOp::zero(target.rep.shape);
            for (const KronTerm& t : phi.z(i, j).terms) {
                KronTerm out;
                out.coeff_factors = t.coeff_factors;
                bool dead = false;
                for (size_t f = 0; f < t.blocks.size(); ++f) {
                    const Block& b = t.blocks[f];
                    if (f < 2) {
                        // circle evaluation at lambda (first factor) / mu (second)
                        const Cplx base = (f == 0) ? lambda : mu;
                        Cplx v;
                        if (b.kind == BlockKind::fwd)
                            v = base;
                        else if (b.kind == BlockKind::fwd_adj)
                            v = std::conj(base);
                        else if (b.kind == BlockKind::id)
                            v = 1.0;
                        else
                            throw Error("invalid-parameter", "line factor is not symbolic");
                        out.coeff_factors.push_back(v);
                        continue;
                    }
                    if (keep[f - 2]) {
                        out.blocks.push_back(b);
                        continue;
                    }
                    // Toeplitz symbol evaluated at 1: shifts and the identity
                    // map to 1, the compact ground projection to 0
                    if (b.kind == BlockKind::ground) {
                        dead = true;
                        break;
                    }
                    if (b.kind != BlockKind::shift && b.kind != BlockKind::shift_adj &&
                        b.kind != BlockKind::id)
                        throw Error("invalid-parameter", "half-line factor is not symbolic");
                }
                if (!dead) acc.terms.push_back(std::move(out));
            }
            reduced.z(i, j) = std::move(acc);
        }

    ThetaReport rep;
    rep.word = word;
    double maxdev = 0.0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const CMat a = materialize(reduced.z(i, j));
            const CMat b = materialize(target.rep.z(i, j));
            maxdev = std::max(maxdev, (a - b).cwiseAbs().maxCoeff());
        }
    rep.max_deviation = maxdev;
    rep.exact = (maxdev == 0.0);
    return rep;
}

std::vector<Cplx> eighth_roots() {
    std::vector<Cplx> out;
    for (int k = 0; k < 8; ++k)
        out.push_back(std::polar(1.0, std::numbers::pi * k / 4.0));
    return out;
}

double toeplitz_gap_demo(const StarPolynomial& p, const std::vector<Cplx>& sample_phases) {
    if (p.max_index() > 3) throw Error("invalid-parameter", "polynomial must use rank-2 generators");
    CharacterAlg alg{2};
    const Cplx c = eval_star_poly(p, alg);
    double best = 0.0;
    for (const Cplx& l : sample_phases) best = std::max(best, std::abs(l * l - c));
    return best;
}

}  // namespace qz
