#include "qzero/classifier.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qz {

namespace {

// orthonormal basis of the range of an (approximate) orthogonal projection
CMat range_basis(const CMat& p) {
    Eigen::SelfAdjointEigenSolver<CMat> es((p + CMat(p.adjoint())) / 2.0);
    const auto& ev = es.eigenvalues();
    std::vector<int> cols;
    for (Eigen::Index k = 0; k < ev.size(); ++k)
        if (ev(k) > 0.5) cols.push_back(static_cast<int>(k));
    if (cols.empty()) throw Error("degenerate-anchor", "anchor projection has empty range");
    CMat q(p.rows(), cols.size());
    for (size_t k = 0; k < cols.size(); ++k) q.col(k) = es.eigenvectors().col(cols[k]);
    return q;
}

// the single spectral value of `a` restricted to range(p)
Cplx restricted_value(const CMat& a, const CMat& p, double tol) {
    const CMat q = range_basis(p);
    const CMat r = q.adjoint() * a * q;
    const auto clusters = spectrum_normal_matrix(r, std::max(tol, 1e-8));
    if (clusters.size() != 1)
        throw Error("not-a-representation",
                    "restriction to the anchor range is not a single spectral value");
    return clusters[0].value;
}

// dominant nonzero spectral value (largest modulus cluster)
Cplx dominant_value(const CMat& a, double tol) {
    const auto clusters = spectrum_normal_matrix(a, std::max(tol, 1e-8));
    const SpectrumCluster* best = nullptr;
    for (const auto& c : clusters)
        if (!best || std::abs(c.value) > std::abs(best->value)) best = &c;
    if (!best || std::abs(best->value) <= tol)
        throw Error("not-a-representation", "no nonzero spectral cluster");
    return best->value;
}

Cplx to_unit(const Cplx& v, double tol) {
    const double m = std::abs(v);
    if (std::abs(m - 1.0) > std::max(100.0 * tol, 1e-8))
        throw Error("not-a-representation",
                    "extracted phase has modulus " + std::to_string(m));
    return v / m;
}

CMat anchor_vector(const CMat& p) {
    Eigen::SelfAdjointEigenSolver<CMat> es((p + CMat(p.adjoint())) / 2.0);
    Eigen::Index best = 0;
    es.eigenvalues().maxCoeff(&best);
    if (es.eigenvalues()(best) < 0.5)
        throw Error("degenerate-anchor", "anchor projection is numerically rank deficient");
    CVec v = es.eigenvectors().col(best);
    // deterministic global phase: first significant entry real positive
    for (Eigen::Index k = 0; k < v.size(); ++k)
        if (std::abs(v(k)) > 1e-8) {
            v *= std::conj(v(k)) / std::abs(v(k));
            break;
        }
    return v;
}

CMat matpow_apply(const CMat& a, int e, CMat v) {
    for (int k = 0; k < e; ++k) v = a * v;
    return v;
}

// orbit columns indexed by the lexicographic canonical basis
CMat orbit_columns(const DenseRep& r, int case_id, const CVec& xi, int dim) {
    const int d_in = static_cast<int>(xi.size());
    auto col = [&](int idx) { return idx; };
    switch (case_id) {
        case 1: {
            CMat u(d_in, 1);
            u.col(0) = xi;
            return u;
        }
        case 2:
        case 3: {
            const CMat& a = case_id == 2 ? r.z(2, 2) : r.z(3, 3);
            CMat u(d_in, dim);
            CVec v = xi;
            for (int n = 0; n < dim; ++n) {
                u.col(col(n)) = v;
                if (n + 1 < dim) v = a * v;
            }
            return u;
        }
        case 4: {
            CMat u(d_in, dim * dim);
            const CMat a = r.z(1, 1).adjoint();
            CVec w = xi;
            for (int n = 0; n < dim; ++n) {
                CVec v = w;
                for (int m = 0; m < dim; ++m) {
                    u.col(m * dim + n) = v;
                    if (m + 1 < dim) v = a * v;
                }
                if (n + 1 < dim) w = r.z(3, 3) * w;
            }
            return u;
        }
        case 5: {
            CMat u(d_in, dim * dim);
            const CMat a = r.z(1, 1).adjoint();
            CVec w = xi;
            for (int m = 0; m < dim; ++m) {
                CVec v = w;
                for (int n = 0; n < dim; ++n) {
                    u.col(m * dim + n) = v;
                    if (n + 1 < dim) v = a * v;
                }
                if (m + 1 < dim) w = r.z(3, 3) * w;
            }
            return u;
        }
        case 6: {
            CMat u(d_in, dim * dim * dim);
            CVec wn = xi;
            for (int n = 0; n < dim; ++n) {
                CVec wk = wn;
                for (int k = 0; k < dim; ++k) {
                    CVec wm = wk;
                    for (int m = 0; m < dim; ++m) {
                        u.col((k * dim + m) * dim + n) = wm;
                        if (m + 1 < dim) wm = r.z(3, 3) * wm;
                    }
                    if (k + 1 < dim) wk = r.z(2, 3) * wk;
                }
                if (n + 1 < dim) wn = r.z(3, 2) * wn;
            }
            return u;
        }
        default: throw Error("invalid-parameter", "unknown case");
    }
}

CMat anchor_projection(const DenseRep& r, int case_id) {
    switch (case_id) {
        case 2: return r.z(2, 1).adjoint() * r.z(2, 1);
        case 3: return r.z(3, 2).adjoint() * r.z(3, 2);
        case 4: return r.z(1, 3).adjoint() * r.z(1, 3);
        case 5: return r.z(3, 1).adjoint() * r.z(3, 1);
        case 6:
            return CMat(r.z(1, 3).adjoint() * r.z(1, 3)) *
                   CMat(r.z(3, 1).adjoint() * r.z(3, 1));
        default: throw Error("invalid-parameter", "no anchor for this case");
    }
}

}  // namespace

ClassificationReport classify(const DenseRep& r, double tol) {
    if (r.n != 2) throw Error("invalid-parameter", "classification covers rank 2");
    ClassificationReport rep;
    rep.n31 = op_norm(r.z(3, 1));
    rep.n32 = op_norm(r.z(3, 2));
    rep.n21 = op_norm(r.z(2, 1));
    rep.n2132 = op_norm(CMat(r.z(2, 1) * r.z(3, 2)));

    rep.decision_margin = 1e300;
    for (double nrm : {rep.n31, rep.n32, rep.n21, rep.n2132}) {
        rep.decision_margin = std::min(rep.decision_margin, std::abs(nrm - tol));
        if (nrm > tol / 10.0 && nrm < tol * 10.0)
            throw Error("indeterminate", "decision norm " + std::to_string(nrm) +
                                              " within an order of magnitude of tol");
    }
    const bool z31 = rep.n31 > tol, z32 = rep.n32 > tol, z21 = rep.n21 > tol,
               prod = rep.n2132 > tol;

    if (!z31) {
        if (z21 && z32 && !prod)
            throw Error("not-a-representation",
                        "z21 and z32 both nonzero with z21*z32 = 0 contradicts the relations");
        if (!z21 && !z32)
            rep.case_id = 1;
        else if (z21 && !z32)
            rep.case_id = 2;
        else if (!z21 && z32)
            rep.case_id = 3;
        else
            rep.case_id = 4;
    } else {
        rep.case_id = prod ? 6 : 5;
    }

    switch (rep.case_id) {
        case 1: {
            const Cplx l = to_unit(dominant_value(r.z(1, 1), tol), tol);
            const Cplx m22 = to_unit(dominant_value(r.z(2, 2), tol), tol);
            rep.word = Word6::e;
            rep.extracted_lambda = l;
            rep.extracted_mu = m22;
            rep.canon_lambda = l;
            rep.canon_mu = l * m22;
            break;
        }
        case 2: {
            const Cplx l = to_unit(dominant_value(r.z(2, 1), tol), tol);
            const Cplx m = to_unit(restricted_value(r.z(3, 3), anchor_projection(r, 2), tol), tol);
            rep.word = Word6::s1;
            rep.extracted_lambda = l;
            rep.extracted_mu = m;
            rep.canon_lambda = std::conj(l) * std::conj(m);
            rep.canon_mu = std::conj(m);
            break;
        }
        case 3: {
            const Cplx l = to_unit(dominant_value(r.z(3, 2), tol), tol);
            const Cplx m = to_unit(restricted_value(r.z(1, 1), anchor_projection(r, 3), tol), tol);
            rep.word = Word6::s2;
            rep.extracted_lambda = l;
            rep.extracted_mu = m;
            rep.canon_lambda = m;
            rep.canon_mu = std::conj(l);
            break;
        }
        case 4: {
            const CMat p = anchor_projection(r, 4);
            const Cplx l = to_unit(restricted_value(r.z(2, 1), p, tol), tol);
            const Cplx m = to_unit(restricted_value(r.z(3, 2), p, tol), tol);
            rep.word = Word6::s12;
            rep.extracted_lambda = l;
            rep.extracted_mu = m;
            rep.canon_lambda = std::conj(l) * std::conj(m);
            rep.canon_mu = std::conj(m);
            break;
        }
        case 5: {
            const CMat p = anchor_projection(r, 5);
            const Cplx l = to_unit(restricted_value(r.z(1, 2), p, tol), tol);
            const Cplx m = to_unit(restricted_value(r.z(2, 3), p, tol), tol);
            rep.word = Word6::s21;
            rep.extracted_lambda = l;
            rep.extracted_mu = m;
            rep.canon_lambda = l;
            rep.canon_mu = l * m;
            break;
        }
        case 6: {
            const CMat p = anchor_projection(r, 6);
            const Cplx l = to_unit(restricted_value(r.z(1, 3), p, tol), tol);
            const Cplx m = to_unit(restricted_value(r.z(3, 1), p, tol), tol);
            rep.word = Word6::s121;
            rep.extracted_lambda = l;
            rep.extracted_mu = m;
            rep.canon_lambda = l;
            rep.canon_mu = std::conj(m);
            break;
        }
    }
    return rep;
}

Intertwiner build_intertwiner(const DenseRep& r, const ClassificationReport& report, int dim,
                              int margin) {
    const CanonicalModel target =
        canonical_model(report.canon_lambda, report.canon_mu, report.word, dim);
    const DenseRep can = materialize(target.rep);
    const int d_can = can.shape.total_dim();
    const int d_in = r.shape.total_dim();

    CVec xi_in, xi_can;
    if (report.case_id == 1) {
        xi_in = CVec::Zero(d_in);
        xi_in(0) = 1.0;
        xi_can = CVec::Zero(d_can);
        xi_can(0) = 1.0;
    } else {
        xi_in = anchor_vector(anchor_projection(r, report.case_id));
        xi_can = anchor_vector(anchor_projection(can, report.case_id));
    }

    CMat v_in = orbit_columns(r, report.case_id, xi_in, dim);
    CMat v_can = orbit_columns(can, report.case_id, xi_can, dim);
    if (report.case_id == 1) {
        // one-dimensional canonical space
        v_in = CMat(xi_in);
        v_can = CMat(xi_can);
    }

    for (Eigen::Index c = 0; c < v_in.cols(); ++c) {
        const double a = v_in.col(c).norm();
        const double b = v_can.col(c).norm();
        if (a < 1e-10 || b < 1e-10) {
            // boundary artifact: reject the column entirely
            v_in.col(c).setZero();
            v_can.col(c).setZero();
            continue;
        }
        v_in.col(c) /= a;
        v_can.col(c) /= b;
    }

    Intertwiner out;
    out.u = v_in * v_can.adjoint();

    // interior column selection on the canonical side
    const auto mask = interior_mask(can.shape, margin);
    std::vector<int> cols;
    for (int k = 0; k < d_can; ++k)
        if (mask[k]) cols.push_back(k);
    auto select_cols = [&](const CMat& m) {
        CMat s(m.rows(), cols.size());
        for (size_t k = 0; k < cols.size(); ++k) s.col(k) = m.col(cols[k]);
        return s;
    };

    double res = 0.0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const CMat d = r.z(i, j) * out.u - out.u * can.z(i, j);
            res = std::max(res, op_norm(select_cols(d)));
        }
    out.residual = res;

    CMat gram = out.u.adjoint() * out.u - CMat::Identity(d_can, d_can);
    CMat g2(cols.size(), cols.size());
    for (size_t a = 0; a < cols.size(); ++a)
        for (size_t b = 0; b < cols.size(); ++b) g2(a, b) = gram(cols[a], cols[b]);
    out.orthonormality = op_norm(g2);
    return out;
}

CMat haar_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Cplx(g(rng), g(rng));
    Eigen::HouseholderQR<CMat> qr(a);
    CMat q = qr.householderQ();
    const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < dim; ++k) {
        const Cplx d = r(k, k);
        q.col(k) *= (d == 0.0 ? Cplx(1.0) : d / std::abs(d));
    }
    return q;
}

DenseRep conjugate(const DenseRep& r, const CMat& u) {
    DenseRep out = r;
    for (auto& g : out.gens) g = u * g * u.adjoint();
    return out;
}

}  // namespace qz
