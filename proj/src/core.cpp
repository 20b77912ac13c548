#include "qzero/core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qz {

namespace {
std::atomic<int> g_capacity{20000};
}

int dense_capacity_cap() { return g_capacity.load(); }

void set_dense_capacity_cap(int cap) {
    if (cap < 1) throw Error("invalid-parameter", "capacity cap must be positive");
    g_capacity.store(cap);
}

int SpaceShape::total_dim() const {
    long long d = 1;
    for (const auto& f : factors) {
        d *= f.dim;
        if (d > (1LL << 40)) throw Error("capacity-exceeded", "total dimension overflow");
    }
    return static_cast<int>(d);
}

void SpaceShape::validate() const {
    for (const auto& f : factors) {
        if (f.dim < 2) throw Error("invalid-dimension", "factor dim must be >= 2");
        if (f.kind == FactorKind::line && f.dim % 2 == 0)
            throw Error("invalid-dimension", "line factor dim must be odd (2M+1)");
    }
}

SpaceShape scalar_shape() { return SpaceShape{}; }

SpaceShape half_shape(int dim) {
    SpaceShape s{{FactorSpec{FactorKind::half, dim}}};
    s.validate();
    return s;
}

SpaceShape line_shape(int dim) {
    SpaceShape s{{FactorSpec{FactorKind::line, dim}}};
    s.validate();
    return s;
}

SpaceShape concat(const SpaceShape& a, const SpaceShape& b) {
    SpaceShape s = a;
    s.factors.insert(s.factors.end(), b.factors.begin(), b.factors.end());
    return s;
}

std::vector<int> interior_indices(const FactorSpec& f, int margin) {
    if (margin < 0) throw Error("invalid-parameter", "margin must be nonnegative");
    std::vector<int> idx;
    const int lo = (f.kind == FactorKind::line) ? margin : 0;
    const int hi = f.dim - 1 - margin;
    for (int k = lo; k <= hi; ++k) idx.push_back(k);
    if (idx.empty()) throw Error("empty-interior", "margin leaves no interior indices");
    return idx;
}

std::vector<char> interior_mask(const SpaceShape& shape, int margin) {
    const int total = shape.total_dim();
    std::vector<char> mask(total, 1);
    if (shape.factors.empty()) return mask;
    // factor index of basis vector b: peel off strides right-to-left
    std::vector<std::vector<char>> keep;
    keep.reserve(shape.factors.size());
    for (const auto& f : shape.factors) {
        std::vector<char> k(f.dim, 0);
        for (int i : interior_indices(f, margin)) k[i] = 1;
        keep.push_back(std::move(k));
    }
    for (int b = 0; b < total; ++b) {
        int rem = b;
        for (int m = static_cast<int>(shape.factors.size()) - 1; m >= 0; --m) {
            const int d = shape.factors[m].dim;
            if (!keep[m][rem % d]) {
                mask[b] = 0;
                break;
            }
            rem /= d;
        }
    }
    return mask;
}

TruncatedOperator::TruncatedOperator(SpaceShape s, CMat m) : shape(std::move(s)), entries(std::move(m)) {
    shape.validate();
    const int d = shape.total_dim();
    if (entries.rows() != d || entries.cols() != d)
        throw Error("invalid-dimension", "entry matrix does not match shape");
    if (!entries.allFinite()) throw Error("invalid-entry", "non-finite entries");
}

TruncatedOperator TruncatedOperator::adjoint() const {
    return TruncatedOperator(shape, entries.adjoint());
}

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.shape != b.shape) throw Error("invalid-dimension", "shape mismatch in +");
    return TruncatedOperator(a.shape, a.entries + b.entries);
}

TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.shape != b.shape) throw Error("invalid-dimension", "shape mismatch in -");
    return TruncatedOperator(a.shape, a.entries - b.entries);
}

TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.shape != b.shape) throw Error("invalid-dimension", "shape mismatch in *");
    return TruncatedOperator(a.shape, a.entries * b.entries);
}

TruncatedOperator operator*(const Cplx& c, const TruncatedOperator& a) {
    return TruncatedOperator(a.shape, c * a.entries);
}

TruncatedOperator make_shift(int dim) {
    if (dim < 2) throw Error("invalid-dimension", "shift needs dim >= 2");
    CMat m = CMat::Zero(dim, dim);
    for (int k = 1; k < dim; ++k) m(k - 1, k) = 1.0;
    return TruncatedOperator(half_shape(dim), std::move(m));
}

TruncatedOperator make_diag(int dim, const std::function<Cplx(int)>& f) {
    if (dim < 2) throw Error("invalid-dimension", "diag needs dim >= 2");
    CMat m = CMat::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const Cplx v = f(k);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error("invalid-entry", "non-finite diagonal entry");
        m(k, k) = v;
    }
    return TruncatedOperator(half_shape(dim), std::move(m));
}

TruncatedOperator rank_one_ground(int dim) {
    if (dim < 2) throw Error("invalid-dimension", "projection needs dim >= 2");
    CMat m = CMat::Zero(dim, dim);
    m(0, 0) = 1.0;
    return TruncatedOperator(half_shape(dim), std::move(m));
}

TruncatedOperator identity_op(const SpaceShape& shape) {
    const int d = shape.total_dim();
    return TruncatedOperator(shape, CMat::Identity(d, d));
}

TruncatedOperator make_bilateral_shift(int dim) {
    if (dim < 3 || dim % 2 == 0) throw Error("invalid-dimension", "bilateral shift needs odd dim >= 3");
    CMat m = CMat::Zero(dim, dim);
    for (int k = 0; k + 1 < dim; ++k) m(k + 1, k) = 1.0;
    return TruncatedOperator(line_shape(dim), std::move(m));
}

TruncatedOperator tensor(const TruncatedOperator& a, const TruncatedOperator& b) {
    const long long total = static_cast<long long>(a.dim()) * b.dim();
    if (total > dense_capacity_cap())
        throw Error("capacity-exceeded", "tensor product exceeds dense capacity cap");
    const int da = a.dim(), db = b.dim();
    CMat m(da * db, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            m.block(i * db, j * db, db, db) = a.entries(i, j) * b.entries;
    return TruncatedOperator(concat(a.shape, b.shape), std::move(m));
}

double op_norm(const CMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    if (std::min(m.rows(), m.cols()) <= 192) {
        Eigen::JacobiSVD<CMat> svd(m);
        return svd.singularValues()(0);
    }
    // Largest singular value via the Gram matrix; relative accuracy is at
    // machine level since the error is measured against ||m*m||.
    const CMat g = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<CMat> es(g, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, top));
}

double op_norm(const TruncatedOperator& a) { return op_norm(a.entries); }

std::vector<SpectrumCluster> spectrum_normal(const TruncatedOperator& a,
                                             double normal_tol,
                                             double cluster_tol) {
    return spectrum_normal_matrix(a.entries, normal_tol, cluster_tol);
}

std::vector<SpectrumCluster> spectrum_normal_matrix(const CMat& a, double normal_tol,
                                                    double cluster_tol) {
    const CMat comm = a * a.adjoint() - a.adjoint() * a;
    const double c = op_norm(comm);
    if (c > normal_tol)
        throw Error("non-normal-operator",
                    "commutator norm " + std::to_string(c) + " exceeds tolerance");
    Eigen::ComplexEigenSolver<CMat> es(a, false);
    std::vector<Cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), [](const Cplx& x, const Cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    // single-linkage clustering over the sorted list
    std::vector<SpectrumCluster> out;
    std::vector<char> used(ev.size(), 0);
    for (size_t i = 0; i < ev.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> group{i};
        used[i] = 1;
        for (size_t g = 0; g < group.size(); ++g)
            for (size_t j = 0; j < ev.size(); ++j)
                if (!used[j] && std::abs(ev[j] - ev[group[g]]) <= cluster_tol) {
                    used[j] = 1;
                    group.push_back(j);
                }
        Cplx mean = 0.0;
        for (size_t j : group) mean += ev[j];
        mean /= static_cast<double>(group.size());
        out.push_back({mean, static_cast<int>(group.size())});
    }
    std::sort(out.begin(), out.end(), [](const SpectrumCluster& x, const SpectrumCluster& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });
    return out;
}

CMat compress_interior(const SpaceShape& shape, const CMat& m, int margin) {
    const auto mask = interior_mask(shape, margin);
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(mask.size()); ++i)
        if (mask[i]) idx.push_back(i);
    if (idx.empty()) throw Error("empty-interior", "margin leaves no interior indices");
    CMat out(idx.size(), idx.size());
    for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
    return out;
}

double interior_residual(const TruncatedOperator& a, const TruncatedOperator& b,
                         int margin) {
    if (a.shape != b.shape) throw Error("invalid-dimension", "shape mismatch");
    return op_norm(compress_interior(a.shape, a.entries - b.entries, margin));
}

}  // namespace qz
