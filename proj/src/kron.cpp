#include "qzero/kron.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>
#include <unordered_map>

#include <Eigen/SVD>

namespace qz {

namespace {

CMat kron_dense(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMat submatrix(const CMat& m, const std::vector<int>& idx) {
    CMat out(idx.size(), idx.size());
    for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
    return out;
}

std::string block_key(const Block& b) {
    std::string key;
    key.push_back(static_cast<char>(b.kind));
    key.append(reinterpret_cast<const char*>(&b.dim), sizeof(int));
    key.append(reinterpret_cast<const char*>(b.mat.data()),
               sizeof(Cplx) * b.mat.size());
    return key;
}

}  // namespace

Block Block::id(int dim) {
    Block b;
    b.kind = BlockKind::id;
    b.dim = dim;
    b.mat = CMat::Identity(dim, dim);
    return b;
}

Block Block::shift(int dim) {
    Block b;
    b.kind = BlockKind::shift;
    b.dim = dim;
    b.mat = make_shift(dim).entries;
    return b;
}

Block Block::shift_adj(int dim) {
    Block b;
    b.kind = BlockKind::shift_adj;
    b.dim = dim;
    b.mat = make_shift(dim).entries.adjoint();
    return b;
}

Block Block::ground(int dim) {
    Block b;
    b.kind = BlockKind::ground;
    b.dim = dim;
    b.mat = rank_one_ground(dim).entries;
    return b;
}

Block Block::fwd(int dim) {
    Block b;
    b.kind = BlockKind::fwd;
    b.dim = dim;
    b.mat = make_bilateral_shift(dim).entries;
    return b;
}

Block Block::fwd_adj(int dim) {
    Block b;
    b.kind = BlockKind::fwd_adj;
    b.dim = dim;
    b.mat = make_bilateral_shift(dim).entries.adjoint();
    return b;
}

Block Block::custom(CMat m) {
    if (m.rows() != m.cols()) throw Error("invalid-dimension", "custom block must be square");
    Block b;
    b.kind = BlockKind::custom;
    b.dim = static_cast<int>(m.rows());
    b.mat = std::move(m);
    return b;
}

Block Block::adjoint() const {
    switch (kind) {
        case BlockKind::id:
        case BlockKind::ground: {
            return *this;
        }
        case BlockKind::shift: return shift_adj(dim);
        case BlockKind::shift_adj: return shift(dim);
        case BlockKind::fwd: return fwd_adj(dim);
        case BlockKind::fwd_adj: return fwd(dim);
        case BlockKind::custom: return custom(mat.adjoint());
    }
    throw Error("invalid-parameter", "unknown block kind");
}

bool Block::is_zero() const { return mat.isZero(0.0); }

bool Block::same_entries(const Block& o) const {
    return dim == o.dim && mat.rows() == o.mat.rows() &&
           std::memcmp(mat.data(), o.mat.data(), sizeof(Cplx) * mat.size()) == 0;
}

Cplx KronTerm::coeff() const {
    Cplx c = 1.0;
    for (const Cplx& f : coeff_factors) c *= f;
    return c;
}

KronOp KronOp::zero(SpaceShape shape) {
    KronOp op;
    op.shape = std::move(shape);
    return op;
}

KronOp KronOp::identity(SpaceShape shape) {
    KronOp op;
    op.shape = std::move(shape);
    KronTerm t;
    for (const auto& f : op.shape.factors) t.blocks.push_back(Block::id(f.dim));
    op.terms.push_back(std::move(t));
    return op;
}

KronOp KronOp::scalar(Cplx c) {
    KronOp op;
    op.shape = scalar_shape();
    if (c != 0.0) {
        KronTerm t;
        t.coeff_factors.push_back(c);
        op.terms.push_back(std::move(t));
    }
    return op;
}

KronOp kadd(const KronOp& a, const KronOp& b) {
    if (a.shape != b.shape) throw Error("invalid-dimension", "shape mismatch in kadd");
    KronOp out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

KronOp ksub(const KronOp& a, const KronOp& b) {
    return kadd(a, kscale(-1.0, b));
}

KronOp kscale(const Cplx& c, const KronOp& a) {
    if (c == 0.0) return KronOp::zero(a.shape);
    KronOp out = a;
    for (auto& t : out.terms) t.coeff_factors.insert(t.coeff_factors.begin(), c);
    return out;
}

KronOp kmul(const KronOp& a, const KronOp& b) {
    if (a.shape != b.shape) throw Error("invalid-dimension", "shape mismatch in kmul");
    KronOp out = KronOp::zero(a.shape);
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            KronTerm t;
            t.coeff_factors = ta.coeff_factors;
            t.coeff_factors.insert(t.coeff_factors.end(), tb.coeff_factors.begin(),
                                   tb.coeff_factors.end());
            t.blocks.reserve(ta.blocks.size());
            bool dead = false;
            for (size_t m = 0; m < ta.blocks.size(); ++m) {
                Block p = Block::custom(ta.blocks[m].mat * tb.blocks[m].mat);
                if (p.is_zero()) {
                    dead = true;
                    break;
                }
                t.blocks.push_back(std::move(p));
            }
            if (!dead) out.terms.push_back(std::move(t));
        }
    }
    return out;
}

KronOp kadjoint(const KronOp& a) {
    KronOp out = KronOp::zero(a.shape);
    for (const auto& t : a.terms) {
        KronTerm s;
        s.coeff_factors.reserve(t.coeff_factors.size());
        for (auto it = t.coeff_factors.rbegin(); it != t.coeff_factors.rend(); ++it)
            s.coeff_factors.push_back(std::conj(*it));
        for (const auto& b : t.blocks) s.blocks.push_back(b.adjoint());
        out.terms.push_back(std::move(s));
    }
    return out;
}

KronOp ktensor(const KronOp& a, const KronOp& b) {
    KronOp out = KronOp::zero(concat(a.shape, b.shape));
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            KronTerm t;
            t.coeff_factors = ta.coeff_factors;
            t.coeff_factors.insert(t.coeff_factors.end(), tb.coeff_factors.begin(),
                                   tb.coeff_factors.end());
            t.blocks = ta.blocks;
            t.blocks.insert(t.blocks.end(), tb.blocks.begin(), tb.blocks.end());
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

KronOp merge_terms(const KronOp& a) {
    std::unordered_map<std::string, size_t> index;
    KronOp out = KronOp::zero(a.shape);
    std::vector<Cplx> sums;
    for (const auto& t : a.terms) {
        bool dead = false;
        for (const auto& b : t.blocks)
            if (b.is_zero()) {
                dead = true;
                break;
            }
        if (dead) continue;
        std::string key;
        for (const auto& b : t.blocks) key += block_key(b);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(std::move(key), out.terms.size());
            KronTerm nt;
            nt.blocks = t.blocks;
            out.terms.push_back(std::move(nt));
            sums.push_back(t.coeff());
        } else {
            sums[it->second] += t.coeff();
        }
    }
    KronOp squeezed = KronOp::zero(a.shape);
    for (size_t i = 0; i < out.terms.size(); ++i) {
        if (sums[i] == 0.0) continue;
        KronTerm t = out.terms[i];
        t.coeff_factors = {sums[i]};
        squeezed.terms.push_back(std::move(t));
    }
    return squeezed;
}

CMat materialize(const KronOp& a) {
    const int total = a.shape.total_dim();
    if (total > dense_capacity_cap())
        throw Error("capacity-exceeded", "materialization exceeds dense capacity cap");
    CMat acc = CMat::Zero(total, total);
    for (const auto& t : a.terms) {
        CMat cur = CMat::Constant(1, 1, t.coeff());
        for (const auto& b : t.blocks) cur = kron_dense(cur, b.mat);
        acc += cur;
    }
    return acc;
}

TruncatedOperator to_truncated(const KronOp& a) {
    return TruncatedOperator(a.shape, materialize(a));
}

CMat materialize_interior(const KronOp& a, int margin) {
    std::vector<std::vector<int>> idx;
    long long total = 1;
    for (const auto& f : a.shape.factors) {
        idx.push_back(interior_indices(f, margin));
        total *= static_cast<long long>(idx.back().size());
    }
    if (total > (1LL << 24))
        throw Error("capacity-exceeded", "interior materialization too large");
    CMat acc = CMat::Zero(total, total);
    for (const auto& t : a.terms) {
        CMat cur = CMat::Constant(1, 1, t.coeff());
        for (size_t m = 0; m < t.blocks.size(); ++m)
            cur = kron_dense(cur, submatrix(t.blocks[m].mat, idx[m]));
        acc += cur;
    }
    return acc;
}

double interior_frobenius_bound(const KronOp& a, int margin) {
    const size_t T = a.terms.size();
    if (T == 0) {
        // still validate the interior is nonempty
        for (const auto& f : a.shape.factors) interior_indices(f, margin);
        return 0.0;
    }
    const size_t L = a.shape.factors.size();
    if (L == 0) {
        Cplx s = 0.0;
        for (const auto& t : a.terms) s += t.coeff();
        return std::abs(s);
    }

    std::vector<std::vector<int>> idx;
    for (const auto& f : a.shape.factors) idx.push_back(interior_indices(f, margin));

    // Per position: orthonormalize the compressed factor matrices (as vectors)
    // and record the coordinates of each term's factor.
    std::vector<Eigen::MatrixXcd> beta(L);   // r_m x T coordinates
    std::vector<Eigen::VectorXd> fnorm(L);   // Frobenius norms per term
    std::vector<Eigen::VectorXd> ferr(L);    // truncation residual per term
    std::vector<int> rank(L);
    for (size_t m = 0; m < L; ++m) {
        const int d = static_cast<int>(idx[m].size());
        CMat F(d * d, T);
        for (size_t t = 0; t < T; ++t) {
            CMat sub = submatrix(a.terms[t].blocks[m].mat, idx[m]);
            F.col(t) = Eigen::Map<const CVec>(sub.data(), sub.size());
        }
        Eigen::JacobiSVD<CMat> svd(F, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        const double tau = (sv.size() ? sv(0) : 0.0) * 1e-15;
        int r = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > tau) ++r;
        r = std::max(r, 1);
        rank[m] = r;
        const CMat U = svd.matrixU().leftCols(r);
        beta[m] = U.adjoint() * F;  // r x T
        fnorm[m].resize(T);
        ferr[m].resize(T);
        for (size_t t = 0; t < T; ++t) {
            fnorm[m](t) = F.col(t).norm();
            ferr[m](t) = (F.col(t) - U * beta[m].col(t)).norm();
        }
    }

    long long R = 1;
    for (size_t m = 0; m < L; ++m) {
        R *= rank[m];
        if (R > (1LL << 22)) {
            // coefficient tensor too large; fall back to a dense interior norm
            return op_norm(materialize_interior(a, margin));
        }
    }

    // gamma tensor accumulation: Frobenius of the projected operator is the
    // 2-norm of the coefficient tensor since the basis is orthonormal.
    std::vector<Cplx> gamma(static_cast<size_t>(R), Cplx(0.0, 0.0));
    std::vector<Cplx> scratch, next;
    for (size_t t = 0; t < T; ++t) {
        scratch.assign(1, a.terms[t].coeff());
        for (size_t m = 0; m < L; ++m) {
            next.assign(scratch.size() * rank[m], Cplx(0.0, 0.0));
            for (size_t u = 0; u < scratch.size(); ++u)
                for (int k = 0; k < rank[m]; ++k)
                    next[u * rank[m] + k] = scratch[u] * beta[m](k, t);
            scratch.swap(next);
        }
        for (size_t u = 0; u < gamma.size(); ++u) gamma[u] += scratch[u];
    }
    double fro2 = 0.0;
    for (const Cplx& g : gamma) fro2 += std::norm(g);

    // multilinear slack for the per-position rank truncation
    double slack = 0.0;
    for (size_t t = 0; t < T; ++t) {
        double p0 = 1.0, p1 = 1.0;
        for (size_t m = 0; m < L; ++m) {
            p0 *= fnorm[m](t);
            p1 *= fnorm[m](t) + ferr[m](t);
        }
        slack += std::abs(a.terms[t].coeff()) * (p1 - p0);
    }
    return std::sqrt(fro2) + slack;
}

double symbolic_term_diff(const KronOp& a, const KronOp& b) {
    if (a.shape != b.shape) throw Error("invalid-dimension", "shape mismatch");
    auto collect = [](const KronOp& op) {
        std::unordered_map<std::string, std::vector<Cplx>> groups;
        for (const auto& t : op.terms) {
            bool dead = false;
            for (const auto& blk : t.blocks)
                if (blk.is_zero()) {
                    dead = true;
                    break;
                }
            if (dead) continue;
            std::string key;
            for (const auto& blk : t.blocks) key += block_key(blk);
            groups[key].push_back(t.coeff());
        }
        return groups;
    };
    auto ga = collect(a);
    auto gb = collect(b);
    auto group_sum = [](std::vector<Cplx>& v) {
        std::sort(v.begin(), v.end(), [](const Cplx& x, const Cplx& y) {
            if (x.real() != y.real()) return x.real() < y.real();
            return x.imag() < y.imag();
        });
        Cplx s = 0.0;
        for (const Cplx& c : v) s += c;
        return s;
    };
    double worst = 0.0;
    for (auto& [key, va] : ga) {
        const Cplx sa = group_sum(va);
        auto it = gb.find(key);
        const Cplx sb = it == gb.end() ? Cplx(0.0) : group_sum(it->second);
        worst = std::max(worst, std::abs(sa - sb));
    }
    for (auto& [key, vb] : gb) {
        if (ga.count(key)) continue;
        worst = std::max(worst, std::abs(group_sum(vb)));
    }
    return worst;
}

double interior_norm(const KronOp& a, int margin, bool* exact, int dense_cutoff) {
    long long total = 1;
    for (const auto& f : a.shape.factors)
        total *= static_cast<long long>(interior_indices(f, margin).size());
    if (total <= dense_cutoff) {
        if (exact) *exact = true;
        return op_norm(materialize_interior(a, margin));
    }
    if (exact) *exact = false;
    return interior_frobenius_bound(a, margin);
}

}  // namespace qz
