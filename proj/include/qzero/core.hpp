// Truncated-Hilbert-space operator kernel.
//
// Models finite truncations of l2(N) ("half line", basis e_0..e_{d-1}) and
// l2(Z) ("line", basis e_{-M}..e_M) together with dense complex operators on
// tensor products of such factors.  Truncation convention: the compression of
// the left shift S acts exactly on e_0..e_{d-2}; every truncation defect of a
// shift-polynomial identity sits at the top index of a half-line factor and at
// both ends of a line factor.  Interior compression therefore removes the top
// `margin` indices of each half-line factor and `margin` indices from both
// ends of each line factor.

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qz {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Error with a stable machine-readable code ("invalid-dimension", ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Cap on the total dimension of any densely materialized operator.
// Mutable process-wide configuration (CLI --capacity).
int dense_capacity_cap();
void set_dense_capacity_cap(int cap);

enum class FactorKind { half, line };

struct FactorSpec {
    FactorKind kind = FactorKind::half;
    int dim = 2;  // line factors have odd dim = 2M+1

    friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

struct SpaceShape {
    std::vector<FactorSpec> factors;  // empty = scalar space C

    int total_dim() const;
    void validate() const;  // every factor dim >= 2, line dims odd

    friend bool operator==(const SpaceShape&, const SpaceShape&) = default;
};

SpaceShape scalar_shape();
SpaceShape half_shape(int dim);
SpaceShape line_shape(int dim);
SpaceShape concat(const SpaceShape& a, const SpaceShape& b);

// Indices (0-based positions) of a factor that survive interior compression
// at the given margin.  Throws "empty-interior" when nothing survives.
std::vector<int> interior_indices(const FactorSpec& f, int margin);

// 0/1 mask over the lexicographic product basis of `shape`.
std::vector<char> interior_mask(const SpaceShape& shape, int margin);

// Dense operator on the lexicographic basis of its shape.
struct TruncatedOperator {
    SpaceShape shape;
    CMat entries;

    TruncatedOperator() = default;
    TruncatedOperator(SpaceShape s, CMat m);

    int dim() const { return static_cast<int>(entries.rows()); }
    TruncatedOperator adjoint() const;

    friend TruncatedOperator operator+(const TruncatedOperator&, const TruncatedOperator&);
    friend TruncatedOperator operator-(const TruncatedOperator&, const TruncatedOperator&);
    friend TruncatedOperator operator*(const TruncatedOperator&, const TruncatedOperator&);
    friend TruncatedOperator operator*(const Cplx&, const TruncatedOperator&);
};

// Left shift S on a half-line factor: S e_0 = 0, S e_k = e_{k-1}.
TruncatedOperator make_shift(int dim);

// Diagonal operator with entry (k,k) = f(k).
TruncatedOperator make_diag(int dim, const std::function<Cplx(int)>& f);

// Rank-one projection |e_0><e_0|.
TruncatedOperator rank_one_ground(int dim);

TruncatedOperator identity_op(const SpaceShape& shape);

// Forward (two-sided) shift u e_k = e_{k+1} on a line factor, zero top row.
TruncatedOperator make_bilateral_shift(int dim);

// Kronecker product, shapes concatenated.  Errors with "capacity-exceeded"
// past the configured dense capacity cap.
TruncatedOperator tensor(const TruncatedOperator& a, const TruncatedOperator& b);

// Largest singular value (1e-12 relative accuracy).
double op_norm(const CMat& m);
double op_norm(const TruncatedOperator& a);

struct SpectrumCluster {
    Cplx value;  // cluster mean
    int multiplicity;
};

// Eigenvalue multiset of a normal operator, merged into clusters of radius
// `cluster_tol`.  Throws "non-normal-operator" if ||aa*-a*a|| > normal_tol.
std::vector<SpectrumCluster> spectrum_normal(const TruncatedOperator& a,
                                             double normal_tol,
                                             double cluster_tol = 1e-8);
std::vector<SpectrumCluster> spectrum_normal_matrix(const CMat& a, double normal_tol,
                                                    double cluster_tol = 1e-8);

// ||C (a-b) C|| with C the interior compression at `margin`.
double interior_residual(const TruncatedOperator& a, const TruncatedOperator& b,
                         int margin);

// Compressed matrix C m C restricted to the interior index set (rows and
// columns dropped, not zeroed).
CMat compress_interior(const SpaceShape& shape, const CMat& m, int margin);

}  // namespace qz
