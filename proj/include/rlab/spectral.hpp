#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rlab/algebra.hpp"

namespace rlab {

// ---------------------------------------------------------------------------
// Eigensolver (cyclic Jacobi with complex rotations)
// ---------------------------------------------------------------------------

struct EigResult {
    std::vector<double> values;  // ascending
    Mat vectors;                 // columns are orthonormal eigenvectors
};

// Diagonalizes a Hermitian matrix by cyclic Jacobi sweeps.  Converges when the
// off-diagonal Frobenius mass drops below 1e-14 * ||A||_F; throws
// NumericalFailure after 100 sweeps.
EigResult eig_hermitian(const Mat& a);

// ---------------------------------------------------------------------------
// Spectral decomposition with eigenvalue clustering
// ---------------------------------------------------------------------------

struct SpectralCluster {
    double value;                       // cluster representative (mean)
    HermitianOperator projection;       // block-diagonal orthogonal projection
    int multiplicity;
};

// Clustered spectral resolution h = sum_i value_i * projection_i with strictly
// decreasing representatives and mutually orthogonal projections summing to 1.
class SpectralDecomposition {
public:
    SpectralDecomposition(AlgebraPtr algebra, std::vector<SpectralCluster> clusters, double cluster_tol);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<SpectralCluster>& clusters() const { return clusters_; }
    int cluster_count() const { return static_cast<int>(clusters_.size()); }
    double cluster_tol() const { return cluster_tol_; }

    // Smallest gap between consecutive cluster representatives (+inf for a
    // single cluster); callers use it to judge clustering ambiguity.
    double min_cluster_gap() const;

    // sum f(value_i) * projection_i
    HermitianOperator apply(const std::function<double(double)>& f) const;

    // sum_i f(value_i) * tau(projection_i) without forming operators.
    double trace_apply(const std::function<double(double)>& f) const;

    double min_eigenvalue() const { return clusters_.back().value; }
    double max_eigenvalue() const { return clusters_.front().value; }

private:
    AlgebraPtr algebra_;
    std::vector<SpectralCluster> clusters_;
    double cluster_tol_;
};

inline double default_cluster_tol() { return 1e-8; }

// Clusters eigenvalues that lie within cluster_tol * max(1, ||h||_inf) of the
// cluster anchor, so the reconstruction defect stays below that bound.
SpectralDecomposition spectral_decompose(const HermitianOperator& h,
                                         double cluster_tol = default_cluster_tol());

// ---------------------------------------------------------------------------
// Density (positive element with tau(h) > 0)
// ---------------------------------------------------------------------------

class Density {
public:
    // Validates lambda_min >= -1e-10 * max(1, ||h||_inf) and tau(h) > 0.
    // The decomposition computed for validation is cached.
    explicit Density(HermitianOperator h, double cluster_tol = default_cluster_tol());

    const HermitianOperator& hermitian() const { return h_; }
    const Operator& op() const { return h_.op(); }
    const AlgebraPtr& algebra() const { return h_.algebra(); }
    const SpectralDecomposition& decomposition() const { return *decomp_; }
    double trace() const { return trace_; }

private:
    HermitianOperator h_;
    std::shared_ptr<const SpectralDecomposition> decomp_;
    double trace_ = 0.0;
};

// ---------------------------------------------------------------------------
// Norms and diagnostics
// ---------------------------------------------------------------------------

// Operator norm ||x||_inf (largest singular value).
double inf_norm(const Operator& x);
double inf_norm(const HermitianOperator& x);

// ||x||_1 = tau(|x|), via the spectrum of x* x.
double l1_norm(const Operator& x);
inline double l1_norm(const HermitianOperator& x) { return l1_norm(x.op()); }

// Singular values sigma >= 0 of each block of x, with the block's trace
// weight attached: pairs (sigma, weight).
std::vector<std::pair<double, double>> weighted_singular_values(const Operator& x);

// tau of the spectral projection of |x| onto [eps, inf).
double chebyshev_tail(const Operator& x, double eps);

// ---------------------------------------------------------------------------
// Functional calculus
// ---------------------------------------------------------------------------

// sum f(lambda_i) p_i.  Throws DomainError if f returns a non-finite value on
// some cluster representative.
HermitianOperator apply_function(const HermitianOperator& h, const std::function<double(double)>& f,
                                 double cluster_tol = default_cluster_tol());
HermitianOperator apply_function(const SpectralDecomposition& dec, const std::function<double(double)>& f);

// t -> t^alpha on the spectrum, with 0^alpha := 0 on the kernel (eigenvalues
// at or below the PSD tolerance are mapped to 0).  Requires alpha > 0.
HermitianOperator power(const Density& h, double alpha);
double trace_of_power(const Density& h, double alpha);

// h (s + h)^{-1} via t -> t / (s + t); requires s > 0.
HermitianOperator resolvent_product(const Density& h, double s);

// Sum of spectral projections with eigenvalue > tol * ||h||_inf.
HermitianOperator support_projection(const Density& h, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Order and algebra operations
// ---------------------------------------------------------------------------

struct OrderVerdict {
    bool holds = false;
    double lambda_min = 0.0;   // smallest eigenvalue of b - a
    double tol = 0.0;          // relative tolerance requested
    double threshold = 0.0;    // absolute threshold actually applied
};

// a <= b in the Loewner order: lambda_min(b - a) >= -tol * max(1, ||a|| + ||b||).
OrderVerdict loewner_leq(const HermitianOperator& a, const HermitianOperator& b, double tol = 1e-10);

// (xy + yx) / 2
Operator jordan_product(const Operator& x, const Operator& y);
HermitianOperator jordan_product(const HermitianOperator& x, const HermitianOperator& y);

}  // namespace rlab
