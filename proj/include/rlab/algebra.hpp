#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/mat.hpp"

namespace rlab {

// Direct sum of full matrix blocks M_{n_1} + ... + M_{n_K} carrying a faithful
// weighted trace tau(x) = sum_k c_k tr(x_k).  Unequal weights model a trace
// that is not the plain matrix trace.
class BlockAlgebra {
public:
    BlockAlgebra(std::vector<int> dims, std::vector<double> weights);

    // Equal weights 1 on every block.
    static BlockAlgebra standard(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    const std::vector<double>& weights() const { return weights_; }
    int block_count() const { return static_cast<int>(dims_.size()); }
    int block_dim(int k) const { return dims_[k]; }
    double weight(int k) const { return weights_[k]; }

    // N = sum of block dimensions.
    int total_dim() const { return total_dim_; }
    // D = sum of squared block dimensions; the coordinate dimension of the
    // algebra as a vector space.
    int coord_dim() const { return coord_dim_; }
    // Offset of block k in the concatenated per-block vectorization.
    int coord_offset(int k) const { return coord_offsets_[k]; }

    // Configurable cap on the total dimension (env RENYI_LAB_MAX_DIM).
    static int max_total_dim();

    friend bool operator==(const BlockAlgebra& a, const BlockAlgebra& b) {
        return a.dims_ == b.dims_ && a.weights_ == b.weights_;
    }

private:
    std::vector<int> dims_;
    std::vector<double> weights_;
    std::vector<int> coord_offsets_;
    int total_dim_ = 0;
    int coord_dim_ = 0;
};

using AlgebraPtr = std::shared_ptr<const BlockAlgebra>;

AlgebraPtr make_algebra(std::vector<int> dims, std::vector<double> weights);
AlgebraPtr make_algebra(std::vector<int> dims);

// Element of a BlockAlgebra: one complex matrix per block.
class Operator {
public:
    Operator() = default;
    explicit Operator(AlgebraPtr algebra);
    Operator(AlgebraPtr algebra, std::vector<Mat> blocks);

    static Operator identity(AlgebraPtr algebra);
    static Operator zero(AlgebraPtr algebra) { return Operator(std::move(algebra)); }

    const AlgebraPtr& algebra() const { return algebra_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const Mat& block(int k) const { return blocks_[k]; }
    Mat& block(int k) { return blocks_[k]; }
    const std::vector<Mat>& blocks() const { return blocks_; }

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    Operator& operator*=(cplx c);
    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator*(cplx c, Operator a) { return a *= c; }
    friend Operator operator*(Operator a, cplx c) { return a *= c; }
    friend Operator operator*(const Operator& a, const Operator& b);

    Operator adjoint() const;

    // Entrywise largest modulus over all blocks (not the operator norm).
    double max_abs() const;
    double hermitian_defect() const;

    // Throws AlgebraMismatch unless both operators live on equal algebras.
    static void require_same_algebra(const Operator& a, const Operator& b, const char* where);

private:
    AlgebraPtr algebra_;
    std::vector<Mat> blocks_;
};

// Self-adjoint element; A == A* holds exactly in storage.
class HermitianOperator {
public:
    HermitianOperator() = default;

    // Mirrors the upper triangle onto the lower at construction.  If the
    // input deviates from self-adjointness by more than mirror_tol, throws
    // DomainError.
    explicit HermitianOperator(Operator op, double mirror_tol = 1e-8);

    static HermitianOperator identity(AlgebraPtr algebra) {
        return HermitianOperator(Operator::identity(std::move(algebra)));
    }
    static HermitianOperator zero(AlgebraPtr algebra) {
        return HermitianOperator(Operator::zero(std::move(algebra)));
    }

    const Operator& op() const { return op_; }
    const AlgebraPtr& algebra() const { return op_.algebra(); }
    const Mat& block(int k) const { return op_.block(k); }

    HermitianOperator& operator+=(const HermitianOperator& o);
    HermitianOperator& operator-=(const HermitianOperator& o);
    HermitianOperator& operator*=(double c);
    friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
    friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
    friend HermitianOperator operator*(double c, HermitianOperator a) { return a *= c; }

private:
    Operator op_;
};

// tau(x) = sum_k c_k tr(x_k).  Real (imaginary part dropped) for callers that
// take trace_real on Hermitian input.
cplx trace(const Operator& x);
inline cplx trace(const HermitianOperator& x) { return trace(x.op()); }
double trace_real(const HermitianOperator& x);

// tau(x * y) without forming the product.
cplx trace_of_product(const Operator& x, const Operator& y);

}  // namespace rlab
