#include "rlab/algebra.hpp"

#include <cstdlib>
#include <numeric>

namespace rlab {

BlockAlgebra::BlockAlgebra(std::vector<int> dims, std::vector<double> weights)
    : dims_(std::move(dims)), weights_(std::move(weights)) {
    if (dims_.empty()) throw InvalidParameter("BlockAlgebra: no blocks");
    if (dims_.size() != weights_.size())
        throw InvalidParameter("BlockAlgebra: dims/weights length mismatch");
    for (int n : dims_)
        if (n < 1) throw InvalidParameter("BlockAlgebra: block dimension must be >= 1");
    for (double c : weights_)
        if (!(c > 0.0)) throw InvalidParameter("BlockAlgebra: trace weights must be > 0");
    coord_offsets_.resize(dims_.size());
    for (size_t k = 0; k < dims_.size(); ++k) {
        coord_offsets_[k] = coord_dim_;
        total_dim_ += dims_[k];
        coord_dim_ += dims_[k] * dims_[k];
    }
    if (total_dim_ > max_total_dim())
        throw InvalidParameter("BlockAlgebra: total dimension " + std::to_string(total_dim_) +
                               " exceeds cap " + std::to_string(max_total_dim()) +
                               " (override with RENYI_LAB_MAX_DIM)");
}

BlockAlgebra BlockAlgebra::standard(std::vector<int> dims) {
    std::vector<double> w(dims.size(), 1.0);
    return BlockAlgebra(std::move(dims), std::move(w));
}

int BlockAlgebra::max_total_dim() {
    static const int cap = [] {
        if (const char* env = std::getenv("RENYI_LAB_MAX_DIM")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 16;
    }();
    return cap;
}

AlgebraPtr make_algebra(std::vector<int> dims, std::vector<double> weights) {
    return std::make_shared<const BlockAlgebra>(std::move(dims), std::move(weights));
}

AlgebraPtr make_algebra(std::vector<int> dims) {
    return std::make_shared<const BlockAlgebra>(BlockAlgebra::standard(std::move(dims)));
}

Operator::Operator(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
    if (!algebra_) throw InvalidParameter("Operator: null algebra");
    blocks_.reserve(algebra_->block_count());
    for (int k = 0; k < algebra_->block_count(); ++k) blocks_.emplace_back(algebra_->block_dim(k));
}

Operator::Operator(AlgebraPtr algebra, std::vector<Mat> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
    if (!algebra_) throw InvalidParameter("Operator: null algebra");
    if (static_cast<int>(blocks_.size()) != algebra_->block_count())
        throw AlgebraMismatch("Operator: wrong block count");
    for (int k = 0; k < algebra_->block_count(); ++k)
        if (blocks_[k].dim() != algebra_->block_dim(k))
            throw AlgebraMismatch("Operator: block " + std::to_string(k) + " has wrong shape");
}

Operator Operator::identity(AlgebraPtr algebra) {
    Operator x(std::move(algebra));
    for (int k = 0; k < x.block_count(); ++k) x.block(k) = Mat::identity(x.block(k).dim());
    return x;
}

void Operator::require_same_algebra(const Operator& a, const Operator& b, const char* where) {
    if (!a.algebra_ || !b.algebra_ || !(*a.algebra_ == *b.algebra_))
        throw AlgebraMismatch(std::string(where) + ": operators on different algebras");
}

Operator& Operator::operator+=(const Operator& o) {
    require_same_algebra(*this, o, "operator+");
    for (int k = 0; k < block_count(); ++k) blocks_[k] += o.blocks_[k];
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    require_same_algebra(*this, o, "operator-");
    for (int k = 0; k < block_count(); ++k) blocks_[k] -= o.blocks_[k];
    return *this;
}

Operator& Operator::operator*=(cplx c) {
    for (auto& b : blocks_) b *= c;
    return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
    Operator::require_same_algebra(a, b, "operator*");
    Operator c(a.algebra());
    for (int k = 0; k < a.block_count(); ++k) c.block(k) = a.block(k) * b.block(k);
    return c;
}

Operator Operator::adjoint() const {
    Operator c(algebra_);
    for (int k = 0; k < block_count(); ++k) c.block(k) = blocks_[k].adjoint();
    return c;
}

double Operator::max_abs() const {
    double m = 0.0;
    for (const auto& b : blocks_) m = std::max(m, b.max_abs());
    return m;
}

double Operator::hermitian_defect() const {
    double m = 0.0;
    for (const auto& b : blocks_) m = std::max(m, b.hermitian_defect());
    return m;
}

HermitianOperator::HermitianOperator(Operator op, double mirror_tol) : op_(std::move(op)) {
    const double defect = op_.hermitian_defect();
    if (defect > mirror_tol * std::max(1.0, op_.max_abs()))
        throw DomainError("HermitianOperator: input is not self-adjoint (defect " +
                          std::to_string(defect) + ")");
    for (int k = 0; k < op_.block_count(); ++k) op_.block(k).hermitize();
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
    op_ += o.op_;
    return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& o) {
    op_ -= o.op_;
    return *this;
}

HermitianOperator& HermitianOperator::operator*=(double c) {
    op_ *= cplx(c, 0.0);
    return *this;
}

cplx trace(const Operator& x) {
    cplx t = 0.0;
    for (int k = 0; k < x.block_count(); ++k) t += x.algebra()->weight(k) * x.block(k).trace();
    return t;
}

double trace_real(const HermitianOperator& x) { return trace(x.op()).real(); }

cplx trace_of_product(const Operator& x, const Operator& y) {
    Operator::require_same_algebra(x, y, "trace_of_product");
    cplx t = 0.0;
    for (int k = 0; k < x.block_count(); ++k) {
        const Mat& a = x.block(k);
        const Mat& b = y.block(k);
        cplx s = 0.0;
        const int n = a.dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += a(i, j) * b(j, i);
        t += x.algebra()->weight(k) * s;
    }
    return t;
}

}  // namespace rlab
