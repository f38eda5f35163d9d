#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace rlab {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major.  Sized for single algebra blocks
// (n <= 16), so everything is plain loops over contiguous storage.
class Mat {
public:
    Mat() : n_(0) {}
    explicit Mat(int n) : n_(n), a_(static_cast<size_t>(n) * n, cplx(0.0, 0.0)) {}

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    Mat& operator+=(const Mat& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Mat& operator*=(cplx c) {
        for (auto& v : a_) v *= c;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(cplx c, Mat a) { return a *= c; }
    friend Mat operator*(Mat a, cplx c) { return a *= c; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        assert(a.n_ == b.n_);
        const int n = a.n_;
        Mat c(n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx(0.0, 0.0)) continue;
                for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    Mat adjoint() const {
        Mat b(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) b(j, i) = std::conj((*this)(i, j));
        return b;
    }

    Mat transpose() const {
        Mat b(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) b(j, i) = (*this)(i, j);
        return b;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    // Mirrors the upper triangle onto the lower one and zeroes the imaginary
    // parts of the diagonal, so A == A* holds exactly in storage.
    void hermitize() {
        for (int i = 0; i < n_; ++i) {
            (*this)(i, i) = cplx((*this)(i, i).real(), 0.0);
            for (int j = i + 1; j < n_; ++j) {
                const cplx avg = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
                (*this)(i, j) = avg;
                (*this)(j, i) = std::conj(avg);
            }
        }
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    double hermitian_defect() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

private:
    int n_;
    std::vector<cplx> a_;
};

// Solves A X = B by Gaussian elimination with partial pivoting.  Used by the
// resolvent-sum cross-check path, which must stay independent of the
// eigendecomposition route.
Mat solve(Mat a, Mat b);

// In-place Cholesky feasibility test: returns true iff a + shift*I admits a
// Cholesky factorization (i.e. is positive definite).
bool cholesky_feasible(const Mat& a, double shift);

}  // namespace rlab
