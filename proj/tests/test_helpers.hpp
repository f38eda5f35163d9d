#pragma once

#include <complex>
#include <random>
#include <vector>

#include "rlab/algebra.hpp"
#include "rlab/spectral.hpp"

namespace rlab::testing {

inline Mat random_hermitian_mat(std::mt19937_64& rng, int n, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    Mat m(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = g(rng);
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = cplx(g(rng), g(rng));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

inline Mat random_mat(std::mt19937_64& rng, int n, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    Mat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
    return m;
}

inline HermitianOperator random_hermitian(std::mt19937_64& rng, const AlgebraPtr& alg,
                                          double scale = 1.0) {
    Operator x(alg);
    for (int k = 0; k < alg->block_count(); ++k)
        x.block(k) = random_hermitian_mat(rng, alg->block_dim(k), scale);
    return HermitianOperator(std::move(x));
}

inline Operator random_operator(std::mt19937_64& rng, const AlgebraPtr& alg, double scale = 1.0) {
    Operator x(alg);
    for (int k = 0; k < alg->block_count(); ++k)
        x.block(k) = random_mat(rng, alg->block_dim(k), scale);
    return x;
}

// PSD operator g g* scaled to spectral radius ~1.
inline Density random_density(std::mt19937_64& rng, const AlgebraPtr& alg) {
    Operator x(alg);
    for (int k = 0; k < alg->block_count(); ++k) {
        Mat g = random_mat(rng, alg->block_dim(k), 1.0);
        x.block(k) = g * g.adjoint();
        x.block(k) *= cplx(1.0 / alg->block_dim(k), 0.0);
    }
    return Density(HermitianOperator(std::move(x)));
}

// Independent oracle for 2x2 Hermitian spectra: roots of the characteristic
// polynomial, avoiding the library eigensolver entirely.
inline std::pair<double, double> eig2x2_oracle(const Mat& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    return {mid - rad, mid + rad};  // ascending
}

inline Mat mat2(cplx a, cplx b, cplx c, cplx d) {
    Mat m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

inline HermitianOperator herm2(const AlgebraPtr& alg, double a, double b, double d) {
    Operator x(alg);
    x.block(0) = mat2(a, b, b, d);
    return HermitianOperator(std::move(x));
}

inline HermitianOperator diag_op(const AlgebraPtr& alg, const std::vector<double>& entries) {
    Operator x(alg);
    size_t idx = 0;
    for (int k = 0; k < alg->block_count(); ++k)
        for (int i = 0; i < alg->block_dim(k); ++i) x.block(k)(i, i) = entries[idx++];
    return HermitianOperator(std::move(x));
}

}  // namespace rlab::testing
