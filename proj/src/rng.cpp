#include "rlab/rng.hpp"

#include <algorithm>
#include <cmath>

namespace rlab {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed;
    std::uint64_t a = splitmix64(state);
    state ^= index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    std::uint64_t b = splitmix64(state);
    return a ^ (b + 0x9e3779b97f4a7c15ULL);
}

double Rng::uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(engine_);
}

double Rng::normal() {
    std::normal_distribution<double> d(0.0, 1.0);
    return d(engine_);
}

int Rng::uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(engine_);
}

cplx Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return cplx(re, im) * (1.0 / std::sqrt(2.0));
}

Mat ginibre(Rng& rng, int n) {
    Mat g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    return g;
}

Mat haar_unitary(Rng& rng, int n) {
    Mat g = ginibre(rng, n);
    // modified Gram-Schmidt with one re-orthogonalization pass
    Mat q(n);
    for (int col = 0; col < n; ++col) {
        std::vector<cplx> v(n);
        for (int i = 0; i < n; ++i) v[i] = g(i, col);
        for (int pass = 0; pass < 2; ++pass) {
            for (int prev = 0; prev < col; ++prev) {
                cplx proj = 0.0;
                for (int i = 0; i < n; ++i) proj += std::conj(q(i, prev)) * v[i];
                for (int i = 0; i < n; ++i) v[i] -= proj * q(i, prev);
            }
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += std::norm(v[i]);
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw GenerationFailure("haar_unitary: rank-deficient Ginibre sample");
        // phase fix: make the leading entry's phase that of the R diagonal
        cplx lead = 0.0;
        for (int i = 0; i < n; ++i) lead += std::conj(v[i] / norm) * g(i, col);
        const cplx phase = lead / std::abs(lead);
        for (int i = 0; i < n; ++i) q(i, col) = v[i] / norm * phase;
    }
    return q;
}

Operator haar_unitary_operator(Rng& rng, const AlgebraPtr& alg) {
    Operator u(alg);
    for (int k = 0; k < alg->block_count(); ++k) u.block(k) = haar_unitary(rng, alg->block_dim(k));
    return u;
}

Density random_density(Rng& rng, const AlgebraPtr& alg, const DensityOptions& opts) {
    const int n = alg->total_dim();
    std::vector<double> evals(n);
    for (double& v : evals) v = rng.uniform(opts.spectrum_min, opts.spectrum_max);
    if (opts.degenerate && n >= 2) {
        const int i = rng.uniform_int(0, n - 2);
        evals[i + 1] = evals[i];
    }
    Operator h(alg);
    int idx = 0;
    for (int k = 0; k < alg->block_count(); ++k) {
        const int d = alg->block_dim(k);
        const Mat u = haar_unitary(rng, d);
        Mat lam(d);
        for (int i = 0; i < d; ++i) lam(i, i) = evals[idx++];
        h.block(k) = u * lam * u.adjoint();
    }
    HermitianOperator hh(std::move(h));
    if (opts.normalize_trace) {
        const double t = trace_real(hh);
        hh *= 1.0 / t;
    }
    return Density(std::move(hh));
}

HermitianOperator random_psd(Rng& rng, const AlgebraPtr& alg) {
    Operator x(alg);
    for (int k = 0; k < alg->block_count(); ++k) {
        const Mat g = ginibre(rng, alg->block_dim(k));
        x.block(k) = g * g.adjoint();
        x.block(k) *= cplx(1.0 / alg->block_dim(k), 0.0);
    }
    return HermitianOperator(std::move(x));
}

HermitianOperator random_hermitian(Rng& rng, const AlgebraPtr& alg, double scale) {
    Operator x(alg);
    for (int k = 0; k < alg->block_count(); ++k) {
        const int n = alg->block_dim(k);
        Mat m(n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = scale * rng.normal();
            for (int j = i + 1; j < n; ++j) {
                m(i, j) = scale * rng.complex_normal();
                m(j, i) = std::conj(m(i, j));
            }
        }
        x.block(k) = m;
    }
    return HermitianOperator(std::move(x));
}

}  // namespace rlab
