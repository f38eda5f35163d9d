#include "rlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rlab {

namespace {

// One Jacobi rotation zeroing the (p, q) entry.  The rotation is the complex
// Givens transform; the accumulated V satisfies A_original = V A_current V*.
void jacobi_rotate(Mat& a, Mat& v, int p, int q) {
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (app - aqq) / (2.0 * r);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const cplx phase = apq / r;
    const cplx s = t * c / phase;  // s = t*c*e^{-i arg(apq)}

    const int n = a.dim();
    // columns: col_p <- c*col_p + s*col_q ; col_q <- -conj(s)*col_p + c*col_q
    for (int i = 0; i < n; ++i) {
        const cplx aip = a(i, p);
        const cplx aiq = a(i, q);
        a(i, p) = c * aip + s * aiq;
        a(i, q) = -std::conj(s) * aip + c * aiq;
    }
    // rows: row_p <- c*row_p + conj(s)*row_q ; row_q <- -s*row_p + c*row_q
    for (int j = 0; j < n; ++j) {
        const cplx apj = a(p, j);
        const cplx aqj = a(q, j);
        a(p, j) = c * apj + std::conj(s) * aqj;
        a(q, j) = -s * apj + c * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cplx(a(p, p).real(), 0.0);
    a(q, q) = cplx(a(q, q).real(), 0.0);
    for (int i = 0; i < n; ++i) {
        const cplx vip = v(i, p);
        const cplx viq = v(i, q);
        v(i, p) = c * vip + s * viq;
        v(i, q) = -std::conj(s) * vip + c * viq;
    }
}

double offdiag_frobenius(const Mat& a) {
    double s = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigResult eig_hermitian(const Mat& input) {
    const int n = input.dim();
    Mat a = input;
    a.hermitize();
    Mat v = Mat::identity(n);
    const double norm_f = a.frobenius_norm();
    EigResult res;
    if (n == 0) return res;
    if (norm_f > 0.0) {
        const double target = 1e-14 * norm_f;
        const double skip = 1e-18 * norm_f;
        constexpr int max_sweeps = 100;
        bool converged = false;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            if (offdiag_frobenius(a) <= target) {
                converged = true;
                break;
            }
            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q)
                    if (std::abs(a(p, q)) > skip) jacobi_rotate(a, v, p, q);
        }
        if (!converged && offdiag_frobenius(a) > target)
            throw NumericalFailure("eig_hermitian: Jacobi sweeps did not converge");
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] < diag[j]; });
    res.values.resize(n);
    res.vectors = Mat(n);
    for (int col = 0; col < n; ++col) {
        res.values[col] = diag[order[col]];
        for (int i = 0; i < n; ++i) res.vectors(i, col) = v(i, order[col]);
    }
    return res;
}

// ---------------------------------------------------------------------------

SpectralDecomposition::SpectralDecomposition(AlgebraPtr algebra, std::vector<SpectralCluster> clusters,
                                             double cluster_tol)
    : algebra_(std::move(algebra)), clusters_(std::move(clusters)), cluster_tol_(cluster_tol) {
    if (clusters_.empty()) throw InvalidParameter("SpectralDecomposition: no clusters");
    const int n_max = algebra_->total_dim();
    const double tol = 1e-9;
    for (size_t i = 0; i + 1 < clusters_.size(); ++i)
        if (!(clusters_[i].value > clusters_[i + 1].value))
            throw NumericalFailure("SpectralDecomposition: representatives not strictly decreasing");
    // Algebraic invariants of the projection family, via entrywise bounds
    // (n * max_abs dominates the operator norm).
    Operator sum = Operator::zero(algebra_);
    for (const auto& c : clusters_) {
        const Operator& p = c.projection.op();
        Operator defect = p * p - p;
        if (n_max * defect.max_abs() > tol)
            throw NumericalFailure("SpectralDecomposition: projection not idempotent");
        sum += p;
    }
    sum -= Operator::identity(algebra_);
    if (n_max * sum.max_abs() > tol)
        throw NumericalFailure("SpectralDecomposition: projections do not sum to 1");
    for (size_t i = 0; i < clusters_.size(); ++i)
        for (size_t j = i + 1; j < clusters_.size(); ++j) {
            Operator prod = clusters_[i].projection.op() * clusters_[j].projection.op();
            if (n_max * prod.max_abs() > tol)
                throw NumericalFailure("SpectralDecomposition: projections not orthogonal");
        }
}

double SpectralDecomposition::min_cluster_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < clusters_.size(); ++i)
        g = std::min(g, clusters_[i].value - clusters_[i + 1].value);
    return g;
}

HermitianOperator SpectralDecomposition::apply(const std::function<double(double)>& f) const {
    Operator out = Operator::zero(algebra_);
    for (const auto& c : clusters_) {
        const double y = f(c.value);
        if (!std::isfinite(y))
            throw DomainError("apply_function: function not finite at eigenvalue " +
                              std::to_string(c.value));
        if (y == 0.0) continue;
        Operator term = c.projection.op();
        term *= cplx(y, 0.0);
        out += term;
    }
    return HermitianOperator(std::move(out));
}

double SpectralDecomposition::trace_apply(const std::function<double(double)>& f) const {
    double t = 0.0;
    for (const auto& c : clusters_) {
        const double y = f(c.value);
        if (!std::isfinite(y))
            throw DomainError("trace_apply: function not finite at eigenvalue " +
                              std::to_string(c.value));
        t += y * trace_real(c.projection);
    }
    return t;
}

SpectralDecomposition spectral_decompose(const HermitianOperator& h, double cluster_tol) {
    if (!(cluster_tol >= 0.0)) throw InvalidParameter("spectral_decompose: cluster_tol must be >= 0");
    struct Entry {
        double value;
        int block;
        int col;
    };
    const AlgebraPtr& alg = h.algebra();
    std::vector<EigResult> eigs(alg->block_count());
    std::vector<Entry> entries;
    double spectral_radius = 0.0;
    for (int k = 0; k < alg->block_count(); ++k) {
        eigs[k] = eig_hermitian(h.block(k));
        for (int i = 0; i < alg->block_dim(k); ++i) {
            entries.push_back({eigs[k].values[i], k, i});
            spectral_radius = std::max(spectral_radius, std::abs(eigs[k].values[i]));
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.value > b.value; });
    const double abs_tol = cluster_tol * std::max(1.0, spectral_radius);

    std::vector<SpectralCluster> clusters;
    size_t i = 0;
    while (i < entries.size()) {
        // anchor the cluster at its largest member so its width stays <= abs_tol
        size_t j = i + 1;
        while (j < entries.size() && entries[i].value - entries[j].value <= abs_tol) ++j;
        double mean = 0.0;
        for (size_t l = i; l < j; ++l) mean += entries[l].value;
        mean /= static_cast<double>(j - i);
        Operator proj = Operator::zero(alg);
        for (size_t l = i; l < j; ++l) {
            const Mat& v = eigs[entries[l].block].vectors;
            Mat& pb = proj.block(entries[l].block);
            const int n = pb.dim();
            const int col = entries[l].col;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) pb(r, c) += v(r, col) * std::conj(v(c, col));
        }
        clusters.push_back({mean, HermitianOperator(std::move(proj)), static_cast<int>(j - i)});
        i = j;
    }
    return SpectralDecomposition(alg, std::move(clusters), cluster_tol);
}

// ---------------------------------------------------------------------------

Density::Density(HermitianOperator h, double cluster_tol) : h_(std::move(h)) {
    decomp_ = std::make_shared<const SpectralDecomposition>(spectral_decompose(h_, cluster_tol));
    double raw_min = std::numeric_limits<double>::infinity();
    double raw_max = -raw_min;
    // cluster reps are within cluster_tol of raw eigenvalues; check PSD on the
    // raw per-block spectra to keep the 1e-10 tolerance honest
    for (int k = 0; k < h_.algebra()->block_count(); ++k) {
        const auto eig = eig_hermitian(h_.block(k));
        raw_min = std::min(raw_min, eig.values.front());
        raw_max = std::max(raw_max, eig.values.back());
    }
    const double scale = std::max(1.0, std::max(std::abs(raw_min), std::abs(raw_max)));
    if (raw_min < -1e-10 * scale)
        throw DomainError("Density: not positive semidefinite (lambda_min = " +
                          std::to_string(raw_min) + ")");
    trace_ = trace_real(h_);
    if (!(trace_ > 0.0)) throw DegenerateDensity("Density: tau(h) must be > 0");
}

// ---------------------------------------------------------------------------

std::vector<std::pair<double, double>> weighted_singular_values(const Operator& x) {
    std::vector<std::pair<double, double>> out;
    for (int k = 0; k < x.block_count(); ++k) {
        const Mat prod = x.block(k).adjoint() * x.block(k);
        const auto eig = eig_hermitian(prod);
        for (double v : eig.values)
            out.emplace_back(std::sqrt(std::max(v, 0.0)), x.algebra()->weight(k));
    }
    return out;
}

double inf_norm(const Operator& x) {
    double m = 0.0;
    for (const auto& [sigma, w] : weighted_singular_values(x)) m = std::max(m, sigma);
    return m;
}

double inf_norm(const HermitianOperator& x) {
    double m = 0.0;
    for (int k = 0; k < x.algebra()->block_count(); ++k) {
        const auto eig = eig_hermitian(x.block(k));
        if (!eig.values.empty())
            m = std::max({m, std::abs(eig.values.front()), std::abs(eig.values.back())});
    }
    return m;
}

double l1_norm(const Operator& x) {
    double s = 0.0;
    for (const auto& [sigma, w] : weighted_singular_values(x)) s += w * sigma;
    return s;
}

double chebyshev_tail(const Operator& x, double eps) {
    if (!(eps > 0.0)) throw InvalidParameter("chebyshev_tail: eps must be > 0");
    double t = 0.0;
    for (const auto& [sigma, w] : weighted_singular_values(x))
        if (sigma >= eps) t += w;
    return t;
}

// ---------------------------------------------------------------------------

HermitianOperator apply_function(const HermitianOperator& h, const std::function<double(double)>& f,
                                 double cluster_tol) {
    return spectral_decompose(h, cluster_tol).apply(f);
}

HermitianOperator apply_function(const SpectralDecomposition& dec, const std::function<double(double)>& f) {
    return dec.apply(f);
}

HermitianOperator power(const Density& h, double alpha) {
    if (!(alpha > 0.0)) throw InvalidAlpha("power: alpha must be > 0");
    return h.decomposition().apply(
        [alpha](double t) { return t <= 0.0 ? 0.0 : std::pow(t, alpha); });
}

double trace_of_power(const Density& h, double alpha) {
    if (!(alpha > 0.0)) throw InvalidAlpha("trace_of_power: alpha must be > 0");
    return h.decomposition().trace_apply(
        [alpha](double t) { return t <= 0.0 ? 0.0 : std::pow(t, alpha); });
}

HermitianOperator resolvent_product(const Density& h, double s) {
    if (!(s > 0.0)) throw InvalidParameter("resolvent_product: s must be > 0");
    return h.decomposition().apply(
        [s](double t) { return t <= 0.0 ? 0.0 : t / (s + t); });
}

HermitianOperator support_projection(const Density& h, double tol) {
    const auto& dec = h.decomposition();
    const double radius = std::max(std::abs(dec.min_eigenvalue()), std::abs(dec.max_eigenvalue()));
    Operator out = Operator::zero(h.algebra());
    for (const auto& c : dec.clusters())
        if (c.value > tol * radius && c.value > 0.0) out += c.projection.op();
    return HermitianOperator(std::move(out));
}

// ---------------------------------------------------------------------------

OrderVerdict loewner_leq(const HermitianOperator& a, const HermitianOperator& b, double tol) {
    Operator::require_same_algebra(a.op(), b.op(), "loewner_leq");
    const HermitianOperator diff = b - a;
    double lambda_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k < diff.algebra()->block_count(); ++k) {
        const auto eig = eig_hermitian(diff.block(k));
        lambda_min = std::min(lambda_min, eig.values.front());
    }
    OrderVerdict v;
    v.lambda_min = lambda_min;
    v.tol = tol;
    v.threshold = tol * std::max(1.0, inf_norm(a) + inf_norm(b));
    v.holds = lambda_min >= -v.threshold;
    return v;
}

Operator jordan_product(const Operator& x, const Operator& y) {
    Operator::require_same_algebra(x, y, "jordan_product");
    Operator out = x * y + y * x;
    out *= cplx(0.5, 0.0);
    return out;
}

HermitianOperator jordan_product(const HermitianOperator& x, const HermitianOperator& y) {
    return HermitianOperator(jordan_product(x.op(), y.op()));
}

}  // namespace rlab
