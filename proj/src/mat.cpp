#include "rlab/mat.hpp"

#include <algorithm>

#include "rlab/errors.hpp"

namespace rlab {

Mat solve(Mat a, Mat b) {
    const int n = a.dim();
    if (b.dim() != n) throw InvalidParameter("solve: dimension mismatch");
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) throw NumericalFailure("solve: singular matrix");
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(b(col, j), b(piv, j));
            }
        }
        const cplx d = a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const cplx f = a(r, col) / d;
            if (f == cplx(0.0, 0.0)) continue;
            a(r, col) = 0.0;
            for (int j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
            for (int j = 0; j < n; ++j) b(r, j) -= f * b(col, j);
        }
    }
    for (int col = n - 1; col >= 0; --col) {
        const cplx d = a(col, col);
        for (int j = 0; j < n; ++j) b(col, j) /= d;
        for (int r = 0; r < col; ++r) {
            const cplx f = a(r, col);
            if (f == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) b(r, j) -= f * b(col, j);
        }
    }
    return b;
}

bool cholesky_feasible(const Mat& a, double shift) {
    const int n = a.dim();
    Mat l(n);
    for (int j = 0; j < n; ++j) {
        double diag = a(j, j).real() + shift;
        for (int k = 0; k < j; ++k) diag -= std::norm(l(j, k));
        if (!(diag > 0.0)) return false;
        const double ljj = std::sqrt(diag);
        l(j, j) = ljj;
        for (int i = j + 1; i < n; ++i) {
            cplx v = a(i, j);
            for (int k = 0; k < j; ++k) v -= l(i, k) * std::conj(l(j, k));
            l(i, j) = v / ljj;
        }
    }
    return true;
}

}  // namespace rlab
