#include "netid/dense.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "netid/kernels.hpp"

namespace netid {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    Matrix s(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(rows[r], cols[c]);
    return s;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::frobenius_norm() const {
    return std::sqrt(kernels::dot(data_, data_));
}

double Matrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double sum = 0.0;
        for (double v : row(r)) sum += std::abs(v);
        best = std::max(best, sum);
    }
    return best;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k) != 0.0) kernels::axpy(a(r, k), b.row(k), out.row(r));
        }
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) kernels::axpy(-1.0, b.row(r), out.row(r));
    return out;
}

std::optional<Matrix> inverse(const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix work = a;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
        }
        if (work(pivot, col) == 0.0) return std::nullopt;
        if (pivot != col) {
            std::swap_ranges(work.row(pivot).begin(), work.row(pivot).end(), work.row(col).begin());
            std::swap_ranges(inv.row(pivot).begin(), inv.row(pivot).end(), inv.row(col).begin());
        }
        const double scale = 1.0 / work(col, col);
        for (double& v : work.row(col)) v *= scale;
        for (double& v : inv.row(col)) v *= scale;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double factor = work(r, col);
            if (factor == 0.0) continue;
            kernels::axpy(-factor, work.row(col), work.row(r));
            kernels::axpy(-factor, inv.row(col), inv.row(r));
        }
    }
    return inv;
}

std::vector<double> singular_values(const Matrix& a) {
    if (a.empty()) return {};
    // Orthogonalise the rows of the wider orientation; the singular values
    // are then the row norms.
    Matrix w = a.rows() <= a.cols() ? a : a.transposed();
    const std::size_t m = w.rows();
    constexpr double kEps = 1e-15;
    constexpr int kMaxSweeps = 60;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double alpha = kernels::dot(w.row(p), w.row(p));
                const double beta = kernels::dot(w.row(q), w.row(q));
                const double gamma = kernels::dot(w.row(p), w.row(q));
                if (gamma == 0.0 || std::abs(gamma) <= kEps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                // (p, q) <- (c p - s q, s p + c q)
                kernels::rotate(w.row(p), w.row(q), c, s);
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sv(m);
    for (std::size_t r = 0; r < m; ++r) sv[r] = std::sqrt(kernels::dot(w.row(r), w.row(r)));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

} // namespace netid
