#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace netid {

/// Row-major dense real matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Matrix transposed() const;
    /// Submatrix from the given row and column indices (0-based).
    Matrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    double max_abs() const;
    double frobenius_norm() const;
    double inf_norm() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Gauss-Jordan inverse with partial pivoting; nullopt when a pivot
/// vanishes.
std::optional<Matrix> inverse(const Matrix& a);

/// Singular values in descending order (one-sided Jacobi).
std::vector<double> singular_values(const Matrix& a);

} // namespace netid
