#include "netid/kernels.hpp"

#include <cstddef>

namespace netid::kernels::scalar {

double dot(std::span<const double> x, std::span<const double> y) {
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * y[k];
    return acc;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t k = 0; k < x.size(); ++k) y[k] += alpha * x[k];
}

void rotate(std::span<double> x, std::span<double> y, double c, double s) {
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double xk = x[k];
        const double yk = y[k];
        x[k] = c * xk - s * yk;
        y[k] = s * xk + c * yk;
    }
}

} // namespace netid::kernels::scalar
