#pragma once

#include <span>
#include <string_view>

// Dense inner loops used by the numeric oracle (row elimination, Jacobi
// rotations, dot products). Each kernel has a portable scalar reference and,
// where the CPU supports it, an AVX2 variant chosen once at startup.
//
// axpy and rotate are elementwise and the AVX2 path avoids FMA, so both
// backends produce bit-identical results. dot reorders the reduction and
// agrees only to rounding.

namespace netid::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

/// Backend selected for this process. Honours NETID_KERNELS=scalar.
Backend active_backend();
/// True if the running CPU can execute the given backend.
bool backend_available(Backend b);
/// Forces a backend (tests, benchmarking). Throws if unavailable.
void set_backend(Backend b);

double dot(std::span<const double> x, std::span<const double> y);
/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
/// (x, y) <- (c*x - s*y, s*x + c*y)
void rotate(std::span<double> x, std::span<double> y, double c, double s);

namespace scalar {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void rotate(std::span<double> x, std::span<double> y, double c, double s);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define NETID_HAVE_AVX2_KERNELS 1
namespace avx2 {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void rotate(std::span<double> x, std::span<double> y, double c, double s);
} // namespace avx2
#endif

} // namespace netid::kernels
