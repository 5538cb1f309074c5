#include "netid/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace netid::kernels {

namespace {

Backend detect() {
    if (const char* env = std::getenv("NETID_KERNELS")) {
        if (std::string(env) == "scalar") return Backend::Scalar;
    }
    return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& selected() {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

} // namespace

std::string_view to_string(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) {
    if (b == Backend::Scalar) return true;
#if defined(NETID_HAVE_AVX2_KERNELS)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend() { return selected().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_available(b)) {
        throw std::runtime_error("kernel backend '" + std::string(to_string(b)) +
                                 "' is not supported on this CPU");
    }
    selected().store(b, std::memory_order_relaxed);
}

double dot(std::span<const double> x, std::span<const double> y) {
#if defined(NETID_HAVE_AVX2_KERNELS)
    if (active_backend() == Backend::Avx2) return avx2::dot(x, y);
#endif
    return scalar::dot(x, y);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
#if defined(NETID_HAVE_AVX2_KERNELS)
    if (active_backend() == Backend::Avx2) return avx2::axpy(alpha, x, y);
#endif
    scalar::axpy(alpha, x, y);
}

void rotate(std::span<double> x, std::span<double> y, double c, double s) {
#if defined(NETID_HAVE_AVX2_KERNELS)
    if (active_backend() == Backend::Avx2) return avx2::rotate(x, y, c, s);
#endif
    scalar::rotate(x, y, c, s);
}

} // namespace netid::kernels
