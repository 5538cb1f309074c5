#include "netid/kernels.hpp"

#if defined(NETID_HAVE_AVX2_KERNELS)

#include <cstddef>
#include <immintrin.h>

// Compiled without -mavx2; each function opts in through the target
// attribute so the binary still runs on CPUs without AVX2.
#define NETID_AVX2 __attribute__((target("avx2")))

namespace netid::kernels::avx2 {

NETID_AVX2 double dot(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    std::size_t k = 0;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (; k + 8 <= n; k += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(x.data() + k),
                                                 _mm256_loadu_pd(y.data() + k)));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(x.data() + k + 4),
                                                 _mm256_loadu_pd(y.data() + k + 4)));
    }
    for (; k + 4 <= n; k += 4) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(x.data() + k),
                                                 _mm256_loadu_pd(y.data() + k)));
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    __m128d lo = _mm256_castpd256_pd128(acc0);
    __m128d hi = _mm256_extractf128_pd(acc0, 1);
    lo = _mm_add_pd(lo, hi);
    double sum = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; k < n; ++k) sum += x[k] * y[k];
    return sum;
}

NETID_AVX2 void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    const std::size_t n = x.size();
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d yk = _mm256_loadu_pd(y.data() + k);
        yk = _mm256_add_pd(yk, _mm256_mul_pd(a, _mm256_loadu_pd(x.data() + k)));
        _mm256_storeu_pd(y.data() + k, yk);
    }
    for (; k < n; ++k) y[k] += alpha * x[k];
}

NETID_AVX2 void rotate(std::span<double> x, std::span<double> y, double c, double s) {
    const std::size_t n = x.size();
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d xk = _mm256_loadu_pd(x.data() + k);
        __m256d yk = _mm256_loadu_pd(y.data() + k);
        _mm256_storeu_pd(x.data() + k, _mm256_sub_pd(_mm256_mul_pd(vc, xk), _mm256_mul_pd(vs, yk)));
        _mm256_storeu_pd(y.data() + k, _mm256_add_pd(_mm256_mul_pd(vs, xk), _mm256_mul_pd(vc, yk)));
    }
    for (; k < n; ++k) {
        const double xk = x[k];
        const double yk = y[k];
        x[k] = c * xk - s * yk;
        y[k] = s * xk + c * yk;
    }
}

} // namespace netid::kernels::avx2

#endif
