#include <doctest.h>

#include <Eigen/SVD>
#include <cmath>
#include <random>
#include <vector>

#include "netid/dense.hpp"
#include "netid/kernels.hpp"

using namespace netid;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = u(rng);
    return a;
}

// Restores the process-wide backend when a test case finishes.
struct BackendGuard {
    kernels::Backend saved = kernels::active_backend();
    ~BackendGuard() { kernels::set_backend(saved); }
};

} // namespace

TEST_CASE("scalar kernels on small inputs") {
    std::vector<double> x{1, 2, 3}, y{4, 5, 6};
    CHECK(kernels::scalar::dot(x, y) == 32.0);
    kernels::scalar::axpy(2.0, x, y);
    CHECK(y == std::vector<double>{6, 9, 12});
    std::vector<double> a{1, 0}, b{0, 1};
    kernels::scalar::rotate(a, b, 0.0, 1.0);
    CHECK(a == std::vector<double>{0, -1});
    CHECK(b == std::vector<double>{1, 0});
    CHECK(kernels::scalar::dot({}, {}) == 0.0);
}

TEST_CASE("scalar backend can always be selected") {
    BackendGuard guard;
    CHECK(kernels::backend_available(kernels::Backend::Scalar));
    kernels::set_backend(kernels::Backend::Scalar);
    CHECK(kernels::active_backend() == kernels::Backend::Scalar);
    CHECK(kernels::to_string(kernels::Backend::Scalar) == "scalar");
}

#ifdef NETID_HAVE_AVX2_KERNELS
TEST_CASE("AVX2 kernels match the scalar reference") {
    if (!kernels::backend_available(kernels::Backend::Avx2)) {
        MESSAGE("AVX2 not available on this CPU; skipping");
        return;
    }
    std::mt19937_64 rng(17);
    // Lengths cover empty, sub-vector, exact multiples and ragged tails.
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 33u, 100u, 257u}) {
        auto x = random_vector(rng, n);
        auto y = random_vector(rng, n);

        double ds = kernels::scalar::dot(x, y);
        double dv = kernels::avx2::dot(x, y);
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) scale += std::abs(x[i] * y[i]);
        CHECK(std::abs(ds - dv) <= 1e-14 * (scale + 1.0));

        auto ys = y, yv = y;
        kernels::scalar::axpy(-0.37, x, ys);
        kernels::avx2::axpy(-0.37, x, yv);
        CHECK(ys == yv);

        auto xs = x, xv = x, ys2 = y, yv2 = y;
        kernels::scalar::rotate(xs, ys2, 0.6, 0.8);
        kernels::avx2::rotate(xv, yv2, 0.6, 0.8);
        CHECK(xs == xv);
        CHECK(ys2 == yv2);
    }
}

TEST_CASE("SVD agrees across backends") {
    if (!kernels::backend_available(kernels::Backend::Avx2)) return;
    BackendGuard guard;
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 50; ++iter) {
        Matrix a = random_matrix(rng, 1 + rng() % 9, 1 + rng() % 9);
        kernels::set_backend(kernels::Backend::Scalar);
        auto s1 = singular_values(a);
        kernels::set_backend(kernels::Backend::Avx2);
        auto s2 = singular_values(a);
        REQUIRE(s1.size() == s2.size());
        for (std::size_t k = 0; k < s1.size(); ++k) CHECK(s1[k] == doctest::Approx(s2[k]).epsilon(1e-12));
    }
}
#endif

TEST_CASE("singular values agree with Eigen") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 10;
        Matrix a = random_matrix(rng, rows, cols);
        // Every few matrices, force a rank drop by copying a row.
        if (iter % 4 == 0 && rows > 1)
            for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = 2.0 * a(0, c);

        Eigen::MatrixXd e(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) e(r, c) = a(r, c);
        Eigen::VectorXd expected = Eigen::JacobiSVD<Eigen::MatrixXd>(e).singularValues();

        auto got = singular_values(a);
        REQUIRE(got.size() == static_cast<std::size_t>(expected.size()));
        for (std::size_t k = 0; k < got.size(); ++k)
            CHECK(std::abs(got[k] - expected[k]) <= 1e-12 * (expected[0] + 1.0));
    }
}

TEST_CASE("singular values of structured matrices") {
    Matrix d(3, 3);
    d(0, 0) = 3;
    d(1, 1) = -5;
    d(2, 2) = 1;
    auto s = singular_values(d);
    CHECK(s == std::vector<double>{5, 3, 1});

    Matrix zero(2, 4);
    CHECK(singular_values(zero) == std::vector<double>{0, 0});
    CHECK(singular_values(Matrix()).empty());
}

TEST_CASE("Gauss-Jordan inverse") {
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 1 + rng() % 8;
        Matrix a = random_matrix(rng, n, n);
        for (std::size_t k = 0; k < n; ++k) a(k, k) += 4.0;
        auto inv = inverse(a);
        REQUIRE(inv.has_value());
        CHECK((a * *inv - Matrix::identity(n)).max_abs() < 1e-12);
    }
    Matrix singular(2, 2, 1.0);
    CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("matrix helpers") {
    Matrix a(2, 3);
    a(0, 0) = 1;
    a(0, 2) = -4;
    a(1, 1) = 2;
    CHECK(a.max_abs() == 4.0);
    CHECK(a.inf_norm() == 5.0);
    CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(21.0)));
    Matrix t = a.transposed();
    CHECK(t.rows() == 3);
    CHECK(t(2, 0) == -4.0);
    std::vector<std::size_t> rows{1}, cols{1, 2};
    Matrix s = a.select(rows, cols);
    CHECK(s.rows() == 1);
    CHECK(s(0, 0) == 2.0);
    CHECK(s(0, 1) == 0.0);
}
