#include <doctest.h>

#include <cmath>
#include <random>

#include "trics/eigensolve.hpp"

using namespace trics;

TEST_CASE("tridiagonal QL on known matrices") {
    // 2x2 [[0, b], [b, 0]] -> +-b with eigenvectors (1, -+1)/sqrt(2)
    std::vector<double> d{0.0, 0.0}, e{1.7};
    std::vector<std::vector<double>> z;
    tridiagonal_eigs(d, e, z);
    CHECK(d[0] == doctest::Approx(-1.7).epsilon(1e-15));
    CHECK(d[1] == doctest::Approx(1.7).epsilon(1e-15));
    CHECK(std::fabs(z[0][0] * z[0][1] + z[1][0] * z[1][1]) < 1e-14);

    // random symmetric tridiagonal: residuals and orthonormality
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const int n = 12;
    std::vector<double> diag(n), off(n - 1);
    for (auto& v : diag) v = u(rng);
    for (auto& v : off) v = u(rng);
    std::vector<double> dd = diag, ee = off;
    tridiagonal_eigs(dd, ee, z);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double hv = diag[static_cast<size_t>(i)] * z[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (i > 0) hv += off[static_cast<size_t>(i - 1)] * z[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
            if (i + 1 < n) hv += off[static_cast<size_t>(i)] * z[static_cast<size_t>(i + 1)][static_cast<size_t>(j)];
            CHECK(std::fabs(hv - dd[static_cast<size_t>(j)] * z[static_cast<size_t>(i)][static_cast<size_t>(j)]) < 1e-12);
        }
        for (int jj = j; jj < n; ++jj) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i)
                dot += z[static_cast<size_t>(i)][static_cast<size_t>(j)] * z[static_cast<size_t>(i)][static_cast<size_t>(jj)];
            CHECK(std::fabs(dot - (j == jj ? 1.0 : 0.0)) < 1e-13);
        }
        if (j > 0) CHECK(dd[static_cast<size_t>(j)] >= dd[static_cast<size_t>(j - 1)]);
    }
}

TEST_CASE("Hermitian Jacobi eigenvalues") {
    // [[2, i], [-i, 2]] -> {1, 3}
    const std::vector<cx> a{cx{2, 0}, cx{0, 1}, cx{0, -1}, cx{2, 0}};
    const auto ev = hermitian_eigenvalues(a, 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-13));

    // reflect a known diagonal through the unitary U = I - 2 v v†
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = 5;
    std::vector<cx> v(static_cast<size_t>(n));
    double nrm = 0.0;
    for (auto& x : v) {
        x = cx{u(rng), u(rng)};
        nrm += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(nrm);
    const std::vector<double> want{-2.0, -0.5, 0.0, 1.25, 4.0};
    std::vector<cx> m(static_cast<size_t>(n) * n, cx{0, 0});
    // U D U† with U = I - 2vv† (unitary, Hermitian)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cx acc{0.0, 0.0};
            for (int l = 0; l < n; ++l) {
                const cx uil = (i == l ? cx{1, 0} : cx{0, 0}) - 2.0 * v[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(l)]);
                const cx ujl = (j == l ? cx{1, 0} : cx{0, 0}) - 2.0 * v[static_cast<size_t>(j)] * std::conj(v[static_cast<size_t>(l)]);
                acc += uil * want[static_cast<size_t>(l)] * std::conj(ujl);
            }
            m[static_cast<size_t>(i) * n + j] = acc;
        }
    const auto got = hermitian_eigenvalues(m, n);
    for (int i = 0; i < n; ++i) CHECK(got[static_cast<size_t>(i)] == doctest::Approx(want[static_cast<size_t>(i)]).epsilon(1e-12));
}
