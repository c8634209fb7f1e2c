#include "trics/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trics {

void tridiagonal_eigs(std::vector<double>& d, std::vector<double>& e,
                      std::vector<std::vector<double>>& z) {
    const int n = static_cast<int>(d.size());
    if (n > 0 && static_cast<int>(e.size()) < n - 1)
        throw std::domain_error("tridiagonal_eigs: off-diagonal size must be n - 1");
    z.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) z[i][i] = 1.0;
    if (n <= 1) return;

    std::vector<double> w(static_cast<size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) w[i] = e[i];
    w[n - 1] = 0.0;

    const double eps = std::numeric_limits<double>::epsilon();
    double f = 0.0, tst1 = 0.0;
    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::fabs(d[l]) + std::fabs(w[l]));
        int m = l;
        while (m < n && std::fabs(w[m]) > eps * tst1) ++m;
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 50) throw std::runtime_error("tridiagonal_eigs: QL iteration failed to converge");

                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * w[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0.0) r = -r;
                d[l] = w[l] / (p + r);
                d[l + 1] = w[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (int i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                // implicit QL sweep
                p = d[m];
                double c = 1.0, c2 = c, c3 = c;
                const double el1 = w[l + 1];
                double s = 0.0, s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * w[i];
                    h = c * p;
                    r = std::hypot(p, w[i]);
                    w[i + 1] = s * r;
                    s = w[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for (int row = 0; row < n; ++row) {
                        h = z[row][i + 1];
                        z[row][i + 1] = s * z[row][i] + c * h;
                        z[row][i] = c * z[row][i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * w[l] / dl1;
                w[l] = s * p;
                d[l] = c * p;
            } while (std::fabs(w[l]) > eps * tst1);
        }
        d[l] += f;
        w[l] = 0.0;
    }

    // sort eigenvalues ascending, permuting eigenvector columns alongside
    for (int i = 0; i < n - 1; ++i) {
        int kmin = i;
        for (int j = i + 1; j < n; ++j)
            if (d[j] < d[kmin]) kmin = j;
        if (kmin != i) {
            std::swap(d[i], d[kmin]);
            for (int row = 0; row < n; ++row) std::swap(z[row][i], z[row][kmin]);
        }
    }
}

std::vector<double> hermitian_eigenvalues(std::vector<cx> a, int n) {
    if (n < 0 || static_cast<int>(a.size()) != n * n)
        throw std::domain_error("hermitian_eigenvalues: size mismatch");
    auto at = [&](int i, int j) -> cx& { return a[static_cast<size_t>(i) * n + j]; };

    // cyclic Jacobi: rotate away the largest remaining off-diagonal couples
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(at(p, q));
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cx apq = at(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const cx phase = apq / mag;
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
                const double c = std::cos(theta), s = std::sin(theta);
                // unitary U: col p <- c*col p + s*conj(phase)*col q ; col q <- -s*phase*col p + c*col q
                for (int i = 0; i < n; ++i) {
                    const cx aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip + s * std::conj(phase) * aiq;
                    at(i, q) = -s * phase * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const cx apj = at(p, j), aqj = at(q, j);
                    at(p, j) = c * apj + s * phase * aqj;
                    at(q, j) = -s * std::conj(phase) * apj + c * aqj;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace trics
