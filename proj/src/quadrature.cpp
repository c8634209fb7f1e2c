#include "trics/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trics {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw std::domain_error("GaussLegendre: order must be >= 1");
    node.resize(static_cast<size_t>(n));
    weight.resize(static_cast<size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double deriv = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre P_n(x) and P'_n(x) by the three-term recurrence
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            deriv = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / deriv;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        node[static_cast<size_t>(i)] = -x;
        node[static_cast<size_t>(n - 1 - i)] = x;
        weight[static_cast<size_t>(i)] = weight[static_cast<size_t>(n - 1 - i)] =
            2.0 / ((1.0 - x * x) * deriv * deriv);
    }
}

}  // namespace trics
