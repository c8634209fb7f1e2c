// quadrature.hpp — Gauss-Legendre rule on (-1, 1), Newton-refined nodes.
#pragma once

#include <vector>

namespace trics {

struct GaussLegendre {
    std::vector<double> node;
    std::vector<double> weight;
    explicit GaussLegendre(int n);
};

}  // namespace trics
