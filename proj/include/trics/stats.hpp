// stats.hpp — pump-mode reduced density matrix, purity and entropy measures,
// photon-number distribution, and number-operator moments with the Omega route.
#pragma once

#include "trics/coherent.hpp"
#include "trics/types.hpp"

namespace trics {

// Hermitian matrix over pump Fock levels 0..dim-1; diagonal for single-block
// states, possibly non-diagonal for same-k multi-block superpositions.
struct PumpDensity {
    int dim{0};
    std::vector<cx> elem;  // row-major

    cx at(int i, int j) const { return elem[static_cast<size_t>(i) * dim + j]; }
    double trace() const;
    bool is_diagonal(double tol = 1e-14) const;
    std::vector<double> eigenvalues() const;  // ascending
};

PumpDensity reduce_pump(const BlockState& s);
PumpDensity reduce_pump(const MultiBlockState& s);  // all entries must share k

double purity_parameter(const PumpDensity& rho);  // 1 - Tr(rho^2)
double purity_parameter(const BlockState& s);
double purity_parameter(const MultiBlockState& s);

// von Neumann entropy from the spectrum, 0 ln 0 := 0; eigenvalues within 1e-12
// below zero are clamped, anything lower is a numeric error.
double entropy_vn(const PumpDensity& rho);

// I_{a-bc} = 2 S_a for pure three-mode states.
double index_of_correlation(const BlockState& s);
double index_of_correlation(const MultiBlockState& s);

// P_a(n) for the coherent state, computed from amplitudes (finite at z = 0).
std::vector<double> photon_distribution(const CoherentParams& p);

struct Moments {
    double mean{0.0};
    double variance{0.0};
};

// <N_a> = r Omega and <(dN_a)^2> = [r^2 + (2k+L) r] Omega - r^2 Omega^2 - L r,
// with r = |y|^2 = 1/|z|^2.
Moments number_moments(double r, const SubspaceLabel& label);

// <K0> = k + L - <N_a>, <(dK0)^2> = <(dN_a)^2> by the conservation law.
Moments k0_moments(double r, const SubspaceLabel& label);

}  // namespace trics
