// dynamics.hpp — exact time evolution within a block: Hermitian tridiagonal
// diagonalization, closed-form L = 1, 2 solutions, short-time comparison with
// the coherent states, and the energy-transfer efficiency.
#pragma once

#include <span>

#include "trics/subspace.hpp"
#include "trics/types.hpp"

namespace trics {

// Coupling convention: the library takes any complex kappa; every closed-form
// oracle of the long-time section fixes kappa = i|kappa|, which makes z = -i kappa t
// real. omega_a enters only through the global phase exp(-i omega_a (k+L) t).
struct EvolutionConfig {
    SubspaceLabel label;
    cx kappa{0.0, 1.0};
    double omega_a = 0.0;
    bool include_free_phase = false;
};

struct EigenSystem {
    std::vector<double> values;        // ascending; symmetric about 0
    std::vector<BlockState> vectors;   // orthonormal
};

// Full spectral decomposition of H_int on H_L. The zero-diagonal tridiagonal
// matrix is gauged to real nonnegative off-diagonals by a diagonal unitary,
// solved by implicit QL, and the phases restored on the eigenvectors.
EigenSystem eigensystem(const EvolutionConfig& cfg);

// psi(t) = sum_nu e^{-i nu t} |nu><nu|psi0>, optionally times the free phase.
BlockState evolve(const EigenSystem& es, const BlockState& psi0, double t,
                  const EvolutionConfig& cfg);
BlockState evolve(const BlockState& psi0, double t, const EvolutionConfig& cfg);

// Analytic reference-state evolution for L = 1 and L = 2 (kappa = i|kappa|).
BlockState closed_form(const SubspaceLabel& label, double t, double kappa_abs);

double mean_na(const BlockState& s);

// <N_a>(t) for the reference initial state |L>|k,0>.
std::vector<double> mean_na_trajectory(const EvolutionConfig& cfg, std::span<const double> times);

struct ScanSpec {
    int max_points = 10000;
    double t_tol = 1e-12;
};

struct TransferEfficiency {
    double xi{0.0};
    double window{0.0};       // scanned time window
    double t_min{0.0};        // refined argmin of <N_a>(t)
    double min_mean_na{0.0};
    bool approximate{false};  // spectrum gaps not commensurate: scanned infimum only
};

// xi = (L - min_t <N_a>(t)) / L for the reference initial state: dense scan over
// one fundamental-period estimate, then golden-section refinement.
TransferEfficiency transfer_efficiency(const EvolutionConfig& cfg, const ScanSpec& scan = {});

// For each |z| in the grid: || evolve(|L>|k,0>, t = |z|/|kappa|) - |z;k,L> ||
// with z = -i kappa t and kappa = |kappa| e^{i kappa_phase}. The log-log slope
// of this deviation is the third-order Zassenhaus remainder signature.
std::vector<double> short_time_compare(const SubspaceLabel& label, std::span<const double> z_mags,
                                       double kappa_phase);

}  // namespace trics
