// coherent.hpp — coherent states |z;k,L> of the trilinear interaction:
// construction, normalization polynomial, overlaps, eigenvalue-equation
// residuals, multi-block superpositions, and even cat combinations.
#pragma once

#include <utility>

#include "trics/types.hpp"

namespace trics {

// Displacement parameter z; the reciprocal form is y = 1/z for z != 0.
struct CoherentParams {
    SubspaceLabel label;
    cx z{0.0, 0.0};
};

// Expansion coefficient d~_n(k,L) = sqrt(L! Gamma(2k+n) / (n! (L-n)! Gamma(2k))),
// built from paired ladder factors so intermediates never mix huge factorials.
double dtilde(const SubspaceLabel& label, int n);

// G(w) = sum_{m=0}^{L} d~_m(k,L)^2 w^m, the normalization polynomial continued
// to complex w = z1* z2. G(|z|^2) equals the normalization N(|y|^2;k,L), y = 1/z.
cx norm_poly(cx w, const SubspaceLabel& label);

// |z;k,L> as a normalized block state: amp[L-m] = d~_m z^m / sqrt(G(|z|^2)).
// Amplitudes are built by the d~ ratio recursion with on-the-fly rescaling, so
// large L and |z| (e.g. L = 200, |z| = 10) stay inside double range.
BlockState coherent_state(const CoherentParams& p);

// <z1|z2> = G(z1* z2) / sqrt(G(|z1|^2) G(|z2|^2)); labels must match.
cx overlap(const CoherentParams& a, const CoherentParams& b);

// Residual norms of the three defining eigenvalue equations:
//   (N_a + z aK+ - L) |z> = 0
//   (K0  - z aK+ - k) |z> = 0
//   (K-  - 2z aK0 + z^2 a^2 K+) |z> = 0   (block-lowering form)
struct EigenResiduals {
    double number{0.0};
    double k0{0.0};
    double lowering{0.0};
    double max() const;
};
EigenResiduals eigen_residuals(const CoherentParams& p);

// Weighted superposition over distinct (k, L) blocks: sum_{k,L} g_k h_L |z;k,L>.
struct MultiBlockState {
    struct Entry {
        cx weight;
        BlockState state;
    };
    std::vector<Entry> entries;
};

// weights must be normalized (sum |w|^2 = 1 within 1e-12) and labels distinct.
MultiBlockState superposition(const std::vector<std::pair<cx, SubspaceLabel>>& weights, cx z);

// Normalized even-z part of the coherent state: the |z;k,L> + |-z;k,L>
// superposition, which for L = 2 carries only the m = 0 and m = 2 components.
BlockState even_cat(const CoherentParams& p);

}  // namespace trics
