// subspace.hpp — invariant-subspace algebra: SU(1,1) ladder action on a block,
// translation to physical mode occupations, and the block interaction matrix.
#pragma once

#include <optional>

#include "trics/types.hpp"

namespace trics {

enum class Realization { two_mode, degenerate, holstein_primakoff };

struct ModeOccupation {
    int pump{0};
    long long b{0};
    std::optional<long long> c;  // present for the two-mode realization only
};

// Fock occupations of the basis ket |n>|k,L-n> in the chosen boson realization.
// two-mode requires 2k integral, degenerate k in {1/4, 3/4}, Holstein-Primakoff k = 1/2.
ModeOccupation mode_occupations(const SubspaceLabel& label, int n, Realization realization);

// Matrix elements of the in-block ladder maps, e_n = |n>|k,L-n>:
//   a K+ : e_n -> aKplus_factor(n)   e_{n-1}
//   a†K- : e_n -> adKminus_factor(n) e_{n+1}
double aKplus_factor(const SubspaceLabel& label, int n);
double adKminus_factor(const SubspaceLabel& label, int n);

BlockState apply_aKplus(const BlockState& s);    // unnormalized
BlockState apply_adKminus(const BlockState& s);  // unnormalized
BlockState apply_K0(const BlockState& s);        // amp[n] *= (k + L - n)
BlockState apply_Na(const BlockState& s);        // amp[n] *= n

// Block-lowering actions H_L -> H_{L-1}; needed by the third eigenvalue equation,
// where K-, aK0 and a^2 K+ each carry the state into the next block down.
BlockState lower_Kminus(const BlockState& s);
BlockState lower_aK0(const BlockState& s);
BlockState lower_a2Kplus(const BlockState& s);

// Hermitian tridiagonal block matrix; sup[i] = conj(sub[i]).
struct TridiagMatrix {
    int dim{0};
    std::vector<double> diag;
    std::vector<cx> sub;  // element (i+1, i)
    std::vector<cx> sup;  // element (i, i+1)
};

// H_int = kappa a K+ + kappa* a† K- restricted to H_L. Zero diagonal.
TridiagMatrix interaction_matrix(const SubspaceLabel& label, cx kappa);

}  // namespace trics
