#include "trics/subspace.hpp"

#include <cmath>
#include <stdexcept>

namespace trics {

namespace {

void check_state(const BlockState& s) {
    s.label.validate();
    if (static_cast<int>(s.amp.size()) != s.label.dim())
        throw std::domain_error("BlockState: amplitude length does not match L + 1");
}

}  // namespace

ModeOccupation mode_occupations(const SubspaceLabel& label, int n, Realization realization) {
    label.validate();
    if (n < 0 || n > label.L) throw std::domain_error("mode_occupations: n outside [0, L]");
    const long long m = label.L - n;  // SU(1,1) quantum number of |k, L-n>
    ModeOccupation occ;
    occ.pump = n;
    switch (realization) {
        case Realization::two_mode: {
            const long long twok = label.k.twice_as_integer();
            if (twok <= 0)
                throw std::domain_error("mode_occupations: two-mode realization needs 2k a positive integer");
            occ.b = m + twok - 1;
            occ.c = m;
            break;
        }
        case Realization::degenerate: {
            // one-mode SU(1,1): |k,m> sits at Fock level 2m (k=1/4) or 2m+1 (k=3/4)
            if (label.k == Rational(1, 4))
                occ.b = 2 * m;
            else if (label.k == Rational(3, 4))
                occ.b = 2 * m + 1;
            else
                throw std::domain_error("mode_occupations: degenerate realization needs k in {1/4, 3/4}");
            break;
        }
        case Realization::holstein_primakoff: {
            if (!(label.k == Rational(1, 2)))
                throw std::domain_error("mode_occupations: Holstein-Primakoff realization needs k = 1/2");
            occ.b = m;
            break;
        }
    }
    return occ;
}

double aKplus_factor(const SubspaceLabel& label, int n) {
    const double twok = 2.0 * label.k_value();
    const double m = static_cast<double>(label.L - n);
    return std::sqrt(static_cast<double>(n) * (m + 1.0) * (m + twok));
}

double adKminus_factor(const SubspaceLabel& label, int n) {
    const double twok = 2.0 * label.k_value();
    const double m = static_cast<double>(label.L - n);
    return std::sqrt(static_cast<double>(n + 1) * m * (m + twok - 1.0));
}

BlockState apply_aKplus(const BlockState& s) {
    check_state(s);
    BlockState out = zero_state(s.label);
    for (int n = 1; n <= s.label.L; ++n) out.amp[n - 1] += s.amp[n] * aKplus_factor(s.label, n);
    return out;
}

BlockState apply_adKminus(const BlockState& s) {
    check_state(s);
    BlockState out = zero_state(s.label);
    for (int n = 0; n < s.label.L; ++n) out.amp[n + 1] += s.amp[n] * adKminus_factor(s.label, n);
    return out;
}

BlockState apply_K0(const BlockState& s) {
    check_state(s);
    BlockState out = s;
    const double kL = s.label.k_value() + s.label.L;
    for (int n = 0; n <= s.label.L; ++n) out.amp[n] *= (kL - n);
    return out;
}

BlockState apply_Na(const BlockState& s) {
    check_state(s);
    BlockState out = s;
    for (int n = 0; n <= s.label.L; ++n) out.amp[n] *= static_cast<double>(n);
    return out;
}

BlockState lower_Kminus(const BlockState& s) {
    check_state(s);
    if (s.label.L < 1) throw std::domain_error("lower_Kminus: needs L >= 1");
    const double twok = 2.0 * s.label.k_value();
    const int L = s.label.L;
    BlockState out = zero_state({s.label.k, L - 1});
    // K- |k,m> = sqrt(m (m + 2k - 1)) |k,m-1>, m = L - n; pump index unchanged
    for (int n = 0; n < L; ++n) {
        const double m = static_cast<double>(L - n);
        out.amp[n] += s.amp[n] * std::sqrt(m * (m + twok - 1.0));
    }
    return out;
}

BlockState lower_aK0(const BlockState& s) {
    check_state(s);
    if (s.label.L < 1) throw std::domain_error("lower_aK0: needs L >= 1");
    const int L = s.label.L;
    const double kL = s.label.k_value() + L;
    BlockState out = zero_state({s.label.k, L - 1});
    for (int n = 1; n <= L; ++n)
        out.amp[n - 1] += s.amp[n] * (kL - n) * std::sqrt(static_cast<double>(n));
    return out;
}

BlockState lower_a2Kplus(const BlockState& s) {
    check_state(s);
    if (s.label.L < 1) throw std::domain_error("lower_a2Kplus: needs L >= 1");
    const double twok = 2.0 * s.label.k_value();
    const int L = s.label.L;
    BlockState out = zero_state({s.label.k, L - 1});
    // a^2 |n> = sqrt(n(n-1)) |n-2>, K+ |k,L-n> = sqrt((L-n+1)(L-n+2k)) |k,L-n+1>
    for (int n = 2; n <= L; ++n) {
        const double m = static_cast<double>(L - n);
        out.amp[n - 2] += s.amp[n] * std::sqrt(static_cast<double>(n) * (n - 1.0)) *
                          std::sqrt((m + 1.0) * (m + twok));
    }
    return out;
}

TridiagMatrix interaction_matrix(const SubspaceLabel& label, cx kappa) {
    label.validate();
    if (kappa == cx{0.0, 0.0}) throw std::domain_error("interaction_matrix: kappa must be nonzero");
    TridiagMatrix m;
    m.dim = label.dim();
    m.diag.assign(static_cast<size_t>(m.dim), 0.0);
    if (label.L == 0) return m;
    m.sub.resize(static_cast<size_t>(m.dim - 1));
    m.sup.resize(static_cast<size_t>(m.dim - 1));
    for (int i = 0; i + 1 <= label.L; ++i) {
        // coupling <e_i | H | e_{i+1}> = kappa * aKplus_factor(i+1)
        const double c = aKplus_factor(label, i + 1);
        m.sup[i] = kappa * c;
        m.sub[i] = std::conj(kappa) * c;
    }
    return m;
}

}  // namespace trics
