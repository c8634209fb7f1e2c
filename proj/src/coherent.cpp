#include "trics/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trics/subspace.hpp"

namespace trics {

namespace {

using cxl = std::complex<long double>;

// d~_{m+1}/d~_m = sqrt((L-m)(2k+m)/(m+1))
long double dtilde_ratio(double twok, int L, int m) {
    return std::sqrt(((long double)(L - m)) * ((long double)twok + m) / ((long double)m + 1));
}

long double norm_l(const std::vector<cxl>& v) {
    long double acc = 0.0L;
    for (const cxl& a : v) acc += a.real() * a.real() + a.imag() * a.imag();
    return std::sqrt(acc);
}

}  // namespace

double dtilde(const SubspaceLabel& label, int n) {
    label.validate();
    if (n < 0 || n > label.L) throw std::domain_error("dtilde: n outside [0, L]");
    const double twok = 2.0 * label.k_value();
    long double v = 1.0L;
    for (int j = 0; j < n; ++j) v *= dtilde_ratio(twok, label.L, j);
    return static_cast<double>(v);
}

cx norm_poly(cx w, const SubspaceLabel& label) {
    label.validate();
    const double twok = 2.0 * label.k_value();
    cxl sum{1.0L, 0.0L};
    cxl term{1.0L, 0.0L};
    const cxl wl{w.real(), w.imag()};
    for (int m = 0; m < label.L; ++m) {
        // term_{m+1} = term_m * w * (L-m)(2k+m)/(m+1)
        term *= wl * (((long double)(label.L - m)) * ((long double)twok + m) / ((long double)m + 1));
        sum += term;
    }
    return cx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

BlockState coherent_state(const CoherentParams& p) {
    p.label.validate();
    const int L = p.label.L;
    const double twok = 2.0 * p.label.k_value();
    const cxl z{p.z.real(), p.z.imag()};

    // unnormalized u_m = d~_m z^m, rescaled whenever it threatens the range
    std::vector<cxl> u(static_cast<size_t>(L) + 1);
    u[0] = cxl{1.0L, 0.0L};
    for (int m = 0; m < L; ++m) {
        u[m + 1] = u[m] * z * dtilde_ratio(twok, L, m);
        if (std::abs(u[m + 1]) > 1e300L) {
            const long double scale = 1e-300L;
            for (int j = 0; j <= m + 1; ++j) u[j] *= scale;
        }
    }
    const long double nrm = norm_l(u);
    BlockState out = zero_state(p.label);
    for (int m = 0; m <= L; ++m) {
        const cxl a = u[m] / nrm;
        out.amp[static_cast<size_t>(L - m)] = cx((double)a.real(), (double)a.imag());
    }
    return out;
}

cx overlap(const CoherentParams& a, const CoherentParams& b) {
    if (!(a.label == b.label)) throw std::domain_error("overlap: states live in different (k, L) blocks");
    const cx g12 = norm_poly(std::conj(a.z) * b.z, a.label);
    const cx g11 = norm_poly(cx(std::norm(a.z), 0.0), a.label);
    const cx g22 = norm_poly(cx(std::norm(b.z), 0.0), b.label);
    return g12 / std::sqrt(g11.real() * g22.real());
}

double EigenResiduals::max() const { return std::max(number, std::max(k0, lowering)); }

EigenResiduals eigen_residuals(const CoherentParams& p) {
    const BlockState psi = coherent_state(p);
    const int L = p.label.L;
    const double k = p.label.k_value();
    const double twok = 2.0 * k;
    const cxl z{p.z.real(), p.z.imag()};

    EigenResiduals res;
    // (N_a + z aK+ - L) and (K0 - z aK+ - k), both in-block
    long double acc1 = 0.0L, acc2 = 0.0L;
    for (int n = 0; n <= L; ++n) {
        cxl up{0.0L, 0.0L};  // (aK+ psi)[n] = s_{n+1} psi[n+1]
        if (n + 1 <= L) up = cxl(psi.amp[n + 1].real(), psi.amp[n + 1].imag()) *
                             (long double)aKplus_factor(p.label, n + 1);
        const cxl f{psi.amp[n].real(), psi.amp[n].imag()};
        const cxl r1 = ((long double)n - (long double)L) * f + z * up;
        const cxl r2 = ((long double)(k + L - n) - (long double)k) * f - z * up;
        acc1 += std::norm(r1);
        acc2 += std::norm(r2);
    }
    res.number = (double)std::sqrt(acc1);
    res.k0 = (double)std::sqrt(acc2);

    // (K- - 2z aK0 + z^2 a^2 K+), carried into the block below
    long double acc3 = 0.0L;
    for (int m = 0; m < L; ++m) {
        const long double M = (long double)(L - m);
        cxl r = cxl(psi.amp[m].real(), psi.amp[m].imag()) * std::sqrt(M * (M + twok - 1.0L));
        r -= 2.0L * z * ((long double)k + L - (m + 1)) * std::sqrt((long double)m + 1) *
             cxl(psi.amp[m + 1].real(), psi.amp[m + 1].imag());
        if (m + 2 <= L)
            r += z * z * std::sqrt(((long double)m + 2) * ((long double)m + 1)) *
                 std::sqrt((M - 1.0L) * (M - 2.0L + twok)) *
                 cxl(psi.amp[m + 2].real(), psi.amp[m + 2].imag());
        acc3 += std::norm(r);
    }
    res.lowering = (double)std::sqrt(acc3);
    return res;
}

MultiBlockState superposition(const std::vector<std::pair<cx, SubspaceLabel>>& weights, cx z) {
    long double wsum = 0.0L;
    for (const auto& [w, label] : weights) {
        label.validate();
        wsum += std::norm(cxl{w.real(), w.imag()});
    }
    if (std::fabs((double)wsum - 1.0) > 1e-12)
        throw std::domain_error("superposition: weights must satisfy sum |w|^2 = 1");
    for (size_t i = 0; i < weights.size(); ++i)
        for (size_t j = i + 1; j < weights.size(); ++j)
            if (weights[i].second == weights[j].second)
                throw std::domain_error("superposition: duplicate (k, L) labels");

    MultiBlockState out;
    out.entries.reserve(weights.size());
    for (const auto& [w, label] : weights)
        out.entries.push_back({w, coherent_state({label, z})});
    return out;
}

BlockState even_cat(const CoherentParams& p) {
    p.label.validate();
    const int L = p.label.L;
    const double twok = 2.0 * p.label.k_value();
    const cxl z{p.z.real(), p.z.imag()};

    std::vector<cxl> u(static_cast<size_t>(L) + 1, cxl{0.0L, 0.0L});
    cxl run{1.0L, 0.0L};
    u[0] = run;
    for (int m = 0; m < L; ++m) {
        run *= z * dtilde_ratio(twok, L, m);
        if ((m + 1) % 2 == 0) u[m + 1] = run;
    }
    const long double nrm = norm_l(u);
    BlockState out = zero_state(p.label);
    for (int m = 0; m <= L; ++m) {
        const cxl a = u[m] / nrm;
        out.amp[static_cast<size_t>(L - m)] = cx((double)a.real(), (double)a.imag());
    }
    return out;
}

}  // namespace trics
