#include "trics/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trics/eigensolve.hpp"
#include "trics/kummer.hpp"

namespace trics {

double PumpDensity::trace() const {
    long double acc = 0.0L;
    for (int i = 0; i < dim; ++i) acc += at(i, i).real();
    return static_cast<double>(acc);
}

bool PumpDensity::is_diagonal(double tol) const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i != j && std::abs(at(i, j)) > tol) return false;
    return true;
}

std::vector<double> PumpDensity::eigenvalues() const {
    if (is_diagonal()) {
        std::vector<double> ev(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) ev[static_cast<size_t>(i)] = at(i, i).real();
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    return hermitian_eigenvalues(elem, dim);
}

PumpDensity reduce_pump(const BlockState& s) {
    s.label.validate();
    PumpDensity rho;
    rho.dim = s.label.dim();
    rho.elem.assign(static_cast<size_t>(rho.dim) * rho.dim, cx{0.0, 0.0});
    for (int n = 0; n <= s.label.L; ++n)
        rho.elem[static_cast<size_t>(n) * rho.dim + n] = std::norm(s.amp[static_cast<size_t>(n)]);
    return rho;
}

PumpDensity reduce_pump(const MultiBlockState& s) {
    if (s.entries.empty()) throw std::domain_error("reduce_pump: empty superposition");
    const Rational k = s.entries.front().state.label.k;
    int dim = 0;
    for (const auto& e : s.entries) {
        if (!(e.state.label.k == k))
            throw std::domain_error("reduce_pump: mixed-k superpositions are not supported");
        dim = std::max(dim, e.state.label.dim());
    }
    PumpDensity rho;
    rho.dim = dim;
    rho.elem.assign(static_cast<size_t>(dim) * dim, cx{0.0, 0.0});
    // <n|rho|n'> collects pairs with identical signal-idler state: L_i - n = L_j - n'
    for (const auto& ei : s.entries) {
        for (const auto& ej : s.entries) {
            const int Li = ei.state.label.L, Lj = ej.state.label.L;
            for (int n = 0; n <= Li; ++n) {
                const int np = n + Lj - Li;
                if (np < 0 || np > Lj) continue;
                rho.elem[static_cast<size_t>(n) * dim + np] +=
                    ei.weight * std::conj(ej.weight) * ei.state.amp[static_cast<size_t>(n)] *
                    std::conj(ej.state.amp[static_cast<size_t>(np)]);
            }
        }
    }
    return rho;
}

double purity_parameter(const PumpDensity& rho) {
    long double acc = 0.0L;
    for (const cx& v : rho.elem) acc += std::norm(v);
    return static_cast<double>(1.0L - acc);
}

double purity_parameter(const BlockState& s) { return purity_parameter(reduce_pump(s)); }
double purity_parameter(const MultiBlockState& s) { return purity_parameter(reduce_pump(s)); }

double entropy_vn(const PumpDensity& rho) {
    long double acc = 0.0L;
    for (double p : rho.eigenvalues()) {
        if (p < -1e-12)
            throw std::runtime_error("entropy_vn: density matrix has a negative eigenvalue beyond tolerance");
        if (p <= 0.0) continue;
        acc -= (long double)p * std::log((long double)p);
    }
    return static_cast<double>(acc);
}

double index_of_correlation(const BlockState& s) { return 2.0 * entropy_vn(reduce_pump(s)); }
double index_of_correlation(const MultiBlockState& s) { return 2.0 * entropy_vn(reduce_pump(s)); }

std::vector<double> photon_distribution(const CoherentParams& p) {
    const BlockState s = coherent_state(p);
    std::vector<double> prob(s.amp.size());
    for (size_t n = 0; n < s.amp.size(); ++n) prob[n] = std::norm(s.amp[n]);
    return prob;
}

Moments number_moments(double r, const SubspaceLabel& label) {
    label.validate();
    if (r < 0.0) throw std::domain_error("number_moments: r must be nonnegative");
    if (label.L == 0) return {0.0, 0.0};
    const double k = label.k_value();
    const double om = omega(r, k, label.L);
    Moments m;
    m.mean = r * om;
    m.variance = (r * r + (2.0 * k + label.L) * r) * om - r * r * om * om - label.L * r;
    return m;
}

Moments k0_moments(double r, const SubspaceLabel& label) {
    const Moments n = number_moments(r, label);
    return {label.k_value() + label.L - n.mean, n.variance};
}

}  // namespace trics
