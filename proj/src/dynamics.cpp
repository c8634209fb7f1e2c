#include "trics/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "trics/coherent.hpp"
#include "trics/eigensolve.hpp"

namespace trics {

namespace {

// approximate positive gcd of a set of gaps, Euclid with an absolute tolerance
double float_gcd(std::vector<double> gaps, double tol, bool& commensurate) {
    commensurate = true;
    double g = 0.0;
    for (double v : gaps) {
        double a = std::max(g, v), b = std::min(g, v);
        while (b > tol) {
            const double r = std::fmod(a, b);
            a = b;
            b = (r > b - tol) ? 0.0 : r;  // fmod just below b means a was an exact multiple
        }
        g = a;
    }
    if (g <= tol) return 0.0;
    for (double v : gaps) {
        const double q = v / g;
        if (std::fabs(q - std::round(q)) > 1e-6) commensurate = false;
    }
    return g;
}

double golden_min(const std::function<double(double)>& f, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

EigenSystem eigensystem(const EvolutionConfig& cfg) {
    cfg.label.validate();
    if (cfg.kappa == cx{0.0, 0.0}) throw std::domain_error("eigensystem: kappa must be nonzero");
    const int L = cfg.label.L;
    const int n = L + 1;
    const double arg = std::arg(cfg.kappa);
    const double mag = std::abs(cfg.kappa);

    // gauge D = diag(e^{i n arg}) sends H to a real symmetric tridiagonal matrix
    std::vector<double> d(static_cast<size_t>(n), 0.0);
    std::vector<double> e(static_cast<size_t>(std::max(n - 1, 0)));
    for (int i = 0; i + 1 < n; ++i) e[static_cast<size_t>(i)] = mag * aKplus_factor(cfg.label, i + 1);
    std::vector<std::vector<double>> z;
    tridiagonal_eigs(d, e, z);

    EigenSystem es;
    es.values = d;
    es.vectors.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        BlockState v = zero_state(cfg.label);
        for (int i = 0; i < n; ++i) {
            const cx phase{std::cos(i * arg), -std::sin(i * arg)};  // e^{-i i_arg}
            v.amp[static_cast<size_t>(i)] = phase * z[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        es.vectors.push_back(std::move(v));
    }
    return es;
}

BlockState evolve(const EigenSystem& es, const BlockState& psi0, double t, const EvolutionConfig& cfg) {
    if (!(psi0.label == cfg.label)) throw std::domain_error("evolve: state and config live in different blocks");
    if (!std::isfinite(t)) throw std::domain_error("evolve: t must be finite");
    BlockState out = zero_state(cfg.label);
    for (size_t j = 0; j < es.vectors.size(); ++j) {
        const cx proj = inner(es.vectors[j], psi0);
        const double nu = es.values[j];
        const cx phase{std::cos(nu * t), -std::sin(nu * t)};
        for (size_t i = 0; i < out.amp.size(); ++i) out.amp[i] += phase * proj * es.vectors[j].amp[i];
    }
    if (cfg.include_free_phase) {
        const double theta = cfg.omega_a * (cfg.label.k_value() + cfg.label.L) * t;
        const cx phase{std::cos(theta), -std::sin(theta)};
        for (cx& a : out.amp) a *= phase;
    }
    return out;
}

BlockState evolve(const BlockState& psi0, double t, const EvolutionConfig& cfg) {
    return evolve(eigensystem(cfg), psi0, t, cfg);
}

BlockState closed_form(const SubspaceLabel& label, double t, double kappa_abs) {
    label.validate();
    if (!(kappa_abs > 0.0)) throw std::domain_error("closed_form: |kappa| must be positive");
    const double k = label.k_value();
    BlockState s = zero_state(label);
    if (label.L == 1) {
        const double l1 = std::sqrt(2.0 * k) * kappa_abs;
        s.amp[1] = std::cos(l1 * t);
        s.amp[0] = std::sin(l1 * t);
        return s;
    }
    if (label.L == 2) {
        const double l2 = 0.5 * std::sqrt(8.0 * k + 2.0) * kappa_abs;
        const double sn = std::sin(l2 * t), cn = std::cos(l2 * t);
        const double denom = 4.0 * k + 1.0;
        s.amp[0] = std::sqrt(8.0 * k * (2.0 * k + 1.0)) * sn * sn / denom;
        s.amp[1] = std::sqrt(2.0 * k * denom) * std::sin(2.0 * l2 * t) / denom;
        s.amp[2] = (1.0 + 4.0 * k * cn * cn) / denom;
        return s;
    }
    throw std::domain_error("closed_form: analytic amplitudes available for L = 1 and L = 2 only");
}

double mean_na(const BlockState& s) {
    long double acc = 0.0L;
    for (size_t n = 0; n < s.amp.size(); ++n) acc += (long double)n * std::norm(s.amp[n]);
    return static_cast<double>(acc);
}

std::vector<double> mean_na_trajectory(const EvolutionConfig& cfg, std::span<const double> times) {
    const EigenSystem es = eigensystem(cfg);
    const BlockState psi0 = reference_state(cfg.label);
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(mean_na(evolve(es, psi0, t, cfg)));
    return out;
}

TransferEfficiency transfer_efficiency(const EvolutionConfig& cfg, const ScanSpec& scan) {
    cfg.label.validate();
    const int L = cfg.label.L;
    if (L < 1) throw std::domain_error("transfer_efficiency: needs L >= 1");
    const EigenSystem es = eigensystem(cfg);
    const BlockState psi0 = reference_state(cfg.label);

    // fundamental period estimate from the eigenvalue gaps
    std::vector<double> gaps;
    double numax = 0.0;
    for (size_t i = 0; i < es.values.size(); ++i) {
        numax = std::max(numax, std::fabs(es.values[i]));
        for (size_t j = i + 1; j < es.values.size(); ++j) {
            const double g = std::fabs(es.values[j] - es.values[i]);
            if (g > 1e-12) gaps.push_back(g);
        }
    }
    TransferEfficiency out;
    if (gaps.empty()) {  // flat spectrum: nothing ever moves
        out.xi = 0.0;
        out.min_mean_na = static_cast<double>(L);
        return out;
    }
    bool commensurate = true;
    const double g = float_gcd(gaps, 1e-9 * numax, commensurate);
    out.approximate = !commensurate || g == 0.0;
    double window;
    if (!out.approximate) {
        window = 2.0 * std::numbers::pi / g;
    } else {
        // incommensurate: sample ~50 beats of the slowest pair densely instead of
        // aliasing across one enormous quasi-period
        const double beat = 2.0 * std::numbers::pi / *std::min_element(gaps.begin(), gaps.end());
        window = 50.0 * beat;
    }
    out.window = window;

    auto na_at = [&](double t) { return mean_na(evolve(es, psi0, t, cfg)); };

    const int points = std::min(scan.max_points, std::max(64, 32 * static_cast<int>(gaps.size())));
    double best_t = 0.0, best = static_cast<double>(L);
    for (int i = 0; i <= points; ++i) {
        const double t = window * i / points;
        const double v = na_at(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    const double dt = window / points;
    const double t_min =
        golden_min(na_at, std::max(0.0, best_t - dt), best_t + dt, scan.t_tol * std::max(1.0, best_t));
    out.t_min = t_min;
    out.min_mean_na = std::min(best, na_at(t_min));
    out.xi = (L - out.min_mean_na) / L;
    return out;
}

std::vector<double> short_time_compare(const SubspaceLabel& label, std::span<const double> z_mags,
                                       double kappa_phase) {
    label.validate();
    const cx kappa{std::cos(kappa_phase), std::sin(kappa_phase)};  // |kappa| = 1
    const EvolutionConfig cfg{label, kappa};
    const EigenSystem es = eigensystem(cfg);
    const BlockState psi0 = reference_state(label);

    std::vector<double> devs;
    devs.reserve(z_mags.size());
    for (double zm : z_mags) {
        if (zm < 0.0) throw std::domain_error("short_time_compare: |z| must be nonnegative");
        const double t = zm;  // |kappa| = 1
        const BlockState evolved = evolve(es, psi0, t, cfg);
        const cx z = cx{0.0, -1.0} * kappa * t;
        const BlockState cs = coherent_state({label, z});
        long double acc = 0.0L;
        for (size_t i = 0; i < evolved.amp.size(); ++i) acc += std::norm(evolved.amp[i] - cs.amp[i]);
        devs.push_back(static_cast<double>(std::sqrt(acc)));
    }
    return devs;
}

}  // namespace trics
