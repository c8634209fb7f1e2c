#include "trics/analytic.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "trics/coherent.hpp"
#include "trics/kummer.hpp"
#include "trics/quadrature.hpp"

namespace trics {

namespace {

using cxl = std::complex<long double>;

// series coefficients of Phi(-L;1-L-2k;w): phi_0 = 1, all terms nonnegative
std::vector<long double> phi_lower_coeffs(double twok, int L) {
    std::vector<long double> phi(static_cast<size_t>(L) + 1);
    phi[0] = 1.0L;
    for (int n = 0; n < L; ++n)
        phi[n + 1] = phi[n] * ((long double)(-L + n)) /
                     (((long double)(1.0 - L - twok) + n) * ((long double)n + 1));
    return phi;
}

// Split radius for the head quadrature / asymptotic tail of the measure factor.
double tail_split(double twok, int L) { return std::max(100.0, 6.0 * (L + 2.0) + 4.0 * std::fabs(2.0 - twok)); }

long double phi2_series(double twok, int L, double r) {
    // e^{-r} Phi(2k-1; 2k+L+1; r), ascending series in extended precision
    const long double a = (long double)twok - 1.0L;
    const long double c = (long double)twok + L + 1.0L;
    long double term = 1.0L, sum = 1.0L;
    for (long j = 0; j < 100000; ++j) {
        term *= (a + j) / ((c + j) * (j + 1)) * (long double)r;
        sum += term;
        if (std::fabs(term) < 1e-19L * std::fabs(sum) && (double)j > r) break;
    }
    return std::exp(-(long double)r) * sum;
}

long double phi2_asymptotic(double twok, int L, double r, double tol) {
    // Phi(L+2; 2k+L+1; -r) ~ Gamma(c)/Gamma(2k-1) r^{-(L+2)} sum_s (L+2)_s (2-2k)_s / (s! r^s)
    if (twok == 1.0) return std::exp(-(long double)r);  // k = 1/2: exactly e^{-r}
    const long double c = (long double)twok + L + 1.0L;
    long double term = 1.0L, sum = 0.0L;
    bool converged = false;
    for (int s = 0; s < 400; ++s) {
        sum += term;
        const long double next = term * ((long double)(L + 2 + s)) * ((long double)(2.0 - twok) + s) /
                                 (((long double)s + 1) * (long double)r);
        if (std::fabs((double)next) < tol * std::fabs((double)sum) || next == 0.0L) {
            converged = true;
            break;
        }
        if (std::fabs((double)next) > std::fabs((double)term) && s > 4) break;  // past the optimal truncation
        term = next;
    }
    if (!converged)
        throw std::runtime_error("measure tail: asymptotic expansion does not reach tolerance; increase r");
    const int sign_gamma = (twok < 1.0) ? -1 : 1;
    const long double pref_log =
        std::lgamma(c) - std::lgamma((long double)twok - 1.0L);
    const long double body = pref_log - (L + 2.0L) * std::log((long double)r);
    return sign_gamma * std::exp(body) * sum;
}

long double phi2_neg_arg(double twok, int L, double r, double tol) {
    if (r < 0.0) throw std::domain_error("measure factor: r must be nonnegative");
    if (r <= 300.0) return phi2_series(twok, L, r);
    return phi2_asymptotic(twok, L, r, tol);
}

struct MomentPlan {
    int L;
    double twok;
    double R;
    std::vector<double> r;  // head nodes
    std::vector<double> w;  // head weights
};

MomentPlan build_plan(const MeasureParams& mp) {
    mp.label.validate();
    MomentPlan plan;
    plan.L = mp.label.L;
    plan.twok = 2.0 * mp.label.k_value();
    plan.R = tail_split(plan.twok, plan.L);
    if (mp.nodes != 0 && mp.nodes < plan.L + 2)
        throw std::domain_error("MeasureParams: node count must be at least L + 2");

    if (mp.scheme == RadialScheme::gauss_panels) {
        const int per_panel = 32;
        int panels = static_cast<int>(std::ceil(plan.R / 4.0));
        if (mp.nodes > 0) panels = std::max(panels, (mp.nodes + per_panel - 1) / per_panel);
        const GaussLegendre rule(per_panel);
        plan.r.reserve(static_cast<size_t>(panels) * per_panel);
        plan.w.reserve(static_cast<size_t>(panels) * per_panel);
        for (int p = 0; p < panels; ++p) {
            const double a = plan.R * p / panels;
            const double b = plan.R * (p + 1) / panels;
            for (int i = 0; i < per_panel; ++i) {
                plan.r.push_back(0.5 * (b - a) * rule.node[i] + 0.5 * (a + b));
                plan.w.push_back(0.5 * (b - a) * rule.weight[i]);
            }
        }
    } else {
        // trapezoid in u = ln(1 + r), dr = e^u du
        const int n = (mp.nodes > 0) ? mp.nodes : 6000;
        const double umax = std::log1p(plan.R);
        const double h = umax / (n - 1);
        plan.r.resize(static_cast<size_t>(n));
        plan.w.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double u = h * i;
            plan.r[static_cast<size_t>(i)] = std::expm1(u);
            plan.w[static_cast<size_t>(i)] = h * std::exp(u) * ((i == 0 || i == n - 1) ? 0.5 : 1.0);
        }
    }
    return plan;
}

std::vector<long double> radial_moments_l(const MeasureParams& mp) {
    const MomentPlan plan = build_plan(mp);
    const int L = plan.L;
    std::vector<long double> mom(static_cast<size_t>(L) + 1, 0.0L);

    for (size_t i = 0; i < plan.r.size(); ++i) {
        const double r = plan.r[i];
        long double running = (long double)plan.w[i] * phi2_series(plan.twok, L, r);
        for (int n = 0; n <= L; ++n) {
            mom[static_cast<size_t>(n)] += running;
            running *= (long double)r;
        }
    }

    // closed-form power-law tail beyond R
    if (plan.twok != 1.0) {
        const int sign_gamma = (plan.twok < 1.0) ? -1 : 1;
        const long double pref =
            sign_gamma * std::exp(std::lgamma((long double)plan.twok + L + 1.0L) -
                                  std::lgamma((long double)plan.twok - 1.0L));
        const long double R = (long double)plan.R;
        for (int n = 0; n <= L; ++n) {
            long double term = std::pow(R, (long double)(n - L - 1));  // coeff_s R^{n-L-1-s}
            long double sum = 0.0L;
            bool converged = false;
            for (int s = 0; s < 400; ++s) {
                sum += term / ((long double)(L + 1 - n + s));
                const long double next = term * ((long double)(L + 2 + s)) *
                                         ((long double)(2.0 - plan.twok) + s) /
                                         (((long double)s + 1) * R);
                if (std::fabs(next) < 1e-19L * std::fabs(sum) || next == 0.0L) {
                    converged = true;
                    break;
                }
                if (std::fabs(next) > std::fabs(term) && s > 4) break;
                term = next;
            }
            if (!converged)
                throw std::runtime_error("radial_moments: tail expansion stalled at moment n = " +
                                         std::to_string(n));
            mom[static_cast<size_t>(n)] += pref * sum;
        }
    }
    return mom;
}

std::vector<cx> default_circle(int L, double radius) { return circle_points(2 * L + 3, radius); }

// max |p''(y) ... assembled residual| / max |p(y)| over the sample points
double scaled_residual(const PolyRep& p, std::span<const cx> pts,
                       const std::function<cx(cx, cx, cx, cx)>& lhs) {
    double worst = 0.0, scale = 0.0;
    for (const cx& y : pts) {
        // evaluate p, p', p'' by Horner on the derivative coefficient arrays
        cx v{0.0, 0.0}, d1{0.0, 0.0}, d2{0.0, 0.0};
        for (int n = static_cast<int>(p.coeff.size()) - 1; n >= 0; --n) {
            d2 = d2 * y + d1 * 2.0;
            d1 = d1 * y + v;
            v = v * y + p.coeff[static_cast<size_t>(n)];
        }
        const cx r = lhs(y, v, d1, d2);
        worst = std::max(worst, std::abs(r));
        scale = std::max(scale, std::abs(v));
    }
    if (scale == 0.0) return worst;
    return worst / scale;
}

}  // namespace

cx poly_eval(const PolyRep& p, cx y) {
    cx v{0.0, 0.0};
    for (int n = static_cast<int>(p.coeff.size()) - 1; n >= 0; --n) v = v * y + p.coeff[static_cast<size_t>(n)];
    return v;
}

PolyRep to_poly(const BlockState& f) {
    f.label.validate();
    const int L = f.label.L;
    PolyRep p{f.label, std::vector<cx>(static_cast<size_t>(L) + 1)};
    for (int n = 0; n <= L; ++n)
        p.coeff[static_cast<size_t>(n)] = dtilde(f.label, L - n) * std::conj(f.amp[static_cast<size_t>(n)]);
    return p;
}

BlockState from_poly(const PolyRep& p) {
    p.label.validate();
    if (static_cast<int>(p.coeff.size()) != p.label.dim())
        throw std::domain_error("from_poly: coefficient count does not match L + 1");
    const int L = p.label.L;
    BlockState f = zero_state(p.label);
    for (int n = 0; n <= L; ++n)
        f.amp[static_cast<size_t>(n)] = std::conj(p.coeff[static_cast<size_t>(n)] / dtilde(p.label, L - n));
    return f;
}

PolyRep z_rep(const PolyRep& y_rep) {
    PolyRep z{y_rep.label, std::vector<cx>(y_rep.coeff.rbegin(), y_rep.coeff.rend())};
    return z;
}

cx double_rep_eval(const BlockState& f, cx alpha, cx zeta) {
    f.label.validate();
    if (zeta == cx{0.0, 0.0})
        throw std::domain_error("double_rep_eval: zeta = 0; use the z-representation limit");
    if (std::abs(zeta) >= 1.0)
        throw std::domain_error("double_rep_eval: unit-disk variable needs |zeta| < 1");
    const int L = f.label.L;
    const double twok = 2.0 * f.label.k_value();
    // coefficient sqrt(Gamma(2k+L-n) / (n! (L-n)! Gamma(2k))) = d_n / sqrt(L!)
    cxl sum{0.0L, 0.0L};
    for (int n = 0; n <= L; ++n) {
        long double c2 = 1.0L;
        for (int j = 0; j < L - n; ++j) c2 *= (long double)twok + j;  // (2k)_{L-n}
        for (int j = 2; j <= n; ++j) c2 /= j;
        for (int j = 2; j <= L - n; ++j) c2 /= j;
        const cxl term = std::sqrt(c2) * cxl(std::conj(f.amp[static_cast<size_t>(n)])) *
                         std::pow(cxl(alpha), n) * std::pow(cxl(zeta), L - n);
        sum += term;
    }
    return cx((double)sum.real(), (double)sum.imag());
}

PolyRep diff_op(DiffOp op, const PolyRep& p) {
    p.label.validate();
    const int L = p.label.L;
    const double twok = 2.0 * p.label.k_value();
    const double k = p.label.k_value();
    PolyRep out{p.label, std::vector<cx>(p.coeff.size(), cx{0.0, 0.0})};
    for (int n = 0; n < static_cast<int>(p.coeff.size()); ++n) {
        const cx c = p.coeff[static_cast<size_t>(n)];
        switch (op) {
            case DiffOp::aKplus:  // y^n -> n (L+2k-n) y^{n-1}
                if (n >= 1) out.coeff[static_cast<size_t>(n - 1)] += c * (n * (L + twok - n));
                break;
            case DiffOp::adKminus:  // y^n -> (L-n) y^{n+1}
                if (n + 1 <= L) out.coeff[static_cast<size_t>(n + 1)] += c * static_cast<double>(L - n);
                break;
            case DiffOp::K0:  // y^n -> (k+L-n) y^n
                out.coeff[static_cast<size_t>(n)] += c * (k + L - n);
                break;
        }
    }
    return out;
}

std::vector<cx> circle_points(int count, double radius) {
    std::vector<cx> pts(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double phi = 2.0 * std::numbers::pi * i / count;
        pts[static_cast<size_t>(i)] = radius * cx(std::cos(phi), std::sin(phi));
    }
    return pts;
}

double ode_residual_cs(cx y0, const SubspaceLabel& label, std::span<const cx> pts) {
    label.validate();
    const int L = label.L;
    const double twok = 2.0 * label.k_value();
    // Y0 up to a constant: Phi(-L;1-L-2k; y0* y), finite at y0 = 0
    const auto phi = phi_lower_coeffs(twok, L);
    PolyRep Y{label, std::vector<cx>(static_cast<size_t>(L) + 1)};
    const cx y0c = std::conj(y0);
    cx pw{1.0, 0.0};
    for (int n = 0; n <= L; ++n) {
        Y.coeff[static_cast<size_t>(n)] = static_cast<double>(phi[static_cast<size_t>(n)]) * pw;
        pw *= y0c;
    }
    std::vector<cx> fallback;
    if (pts.empty()) {
        fallback = default_circle(L, 1.0 + std::abs(y0));
        pts = fallback;
    }
    return scaled_residual(Y, pts, [&](cx y, cx v, cx d1, cx d2) {
        return y * d2 - (y0c * y + (L + twok - 1.0)) * d1 + static_cast<double>(L) * y0c * v;
    });
}

double ode_residual_eigen(double nu, const BlockState& eigvec, cx kappa, std::span<const cx> pts) {
    eigvec.label.validate();
    if (kappa == cx{0.0, 0.0}) throw std::domain_error("ode_residual_eigen: kappa must be nonzero");
    const int L = eigvec.label.L;
    const double twok = 2.0 * eigvec.label.k_value();
    const cx gamma = kappa / std::conj(kappa);
    const cx nu_bar = nu / std::conj(kappa);
    const PolyRep Y = to_poly(eigvec);
    std::vector<cx> fallback;
    if (pts.empty()) {
        fallback = default_circle(L, 1.0);
        pts = fallback;
    }
    return scaled_residual(Y, pts, [&](cx y, cx v, cx d1, cx d2) {
        return y * d2 + (gamma * y * y - (L + twok - 1.0)) * d1 +
               (nu_bar - gamma * static_cast<double>(L) * y) * v;
    });
}

double measure_kummer_factor(double r, const SubspaceLabel& label) {
    label.validate();
    return static_cast<double>(phi2_neg_arg(2.0 * label.k_value(), label.L, r, 1e-13));
}

double measure_density(double r, const SubspaceLabel& label) {
    label.validate();
    if (r < 0.0) throw std::domain_error("measure_density: r must be nonnegative");
    const int L = label.L;
    const double twok = 2.0 * label.k_value();
    const double head = kummer_terminating(L, 1.0 - L - twok, r);
    return (L + 1.0) / (L + twok) / (2.0 * std::numbers::pi) * head *
           static_cast<double>(phi2_neg_arg(twok, L, r, 1e-13));
}

std::vector<double> radial_moments(const MeasureParams& mp) {
    const auto mom = radial_moments_l(mp);
    std::vector<double> out(mom.size());
    for (size_t i = 0; i < mom.size(); ++i) out[i] = static_cast<double>(mom[i]);
    return out;
}

std::vector<double> identity_check(const MeasureParams& mp) {
    const auto mom = radial_moments_l(mp);
    const int L = mp.label.L;
    const long double twok = 2.0L * (long double)mp.label.k_value();
    std::vector<double> dev(static_cast<size_t>(L) + 1);
    for (int n = 0; n <= L; ++n) {
        // Gamma(2k+L-n)/(n!(L-n)!) * Gamma(L+2)/Gamma(2k+L+1)
        long double pref = 1.0L;
        for (int j = 0; j <= n; ++j)
            pref *= ((long double)(L - n + 1 + j)) / (twok + L - n + j);
        for (int j = 2; j <= n; ++j) pref /= j;
        dev[static_cast<size_t>(n)] = static_cast<double>(std::fabs(pref * mom[static_cast<size_t>(n)] - 1.0L));
    }
    return dev;
}

double kernel_check(const BlockState& f, cx y, const MeasureParams& mp) {
    if (!(f.label == mp.label)) throw std::domain_error("kernel_check: label mismatch");
    const auto mom = radial_moments_l(mp);
    const int L = f.label.L;
    const double twok = 2.0 * f.label.k_value();
    const auto phi = phi_lower_coeffs(twok, L);
    const PolyRep Y = to_poly(f);

    cxl rec{0.0L, 0.0L};
    cxl pw{1.0L, 0.0L};
    const cxl yl{y.real(), y.imag()};
    for (int n = 0; n <= L; ++n) {
        rec += phi[static_cast<size_t>(n)] * cxl(Y.coeff[static_cast<size_t>(n)]) * pw *
               mom[static_cast<size_t>(n)];
        pw *= yl;
    }
    rec *= ((long double)(L + 1)) / ((long double)L + twok);
    const cx direct = poly_eval(Y, y);
    const double err = std::abs(cx((double)rec.real(), (double)rec.imag()) - direct);
    return err / std::max(1.0, std::abs(direct));
}

}  // namespace trics
