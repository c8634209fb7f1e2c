// analytic.hpp — y-plane and z-plane analytic representations, the double
// (Bargmann x unit-disk) representation, the differential operators and ODE
// residuals, the integration measure, and the numerical resolution-of-identity
// and reproducing-kernel checks.
#pragma once

#include <span>

#include "trics/types.hpp"

namespace trics {

// Y_f(y) = sum_n coeff[n] y^n with coeff[n] = d_n(k,L) conj(f_n), d_n = d~_{L-n}.
struct PolyRep {
    SubspaceLabel label;
    std::vector<cx> coeff;
};

cx poly_eval(const PolyRep& p, cx y);

PolyRep to_poly(const BlockState& f);
BlockState from_poly(const PolyRep& p);

// Z_f(z) = z^L Y_f(1/z): plain coefficient reversal.
PolyRep z_rep(const PolyRep& y_rep);

// D_f(alpha, zeta) = zeta^L / sqrt(L!) Y_f(alpha/zeta); needs 0 < |zeta| < 1.
cx double_rep_eval(const BlockState& f, cx alpha, cx zeta);

enum class DiffOp { aKplus, adKminus, K0 };

// y-plane differential action:
//   aK+  = -y d^2/dy^2 + (L+2k-1) d/dy
//   a†K- = -y^2 d/dy + L y
//   K0   = -y d/dy + k + L
PolyRep diff_op(DiffOp op, const PolyRep& p);

std::vector<cx> circle_points(int count, double radius);

// Residual of the coherent-state ODE
//   y Y0'' - [y0* y + (L+2k-1)] Y0' + L y0* Y0 = 0
// evaluated at the sample points (default: 2L+3 points, radius 1 + |y0|),
// scaled by the polynomial's maximum modulus there.
double ode_residual_cs(cx y0, const SubspaceLabel& label, std::span<const cx> pts = {});

// Residual of the eigenstate ODE
//   y Y'' + [g y^2 - (L+2k-1)] Y' + (nu/kappa* - g L y) Y = 0,  g = kappa/kappa*.
double ode_residual_eigen(double nu, const BlockState& eigvec, cx kappa,
                          std::span<const cx> pts = {});

enum class RadialScheme { gauss_panels, log_trapezoid };

struct MeasureParams {
    SubspaceLabel label;
    int nodes = 0;  // total radial nodes; 0 picks a scheme-appropriate default
    RadialScheme scheme = RadialScheme::gauss_panels;
    double tol = 1e-10;
};

// Radial density of d\mu against dr dphi/(2 pi):
//   (L+1)/(L+2k) Phi(-L;1-L-2k;r) Phi(L+2;2k+L+1;-r),
// the second factor through the Kummer transformation (and, for large r, its
// power-law asymptotic expansion, since the transformed series needs e^r).
double measure_density(double r, const SubspaceLabel& label);

// Phi(L+2; 2k+L+1; -r) itself, series or asymptotic branch.
double measure_kummer_factor(double r, const SubspaceLabel& label);

// Integrals integral_0^inf r^n Phi(L+2;2k+L+1;-r) dr for n = 0..L. The head is
// integrated on [0, R] (Gauss-Legendre panels or log-spaced trapezoid), the
// power-law tail beyond R in closed form from the asymptotic expansion.
std::vector<double> radial_moments(const MeasureParams& mp);

// Resolution-of-identity deviations |Gamma(2k+L-n)/(n!(L-n)!) M_n - 1|, n = 0..L.
std::vector<double> identity_check(const MeasureParams& mp);

// Reproduces Y_f(y) through the radial-moment reduction of the kernel integral;
// returns |Y_rec(y) - Y_f(y)| / max(1, |Y_f(y)|).
double kernel_check(const BlockState& f, cx y, const MeasureParams& mp);

}  // namespace trics
