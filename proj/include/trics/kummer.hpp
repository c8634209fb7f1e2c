// kummer.hpp — confluent hypergeometric (Kummer) function evaluation:
// terminating sums, the general ascending series with the negative-argument
// transformation, stable Gamma ratios, and the logarithmic-derivative ratio
// Omega used by the photon-statistics formulas.
#pragma once

#include "trics/types.hpp"

namespace trics {

// Gamma(twok + n) / Gamma(twok) as an exact product prod_{j<n} (twok + j).
// No Gamma evaluation, so no overflow until the product itself overflows.
double gamma_ratio(double twok, int n);

// Terminating Kummer function Phi(-L; c; x) = sum_{j=0}^{L} (-L)_j / (c)_j x^j / j!.
// Terms are generated by the ratio recurrence and accumulated smallest-magnitude
// first in extended precision. A Pochhammer zero in the denominator on a visited
// term (c + j = 0 for some j < L) is a domain error.
double kummer_terminating(int L, double c, double x);

// General Phi(a; c; x) by the ascending series. For x < 0 the Kummer
// transformation Phi(a;c;x) = e^x Phi(c-a;c;-x) is applied first so that the
// parameter families arising here sum positive terms only. The series stops once the
// term magnitude stays below tol * |partial sum| for three consecutive terms;
// exceeding the term cap 10(|x|+|a|+|c|) + 1000 is a numeric error.
double kummer_series(double a, double c, double x, double tol = 1e-15);

// Omega(r;k,L) = d/dr ln Phi(-L; 1-L-2k; r)
//             = L/(L+2k-1) * Phi(1-L; 2-L-2k; r) / Phi(-L; 1-L-2k; r).
// By convention Omega = 0 for L = 0.
double omega(double r, double k, int L);
double omega(double r, const SubspaceLabel& label);

}  // namespace trics
