#include "trics/kummer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace trics {

double gamma_ratio(double twok, int n) {
    if (!(twok > 0.0)) throw std::domain_error("gamma_ratio: twok must be positive");
    if (n < 0) throw std::domain_error("gamma_ratio: n must be nonnegative");
    long double p = 1.0L;
    for (int j = 0; j < n; ++j) p *= (long double)twok + j;
    return static_cast<double>(p);
}

double kummer_terminating(int L, double c, double x) {
    if (L < 0) throw std::domain_error("kummer_terminating: L must be nonnegative");
    std::vector<long double> terms;
    terms.reserve(static_cast<size_t>(L) + 1);
    long double t = 1.0L;
    terms.push_back(t);
    for (int j = 0; j < L; ++j) {
        const long double denom = (long double)c + j;
        if (denom == 0.0L)
            throw std::domain_error("kummer_terminating: Pochhammer zero in denominator at c + " +
                                    std::to_string(j));
        t *= (long double)(-L + j) / (denom * (j + 1)) * (long double)x;
        terms.push_back(t);
    }
    std::sort(terms.begin(), terms.end(),
              [](long double a, long double b) { return std::fabs((double)a) < std::fabs((double)b); });
    long double sum = 0.0L;
    for (long double v : terms) sum += v;
    return static_cast<double>(sum);
}

double kummer_series(double a, double c, double x, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("kummer_series: tol must be positive");
    if (c <= 0.0 && c == std::floor(c))
        throw std::domain_error("kummer_series: c must not be a nonpositive integer");
    if (x < 0.0) return std::exp(x) * kummer_series(c - a, c, -x, tol);

    const long cap = static_cast<long>(10.0 * (std::fabs(x) + std::fabs(a) + std::fabs(c))) + 1000;
    long double term = 1.0L;
    long double sum = 1.0L;
    int below = 0;
    for (long j = 0; j < cap; ++j) {
        term *= ((long double)a + j) / (((long double)c + j) * (j + 1)) * (long double)x;
        sum += term;
        if (std::fabs((double)term) < tol * std::fabs((double)sum)) {
            if (++below >= 3) return static_cast<double>(sum);
        } else {
            below = 0;
        }
    }
    std::ostringstream msg;
    msg << "kummer_series: no convergence after " << cap << " terms (partial sum " << (double)sum << ")";
    throw std::runtime_error(msg.str());
}

double omega(double r, double k, int L) {
    if (r < 0.0) throw std::domain_error("omega: r must be nonnegative");
    if (!(k > 0.0)) throw std::domain_error("omega: k must be positive");
    if (L < 0) throw std::domain_error("omega: L must be nonnegative");
    if (L == 0) return 0.0;
    const double denom = kummer_terminating(L, 1.0 - L - 2.0 * k, r);
    if (denom <= 0.0) throw std::runtime_error("omega: vanishing denominator Phi(-L;1-L-2k;r)");
    const double numer = kummer_terminating(L - 1, 2.0 - L - 2.0 * k, r);
    return (L / (L + 2.0 * k - 1.0)) * numer / denom;
}

double omega(double r, const SubspaceLabel& label) {
    label.validate();
    return omega(r, label.k_value(), label.L);
}

}  // namespace trics
