// types.hpp — core value types: exact rational Bargmann index, subspace labels,
// and block states living in one invariant subspace H_L.
#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace trics {

using cx = std::complex<double>;

// Exact rational, used for the Bargmann index k so that realization gates
// (2k integral, k = 1/4, ...) are exact comparisons rather than float tests.
struct Rational {
    long long num{0};
    long long den{1};

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool positive() const { return num > 0; }

    // 2k as an exact integer, or -1 when 2k is not integral.
    long long twice_as_integer() const;

    friend bool operator==(const Rational&, const Rational&) = default;

    static Rational parse(std::string_view text);  // "p/q" or "p"; anything else rejected
    std::string str() const;
};

// (k, L): Bargmann index and initial pump photon number. dim(H_L) = L + 1.
struct SubspaceLabel {
    Rational k;
    int L{0};

    int dim() const { return L + 1; }
    double k_value() const { return k.value(); }
    void validate() const;  // k > 0, L >= 0

    friend bool operator==(const SubspaceLabel&, const SubspaceLabel&) = default;
};

// State in H_L: amp[n] multiplies the basis ket |n>|k,L-n>, n = pump occupation.
struct BlockState {
    SubspaceLabel label;
    std::vector<cx> amp;
};

BlockState zero_state(const SubspaceLabel& label);
BlockState reference_state(const SubspaceLabel& label);  // |L>|k,0>

double norm(const BlockState& s);
void normalize(BlockState& s);
bool is_normalized(const BlockState& s, double tol = 1e-12);

// <a|b>; the blocks never mix, so distinct labels are a domain error.
cx inner(const BlockState& a, const BlockState& b);

}  // namespace trics
