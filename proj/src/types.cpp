#include "trics/types.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace trics {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

long long Rational::twice_as_integer() const {
    if ((2 * num) % den != 0) return -1;
    return 2 * num / den;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> long long {
        if (s.empty()) throw std::domain_error("Rational: empty component");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::domain_error("Rational: sign without digits");
        long long v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::domain_error("Rational: expected integer or p/q, got '" + std::string(s) + "'");
            v = 10 * v + (s[i] - '0');
        }
        return (s[0] == '-') ? -v : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

void SubspaceLabel::validate() const {
    if (!k.positive()) throw std::domain_error("SubspaceLabel: Bargmann index k must be positive");
    if (L < 0) throw std::domain_error("SubspaceLabel: L must be nonnegative");
}

BlockState zero_state(const SubspaceLabel& label) {
    label.validate();
    return BlockState{label, std::vector<cx>(static_cast<size_t>(label.dim()), cx{0.0, 0.0})};
}

BlockState reference_state(const SubspaceLabel& label) {
    BlockState s = zero_state(label);
    s.amp.back() = cx{1.0, 0.0};
    return s;
}

double norm(const BlockState& s) {
    long double acc = 0.0L;
    for (const cx& a : s.amp) acc += (long double)a.real() * a.real() + (long double)a.imag() * a.imag();
    return static_cast<double>(std::sqrt(acc));
}

void normalize(BlockState& s) {
    const double n = norm(s);
    if (n == 0.0) throw std::domain_error("normalize: zero state");
    for (cx& a : s.amp) a /= n;
}

bool is_normalized(const BlockState& s, double tol) { return std::fabs(norm(s) - 1.0) <= tol; }

cx inner(const BlockState& a, const BlockState& b) {
    if (!(a.label == b.label)) throw std::domain_error("inner: states live in different (k, L) blocks");
    std::complex<long double> acc{0.0L, 0.0L};
    for (size_t i = 0; i < a.amp.size(); ++i)
        acc += std::conj(std::complex<long double>(a.amp[i])) * std::complex<long double>(b.amp[i]);
    return cx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

}  // namespace trics
