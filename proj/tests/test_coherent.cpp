#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "trics/coherent.hpp"
#include "trics/kummer.hpp"

using namespace trics;

TEST_CASE("dtilde values and recursion") {
    const SubspaceLabel label{Rational(3, 2), 9};
    const double k = label.k_value();
    CHECK(dtilde(label, 0) == 1.0);
    CHECK(dtilde(label, 1) == doctest::Approx(std::sqrt(2.0 * k * 9.0)).epsilon(1e-15));
    CHECK(dtilde(label, 2) ==
          doctest::Approx(std::sqrt((2.0 * k * k + k) * (81.0 - 9.0))).epsilon(1e-15));

    for (int n = 0; n < label.L; ++n) {
        const double ratio = dtilde(label, n + 1) / dtilde(label, n);
        CHECK(ratio == doctest::Approx(std::sqrt((9.0 - n) * (2.0 * k + n) / (n + 1.0))).epsilon(1e-13));
    }
}

TEST_CASE("normalization polynomial G and its Kummer route") {
    const SubspaceLabel l1{Rational(5, 4), 1};
    CHECK(norm_poly(cx{0.0, 0.0}, l1) == cx{1.0, 0.0});
    const cx w{0.37, -0.2};
    CHECK(std::abs(norm_poly(w, l1) - (cx{1.0, 0.0} + 2.5 * w)) < 1e-15);

    // G(w) = Gamma(2k+L)/Gamma(2k) w^L Phi(-L;1-L-2k;1/w) for w > 0
    const SubspaceLabel l5{Rational(1), 5};
    const double wv = 0.3;
    const double kummer_route = gamma_ratio(2.0, 5) * std::pow(wv, 5) *
                                kummer_terminating(5, 1.0 - 5.0 - 2.0, 1.0 / wv);
    CHECK(norm_poly(cx{wv, 0.0}, l5).real() == doctest::Approx(kummer_route).epsilon(1e-12));
}

TEST_CASE("coherent state construction") {
    // z = 0 reproduces the reference state
    const BlockState ref = coherent_state({{Rational(2), 6}, cx{0.0, 0.0}});
    CHECK(ref.amp.back() == cx{1.0, 0.0});
    CHECK(norm(ref) == doctest::Approx(1.0));

    // L = 1 closed form (|1>|k,0> + sqrt(2k) z |0>|k,1>) / sqrt(1+2k|z|^2)
    const double k = 1.5, zv = 0.8;
    const BlockState s1 = coherent_state({{Rational(3, 2), 1}, cx{zv, 0.0}});
    const double denom = std::sqrt(1.0 + 2.0 * k * zv * zv);
    CHECK(s1.amp[1].real() == doctest::Approx(1.0 / denom).epsilon(1e-14));
    CHECK(s1.amp[0].real() == doctest::Approx(std::sqrt(2.0 * k) * zv / denom).epsilon(1e-14));

    // L = 2 amplitudes proportional to (1, sqrt(4k) z, sqrt(2k(2k+1)) z^2)
    const cx z2{0.3, 0.45};
    const BlockState s2 = coherent_state({{Rational(3, 2), 2}, z2});
    const cx base = s2.amp[2];
    CHECK(std::abs(s2.amp[1] - base * std::sqrt(4.0 * k) * z2) < 1e-14);
    CHECK(std::abs(s2.amp[0] - base * std::sqrt(2.0 * k * (2.0 * k + 1.0)) * z2 * z2) < 1e-14);
}

TEST_CASE("coherent state normalization across the full parameter box") {
    for (const auto& [k, L] : {std::pair{Rational(1, 4), 3}, {Rational(1), 40}, {Rational(10), 200}}) {
        for (double zm : {0.0, 1e-3, 0.5, 10.0}) {
            const BlockState s = coherent_state({{k, L}, cx{zm * 0.6, zm * 0.8}});
            CHECK(std::fabs(norm(s) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("overlap via G equals the explicit inner product") {
    const SubspaceLabel label{Rational(1), 3};
    const CoherentParams p1{label, cx{0.4, 0.0}};
    const CoherentParams p2{label, cx{0.0, 0.7}};
    CHECK(std::abs(overlap(p1, p1) - cx{1.0, 0.0}) < 1e-14);

    const cx direct = inner(coherent_state(p1), coherent_state(p2));
    CHECK(std::abs(overlap(p1, p2) - direct) < 1e-12);

    // z2 = 0 projects onto the reference state
    const cx proj = overlap(p1, {label, cx{0.0, 0.0}});
    CHECK(std::abs(proj - 1.0 / std::sqrt(norm_poly(cx{0.16, 0.0}, label).real())) < 1e-14);

    CHECK_THROWS_AS(overlap(p1, {{Rational(1), 4}, cx{0.1, 0.0}}), std::domain_error);

    // never orthogonal within a block, |overlap| <= 1 with equality only at equal z
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> zd(-2.0, 2.0);
    for (int it = 0; it < 40; ++it) {
        const CoherentParams a{label, cx{zd(rng), zd(rng)}};
        const CoherentParams b{label, cx{zd(rng), zd(rng)}};
        const double o = std::abs(overlap(a, b));
        CHECK(o > 0.0);
        CHECK(o <= 1.0 + 1e-14);
        if (std::abs(a.z - b.z) > 1e-3) CHECK(o < 1.0);
    }
}

TEST_CASE("eigenvalue-equation residuals") {
    // reference state: all three equations hold exactly
    const EigenResiduals r0 = eigen_residuals({{Rational(2), 8}, cx{0.0, 0.0}});
    CHECK(r0.number == 0.0);
    CHECK(r0.k0 == 0.0);
    CHECK(r0.lowering == 0.0);

    CHECK(eigen_residuals({{Rational(1), 5}, cx{0.8, 0.0}}).max() < 1e-10);
    CHECK(eigen_residuals({{Rational(1, 2), 1}, cx{2.0, 0.0}}).max() < 1e-12);
    CHECK(eigen_residuals({{Rational(1), 3}, cx{0.4, 0.7}}).max() < 1e-12);
    // L = 0: everything is annihilated
    CHECK(eigen_residuals({{Rational(1), 0}, cx{3.0, 1.0}}).max() == 0.0);
}

TEST_CASE("superposition structure") {
    const SubspaceLabel a{Rational(1), 1}, b{Rational(1), 2};
    const double w = 1.0 / std::sqrt(2.0);

    const MultiBlockState single = superposition({{cx{1.0, 0.0}, a}}, cx{0.4, 0.0});
    const BlockState direct = coherent_state({a, cx{0.4, 0.0}});
    CHECK(oracle::max_abs_diff(single.entries[0].state, direct) == 0.0);

    const MultiBlockState two = superposition({{cx{w, 0.0}, a}, {cx{w, 0.0}, b}}, cx{0.2, 0.0});
    CHECK(two.entries.size() == 2);
    for (const auto& e : two.entries) CHECK(std::fabs(norm(e.state) - 1.0) < 1e-12);

    CHECK_THROWS_AS(superposition({{cx{w, 0.0}, a}, {cx{w, 0.0}, a}}, cx{0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(superposition({{cx{0.9, 0.0}, a}, {cx{0.9, 0.0}, b}}, cx{0.0, 0.0}), std::domain_error);
}

TEST_CASE("even cat state") {
    // z = 0 degenerates to the reference state
    const BlockState flat = even_cat({{Rational(1), 4}, cx{0.0, 0.0}});
    CHECK(flat.amp.back() == cx{1.0, 0.0});

    // L = 2 closed form (|2>|k,0> + sqrt(2k(2k+1)) z^2 |0>|k,2>) / sqrt(1+2k(2k+1)z^4)
    const double k = 0.5, zv = 1.3;
    const BlockState cat = even_cat({{Rational(1, 2), 2}, cx{zv, 0.0}});
    const double c2 = std::sqrt(2.0 * k * (2.0 * k + 1.0)) * zv * zv;
    const double nn = std::sqrt(1.0 + 2.0 * k * (2.0 * k + 1.0) * std::pow(zv, 4));
    CHECK(cat.amp[2].real() == doctest::Approx(1.0 / nn).epsilon(1e-14));
    CHECK(cat.amp[1] == cx{0.0, 0.0});
    CHECK(cat.amp[0].real() == doctest::Approx(c2 / nn).epsilon(1e-14));

    // z = sqrt(2): (|2>|k,0> + sqrt(8k(2k+1)) |0>|k,2>) / (4k+1)
    for (const Rational& kr : {Rational(1, 2), Rational(1), Rational(2)}) {
        const double kv = kr.value();
        const BlockState eq = even_cat({{kr, 2}, cx{std::sqrt(2.0), 0.0}});
        CHECK(eq.amp[2].real() == doctest::Approx(1.0 / (4.0 * kv + 1.0)).epsilon(1e-14));
        CHECK(eq.amp[0].real() ==
              doctest::Approx(std::sqrt(8.0 * kv * (2.0 * kv + 1.0)) / (4.0 * kv + 1.0)).epsilon(1e-14));
    }
}
