#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hyper/rng.hpp"
#include "hyper/spin.hpp"
#include "hyper/unitary.hpp"

using namespace hyper;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool close(const AlgebraElement& a, const AlgebraElement& b, double tol = 1e-12) {
    return (a - b).norm() <= tol * (1.0 + a.norm() + b.norm());
}

bool close_pv(const Paravector& a, const Paravector& b, double tol = 1e-12) {
    double d = 0.0;
    for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a.x[k] - b.x[k]));
    return d <= tol * (1.0 + a.norm() + b.norm());
}

/// Independent transform oracle: run x -> g x dagger(g) inside the two
/// complex 2x2 factors and rejoin.
Paravector apply_via_complex_split(const SpinTransform& g, const Paravector& x) {
    const auto [gp_, gm_] = split(matrix_rep(g.g));
    const auto [xp_, xm_] = split(matrix_rep(embed(x)));
    const auto [dp_, dm_] = split(matrix_rep(reversion(g.g)));
    const CMatrix mp = gp_ * xp_ * dp_;
    const CMatrix mm = gm_ * xm_ * dm_;
    return extract_paravector(from_matrix(join(mp, mm)), 1e-9);
}

} // namespace

TEST_CASE("rotor basics") {
    const SpinTransform id = rotor({0.0, 0.0, 1.0}, 0.0);
    CHECK(close(id.g, AlgebraElement::one(), 1e-15));

    // spinorial double cover
    const SpinTransform full = rotor({0.0, 0.0, 1.0}, 2.0 * kPi);
    CHECK((full.g + AlgebraElement::one()).norm() <= 1e-12);
    const SpinTransform twice = rotor({0.0, 0.0, 1.0}, 4.0 * kPi);
    CHECK((twice.g - AlgebraElement::one()).norm() <= 1e-12);

    CHECK_THROWS_AS(rotor({0.0, 0.0, 2.0}, 1.0), BadAxis);
}

TEST_CASE("rotation orientation convention") {
    // right-handed active rotation: z-rotor by pi/2 takes e1 to e2
    const SpinTransform g = rotor({0.0, 0.0, 1.0}, 0.5 * kPi);
    const Paravector e1(0.0, 1.0, 0.0, 0.0);
    CHECK(close_pv(apply(g, e1), Paravector(0.0, 0.0, 1.0, 0.0), 1e-12));
    CHECK(close_pv(apply_via_complex_split(g, e1), Paravector(0.0, 0.0, 1.0, 0.0), 1e-12));

    Rng rng(59);
    for (int t = 0; t < 100; ++t) {
        const double theta = rng.uniform(-kPi, kPi);
        const Paravector moved = apply(rotor({0.0, 0.0, 1.0}, theta), e1);
        CHECK(moved.x[1] == doctest::Approx(std::cos(theta)).epsilon(1e-12));
        CHECK(moved.x[2] == doctest::Approx(std::sin(theta)).epsilon(1e-12));
    }

    // rotation about z fixes t and z
    const Paravector fixed = apply(rotor({0.0, 0.0, 1.0}, 1.234), Paravector(5.0, 0.0, 0.0, 2.0));
    CHECK(close_pv(fixed, Paravector(5.0, 0.0, 0.0, 2.0), 1e-12));
}

TEST_CASE("boost basics") {
    const SpinTransform id = boost({0.0, 0.0, 1.0}, 0.0);
    CHECK(close(id.g, AlgebraElement::one(), 1e-15));
    CHECK_THROWS_AS(boost({1.0, 1.0, 0.0}, 1.0), BadAxis);

    // z-boost on e0: frozen cosh 1 / sinh 1
    const Paravector moved = apply(boost({0.0, 0.0, 1.0}, 1.0), Paravector(1.0, 0.0, 0.0, 0.0));
    CHECK(moved.x[0] == doctest::Approx(1.5430806348152437).epsilon(1e-14));
    CHECK(moved.x[3] == doctest::Approx(1.1752011936438014).epsilon(1e-14));
    CHECK(std::abs(moved.x[1]) + std::abs(moved.x[2]) <= 1e-14);

    Rng rng(61);
    for (int t = 0; t < 100; ++t) {
        const double xi = rng.uniform(-2.0, 2.0);
        const SpinTransform g = boost({0.0, 0.0, 1.0}, xi);
        const Paravector e0moved = apply(g, Paravector(1.0, 0.0, 0.0, 0.0));
        CHECK(e0moved.x[0] == doctest::Approx(std::cosh(xi)).epsilon(1e-12));
        CHECK(e0moved.x[3] == doctest::Approx(std::sinh(xi)).epsilon(1e-12));
        CHECK(close_pv(apply_via_complex_split(g, Paravector(1.0, 0.0, 0.0, 0.0)), e0moved,
                       1e-12));

        // collinear rapidity additivity
        const double xi2 = rng.uniform(-2.0, 2.0);
        const auto axis = rng.unit3();
        CHECK((compose(boost(axis, xi), boost(axis, xi2)).g - boost(axis, xi + xi2).g).norm() <=
              1e-10);
    }
}

TEST_CASE("group invariants") {
    Rng rng(67);
    for (int t = 0; t < 300; ++t) {
        const auto axis = rng.unit3();
        const SpinTransform g = (t % 2 == 0) ? rotor(axis, rng.uniform(-kPi, kPi))
                                             : boost(axis, rng.uniform(-2.0, 2.0));
        CHECK(unitarity_residual(g) <= 1e-12);
        const AlgebraElement gd = reversion(g.g);
        CHECK((gp(gd, conjugation(gd)) - AlgebraElement::one()).norm() <= 1e-12);

        const Paravector x = rng.paravector();
        const Paravector moved = apply(g, x);
        CHECK(std::abs(minkowski(moved, moved) - minkowski(x, x)) <=
              1e-10 * (1.0 + x.norm() * x.norm()));
        CHECK(close_pv(moved, apply_via_complex_split(g, x), 1e-11));
    }
}

TEST_CASE("apply rejects an invalid transform") {
    // 1 + sigma_1 is not in the spin group; the image leaves the paravector span
    SpinTransform bogus{AlgebraElement::one() + AlgebraElement::sigma(1), std::nullopt};
    CHECK_THROWS_AS(apply(bogus, Paravector(1.0, 0.0, 0.0, 0.0)), NotParavector);
}

TEST_CASE("spinor action") {
    Rng rng(71);
    const SpinTransform id = rotor({1.0, 0.0, 0.0}, 0.0);
    const HSpinor psi(rng.hnumber(), rng.hnumber());
    const HSpinor same = apply_spinor(id, psi);
    CHECK((same - psi).norm() <= 1e-15);

    for (int t = 0; t < 200; ++t) {
        const auto axis = rng.unit3();
        const SpinTransform g = compose(rotor(axis, rng.uniform(-kPi, kPi)),
                                        boost(rng.unit3(), rng.uniform(-1.5, 1.5)));
        const HSpinor phi(rng.hnumber(), rng.hnumber());
        const HSpinor chi(rng.hnumber(), rng.hnumber());
        const HNumber before = spinor_product(phi, chi);
        const HNumber after = spinor_product(apply_spinor(g, phi), apply_spinor(g, chi));
        CHECK((after - before).norm() <= 1e-11 * (1.0 + phi.norm() * chi.norm()));
    }

    // commutative phase: g = exp(-i alpha) times the identity element
    const double alpha = 0.8;
    SpinTransform phase{AlgebraElement(exp(HNumber(0.0, -alpha, 0.0, 0.0))), std::nullopt};
    const HSpinor rotated = apply_spinor(phase, psi);
    CHECK((spinor_product(rotated, rotated) - spinor_product(psi, psi)).norm() <= 1e-13);
}

TEST_CASE("complex pair") {
    const auto [ip, im] = to_complex_pair(rotor({0.0, 0.0, 1.0}, 0.0));
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            const std::complex<double> expected = (r == c) ? 1.0 : 0.0;
            CHECK(std::abs(ip(r, c) - expected) <= 1e-15);
            CHECK(std::abs(im(r, c) - expected) <= 1e-15);
        }

    // z-boost splits into exp(+xi sigma3/2) and exp(-xi sigma3/2); P+ first
    const double xi = 0.9;
    const auto [bp, bm] = to_complex_pair(boost({0.0, 0.0, 1.0}, xi));
    CHECK(std::abs(bp(0, 0) - std::exp(0.5 * xi)) <= 1e-13);
    CHECK(std::abs(bp(1, 1) - std::exp(-0.5 * xi)) <= 1e-13);
    CHECK(std::abs(bm(0, 0) - std::exp(-0.5 * xi)) <= 1e-13);
    CHECK(std::abs(bm(1, 1) - std::exp(0.5 * xi)) <= 1e-13);

    Rng rng(73);
    for (int t = 0; t < 200; ++t) {
        const SpinTransform g = (t % 2 == 0) ? rotor(rng.unit3(), rng.uniform(-kPi, kPi))
                                             : boost(rng.unit3(), rng.uniform(-1.5, 1.5));
        const SpinTransform h = (t % 3 == 0) ? rotor(rng.unit3(), rng.uniform(-kPi, kPi))
                                             : boost(rng.unit3(), rng.uniform(-1.5, 1.5));
        const auto [gp_, gm_] = to_complex_pair(g);
        const auto [hp_, hm_] = to_complex_pair(h);
        const auto [pp_, pm_] = to_complex_pair(compose(g, h));
        CHECK(frobenius_norm(pp_ - gp_ * hp_) <= 1e-12 * (1.0 + frobenius_norm(gp_)));
        CHECK(frobenius_norm(pm_ - gm_ * hm_) <= 1e-12 * (1.0 + frobenius_norm(gm_)));
        CHECK(std::abs(det_c(gp_) - std::complex<double>(1.0, 0.0)) <= 1e-11);
        CHECK(std::abs(det_c(gm_) - std::complex<double>(1.0, 0.0)) <= 1e-11);
    }
}

TEST_CASE("chirality projectors") {
    Rng rng(79);
    const AlgebraElement pp(HNumber::projector_plus());
    const AlgebraElement pm(HNumber::projector_minus());
    for (int t = 0; t < 100; ++t) {
        const SpinTransform g = compose(rotor(rng.unit3(), rng.uniform(-kPi, kPi)),
                                        boost(rng.unit3(), rng.uniform(-1.5, 1.5)));
        CHECK((gp(pp, g.g) - gp(g.g, pp)).norm() == 0.0);
        CHECK((gp(pm, g.g) - gp(g.g, pm)).norm() == 0.0);

        // the spinor action restricted to a chirality sector is exactly the
        // corresponding complex factor of bar(g)
        const HSpinor psi(rng.hnumber(), rng.hnumber());
        const HSpinor moved = apply_spinor(g, psi);
        const auto [ap, am] = split(matrix_rep(conjugation(g.g)));
        for (int comp = 0; comp < 2; ++comp) {
            const std::complex<double> expect_p = ap(comp, 0) * split(psi.comp[0]).plus +
                                                  ap(comp, 1) * split(psi.comp[1]).plus;
            const std::complex<double> expect_m = am(comp, 0) * split(psi.comp[0]).minus +
                                                  am(comp, 1) * split(psi.comp[1]).minus;
            CHECK(std::abs(split(moved.comp[comp]).plus - expect_p) <=
                  1e-12 * (1.0 + psi.norm()));
            CHECK(std::abs(split(moved.comp[comp]).minus - expect_m) <=
                  1e-12 * (1.0 + psi.norm()));
        }
    }
}

TEST_CASE("exponential consistency") {
    Rng rng(83);
    for (int t = 0; t < 200; ++t) {
        const AlgebraElement x = rng.algebra_element(0.8);
        const AlgebraElement half = exp_element(scale(0.5, x));
        CHECK(close(exp_element(x), gp(half, half), 1e-12));
    }
    // small-argument series branch
    AlgebraElement tiny;
    tiny.c[1] = HNumber(1e-8, 2e-9, 0.0, 0.0);
    const AlgebraElement ex = exp_element(tiny);
    CHECK(close(ex, AlgebraElement::one() + tiny, 1e-14));
}
