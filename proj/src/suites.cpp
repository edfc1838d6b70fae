#include "hyper/suites.hpp"

#include <algorithm>
#include <cmath>

#include "hyper/algebra.hpp"
#include "hyper/rng.hpp"
#include "hyper/spin.hpp"
#include "hyper/unitary.hpp"

namespace hyper {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Worst-case residual accumulator.
struct Worst {
    double value = 0.0;
    void feed(double r) { value = std::max(value, std::abs(r)); }
};

double rel(double raw, double scale) { return raw / (1.0 + scale); }

SpinTransform random_transform(Rng& rng, int max_factors = 3) {
    const int nfactors = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(max_factors));
    SpinTransform g{AlgebraElement::one(), std::nullopt};
    for (int f = 0; f < nfactors; ++f) {
        const auto axis = rng.unit3();
        if (rng.next_u64() % 2 == 0)
            g = compose(g, rotor(axis, rng.uniform(-kPi, kPi)));
        else
            g = compose(g, boost(axis, rng.uniform(-1.5, 1.5)));
    }
    return g;
}

HMatrix random_hmatrix(Rng& rng, std::size_t n, double scale = 1.0) {
    HMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.hnumber(scale);
    return m;
}

/// Per-trial generator so closure results cannot depend on trial order.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return Rng(seed ^ (0x9E3779B97F4A7C15ull * (trial + 1)));
}

} // namespace

std::vector<CheckResult> suite_ring_axioms(std::uint64_t seed, std::uint64_t trials) {
    Rng rng(seed);
    Worst assoc, comm, distr, split_hom, roundtrip, exp_inv, inverse_law;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const HNumber a = rng.hnumber();
        const HNumber b = rng.hnumber();
        const HNumber c = rng.hnumber();
        const double s3 = a.norm() * b.norm() * c.norm();
        assoc.feed(rel(((a * b) * c - a * (b * c)).norm(), s3));
        comm.feed(rel((a * b - b * a).norm(), a.norm() * b.norm()));
        distr.feed(rel((a * (b + c) - (a * b + a * c)).norm(), s3));

        const SplitPair sa = split(a);
        const SplitPair sb = split(b);
        const SplitPair prod{sa.plus * sb.plus, sa.minus * sb.minus};
        split_hom.feed(rel((join(prod) - a * b).norm(), a.norm() * b.norm()));
        roundtrip.feed(rel((join(split(a)) - a).norm(), a.norm()));

        const HNumber z = rng.hnumber(5.0);
        exp_inv.feed((exp(z) * exp(-z) - HNumber(1.0)).norm());

        if (is_invertible(a))
            inverse_law.feed(rel((a * *inverse(a) - HNumber(1.0)).norm(), 1.0));
    }

    const HNumber pp = HNumber::projector_plus();
    const HNumber pm = HNumber::projector_minus();
    Worst idem;
    idem.feed((pp * pp - pp).norm());
    idem.feed((pm * pm - pm).norm());
    idem.feed((pp * pm).norm());
    idem.feed((pp + pm - HNumber(1.0)).norm());

    double zero_div = 0.0;
    if (is_invertible(HNumber(1.0, 0.0, 1.0, 0.0))) zero_div = 1.0;  // 1 + j
    if (!is_invertible(HNumber::unit_j())) zero_div = 1.0;
    if (inverse(HNumber(2.0)) && ((*inverse(HNumber(2.0)) - HNumber(0.5)).norm() > 0.0))
        zero_div = 1.0;

    return {make_check("ring associativity", assoc.value, 1e-13),
            make_check("ring commutativity", comm.value, 1e-13),
            make_check("ring distributivity", distr.value, 1e-13),
            make_check("split ring isomorphism", split_hom.value, 1e-13),
            make_check("split join roundtrip", roundtrip.value, 1e-14),
            make_check("exponential inverse", exp_inv.value, 1e-10),
            make_check("multiplicative inverse", inverse_law.value, 1e-13),
            make_check("idempotent relations", idem.value, 0.0),
            make_check("zero divisor detection", zero_div, 0.0)};
}

std::vector<CheckResult> suite_algebra_tables() {
    // e_k e_l = delta_kl + ij eps_klm e^m, as exact coefficients
    Worst products;
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
            AlgebraElement expected;
            if (k == l) {
                expected = AlgebraElement::one();
            } else {
                const int m = 6 - k - l;
                const int eps = ((k == 1 && l == 2) || (k == 2 && l == 3) || (k == 3 && l == 1))
                                    ? 1
                                    : -1;
                // ij e_m = i sigma_m
                expected.c[static_cast<std::size_t>(m)] = HNumber(0.0, eps, 0.0, 0.0);
            }
            products.feed((gp(AlgebraElement::e(k), AlgebraElement::e(l)) - expected).norm());
        }

    Worst metric;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            Paravector a;
            Paravector b;
            a.x[static_cast<std::size_t>(mu)] = 1.0;
            b.x[static_cast<std::size_t>(nu)] = 1.0;
            const double eta = (mu != nu) ? 0.0 : (mu == 0 ? 1.0 : -1.0);
            metric.feed(minkowski(a, b) - eta);
        }

    return {make_check("basis product rule", products.value, 1e-14),
            make_check("minkowski metric table", metric.value, 1e-14)};
}

std::vector<CheckResult> suite_involutions(std::uint64_t seed, std::uint64_t trials) {
    Rng rng(seed);
    Worst rev_anti, conj_anti, rev_invol, conj_invol, commute;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const AlgebraElement a = rng.algebra_element();
        const AlgebraElement b = rng.algebra_element();
        const double s = a.norm() * b.norm();
        rev_anti.feed(rel((reversion(gp(a, b)) - gp(reversion(b), reversion(a))).norm(), s));
        conj_anti.feed(rel((conjugation(gp(a, b)) - gp(conjugation(b), conjugation(a))).norm(), s));
        rev_invol.feed((reversion(reversion(a)) - a).norm());
        conj_invol.feed((conjugation(conjugation(a)) - a).norm());
        commute.feed((reversion(conjugation(a)) - conjugation(reversion(a))).norm());
        commute.feed((reversion(conjugation(a)) - grade_involution(a)).norm());
    }

    Worst basis_fixed, basis_sign;
    for (int k = 1; k <= 3; ++k) {
        const AlgebraElement ek = AlgebraElement::e(k);
        basis_fixed.feed((reversion(ek) - ek).norm());
        basis_sign.feed((conjugation(ek) + ek).norm());
    }

    return {make_check("reversion anti-homomorphism", rev_anti.value, 1e-12),
            make_check("conjugation anti-homomorphism", conj_anti.value, 1e-12),
            make_check("reversion involution", rev_invol.value, 0.0),
            make_check("conjugation involution", conj_invol.value, 0.0),
            make_check("involution commutation", commute.value, 0.0),
            make_check("basis reversion fixed points", basis_fixed.value, 0.0),
            make_check("basis conjugation sign flip", basis_sign.value, 0.0)};
}

std::vector<CheckResult> suite_matrix_oracle(std::uint64_t seed, std::uint64_t trials) {
    Rng rng(seed);
    Worst hom, roundtrip, rev_corr, conj_corr, trace_corr, quad_form;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const AlgebraElement a = rng.algebra_element();
        const AlgebraElement b = rng.algebra_element();
        const double s = a.norm() * b.norm();
        hom.feed(rel(frobenius_norm(matrix_rep(gp(a, b)) - matrix_rep(a) * matrix_rep(b)), s));
        roundtrip.feed(rel((from_matrix(matrix_rep(a)) - a).norm(), a.norm()));
        rev_corr.feed(
            frobenius_norm(matrix_rep(reversion(a)) - dagger_transpose(matrix_rep(a))));
        conj_corr.feed(frobenius_norm(matrix_rep(conjugation(a)) - bar_transpose(matrix_rep(a))));
        const HMatrix m = matrix_rep(a);
        trace_corr.feed(rel((trace(a) - (m(0, 0) + m(1, 1))).norm(), a.norm()));

        const Paravector x = rng.paravector();
        const AlgebraElement xx = gp(embed(x), conjugation(embed(x)));
        double res = (xx.c[1].norm_sq() + xx.c[2].norm_sq() + xx.c[3].norm_sq());
        res = std::sqrt(res);
        res = std::max(res, std::abs(xx.c[0].x - minkowski(x, x)));
        res = std::max(res, std::abs(xx.c[0].y) + std::abs(xx.c[0].v) + std::abs(xx.c[0].w));
        quad_form.feed(rel(res, x.norm() * x.norm()));
    }
    return {make_check("matrix representation homomorphism", hom.value, 1e-13),
            make_check("matrix representation roundtrip", roundtrip.value, 1e-14),
            make_check("reversion matrix correspondence", rev_corr.value, 0.0),
            make_check("conjugation matrix correspondence", conj_corr.value, 0.0),
            make_check("trace matrix correspondence", trace_corr.value, 1e-14),
            make_check("paravector quadratic form", quad_form.value, 1e-12)};
}

std::vector<CheckResult> suite_spin_group(std::uint64_t seed, std::uint64_t trials) {
    Rng rng(seed);
    Worst unitarity, companion, closure, norm_drift, additivity, velocity, projector, spinor_inv;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const SpinTransform g = random_transform(rng);
        unitarity.feed(unitarity_residual(g));
        const AlgebraElement gd = reversion(g.g);
        companion.feed((gp(gd, conjugation(gd)) - AlgebraElement::one()).norm());

        const Paravector x = rng.paravector();
        const AlgebraElement moved = gp(gp(g.g, embed(x)), reversion(g.g));
        closure.feed(rel(paravector_residue(moved), moved.norm()));
        const Paravector xp = extract_paravector(moved, 1e-9);
        norm_drift.feed(std::abs(minkowski(xp, xp) - minkowski(x, x)) /
                        (1.0 + x.norm() * x.norm()));

        const auto axis = rng.unit3();
        const double xi1 = rng.uniform(-1.5, 1.5);
        const double xi2 = rng.uniform(-1.5, 1.5);
        const SpinTransform two = compose(boost(axis, xi1), boost(axis, xi2));
        additivity.feed((two.g - boost(axis, xi1 + xi2).g).norm());
        const Paravector moved0 = apply(two, Paravector(1.0, 0.0, 0.0, 0.0));
        const double beta = (moved0.x[1] * axis[0] + moved0.x[2] * axis[1] +
                             moved0.x[3] * axis[2]) /
                            moved0.x[0];
        velocity.feed(beta - std::tanh(xi1 + xi2));

        const AlgebraElement proj_p(HNumber::projector_plus());
        const AlgebraElement proj_m(HNumber::projector_minus());
        projector.feed((gp(proj_p, g.g) - gp(g.g, proj_p)).norm());
        projector.feed((gp(proj_m, g.g) - gp(g.g, proj_m)).norm());

        const HSpinor phi(rng.hnumber(), rng.hnumber());
        const HSpinor psi(rng.hnumber(), rng.hnumber());
        const HNumber before = spinor_product(phi, psi);
        const HNumber after = spinor_product(apply_spinor(g, phi), apply_spinor(g, psi));
        spinor_inv.feed(rel((after - before).norm(), phi.norm() * psi.norm()));
    }

    Worst double_cover;
    for (int t = 0; t < 8; ++t) {
        const auto axis = rng.unit3();
        double_cover.feed((rotor(axis, 2.0 * kPi).g + AlgebraElement::one()).norm());
        double_cover.feed((rotor(axis, 4.0 * kPi).g - AlgebraElement::one()).norm());
    }

    return {make_check("spin unitarity", unitarity.value, 1e-11),
            make_check("dagger companion identity", companion.value, 1e-11),
            make_check("paravector closure", closure.value, 1e-11),
            make_check("minkowski norm preservation", norm_drift.value, 1e-10),
            make_check("boost rapidity additivity", additivity.value, 1e-10),
            make_check("velocity composition", velocity.value, 1e-10),
            make_check("rotor double cover", double_cover.value, 1e-12),
            make_check("chirality projector commutation", projector.value, 1e-15),
            make_check("spinor product invariance", spinor_inv.value, 1e-11)};
}

std::vector<CheckResult> suite_complex_pair(std::uint64_t seed, std::uint64_t trials) {
    Rng rng(seed);
    Worst hom, dets;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const SpinTransform g = random_transform(rng);
        const SpinTransform h = random_transform(rng);
        const auto [gp_plus, gp_minus] = to_complex_pair(g);
        const auto [hp_plus, hp_minus] = to_complex_pair(h);
        const auto [prod_plus, prod_minus] = to_complex_pair(compose(g, h));
        const double s = frobenius_norm(gp_plus) * frobenius_norm(hp_plus) +
                         frobenius_norm(gp_minus) * frobenius_norm(hp_minus);
        hom.feed(rel(frobenius_norm(prod_plus - gp_plus * hp_plus), s));
        hom.feed(rel(frobenius_norm(prod_minus - gp_minus * hp_minus), s));
        dets.feed(std::abs(det_c(gp_plus) - std::complex<double>(1.0, 0.0)));
        dets.feed(std::abs(det_c(gp_minus) - std::complex<double>(1.0, 0.0)));
    }
    return {make_check("complex pair homomorphism", hom.value, 1e-12),
            make_check("complex pair determinants", dets.value, 1e-11)};
}

std::vector<CheckResult> suite_unitary_groups(std::uint64_t seed, std::uint64_t trials) {
    Worst anti_hom, closure, det_mult, special_det, split_factors, split_hom, cross_module;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = trial_rng(seed, t);

        const HMatrix A = random_hmatrix(rng, 3);
        const HMatrix B = random_hmatrix(rng, 3);
        const double s = frobenius_norm(A) * frobenius_norm(B);
        anti_hom.feed(
            rel(frobenius_norm(bar_transpose(A * B) - bar_transpose(B) * bar_transpose(A)), s));
        det_mult.feed(rel((det_H(A * B) - det_H(A) * det_H(B)).norm(), s * s));

        const std::size_t n = 2 + static_cast<std::size_t>(rng.next_u64() % 3);  // 2..4
        const auto taus = hermitian_basis(n, true);
        std::vector<double> phi(taus.size());
        std::vector<double> xi(taus.size());
        for (std::size_t a = 0; a < taus.size(); ++a) {
            phi[a] = rng.uniform(-1.0, 1.0);
            xi[a] = rng.uniform(-1.0, 1.0);
        }
        const HMatrix g = generate(taus, phi, xi);
        for (std::size_t a = 0; a < taus.size(); ++a) {
            phi[a] = rng.uniform(-1.0, 1.0);
            xi[a] = rng.uniform(-1.0, 1.0);
        }
        const HMatrix h = generate(taus, phi, xi);
        closure.feed(unitarity_residual_H(g * h));
        special_det.feed((det_H(g) - HNumber(1.0)).norm());

        const auto [g_plus, g_minus] = split(g);
        split_factors.feed(std::abs(det_c(g_plus) - std::complex<double>(1.0, 0.0)));
        split_factors.feed(std::abs(det_c(g_minus) - std::complex<double>(1.0, 0.0)));
        const auto [h_plus, h_minus] = split(h);
        const auto [prod_plus, prod_minus] = split(g * h);
        split_hom.feed(rel(frobenius_norm(prod_plus - g_plus * h_plus), 1.0));
        split_hom.feed(rel(frobenius_norm(prod_minus - g_minus * h_minus), 1.0));
        split_hom.feed(frobenius_norm(join(g_plus, g_minus) - g));

        const double xi_b = rng.uniform(-2.0, 2.0);
        CMatrix tau3(2, 2);
        tau3(0, 0) = std::complex<double>(0.5, 0.0);
        tau3(1, 1) = std::complex<double>(-0.5, 0.0);
        const HMatrix gen_boost = generate({tau3}, {0.0}, {xi_b});
        const HMatrix alg_boost = matrix_rep(boost({0.0, 0.0, 1.0}, xi_b).g);
        cross_module.feed(frobenius_norm(gen_boost - alg_boost));
    }

    // membership examples with an exact zero-divisor diagonal
    double membership = 0.0;
    {
        Rng rng(seed);
        HMatrix d(2, 2);
        const double alpha = rng.uniform(-2.0, 2.0);
        const double beta = rng.uniform(-2.0, 2.0);
        d(0, 0) = exp(HNumber(0.0, -alpha, beta, 0.0));
        d(1, 1) = HNumber(1.0);
        if (!is_unitary_H(d)) membership = 1.0;
        d(0, 0) = HNumber(1.0, 0.0, 1.0, 0.0);  // 1 + j
        if (is_unitary_H(d)) membership = 1.0;
        if ((det_H(HMatrix::identity(3, HNumber(1.0))) - HNumber(1.0)).norm() > 0.0)
            membership = 1.0;
        HMatrix jj(2, 2);
        jj(0, 0) = HNumber::unit_j();
        jj(1, 1) = HNumber::unit_j();
        if ((det_H(jj) - HNumber(1.0)).norm() > 0.0) membership = 1.0;
        HMatrix zd(2, 2);
        zd(0, 0) = HNumber(1.0, 0.0, 1.0, 0.0);
        zd(1, 1) = HNumber(1.0, 0.0, -1.0, 0.0);
        if (det_H(zd).norm() > 0.0) membership = 1.0;
    }

    // generator counting and numerical tangent rank, n = 1..4
    double audit = 0.0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const DimensionAudit su = lie_dimension_audit(n, true);
        if (su.generator_count != n * n - 1 || su.real_tangent_dim != 2 * (n * n - 1)) audit = 1.0;
        const DimensionAudit u = lie_dimension_audit(n, false);
        if (u.generator_count != n * n || u.real_tangent_dim != 2 * n * n) audit = 1.0;
    }

    return {make_check("hyperbolic transpose anti-homomorphism", anti_hom.value, 1e-13),
            make_check("group closure", closure.value, 1e-11),
            make_check("determinant multiplicativity", det_mult.value, 1e-11),
            make_check("special determinant", special_det.value, 1e-11),
            make_check("split determinant factors", split_factors.value, 1e-11),
            make_check("split group homomorphism", split_hom.value, 1e-12),
            make_check("cross-module boost equality", cross_module.value, 1e-13),
            make_check("unitary membership examples", membership, 0.0),
            make_check("dimension audit", audit, 0.0)};
}

std::vector<CheckResult> suite_rep_eigenvalues() {
    Worst j3, k3;
    const auto check_rep = [&](int ts, int tr) {
        const RepOperators ops = rep_J3_K3(ts, tr);
        for (std::size_t i = 0; i < ops.states.size(); ++i) {
            const RepState& st = ops.states[i];
            j3.feed((ops.J3(i, i) - HNumber(st.rho() + st.sigma())).norm());
            k3.feed((ops.K3(i, i) - HNumber(0.0, 0.0, 0.0, st.rho() - st.sigma())).norm());
        }
    };
    check_rep(1, 0);
    check_rep(0, 1);
    check_rep(1, 1);

    // frozen spot values: (1/2,0) sigma=+1/2 -> K3 = -ij/2; (0,1/2) rho=+1/2 -> +ij/2
    const RepOperators half_zero = rep_J3_K3(1, 0);
    k3.feed((half_zero.K3(0, 0) - HNumber(0.0, 0.0, 0.0, -0.5)).norm());
    j3.feed((half_zero.J3(0, 0) - HNumber(0.5)).norm());
    const RepOperators zero_half = rep_J3_K3(0, 1);
    k3.feed((zero_half.K3(0, 0) - HNumber(0.0, 0.0, 0.0, 0.5)).norm());

    // (1/2,1/2): J3 spectrum {1, 0, 0, -1} in state order
    const RepOperators hh = rep_J3_K3(1, 1);
    const double expected[4] = {1.0, 0.0, 0.0, -1.0};
    for (std::size_t i = 0; i < 4; ++i)
        j3.feed((hh.J3(i, i) - HNumber(expected[i])).norm());

    const RepConsistencyReport rep = verify_rep_consistency();

    return {make_check("rep J3 eigenvalues", j3.value, 1e-14),
            make_check("rep K3 eigenvalues", k3.value, 1e-14),
            make_check("fundamental chirality pattern", rep.ok ? 0.0 : 1.0, 0.0)};
}

Report run_identity_suites(std::uint64_t seed, std::uint64_t trials, double tol_override) {
    Report report;
    report.suite = "check-identities";
    report.seed = seed;
    report.trials = trials;

    const auto append = [&](std::vector<CheckResult> results) {
        for (auto& c : results) report.checks.push_back(std::move(c));
    };
    append(suite_ring_axioms(seed, trials));
    append(suite_algebra_tables());
    append(suite_involutions(seed, trials));
    append(suite_matrix_oracle(seed, trials));
    append(suite_spin_group(seed, trials));
    append(suite_complex_pair(seed, trials));
    append(suite_unitary_groups(seed, std::max<std::uint64_t>(1, trials / 10)));
    append(suite_rep_eigenvalues());

    if (tol_override >= 0.0)
        for (auto& c : report.checks) {
            c.tolerance = tol_override;
            c.pass = c.residual <= c.tolerance;
        }
    return report;
}

} // namespace hyper
