#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hyper/lattice.hpp"
#include "hyper/rng.hpp"

using namespace hyper;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool bitwise_equal(const HSpinor& a, const HSpinor& b) {
    for (int c = 0; c < 2; ++c) {
        if (std::memcmp(&a.comp[c].x, &b.comp[c].x, sizeof(double)) != 0) return false;
        if (std::memcmp(&a.comp[c].y, &b.comp[c].y, sizeof(double)) != 0) return false;
        if (std::memcmp(&a.comp[c].v, &b.comp[c].v, sizeof(double)) != 0) return false;
        if (std::memcmp(&a.comp[c].w, &b.comp[c].w, sizeof(double)) != 0) return false;
    }
    return true;
}

LatticeField<HSpinor> random_field(Rng& rng, std::vector<std::size_t> dims, double h) {
    LatticeField<HSpinor> f(std::move(dims), h);
    for (std::size_t s = 0; s < f.site_count(); ++s)
        f[s] = HSpinor(rng.hnumber(), rng.hnumber());
    return f;
}

/// Box with wave numbers (a, b): p = 2 pi (a, b) / (N h).
Paravector commensurate_p(std::size_t n, double h, long a, long b) {
    const double L = static_cast<double>(n) * h;
    return Paravector(kTwoPi * static_cast<double>(a) / L, 0.0, 0.0,
                      kTwoPi * static_cast<double>(b) / L);
}

} // namespace

TEST_CASE("wave number bookkeeping") {
    const std::vector<std::size_t> dims{32, 32};
    const double h = 10.0 * 3.14159265358979323846 / 32.0;  // box 10 pi
    // p = (1, 0, 0, 0.6) has wave numbers (5, 3) on this box
    const auto k = wave_numbers(Paravector(1.0, 0.0, 0.0, 0.6), dims, h);
    CHECK(k[0] == 5);
    CHECK(k[1] == 3);

    // the same momentum on an arbitrary box is rejected
    CHECK_THROWS_AS(wave_numbers(Paravector(1.0, 0.0, 0.0, 0.6), {64, 64}, 0.1),
                    IncommensurateWave);
    CHECK_THROWS_AS(sample_plane_wave_spinor({64, 64}, 0.1, Paravector(1.0, 0.0, 0.0, 0.6),
                                             HSpinor(HNumber(1.0), HNumber(0.0))),
                    IncommensurateWave);
}

TEST_CASE("constant field has zero residual at zero mass") {
    LatticeField<HSpinor> f({8, 8}, 0.3);
    for (std::size_t s = 0; s < f.site_count(); ++s) f[s] = HSpinor(HNumber(1.5), HNumber(0.25));
    CHECK(kg_residual_lattice(f, 0.0) == 0.0);
}

TEST_CASE("stencil matches the lattice dispersion exactly") {
    const std::size_t n = 16;
    const double h = 0.4;
    const Paravector p = commensurate_p(n, h, 2, 1);
    const auto psi = sample_plane_wave_spinor({n, n}, h, p, HSpinor(HNumber(1.0), HNumber(0.3)));
    const double lam = lattice_dispersion(p, {n, n}, h);

    LatticeField<HSpinor> out(psi.dims(), psi.spacing());
    apply_mass_operator(psi, out);
    double worst = 0.0;
    for (std::size_t s = 0; s < psi.site_count(); ++s)
        worst = std::max(worst, (out[s] - scale(lam, psi[s])).norm());
    CHECK(worst <= 1e-12 * (1.0 + std::abs(lam)));

    // residual vanishes when the mass sits exactly on the lattice shell
    CHECK(kg_residual_lattice(psi, std::sqrt(lam)) <= 1e-12);
}

TEST_CASE("second-order convergence with the Taylor coefficient oracle") {
    // box 10 pi: p = (1, 0, 0, 0.6) commensurate, on shell with m = 0.8
    const Paravector p(1.0, 0.0, 0.0, 0.6);
    const double m = 0.8;
    const auto rows = kg_convergence({32, 32}, 10.0 * 3.14159265358979323846 / 32.0, p, m, 3);
    REQUIRE(rows.size() == 3);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const double ratio = rows[r - 1].residual / rows[r].residual;
        CHECK(ratio >= 3.4);
        CHECK(ratio <= 4.6);
        CHECK(rows[r].order >= 1.8);
        CHECK(rows[r].order <= 2.2);
    }
    // leading term of |lambda_h - m^2| is h^2 (p0^4 - p3^4) / 12
    const double coef = (1.0 - std::pow(0.6, 4.0)) / 12.0;
    const double measured = rows[2].residual / (rows[2].h * rows[2].h);
    CHECK(measured == doctest::Approx(coef).epsilon(0.05));
}

TEST_CASE("off-shell residual approaches the continuum gap") {
    const Paravector p(1.0, 0.0, 0.0, 0.6);
    const double m = 1.1;  // off shell: p.p = 0.64, m^2 = 1.21
    const double gap = std::abs(0.64 - m * m);
    const auto rows = kg_convergence({32, 32}, 10.0 * 3.14159265358979323846 / 32.0, p, m, 3);
    CHECK(rows[2].residual == doctest::Approx(gap).epsilon(0.02));
}

TEST_CASE("parallel kernel is bitwise identical to the serial reference") {
    Rng rng(151);
    const auto f = random_field(rng, {24, 20}, 0.25);
    LatticeField<HSpinor> serial(f.dims(), f.spacing());
    LatticeField<HSpinor> parallel(f.dims(), f.spacing());
    apply_mass_operator_serial(f, serial);
    apply_mass_operator(f, parallel);
    for (std::size_t s = 0; s < f.site_count(); ++s) CHECK(bitwise_equal(serial[s], parallel[s]));

#ifdef _OPENMP
    // thread count must not change a single bit
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    LatticeField<HSpinor> one(f.dims(), f.spacing());
    apply_mass_operator(f, one);
    omp_set_num_threads(saved);
    LatticeField<HSpinor> many(f.dims(), f.spacing());
    apply_mass_operator(f, many);
    for (std::size_t s = 0; s < f.site_count(); ++s) CHECK(bitwise_equal(one[s], many[s]));
#endif
}

TEST_CASE("tree reduction is deterministic and order-fixed") {
    Rng rng(157);
    std::vector<double> buf(1023);
    for (auto& v : buf) v = rng.uniform(-1.0, 1.0);

    const double first = tree_reduce(buf);
#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double serial = tree_reduce(buf);
    omp_set_num_threads(saved);
    CHECK(std::memcmp(&first, &serial, sizeof(double)) == 0);
#endif

    double plain = 0.0;
    for (double v : buf) plain += v;
    CHECK(first == doctest::Approx(plain).epsilon(1e-12));
}

TEST_CASE("4d lattice") {
    const std::vector<std::size_t> dims{6, 4, 4, 6};
    const double h = 0.5;
    const double L = 6.0 * h;
    const Paravector p(kTwoPi / L, 0.0, 0.0, kTwoPi / L);  // null wave numbers (1, 0, 0, 1)
    const auto psi = sample_plane_wave_spinor(dims, h, p, HSpinor(HNumber(1.0), HNumber(0.0)));
    const double lam = lattice_dispersion(p, dims, h);
    CHECK(lam == doctest::Approx(0.0).epsilon(1e-14));  // lattice shell is exact for null p
    CHECK(kg_residual_lattice(psi, 0.0) <= 1e-12);
}

TEST_CASE("action") {
    const std::size_t n = 16;
    const double h = 0.4;
    const std::vector<std::size_t> dims{n, n};

    // lattice on-shell spinor: m^2 = lattice dispersion
    const Paravector p = commensurate_p(n, h, 2, 1);
    const double m = std::sqrt(lattice_dispersion(p, dims, h));
    const auto psi = sample_plane_wave_spinor(dims, h, p, HSpinor(HNumber(0.8), HNumber(0.1)));

    // null gauge wave: equal wave numbers give an exactly null lattice mode
    const Paravector k = commensurate_p(n, h, 3, 3);
    const auto A = sample_plane_wave_gauge(dims, h, k, Paravector(0.0, 1.0, 0.5, 0.0));

    const double volume = A.volume();
    const ActionValue s = action(A, psi, m);
    CHECK(s.gauge.norm() <= 1e-9 * volume);
    CHECK(s.spinor.norm() <= 1e-9 * volume);

    // bilinearity: doubling the spinor amplitude quadruples the spinor part
    const double m_off = 0.9 * m;  // move off shell so the parts are nonzero
    const ActionValue base = action(A, psi, m_off);
    auto doubled = psi;
    for (std::size_t site = 0; site < doubled.site_count(); ++site)
        doubled[site] = scale(2.0, doubled[site]);
    const ActionValue four = action(A, doubled, m_off);
    CHECK((four.spinor - 4.0 * base.spinor).norm() <= 1e-10 * (1.0 + base.spinor.norm()));
    CHECK((four.gauge - base.gauge).norm() == 0.0);

    // a global phase with unit g bar(g) leaves the spinor part unchanged
    const HNumber phase = exp(HNumber(0.0, -0.7, 0.4, 0.0));
    auto rotated = psi;
    for (std::size_t site = 0; site < rotated.site_count(); ++site)
        rotated[site] = scale(phase, rotated[site]);
    const ActionValue moved = action(A, rotated, m_off);
    CHECK((moved.spinor - base.spinor).norm() <= 1e-10 * (1.0 + base.spinor.norm()));

    // additivity: the action has no interaction term
    LatticeField<AlgebraElement> zeroA(dims, h);
    LatticeField<HSpinor> zeroPsi(dims, h);
    const ActionValue gauge_only = action(A, zeroPsi, m_off);
    const ActionValue spinor_only = action(zeroA, psi, m_off);
    CHECK((base.total() - (gauge_only.total() + spinor_only.total())).norm() <=
          1e-12 * (1.0 + base.total().norm()));

    LatticeField<HSpinor> wrong({n, 2 * n}, h);
    CHECK_THROWS_AS(action(A, wrong, m), GridMismatch);
}

TEST_CASE("lattice current matches the analytic source") {
    const std::size_t n = 24;
    const double h = 0.3;
    const std::vector<std::size_t> dims{n, n};
    const Paravector k = commensurate_p(n, h, 2, 0);  // timelike, sourced
    const Paravector eps(0.0, 1.0, 0.0, 0.0);
    const auto A = sample_plane_wave_gauge(dims, h, k, eps);
    const auto J = current_from_lattice(A);

    // J = -lambda_h A exactly on the lattice...
    const double lam = lattice_dispersion(k, dims, h);
    double worst = 0.0;
    for (std::size_t s = 0; s < A.site_count(); ++s)
        worst = std::max(worst, (J[s] + scale(lam, A[s])).norm());
    CHECK(worst <= 1e-12 * (1.0 + std::abs(lam)));

    // ...and lambda_h approaches k.k at second order
    const double gap_coarse = std::abs(lam - minkowski_dot(k, k));
    const auto A2 = sample_plane_wave_gauge({2 * n, 2 * n}, 0.5 * h, k, eps);
    const double lam2 = lattice_dispersion(k, {2 * n, 2 * n}, 0.5 * h);
    const double gap_fine = std::abs(lam2 - minkowski_dot(k, k));
    CHECK(gap_coarse / gap_fine == doctest::Approx(4.0).epsilon(0.15));
    CHECK(A2.site_count() == 4 * A.site_count());
}
