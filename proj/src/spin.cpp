#include "hyper/spin.hpp"

#include <cmath>
#include <complex>

namespace hyper {

namespace {

using Cplx = std::complex<double>;

void check_unit(const std::array<double, 3>& n) {
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(len - 1.0) > 1e-12) throw BadAxis("axis must be a unit 3-vector");
}

/// sinh(r)/r, stable near r = 0.
Cplx sinhc(const Cplx& r) {
    if (std::abs(r) < 1e-6) {
        const Cplx r2 = r * r;
        return 1.0 + r2 / 6.0 + r2 * r2 / 120.0;
    }
    return std::sinh(r) / r;
}

/// exp of a complex quadruple a0 + a.sigma in coefficient form.
std::array<Cplx, 4> exp_complex_quad(const std::array<Cplx, 4>& a) {
    const Cplx r2 = a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
    const Cplx r = std::sqrt(r2);  // branch irrelevant: cosh and sinhc are even
    const Cplx ea = std::exp(a[0]);
    const Cplx ch = std::cosh(r);
    const Cplx sh = sinhc(r);
    return {ea * ch, ea * sh * a[1], ea * sh * a[2], ea * sh * a[3]};
}

} // namespace

HSpinor apply_matrix(const HMatrix& m, const HSpinor& psi) {
    if (m.rows() != 2 || m.cols() != 2) throw SizeMismatch("apply_matrix: expected 2x2");
    return {m(0, 0) * psi.comp[0] + m(0, 1) * psi.comp[1],
            m(1, 0) * psi.comp[0] + m(1, 1) * psi.comp[1]};
}

AlgebraElement exp_element(const AlgebraElement& x) {
    std::array<Cplx, 4> plus;
    std::array<Cplx, 4> minus;
    for (int k = 0; k < 4; ++k) {
        const SplitPair s = split(x.c[k]);
        plus[static_cast<std::size_t>(k)] = s.plus;
        minus[static_cast<std::size_t>(k)] = s.minus;
    }
    const auto ep = exp_complex_quad(plus);
    const auto em = exp_complex_quad(minus);
    AlgebraElement out;
    for (std::size_t k = 0; k < 4; ++k) out.c[k] = join(SplitPair{ep[k], em[k]});
    return out;
}

SpinTransform rotor(const std::array<double, 3>& axis, double theta) {
    check_unit(axis);
    AlgebraElement x;
    for (int k = 0; k < 3; ++k)
        x.c[static_cast<std::size_t>(k + 1)] =
            HNumber(0.0, -0.5 * theta * axis[static_cast<std::size_t>(k)], 0.0, 0.0);
    return {exp_element(x), TransformParams{"rotor", axis, theta}};
}

SpinTransform boost(const std::array<double, 3>& dir, double xi) {
    check_unit(dir);
    AlgebraElement x;
    for (int k = 0; k < 3; ++k)
        x.c[static_cast<std::size_t>(k + 1)] =
            HNumber(0.0, 0.0, 0.5 * xi * dir[static_cast<std::size_t>(k)], 0.0);
    return {exp_element(x), TransformParams{"boost", dir, xi}};
}

SpinTransform compose(const SpinTransform& a, const SpinTransform& b) {
    return {gp(a.g, b.g), std::nullopt};
}

double unitarity_residual(const SpinTransform& g) {
    return (gp(g.g, conjugation(g.g)) - AlgebraElement::one()).norm();
}

Paravector apply(const SpinTransform& g, const Paravector& x, double tol) {
    const AlgebraElement moved = gp(gp(g.g, embed(x)), reversion(g.g));
    return extract_paravector(moved, tol);
}

HSpinor apply_spinor(const SpinTransform& g, const HSpinor& psi) {
    return apply_matrix(matrix_rep(conjugation(g.g)), psi);
}

std::pair<CMatrix, CMatrix> to_complex_pair(const SpinTransform& g) {
    return split(matrix_rep(g.g));
}

} // namespace hyper
