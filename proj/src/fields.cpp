#include "hyper/fields.hpp"

#include <cmath>

#include "hyper/unitary.hpp"

namespace hyper {

AlgebraElement mass_operator_on_planewave(const Paravector& p,
                                          const std::optional<AlgebraElement>& A) {
    AlgebraElement total = embed(p);
    if (A) total += *A;
    return gp(total, conjugation(total));
}

HSpinor kg_residual_planewave(const PlaneWaveSpinor& psi, double m) {
    const double off_shell = minkowski_dot(psi.p, psi.p) - m * m;
    return scale(off_shell, psi.u);
}

double maxwell_residual(const PlaneWaveGauge& A) {
    return std::abs(minkowski_dot(A.k, A.k)) * A.eps.norm();
}

Paravector current_from_planewave(const PlaneWaveGauge& A) {
    const double kk = minkowski_dot(A.k, A.k);
    return Paravector(-kk * A.eps.x[0], -kk * A.eps.x[1], -kk * A.eps.x[2], -kk * A.eps.x[3]);
}

HSpinor minimal_substitution_residual(const PlaneWaveSpinor& psi, const AlgebraElement& A,
                                      double m) {
    AlgebraElement op = mass_operator_on_planewave(psi.p, A);
    op -= scale(m * m, AlgebraElement::one());
    return apply_matrix(matrix_rep(op), psi.u);
}

AMatrix assemble_ym(const YangMillsField& field) {
    if (field.taus.empty()) throw SizeMismatch("assemble_ym: empty generator basis");
    if (field.G.size() != field.taus.size() || field.H.size() != field.taus.size())
        throw SizeMismatch("assemble_ym: component count does not match basis");
    const std::size_t n = field.taus.front().rows();
    AMatrix A(n, n);
    for (std::size_t a = 0; a < field.taus.size(); ++a) {
        // G^a tau_a + H^a (ij tau_a), every component a paravector
        const AlgebraElement ga = embed(field.G[a]);
        const AlgebraElement ha = embed(field.H[a]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::complex<double> t = field.taus[a](i, j);
                const HNumber tg(t.real(), t.imag(), 0.0, 0.0);
                const HNumber th(0.0, 0.0, -t.imag(), t.real());  // ij * t
                A(i, j) += scale(tg, ga) + scale(th, ha);
            }
    }
    return A;
}

AMatrix ym_bar_transpose(const AMatrix& A) {
    return A.transposed().map([](const AlgebraElement& e) { return conjugation(e); });
}

AMatrix ym_mass_operator(const Paravector& p, const AMatrix& A) {
    if (A.rows() != A.cols()) throw SizeMismatch("ym_mass_operator: internal matrix not square");
    AMatrix total = A;
    const AlgebraElement pv = embed(p);
    for (std::size_t i = 0; i < A.rows(); ++i) total(i, i) += pv;
    return total * ym_bar_transpose(total);
}

HNumber ym_bilinear(const SpinorMultiplet& psi, const AMatrix& op, double m) {
    if (psi.size() != op.rows()) throw SizeMismatch("ym_bilinear: multiplet size mismatch");
    HNumber result;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j)
            result += spinor_product(psi[i], apply_matrix(matrix_rep(op(i, j)), psi[j]));
        result += (-m * m) * spinor_product(psi[i], psi[i]);
    }
    return result;
}

SpinorMultiplet gauge_transform(const HMatrix& g, const SpinorMultiplet& psi) {
    if (g.rows() != psi.size() || g.cols() != psi.size())
        throw SizeMismatch("gauge_transform: multiplet size mismatch");
    const HMatrix action = bar_transpose(g);
    SpinorMultiplet out(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
        for (std::size_t j = 0; j < psi.size(); ++j)
            out[i] += scale(action(i, j), psi[j]);
    return out;
}

AMatrix gauge_transform(const HMatrix& g, const AMatrix& A) {
    if (g.rows() != A.rows() || g.cols() != A.cols())
        throw SizeMismatch("gauge_transform: field size mismatch");
    const HMatrix action = bar_transpose(g);
    const std::size_t n = A.rows();
    // A -> bar_transpose(g) A g; the H-valued matrix entries are central in
    // the algebra, so plain triple products suffice.
    AMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            AlgebraElement acc;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    acc += scale(action(i, k) * g(l, j), A(k, l));
            out(i, j) = acc;
        }
    return out;
}

} // namespace hyper
