#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hyper/algebra.hpp"
#include "hyper/matrix.hpp"
#include "hyper/spin.hpp"

namespace hyper {

/// psi(x) = u exp(-i p.x) with p.x = eta_{mu nu} p^mu x^nu.
struct PlaneWaveSpinor {
    HSpinor u;
    Paravector p;
};

/// A(x) = eps exp(-i k.x), plus the conjugate when real_part is set.
struct PlaneWaveGauge {
    Paravector eps;
    Paravector k;
    bool real_part{false};
};

/// eta_{mu nu} a^mu b^nu without going through the algebra.
inline double minkowski_dot(const Paravector& a, const Paravector& b) {
    return a.x[0] * b.x[0] - a.x[1] * b.x[1] - a.x[2] * b.x[2] - a.x[3] * b.x[3];
}

/// (p + A) bar(p + A): the mass operator evaluated on a plane wave with a
/// constant gauge potential.  For A = 0 the result is (p.p) times 1.
AlgebraElement mass_operator_on_planewave(const Paravector& p,
                                          const std::optional<AlgebraElement>& A = std::nullopt);

/// ((p.p) - m^2) u; zero iff on shell.
HSpinor kg_residual_planewave(const PlaneWaveSpinor& psi, double m);

/// |M^2 A| = |k.k| |eps|; zero iff k is null.
double maxwell_residual(const PlaneWaveGauge& A);

/// Amplitude of J = -M^2 A for a plane-wave gauge field.
Paravector current_from_planewave(const PlaneWaveGauge& A);

/// Residual spinor of ((p+A) bar(p+A) - m^2) acting on u, for constant A.
HSpinor minimal_substitution_residual(const PlaneWaveSpinor& psi, const AlgebraElement& A,
                                      double m);

/// Gauge field valued in the Lie algebra: A = sum_a (G^a + ij H^a) tau_a
/// with paravector-valued components.
struct YangMillsField {
    std::vector<Paravector> G;
    std::vector<Paravector> H;
    std::vector<CMatrix> taus;
};

using AMatrix = Mat<AlgebraElement>;

/// Assemble the internal-space matrix of algebra elements.
/// Throws SizeMismatch when component counts disagree with the basis.
AMatrix assemble_ym(const YangMillsField& field);

/// Matrix-valued mass operator (p + A)(bar(p + A)); bar acts entrywise and
/// transposes the internal index.
AMatrix ym_mass_operator(const Paravector& p, const AMatrix& A);

/// Internal transpose plus entrywise algebra conjugation.
AMatrix ym_bar_transpose(const AMatrix& A);

/// Internal-space spinor multiplet; one H-spinor amplitude per component.
using SpinorMultiplet = std::vector<HSpinor>;

/// psi-bar (O - m^2) psi summed over internal indices; H-valued.
HNumber ym_bilinear(const SpinorMultiplet& psi, const AMatrix& op, double m);

/// Global gauge transform: psi -> bar_transpose(g) psi, A -> bar_transpose(g) A g.
SpinorMultiplet gauge_transform(const HMatrix& g, const SpinorMultiplet& psi);
AMatrix gauge_transform(const HMatrix& g, const AMatrix& A);

} // namespace hyper
