#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "hyper/algebra.hpp"
#include "hyper/matrix.hpp"

namespace hyper {

/// Two-component spinor over H.  The scalar product is H-valued and not
/// positive definite.
struct HSpinor {
    std::array<HNumber, 2> comp{};

    HSpinor() = default;
    HSpinor(const HNumber& a, const HNumber& b) : comp{a, b} {}

    HSpinor& operator+=(const HSpinor& o) {
        comp[0] += o.comp[0];
        comp[1] += o.comp[1];
        return *this;
    }
    HSpinor& operator-=(const HSpinor& o) {
        comp[0] -= o.comp[0];
        comp[1] -= o.comp[1];
        return *this;
    }
    double norm_sq() const { return comp[0].norm_sq() + comp[1].norm_sq(); }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline HSpinor operator+(HSpinor a, const HSpinor& b) { return a += b; }
inline HSpinor operator-(HSpinor a, const HSpinor& b) { return a -= b; }
inline HSpinor scale(const HNumber& s, const HSpinor& psi) {
    return {s * psi.comp[0], s * psi.comp[1]};
}
inline HSpinor scale(double s, const HSpinor& psi) { return scale(HNumber(s), psi); }

/// (phi, psi) = sum_i bar(phi_i) psi_i.
inline HNumber spinor_product(const HSpinor& phi, const HSpinor& psi) {
    return conj_full(phi.comp[0]) * psi.comp[0] + conj_full(phi.comp[1]) * psi.comp[1];
}

/// Apply the 2x2 H-matrix rep of an algebra element to a spinor.
HSpinor apply_matrix(const HMatrix& m, const HSpinor& psi);

/// exp of an algebra element, evaluated on each null-plane component with
/// the closed form exp(a + b.sigma) = e^a (cosh r + sinh(r)/r b.sigma),
/// r = sqrt(b.b); the r -> 0 limit is handled by series.
AlgebraElement exp_element(const AlgebraElement& x);

/// Optional record of how a transform was generated.
struct TransformParams {
    std::string kind;               // "rotor" or "boost"
    std::array<double, 3> axis{};   // unit 3-vector
    double param{0.0};              // angle (radians) or rapidity
};

/// Element g of the spin group with g bar(g) = 1, acting on paravectors as
/// x -> g x dagger(g) and on spinors as psi -> bar(g) psi.
struct SpinTransform {
    AlgebraElement g;
    std::optional<TransformParams> params;
};

/// g = exp(-i theta (n.sigma)/2); right-handed active rotation about n.
SpinTransform rotor(const std::array<double, 3>& axis, double theta);

/// g = exp(j xi (n.sigma)/2); boost with rapidity xi along n.
SpinTransform boost(const std::array<double, 3>& dir, double xi);

SpinTransform compose(const SpinTransform& a, const SpinTransform& b);

/// Largest residue of g bar(g) - 1; zero for spin-group members.
double unitarity_residual(const SpinTransform& g);

/// x' = g x dagger(g).  Throws NotParavector if residues outside the
/// paravector span exceed tol (an invalid g).
Paravector apply(const SpinTransform& g, const Paravector& x, double tol = 1e-11);

/// psi' = bar(g) psi.
HSpinor apply_spinor(const SpinTransform& g, const HSpinor& psi);

/// The two complex 2x2 images of g under the null-plane split;
/// componentwise group homomorphism, P+ mapped to the first factor.
std::pair<CMatrix, CMatrix> to_complex_pair(const SpinTransform& g);

} // namespace hyper
