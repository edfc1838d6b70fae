#pragma once

#include <array>

#include "hyper/hnumber.hpp"
#include "hyper/matrix.hpp"

namespace hyper {

/// Element of the complexified Pauli algebra: four H-valued coefficients on
/// the basis {1, sigma_1, sigma_2, sigma_3}.  The sixteen real dimensions
/// contain the real subalgebra spanned by {1, j sigma_k, i sigma_k, ij}.
struct AlgebraElement {
    std::array<HNumber, 4> c{};

    AlgebraElement() = default;
    explicit AlgebraElement(const HNumber& scalar) { c[0] = scalar; }
    AlgebraElement(const HNumber& c0, const HNumber& c1, const HNumber& c2, const HNumber& c3)
        : c{c0, c1, c2, c3} {}

    static AlgebraElement one() { return AlgebraElement(HNumber(1.0)); }

    /// Pauli basis element sigma_k, k in {1,2,3}.
    static AlgebraElement sigma(int k) {
        AlgebraElement a;
        a.c[static_cast<std::size_t>(k)] = HNumber(1.0);
        return a;
    }

    /// Spacetime basis element e_mu = (1, j sigma_k), mu in {0,1,2,3}.
    static AlgebraElement e(int mu) {
        AlgebraElement a;
        if (mu == 0)
            a.c[0] = HNumber(1.0);
        else
            a.c[static_cast<std::size_t>(mu)] = HNumber::unit_j();
        return a;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (int k = 0; k < 4; ++k) c[k] += o.c[k];
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (int k = 0; k < 4; ++k) c[k] -= o.c[k];
        return *this;
    }
    AlgebraElement operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

    double norm() const { return std::sqrt(norm_sq()); }
    double norm_sq() const {
        return c[0].norm_sq() + c[1].norm_sq() + c[2].norm_sq() + c[3].norm_sq();
    }
};

inline AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
inline AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

/// Scale by a central H-valued factor.
inline AlgebraElement scale(const HNumber& s, const AlgebraElement& a) {
    return {s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]};
}
inline AlgebraElement scale(double s, const AlgebraElement& a) { return scale(HNumber(s), a); }

/// Geometric product; sigma_k sigma_l = delta_kl + i eps_klm sigma_m with
/// H-valued coefficients commuting past the sigmas.
AlgebraElement gp(const AlgebraElement& a, const AlgebraElement& b);

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return gp(a, b); }

/// Reversion (dagger): anti-involution fixing the basis vectors.  On
/// coefficients it flips the sign of i.
AlgebraElement reversion(const AlgebraElement& a);

/// Conjugation (bar): anti-involution negating the basis vectors.  On
/// coefficients it flips the sign of both i and j.
AlgebraElement conjugation(const AlgebraElement& a);

/// Grade involution = conjugation o reversion; flips only j on coefficients.
AlgebraElement grade_involution(const AlgebraElement& a);

/// Trace of the 2x2 matrix representation: 2 c0.
HNumber trace(const AlgebraElement& a);

/// (a, b) -> (1/2) tr(bar(a) b), kept H-valued for general arguments.
HNumber scalar_product_general(const AlgebraElement& a, const AlgebraElement& b);

/// Real spacetime point/momentum x = x^mu e_mu.
struct Paravector {
    std::array<double, 4> x{};

    Paravector() = default;
    Paravector(double x0, double x1, double x2, double x3) : x{x0, x1, x2, x3} {
        for (double xi : x)
            if (!std::isfinite(xi)) throw NonFiniteValue("Paravector: non-finite component");
    }

    double norm() const {
        return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    }
};

/// Embed x^mu as x^0 + j x^k sigma_k.
AlgebraElement embed(const Paravector& p);

/// Inverse of embed; throws NotParavector when residues outside the
/// paravector span exceed tol * (1 + |a|).
Paravector extract_paravector(const AlgebraElement& a, double tol = 1e-11);

/// Largest residue of `a` outside the paravector span {1, j sigma_k}.
double paravector_residue(const AlgebraElement& a);

/// Minkowski scalar product (1/2) tr(bar(x) y) with signature (+,-,-,-).
/// Throws NonRealResult if the i/j/ij parts of the trace fail to cancel.
double minkowski(const Paravector& a, const Paravector& b, double tol = 1e-10);

/// Decomposition into scalar / vector / bivector / pseudoscalar parts, the
/// complex spans of {1}, {j sigma_k}, {i sigma_k} and {ij}.  Parts sum to
/// the input.
struct GradeParts {
    AlgebraElement scalar;
    AlgebraElement vector;
    AlgebraElement bivector;
    AlgebraElement pseudoscalar;
};

GradeParts grade_decompose(const AlgebraElement& a);

/// True iff a lies in the real subalgebra span {1, j sigma_k, i sigma_k, ij}.
bool is_real_subalgebra(const AlgebraElement& a, double tol = 1e-12);

/// 2x2 matrix representation over H; the independent oracle for gp.
HMatrix matrix_rep(const AlgebraElement& a);
AlgebraElement from_matrix(const HMatrix& m);

} // namespace hyper
