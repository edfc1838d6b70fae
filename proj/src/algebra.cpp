#include "hyper/algebra.hpp"

#include <cmath>

namespace hyper {

AlgebraElement gp(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    // scalar: a0 b0 + sum_k ak bk
    out.c[0] = a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2] + a.c[3] * b.c[3];
    // sigma_k: a0 bk + b0 ak + i (a x b)_k
    out.c[1] = a.c[0] * b.c[1] + a.c[1] * b.c[0] + times_i(a.c[2] * b.c[3] - a.c[3] * b.c[2]);
    out.c[2] = a.c[0] * b.c[2] + a.c[2] * b.c[0] + times_i(a.c[3] * b.c[1] - a.c[1] * b.c[3]);
    out.c[3] = a.c[0] * b.c[3] + a.c[3] * b.c[0] + times_i(a.c[1] * b.c[2] - a.c[2] * b.c[1]);
    return out;
}

AlgebraElement reversion(const AlgebraElement& a) {
    return {conj_i(a.c[0]), conj_i(a.c[1]), conj_i(a.c[2]), conj_i(a.c[3])};
}

AlgebraElement conjugation(const AlgebraElement& a) {
    return {conj_full(a.c[0]), conj_full(a.c[1]), conj_full(a.c[2]), conj_full(a.c[3])};
}

AlgebraElement grade_involution(const AlgebraElement& a) {
    return {conj_j(a.c[0]), conj_j(a.c[1]), conj_j(a.c[2]), conj_j(a.c[3])};
}

HNumber trace(const AlgebraElement& a) { return 2.0 * a.c[0]; }

HNumber scalar_product_general(const AlgebraElement& a, const AlgebraElement& b) {
    return gp(conjugation(a), b).c[0];
}

AlgebraElement embed(const Paravector& p) {
    return {HNumber(p.x[0]),
            HNumber(0.0, 0.0, p.x[1], 0.0),
            HNumber(0.0, 0.0, p.x[2], 0.0),
            HNumber(0.0, 0.0, p.x[3], 0.0)};
}

double paravector_residue(const AlgebraElement& a) {
    double r = std::max({std::abs(a.c[0].y), std::abs(a.c[0].v), std::abs(a.c[0].w)});
    for (int k = 1; k < 4; ++k)
        r = std::max({r, std::abs(a.c[k].x), std::abs(a.c[k].y), std::abs(a.c[k].w)});
    return r;
}

Paravector extract_paravector(const AlgebraElement& a, double tol) {
    if (paravector_residue(a) > tol * (1.0 + a.norm()))
        throw NotParavector("extract_paravector: residues outside {1, j sigma_k}");
    return Paravector(a.c[0].x, a.c[1].v, a.c[2].v, a.c[3].v);
}

double minkowski(const Paravector& a, const Paravector& b, double tol) {
    const HNumber s = scalar_product_general(embed(a), embed(b));
    const double scale = 1.0 + a.norm() * b.norm();
    if (std::abs(s.y) > tol * scale || std::abs(s.v) > tol * scale || std::abs(s.w) > tol * scale)
        throw NonRealResult("minkowski: non-real trace residues");
    return s.x;
}

GradeParts grade_decompose(const AlgebraElement& a) {
    GradeParts g;
    g.scalar.c[0] = HNumber(a.c[0].x, a.c[0].y, 0.0, 0.0);
    g.pseudoscalar.c[0] = HNumber(0.0, 0.0, a.c[0].v, a.c[0].w);
    for (int k = 1; k < 4; ++k) {
        g.vector.c[k] = HNumber(0.0, 0.0, a.c[k].v, a.c[k].w);
        g.bivector.c[k] = HNumber(a.c[k].x, a.c[k].y, 0.0, 0.0);
    }
    return g;
}

bool is_real_subalgebra(const AlgebraElement& a, double tol) {
    const double bound = tol * (1.0 + a.norm());
    if (std::abs(a.c[0].y) > bound || std::abs(a.c[0].v) > bound) return false;
    for (int k = 1; k < 4; ++k)
        if (std::abs(a.c[k].x) > bound || std::abs(a.c[k].w) > bound) return false;
    return true;
}

HMatrix matrix_rep(const AlgebraElement& a) {
    HMatrix m(2, 2);
    m(0, 0) = a.c[0] + a.c[3];
    m(0, 1) = a.c[1] - times_i(a.c[2]);
    m(1, 0) = a.c[1] + times_i(a.c[2]);
    m(1, 1) = a.c[0] - a.c[3];
    return m;
}

AlgebraElement from_matrix(const HMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw SizeMismatch("from_matrix: expected 2x2");
    AlgebraElement a;
    a.c[0] = 0.5 * (m(0, 0) + m(1, 1));
    a.c[3] = 0.5 * (m(0, 0) - m(1, 1));
    a.c[1] = 0.5 * (m(0, 1) + m(1, 0));
    a.c[2] = 0.5 * times_i(m(0, 1) - m(1, 0));
    return a;
}

} // namespace hyper
