#include "hyper/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyper {

namespace {

using Cplx = std::complex<double>;

CMatrix cidentity(std::size_t n) { return CMatrix::identity(n, Cplx(1.0, 0.0)); }

double hermiticity_residual(const CMatrix& t) {
    double r = 0.0;
    for (std::size_t k = 0; k < t.rows(); ++k)
        for (std::size_t l = 0; l < t.cols(); ++l)
            r = std::max(r, std::abs(t(k, l) - std::conj(t(l, k))));
    return r;
}

} // namespace

HMatrix bar_transpose(const HMatrix& m) {
    return m.transposed().map([](const HNumber& z) { return conj_full(z); });
}

HMatrix dagger_transpose(const HMatrix& m) {
    return m.transposed().map([](const HNumber& z) { return conj_i(z); });
}

double unitarity_residual_H(const HMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatch("unitarity_residual_H: matrix not square");
    return frobenius_norm(m * bar_transpose(m) - HMatrix::identity(m.rows(), HNumber(1.0)));
}

bool is_unitary_H(const HMatrix& m, double tol) { return unitarity_residual_H(m) <= tol; }

std::complex<double> det_c(const CMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatch("det_c: matrix not square");
    const std::size_t n = m.rows();
    CMatrix a = m;
    Cplx det(1.0, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) == 0.0) return Cplx(0.0, 0.0);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Cplx f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

HNumber det_H(const HMatrix& m) {
    const auto [plus, minus] = split(m);
    return join(SplitPair{det_c(plus), det_c(minus)});
}

CMatrix exp_c(const CMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatch("exp_c: matrix not square");
    const std::size_t n = m.rows();

    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(m(i, j));
        norm = std::max(norm, row);
    }
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }

    CMatrix a = m.map([scale](const Cplx& z) { return z * scale; });
    CMatrix sum = cidentity(n);
    CMatrix term = cidentity(n);
    for (int k = 1; k <= 40; ++k) {
        term = term * a;
        term = term.map([k](const Cplx& z) { return z / static_cast<double>(k); });
        sum += term;
        if (frobenius_norm(term) <= 1e-20 * (1.0 + frobenius_norm(sum))) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

std::vector<CMatrix> hermitian_basis(std::size_t n, bool special) {
    std::vector<CMatrix> taus;
    if (!special) taus.push_back(cidentity(n));
    // generalized Gell-Mann matrices, tau = lambda/2
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
            CMatrix sym(n, n);
            sym(k, l) = Cplx(0.5, 0.0);
            sym(l, k) = Cplx(0.5, 0.0);
            taus.push_back(sym);
            CMatrix asym(n, n);
            asym(k, l) = Cplx(0.0, -0.5);
            asym(l, k) = Cplx(0.0, 0.5);
            taus.push_back(asym);
        }
    for (std::size_t l = 1; l < n; ++l) {
        CMatrix diag(n, n);
        const double f = 0.5 * std::sqrt(2.0 / (static_cast<double>(l) * (l + 1.0)));
        for (std::size_t k = 0; k < l; ++k) diag(k, k) = Cplx(f, 0.0);
        diag(l, l) = Cplx(-f * static_cast<double>(l), 0.0);
        taus.push_back(diag);
    }
    return taus;
}

HMatrix generate(const std::vector<CMatrix>& taus, const std::vector<double>& phi,
                 const std::vector<double>& xi) {
    if (taus.empty()) throw SizeMismatch("generate: empty basis");
    if (phi.size() != taus.size() || xi.size() != taus.size())
        throw SizeMismatch("generate: parameter count does not match basis");
    const std::size_t n = taus.front().rows();
    for (const CMatrix& t : taus) {
        if (t.rows() != n || t.cols() != n) throw SizeMismatch("generate: ragged basis");
        if (hermiticity_residual(t) > 1e-12 * (1.0 + frobenius_norm(t)))
            throw NotHermitian("generate: basis matrix is not Hermitian");
    }
    // X = -i phi.tau + j xi.tau splits into X(+-) = sum (-i phi_a +- xi_a) tau_a
    CMatrix xp(n, n);
    CMatrix xm(n, n);
    for (std::size_t a = 0; a < taus.size(); ++a) {
        const Cplx cp(xi[a], -phi[a]);
        const Cplx cm(-xi[a], -phi[a]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                xp(i, j) += cp * taus[a](i, j);
                xm(i, j) += cm * taus[a](i, j);
            }
    }
    return join(exp_c(xp), exp_c(xm));
}

namespace {

/// Rank of a real matrix (rows = vectors) by Gaussian elimination with
/// partial pivoting; pivots below 1e-9 times the largest entry count as zero.
std::size_t real_rank(std::vector<std::vector<double>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    double biggest = 0.0;
    for (const auto& r : rows)
        for (double v : r) biggest = std::max(biggest, std::abs(v));
    if (biggest == 0.0) return 0;
    const double tol = 1e-9 * biggest;

    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        for (std::size_t r = rank + 1; r < rows.size(); ++r)
            if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
        if (std::abs(rows[pivot][col]) <= tol) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const double f = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<double> vectorize_tangent(const CMatrix& t, bool hyperbolic) {
    // -i tau occupies the (x, y) components, j tau the (v, w) components.
    std::vector<double> row;
    row.reserve(4 * t.rows() * t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            const Cplx z = t(i, j);
            if (hyperbolic) {
                row.push_back(0.0);
                row.push_back(0.0);
                row.push_back(z.real());
                row.push_back(z.imag());
            } else {
                row.push_back(z.imag());
                row.push_back(-z.real());
                row.push_back(0.0);
                row.push_back(0.0);
            }
        }
    return row;
}

} // namespace

DimensionAudit lie_dimension_audit(std::size_t n, bool special) {
    if (n < 1) throw SizeMismatch("lie_dimension_audit: n must be >= 1");
    const std::vector<CMatrix> taus = hermitian_basis(n, special);
    std::vector<std::vector<double>> rows;
    rows.reserve(2 * taus.size());
    for (const CMatrix& t : taus) {
        rows.push_back(vectorize_tangent(t, false));
        rows.push_back(vectorize_tangent(t, true));
    }
    return DimensionAudit{taus.size(), real_rank(std::move(rows))};
}

RepOperators rep_J3_K3(int twice_s, int twice_r) {
    if (twice_s < 0 || twice_r < 0) throw SizeMismatch("rep_J3_K3: negative spin label");
    RepOperators ops;
    for (int ts = twice_s; ts >= -twice_s; ts -= 2)
        for (int tr = twice_r; tr >= -twice_r; tr -= 2)
            ops.states.push_back(RepState{ts, tr});
    const std::size_t dim = ops.states.size();
    ops.J3 = HMatrix(dim, dim);
    ops.K3 = HMatrix(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const RepState& st = ops.states[i];
        ops.J3(i, i) = HNumber(st.rho() + st.sigma());
        ops.K3(i, i) = HNumber(0.0, 0.0, 0.0, st.rho() - st.sigma());
    }
    return ops;
}

RepConsistencyReport verify_rep_consistency() {
    RepConsistencyReport rep{};
    std::ostringstream detail;
    bool ok = true;

    // tau = sigma_3 / 2 in the fundamental
    CMatrix tau(2, 2);
    tau(0, 0) = Cplx(0.5, 0.0);
    tau(1, 1) = Cplx(-0.5, 0.0);
    const std::vector<CMatrix> basis{tau};

    const double eps = 1e-5;
    const auto spinor_action = [&](double phi, double xi) {
        return bar_transpose(generate(basis, {phi}, {xi}));
    };
    const auto derivative = [&](bool boost_dir) {
        const HMatrix fwd = boost_dir ? spinor_action(0.0, eps) : spinor_action(eps, 0.0);
        const HMatrix bwd = boost_dir ? spinor_action(0.0, -eps) : spinor_action(-eps, 0.0);
        return (fwd - bwd).map([&](const HNumber& z) { return (0.5 / eps) * z; });
    };

    const HMatrix d_rot = derivative(false);
    const HMatrix d_boost = derivative(true);
    const auto [rot_plus, rot_minus] = split(d_rot);
    const auto [boost_plus, boost_minus] = split(d_boost);

    const double tol = 1e-8;

    // rotation generator identical on both sectors
    if (frobenius_norm(rot_plus - rot_minus) > tol) {
        ok = false;
        detail << "rotation generators differ between sectors; ";
    }
    // boost generator flips sign between sectors
    if (frobenius_norm(boost_plus + boost_minus) > tol) {
        ok = false;
        detail << "boost generators are not opposite between sectors; ";
    }
    // off-diagonal leakage would mean the tau_3 eigenbasis was not preserved
    for (const CMatrix* m : {&rot_plus, &rot_minus, &boost_plus, &boost_minus})
        if (std::abs((*m)(0, 1)) > tol || std::abs((*m)(1, 0)) > tol) {
            ok = false;
            detail << "off-diagonal generator entries; ";
        }

    // J = i dS/dphi, K = i dS/dxi per sector; diagonal by construction
    const auto eigs = [](const CMatrix& m) {
        return std::array<Cplx, 2>{Cplx(0.0, 1.0) * m(0, 0), Cplx(0.0, 1.0) * m(1, 1)};
    };
    std::array<Cplx, 2> jp = eigs(rot_plus);
    std::array<Cplx, 2> jm = eigs(rot_minus);
    std::array<Cplx, 2> kp = eigs(boost_plus);
    std::array<Cplx, 2> km = eigs(boost_minus);
    // order states by descending J3 within each sector
    if (jp[0].real() < jp[1].real()) {
        std::swap(jp[0], jp[1]);
        std::swap(kp[0], kp[1]);
    }
    if (jm[0].real() < jm[1].real()) {
        std::swap(jm[0], jm[1]);
        std::swap(km[0], km[1]);
    }
    for (int s = 0; s < 2; ++s) {
        rep.j3_plus[s] = jp[s].real();
        rep.j3_minus[s] = jm[s].real();
        rep.k3_imag_plus[s] = kp[s].imag();
        rep.k3_imag_minus[s] = km[s].imag();
    }

    // eigenvalue patterns: J3 = {+1/2, -1/2} real, K3 = {+-ij/2} per sector
    const auto close = [tol](double a, double b) { return std::abs(a - b) <= tol; };
    if (!(close(rep.j3_plus[0], 0.5) && close(rep.j3_plus[1], -0.5) &&
          close(rep.j3_minus[0], 0.5) && close(rep.j3_minus[1], -0.5))) {
        ok = false;
        detail << "rotation eigenvalues are not +-1/2; ";
    }
    if (!(close(std::abs(rep.k3_imag_plus[0]), 0.5) && close(std::abs(rep.k3_imag_plus[1]), 0.5) &&
          close(jp[0].imag(), 0.0) && close(kp[0].real(), 0.0))) {
        ok = false;
        detail << "boost eigenvalues are not +-ij/2; ";
    }

    // chirality assignment: the sector with K = -i J carries the (s,0) block
    const double ratio_plus = rep.k3_imag_plus[0] / rep.j3_plus[0];
    const double ratio_minus = rep.k3_imag_minus[0] / rep.j3_minus[0];
    if (close(ratio_plus, -1.0) && close(ratio_minus, 1.0)) {
        rep.left_handed_sector = '+';
    } else if (close(ratio_plus, 1.0) && close(ratio_minus, -1.0)) {
        rep.left_handed_sector = '-';
    } else {
        rep.left_handed_sector = '?';
        ok = false;
        detail << "sectors do not split into K = -iJ / K = +iJ blocks; ";
    }

    rep.ok = ok;
    detail << "left-handed (K = -iJ) sector: P" << rep.left_handed_sector;
    rep.detail = detail.str();
    return rep;
}

} // namespace hyper
