#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "hyper/matrix.hpp"

namespace hyper {

/// Conjugation anti-involution on H-matrices: transpose plus entrywise
/// sign flip of i and j.  U(n,H) is the set with M bar_transpose(M) = 1.
HMatrix bar_transpose(const HMatrix& m);

/// Reversion on H-matrices: transpose plus entrywise i flip (the usual
/// Hermitian conjugation).
HMatrix dagger_transpose(const HMatrix& m);

/// Membership residual |M bar_transpose(M) - 1|.
double unitarity_residual_H(const HMatrix& m);

bool is_unitary_H(const HMatrix& m, double tol = 1e-11);

/// Determinant over H via the null-plane split: one complex determinant
/// per component, rejoined.  Multiplicative; M is invertible over H iff
/// the result is.
HNumber det_H(const HMatrix& m);

/// Complex determinant by LU with partial pivoting (small n).
std::complex<double> det_c(const CMatrix& m);

/// Complex matrix exponential by scaling-and-squaring on the Taylor
/// series; adequate for the small generator matrices used here.
CMatrix exp_c(const CMatrix& m);

/// Hermitian generator basis: generalized Gell-Mann matrices normalized to
/// tr(tau_a tau_b) = delta_ab / 2-convention (tau = lambda/2), preceded by
/// the identity when `special` is false.
std::vector<CMatrix> hermitian_basis(std::size_t n, bool special);

/// g = exp(-i sum phi^a tau_a + j sum xi^a tau_a), exponential via split.
/// Throws NotHermitian for a non-Hermitian basis matrix and SizeMismatch
/// when parameter counts disagree with the basis.
HMatrix generate(const std::vector<CMatrix>& taus, const std::vector<double>& phi,
                 const std::vector<double>& xi);

struct DimensionAudit {
    std::size_t generator_count;   // n^2 - 1 for SU(n,H), n^2 for U(n,H)
    std::size_t real_tangent_dim;  // numerical rank of span{-i tau_a, j tau_a}
};

/// Counts the Lie-algebra generators and verifies the real tangent
/// dimension as a numerical rank inside the bar-anti-Hermitian matrices.
DimensionAudit lie_dimension_audit(std::size_t n, bool special);

/// Weight (sigma, rho) of a state in an (s,0)(+)(0,r) representation,
/// stored as doubled integers so half-integer bookkeeping stays exact.
struct RepState {
    int twice_sigma;
    int twice_rho;
    double sigma() const { return 0.5 * twice_sigma; }
    double rho() const { return 0.5 * twice_rho; }
};

/// Diagonal third-component generators on the |sigma rho> basis:
/// J3 |sigma rho> = (rho + sigma) |sigma rho>,
/// K3 |sigma rho> = ij (rho - sigma) |sigma rho>.
struct RepOperators {
    std::vector<RepState> states;
    HMatrix J3;
    HMatrix K3;
};

/// twice_s, twice_r are the doubled half-integer labels (s = twice_s / 2).
RepOperators rep_J3_K3(int twice_s, int twice_r);

/// Measured generator structure of the fundamental spinor action,
/// projected onto the chirality sectors P+- = (1 +- j)/2.
struct RepConsistencyReport {
    bool ok;
    std::string detail;
    // complex J3/K3 eigenvalues (imag part of K listed) per sector, ordered
    // by descending J3 eigenvalue
    std::array<double, 2> j3_plus;
    std::array<double, 2> j3_minus;
    std::array<double, 2> k3_imag_plus;
    std::array<double, 2> k3_imag_minus;
    // which projector sector carries the (1/2,0) block (complex K = -iJ)
    char left_handed_sector;  // '+' or '-'
};

/// Differentiates the fundamental spinor action psi -> bar(g) psi at the
/// identity and checks the third-component eigenvalue pattern against the
/// (s,0)(+)(0,r) relations: rotation generator identical on both sectors
/// with eigenvalues +-1/2, boost generator of opposite sign on the two
/// sectors with eigenvalues +-ij/2 per sector.
RepConsistencyReport verify_rep_consistency();

} // namespace hyper
