#pragma once

#include <cstddef>
#include <vector>

#include "hyper/algebra.hpp"
#include "hyper/fields.hpp"
#include "hyper/spin.hpp"

namespace hyper {

/// Periodic rectangular grid of field values with uniform spacing h.
/// Axes are (t, z) for 2 dimensions and (t, x, y, z) for 4.
template <typename T>
class LatticeField {
public:
    LatticeField() = default;
    LatticeField(std::vector<std::size_t> dims, double h)
        : dims_(std::move(dims)), h_(h), values_(site_count_of(dims_)) {
        if (dims_.size() != 2 && dims_.size() != 4)
            throw GridMismatch("LatticeField: expected 2 or 4 axes");
        for (std::size_t n : dims_)
            if (n < 4) throw GridMismatch("LatticeField: every axis needs >= 4 sites");
        if (!(h > 0.0) || !std::isfinite(h)) throw GridMismatch("LatticeField: bad spacing");
    }

    const std::vector<std::size_t>& dims() const { return dims_; }
    double spacing() const { return h_; }
    std::size_t site_count() const { return values_.size(); }
    double volume() const {
        double v = 1.0;
        for (std::size_t n : dims_) v *= static_cast<double>(n) * h_;
        return v;
    }

    T& operator[](std::size_t site) { return values_[site]; }
    const T& operator[](std::size_t site) const { return values_[site]; }

    template <typename U>
    bool same_grid(const LatticeField<U>& o) const {
        return dims_ == o.dims() && h_ == o.spacing();
    }

private:
    static std::size_t site_count_of(const std::vector<std::size_t>& dims) {
        std::size_t n = 1;
        for (std::size_t d : dims) n *= d;
        return n;
    }

    std::vector<std::size_t> dims_;
    double h_{0.0};
    std::vector<T> values_;
};

/// Which momentum component drives each lattice axis: {0,3} in 2-d,
/// {0,1,2,3} in 4-d.
std::vector<int> axis_momentum_map(std::size_t ndims);

/// Integer wave numbers of p on the given box.  Throws IncommensurateWave
/// when p_a N_a h / (2 pi) is not an integer to 1e-8.
std::vector<long> wave_numbers(const Paravector& p, const std::vector<std::size_t>& dims,
                               double h);

/// Eigenvalue of the discrete mass operator on the sampled plane wave:
/// (4/h^2) [sin^2(p_t h/2) - sum_spatial sin^2(p_k h/2)].
double lattice_dispersion(const Paravector& p, const std::vector<std::size_t>& dims, double h);

LatticeField<HSpinor> sample_plane_wave_spinor(const std::vector<std::size_t>& dims, double h,
                                               const Paravector& p, const HSpinor& u);
LatticeField<AlgebraElement> sample_plane_wave_gauge(const std::vector<std::size_t>& dims,
                                                     double h, const Paravector& k,
                                                     const Paravector& eps);

/// out = (-box_h) f with central second differences and periodic wrap.
/// OpenMP-parallel over sites; bitwise identical to the serial reference
/// for every thread count.
void apply_mass_operator(const LatticeField<HSpinor>& f, LatticeField<HSpinor>& out);
void apply_mass_operator(const LatticeField<AlgebraElement>& f, LatticeField<AlgebraElement>& out);

/// Plain reference implementation kept for kernel testing.
void apply_mass_operator_serial(const LatticeField<HSpinor>& f, LatticeField<HSpinor>& out);
void apply_mass_operator_serial(const LatticeField<AlgebraElement>& f,
                                LatticeField<AlgebraElement>& out);

/// Fixed-shape pairwise reduction; the summation tree does not depend on
/// the thread count, so sums are bit-stable.
double tree_reduce(std::vector<double> buf);
HNumber tree_reduce(std::vector<HNumber> buf);

/// |(M^2_h - m^2) psi| / |psi|.
double kg_residual_lattice(const LatticeField<HSpinor>& psi, double m);

/// J = -M^2_h A per site.
LatticeField<AlgebraElement> current_from_lattice(const LatticeField<AlgebraElement>& A);

/// S = sum_sites h^D [ (1/2) tr(bar(A) M^2 A) + psi-bar (M^2 - m^2) psi ],
/// reported with the gauge and spinor parts separate.
struct ActionValue {
    HNumber gauge;
    HNumber spinor;
    HNumber total() const { return gauge + spinor; }
};

ActionValue action(const LatticeField<AlgebraElement>& A, const LatticeField<HSpinor>& psi,
                   double m);

/// Convergence study row.
struct ConvergenceRow {
    double h;
    double residual;
    double order;  // log2(prev/this); NaN on the first row
};

/// Runs kg_residual_lattice on `refinements` grids, halving h each time.
std::vector<ConvergenceRow> kg_convergence(const std::vector<std::size_t>& dims0, double h0,
                                           const Paravector& p, double m, int refinements);

} // namespace hyper
