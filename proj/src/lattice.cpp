#include "hyper/lattice.hpp"

#include <cmath>
#include <limits>

namespace hyper {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> st(dims.size());
    std::size_t acc = 1;
    for (std::size_t a = dims.size(); a-- > 0;) {
        st[a] = acc;
        acc *= dims[a];
    }
    return st;
}

/// One site of (-box_h) f, axes accumulated in fixed order so the serial
/// and parallel kernels agree bitwise.
template <typename T>
T stencil_site(const LatticeField<T>& f, const std::vector<std::size_t>& dims,
               const std::vector<std::size_t>& st, std::size_t s) {
    T acc{};
    for (std::size_t a = 0; a < dims.size(); ++a) {
        const std::size_t n = dims[a];
        const std::size_t coord = (s / st[a]) % n;
        const std::size_t plus = (coord + 1 == n) ? s - (n - 1) * st[a] : s + st[a];
        const std::size_t minus = (coord == 0) ? s + (n - 1) * st[a] : s - st[a];
        const T d2 = f[plus] + f[minus] - scale(2.0, f[s]);
        if (a == 0)
            acc -= d2;  // -d^2/dt^2
        else
            acc += d2;  // +laplacian
    }
    const double inv_h2 = 1.0 / (f.spacing() * f.spacing());
    return scale(inv_h2, acc);
}

template <typename T>
void apply_parallel(const LatticeField<T>& f, LatticeField<T>& out) {
    if (!f.same_grid(out)) throw GridMismatch("apply_mass_operator: grid mismatch");
    const auto& dims = f.dims();
    const auto st = strides_of(dims);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.site_count());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < n; ++s)
        out[static_cast<std::size_t>(s)] =
            stencil_site(f, dims, st, static_cast<std::size_t>(s));
}

template <typename T>
void apply_serial(const LatticeField<T>& f, LatticeField<T>& out) {
    if (!f.same_grid(out)) throw GridMismatch("apply_mass_operator: grid mismatch");
    const auto& dims = f.dims();
    const auto st = strides_of(dims);
    for (std::size_t s = 0; s < f.site_count(); ++s) out[s] = stencil_site(f, dims, st, s);
}

template <typename T>
T tree_reduce_impl(std::vector<T>& buf) {
    if (buf.empty()) return T{};
    std::size_t n = buf.size();
    while (n > 1) {
        const std::size_t half = n / 2;
        const std::ptrdiff_t ph = static_cast<std::ptrdiff_t>(half);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < ph; ++i)
            buf[static_cast<std::size_t>(i)] =
                buf[2 * static_cast<std::size_t>(i)] + buf[2 * static_cast<std::size_t>(i) + 1];
        if (n % 2 == 1) {
            buf[half] = buf[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return buf[0];
}

} // namespace

std::vector<int> axis_momentum_map(std::size_t ndims) {
    if (ndims == 2) return {0, 3};
    if (ndims == 4) return {0, 1, 2, 3};
    throw GridMismatch("axis_momentum_map: expected 2 or 4 axes");
}

std::vector<long> wave_numbers(const Paravector& p, const std::vector<std::size_t>& dims,
                               double h) {
    const auto map = axis_momentum_map(dims.size());
    std::vector<long> k(dims.size());
    for (std::size_t a = 0; a < dims.size(); ++a) {
        const double nu = p.x[static_cast<std::size_t>(map[a])] *
                          static_cast<double>(dims[a]) * h / kTwoPi;
        const double rounded = std::round(nu);
        if (std::abs(nu - rounded) > 1e-8 * std::max(1.0, std::abs(nu)))
            throw IncommensurateWave("plane wave does not fit the periodic box");
        k[a] = static_cast<long>(rounded);
    }
    return k;
}

double lattice_dispersion(const Paravector& p, const std::vector<std::size_t>& dims, double h) {
    const auto map = axis_momentum_map(dims.size());
    double lam = 0.0;
    for (std::size_t a = 0; a < dims.size(); ++a) {
        const double s = std::sin(0.5 * p.x[static_cast<std::size_t>(map[a])] * h);
        const double term = 4.0 * s * s / (h * h);
        lam += (a == 0) ? term : -term;
    }
    return lam;
}

namespace {

/// theta(site) = p.x with the metric signs, walked site by site.
template <typename T, typename Seed>
LatticeField<T> sample_wave(const std::vector<std::size_t>& dims, double h, const Paravector& p,
                            const Seed& amplitude) {
    (void)wave_numbers(p, dims, h);  // commensurability gate
    LatticeField<T> f(dims, h);
    const auto map = axis_momentum_map(dims.size());
    const auto st = strides_of(dims);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.site_count());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t sp = 0; sp < n; ++sp) {
        const std::size_t s = static_cast<std::size_t>(sp);
        double theta = 0.0;
        for (std::size_t a = 0; a < dims.size(); ++a) {
            const double coord = static_cast<double>((s / st[a]) % dims[a]) * h;
            const double pc = p.x[static_cast<std::size_t>(map[a])];
            theta += (a == 0) ? pc * coord : -pc * coord;
        }
        f[s] = scale(HNumber(std::cos(theta), -std::sin(theta)), amplitude);
    }
    return f;
}

} // namespace

LatticeField<HSpinor> sample_plane_wave_spinor(const std::vector<std::size_t>& dims, double h,
                                               const Paravector& p, const HSpinor& u) {
    return sample_wave<HSpinor>(dims, h, p, u);
}

LatticeField<AlgebraElement> sample_plane_wave_gauge(const std::vector<std::size_t>& dims,
                                                     double h, const Paravector& k,
                                                     const Paravector& eps) {
    return sample_wave<AlgebraElement>(dims, h, k, embed(eps));
}

void apply_mass_operator(const LatticeField<HSpinor>& f, LatticeField<HSpinor>& out) {
    apply_parallel(f, out);
}
void apply_mass_operator(const LatticeField<AlgebraElement>& f,
                         LatticeField<AlgebraElement>& out) {
    apply_parallel(f, out);
}
void apply_mass_operator_serial(const LatticeField<HSpinor>& f, LatticeField<HSpinor>& out) {
    apply_serial(f, out);
}
void apply_mass_operator_serial(const LatticeField<AlgebraElement>& f,
                                LatticeField<AlgebraElement>& out) {
    apply_serial(f, out);
}

double tree_reduce(std::vector<double> buf) { return tree_reduce_impl(buf); }
HNumber tree_reduce(std::vector<HNumber> buf) { return tree_reduce_impl(buf); }

double kg_residual_lattice(const LatticeField<HSpinor>& psi, double m) {
    LatticeField<HSpinor> op(psi.dims(), psi.spacing());
    apply_mass_operator(psi, op);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(psi.site_count());
    std::vector<double> res_sq(psi.site_count());
    std::vector<double> psi_sq(psi.site_count());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t sp = 0; sp < n; ++sp) {
        const std::size_t s = static_cast<std::size_t>(sp);
        res_sq[s] = (op[s] - scale(m * m, psi[s])).norm_sq();
        psi_sq[s] = psi[s].norm_sq();
    }
    const double den = tree_reduce(std::move(psi_sq));
    if (den == 0.0) return 0.0;
    return std::sqrt(tree_reduce(std::move(res_sq)) / den);
}

LatticeField<AlgebraElement> current_from_lattice(const LatticeField<AlgebraElement>& A) {
    LatticeField<AlgebraElement> out(A.dims(), A.spacing());
    apply_mass_operator(A, out);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(A.site_count());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < n; ++s)
        out[static_cast<std::size_t>(s)] = -out[static_cast<std::size_t>(s)];
    return out;
}

ActionValue action(const LatticeField<AlgebraElement>& A, const LatticeField<HSpinor>& psi,
                   double m) {
    if (!A.same_grid(psi)) throw GridMismatch("action: fields live on different grids");
    LatticeField<AlgebraElement> m2A(A.dims(), A.spacing());
    LatticeField<HSpinor> m2psi(psi.dims(), psi.spacing());
    apply_mass_operator(A, m2A);
    apply_mass_operator(psi, m2psi);

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(A.site_count());
    std::vector<HNumber> gauge_terms(A.site_count());
    std::vector<HNumber> spinor_terms(A.site_count());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t sp = 0; sp < n; ++sp) {
        const std::size_t s = static_cast<std::size_t>(sp);
        gauge_terms[s] = scalar_product_general(A[s], m2A[s]);
        spinor_terms[s] =
            spinor_product(psi[s], m2psi[s]) + (-m * m) * spinor_product(psi[s], psi[s]);
    }
    double cell = 1.0;
    for (std::size_t a = 0; a < A.dims().size(); ++a) cell *= A.spacing();
    ActionValue out;
    out.gauge = cell * tree_reduce(std::move(gauge_terms));
    out.spinor = cell * tree_reduce(std::move(spinor_terms));
    return out;
}

std::vector<ConvergenceRow> kg_convergence(const std::vector<std::size_t>& dims0, double h0,
                                           const Paravector& p, double m, int refinements) {
    if (refinements < 1) throw GridMismatch("kg_convergence: need at least one level");
    std::vector<ConvergenceRow> rows;
    std::vector<std::size_t> dims = dims0;
    double h = h0;
    const HSpinor u(HNumber(1.0), HNumber(0.0));
    for (int r = 0; r < refinements; ++r) {
        const auto psi = sample_plane_wave_spinor(dims, h, p, u);
        const double res = kg_residual_lattice(psi, m);
        ConvergenceRow row{h, res, std::numeric_limits<double>::quiet_NaN()};
        if (!rows.empty() && res > 0.0) row.order = std::log2(rows.back().residual / res);
        rows.push_back(row);
        for (auto& d : dims) d *= 2;
        h *= 0.5;
    }
    return rows;
}

} // namespace hyper
