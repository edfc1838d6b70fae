#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "hyper/fields.hpp"
#include "hyper/json_io.hpp"
#include "hyper/lattice.hpp"
#include "hyper/rng.hpp"
#include "hyper/spin.hpp"
#include "hyper/suites.hpp"
#include "hyper/unitary.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_csv_doubles(const std::string& text, std::size_t expected,
                                      const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "not a number: '" + item + "'");
        }
    }
    if (out.size() != expected)
        throw CLI::ValidationError(what, "expected " + std::to_string(expected) + " components");
    return out;
}

std::vector<std::size_t> parse_grid(const std::string& text) {
    std::vector<std::size_t> dims;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, 'x')) {
        try {
            const long v = std::stol(item);
            if (v < 4) throw std::invalid_argument(item);
            dims.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--grid", "expected NxN with N >= 4");
        }
    }
    if (dims.size() != 2 && dims.size() != 4)
        throw CLI::ValidationError("--grid", "expected 2 or 4 axes");
    return dims;
}

void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("HYPER_CLI_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) omp_set_num_threads(std::min(cap, omp_get_max_threads()));
    }
#endif
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_check_identities(std::uint64_t seed, std::uint64_t trials, double tol, bool as_json) {
    const auto t0 = std::chrono::steady_clock::now();
    hyper::Report report = hyper::run_identity_suites(seed, trials, tol);
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (as_json)
        emit(report.to_json());
    else
        std::cout << report.human_table();
    return report.pass() ? kExitPass : kExitCheckFailure;
}

int cmd_transform(const std::string& kind, const std::vector<double>& axis, double param,
                  const std::vector<double>& xin, bool as_json) {
    const std::array<double, 3> n{axis[0], axis[1], axis[2]};
    const hyper::SpinTransform g =
        (kind == "rotor") ? hyper::rotor(n, param) : hyper::boost(n, param);
    const hyper::Paravector x(xin[0], xin[1], xin[2], xin[3]);
    const hyper::Paravector moved = hyper::apply(g, x);
    const double norm_in = hyper::minkowski(x, x);
    const double norm_out = hyper::minkowski(moved, moved);
    const double drift = std::abs(norm_out - norm_in);
    const bool pass = drift <= 1e-10 * (1.0 + x.norm() * x.norm());
    if (as_json) {
        json doc;
        doc["suite"] = "transform";
        doc["transform"] = g;
        doc["x_in"] = x;
        doc["x_out"] = moved;
        doc["minkowski_in"] = norm_in;
        doc["minkowski_out"] = norm_out;
        doc["norm_drift"] = drift;
        doc["pass"] = pass;
        emit(doc);
    } else {
        std::cout << kind << " param " << param << "\n";
        std::cout << "x  = (" << x.x[0] << ", " << x.x[1] << ", " << x.x[2] << ", " << x.x[3]
                  << ")\n";
        std::cout << "x' = (" << moved.x[0] << ", " << moved.x[1] << ", " << moved.x[2] << ", "
                  << moved.x[3] << ")\n";
        std::cout << "minkowski norm " << norm_in << " -> " << norm_out << " (drift " << drift
                  << ")\n";
    }
    return pass ? kExitPass : kExitCheckFailure;
}

int cmd_group_info(std::size_t n, bool special, std::uint64_t seed, std::uint64_t trials,
                   bool as_json) {
    const hyper::DimensionAudit audit = hyper::lie_dimension_audit(n, special);
    const auto taus = hyper::hermitian_basis(n, special);

    double closure_residual = 0.0;
    double det_residual = 0.0;
    hyper::Rng rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<double> phi(taus.size());
        std::vector<double> xi(taus.size());
        for (std::size_t a = 0; a < taus.size(); ++a) {
            phi[a] = rng.uniform(-1.0, 1.0);
            xi[a] = rng.uniform(-1.0, 1.0);
        }
        const hyper::HMatrix g = hyper::generate(taus, phi, xi);
        for (std::size_t a = 0; a < taus.size(); ++a) {
            phi[a] = rng.uniform(-1.0, 1.0);
            xi[a] = rng.uniform(-1.0, 1.0);
        }
        const hyper::HMatrix h = hyper::generate(taus, phi, xi);
        closure_residual = std::max(closure_residual, hyper::unitarity_residual_H(g * h));
        if (special) {
            det_residual =
                std::max(det_residual, (hyper::det_H(g) - hyper::HNumber(1.0)).norm());
        } else {
            const hyper::HNumber mult =
                hyper::det_H(g * h) - hyper::det_H(g) * hyper::det_H(h);
            det_residual = std::max(det_residual, mult.norm());
        }
    }

    const std::size_t expected = special ? n * n - 1 : n * n;
    const bool pass = audit.generator_count == expected &&
                      audit.real_tangent_dim == 2 * expected && closure_residual <= 1e-11 &&
                      det_residual <= 1e-11;
    json doc;
    doc["suite"] = "group-info";
    doc["n"] = n;
    doc["special"] = special;
    doc["generator_count"] = audit.generator_count;
    doc["real_dim"] = audit.real_tangent_dim;
    doc["closure_residual"] = closure_residual;
    doc["det_residual"] = det_residual;
    doc["pass"] = pass;
    if (as_json) {
        emit(doc);
    } else {
        std::cout << (special ? "SU(" : "U(") << n << ",H): " << audit.generator_count
                  << " generators, real tangent dimension " << audit.real_tangent_dim
                  << "\nclosure residual " << closure_residual << ", det residual "
                  << det_residual << (pass ? "  [PASS]" : "  [FAIL]") << "\n";
    }
    return pass ? kExitPass : kExitCheckFailure;
}

/// Smallest commensurate spacing for the requested grid: the reduced wave
/// number ratio fixes the box length L = 2 pi a / max|p|.
double auto_spacing(const std::vector<std::size_t>& dims, const hyper::Paravector& p) {
    const auto map = hyper::axis_momentum_map(dims.size());
    // box length must make every p component an integer multiple of 2 pi / L
    std::vector<double> comps;
    for (std::size_t a = 0; a < dims.size(); ++a)
        comps.push_back(std::abs(p.x[static_cast<std::size_t>(map[a])]));
    const double biggest = *std::max_element(comps.begin(), comps.end());
    if (biggest == 0.0) return 0.1;  // constant field: any spacing works
    // find smallest integer a such that a * (comp / biggest) is integral for
    // all components, scanning a reasonable range
    for (int a = 1; a <= 64; ++a) {
        bool ok = true;
        for (double c : comps) {
            const double ratio = a * c / biggest;
            if (std::abs(ratio - std::round(ratio)) > 1e-9) ok = false;
        }
        if (ok) {
            constexpr double two_pi = 6.283185307179586476925286766559;
            const double box = two_pi * a / biggest;
            return box / static_cast<double>(dims[0]);
        }
    }
    throw hyper::IncommensurateWave(
        "could not find a commensurate box for the requested momentum");
}

int cmd_kg_verify(const std::string& grid, const std::string& h_text,
                  const std::vector<double>& pvec, double m, int refinements, bool as_json) {
    const std::vector<std::size_t> dims = parse_grid(grid);
    const hyper::Paravector p(pvec[0], pvec[1], pvec[2], pvec[3]);
    double h = 0.0;
    if (h_text == "auto") {
        h = auto_spacing(dims, p);
    } else {
        try {
            h = std::stod(h_text);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--h", "expected a number or 'auto'");
        }
        if (!(h > 0.0)) throw CLI::ValidationError("--h", "spacing must be positive");
    }

    const auto rows = hyper::kg_convergence(dims, h, p, m, refinements);
    const double analytic = std::abs(hyper::minkowski_dot(p, p) - m * m);

    bool orders_ok = true;
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (!(rows[r].order >= 1.8 && rows[r].order <= 2.2)) orders_ok = false;

    json doc;
    doc["suite"] = "kg-verify";
    doc["grid"] = grid;
    doc["h"] = h;
    doc["p"] = p;
    doc["m"] = m;
    doc["refinements"] = refinements;
    doc["analytic_residual"] = analytic;
    json jrows = json::array();
    for (const auto& row : rows) {
        json jr;
        jr["h"] = row.h;
        jr["residual"] = row.residual;
        jr["order"] = row.order;  // NaN serializes as null on the first row
        jrows.push_back(jr);
    }
    doc["rows"] = jrows;
    doc["orders_in_range"] = orders_ok;
    doc["pass"] = orders_ok;

    if (as_json) {
        emit(doc);
    } else {
        std::cout << "h,residual,order\n";
        for (const auto& row : rows) {
            std::cout << row.h << "," << row.residual << ",";
            if (std::isfinite(row.order)) std::cout << row.order;
            std::cout << "\n";
        }
        json summary;
        summary["suite"] = "kg-verify";
        summary["analytic_residual"] = analytic;
        summary["orders_in_range"] = orders_ok;
        summary["pass"] = orders_ok;
        std::cout << summary.dump() << "\n";
    }
    return orders_ok ? kExitPass : kExitCheckFailure;
}

int cmd_maxwell(const std::vector<double>& kvec, const std::vector<double>& epsvec,
                bool as_json) {
    hyper::PlaneWaveGauge wave;
    wave.k = hyper::Paravector(kvec[0], kvec[1], kvec[2], kvec[3]);
    wave.eps = hyper::Paravector(epsvec[0], epsvec[1], epsvec[2], epsvec[3]);
    const double residual = hyper::maxwell_residual(wave);
    const double kk = hyper::minkowski_dot(wave.k, wave.k);
    const hyper::Paravector current = hyper::current_from_planewave(wave);
    const bool homogeneous = residual <= 1e-12 * (1.0 + wave.eps.norm());

    json doc;
    doc["suite"] = "maxwell";
    doc["k"] = wave.k;
    doc["eps"] = wave.eps;
    doc["k_dot_k"] = kk;
    doc["residual"] = residual;
    doc["homogeneous"] = homogeneous;
    doc["current_amplitude"] = current;
    if (as_json) {
        emit(doc);
    } else {
        std::cout << "k.k = " << kk << ", |M^2 A| = " << residual
                  << (homogeneous ? "  (homogeneous)" : "  (sourced)") << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    apply_thread_cap();

    CLI::App app{"hyperbolic complex algebra and wave-equation verification toolkit"};
    app.require_subcommand(1);
    // --h is a real option of kg-verify, so help is long-form only
    app.set_help_flag("--help", "print help");

    std::uint64_t seed = 42;
    std::uint64_t trials = 1000;
    double tol = -1.0;
    bool as_json = false;

    auto* check = app.add_subcommand("check-identities",
                                     "run the ring/involution/group/metric property suites");
    check->add_option("--seed", seed, "RNG seed")->capture_default_str();
    check->add_option("--trials", trials, "random trials per property")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    check->add_option("--tol", tol, "override every per-check tolerance");
    check->add_flag("--json", as_json, "machine-readable report");

    std::string kind = "boost";
    std::string axis_text = "0,0,1";
    double param = 0.0;
    std::string x_text = "1,0,0,0";
    auto* transform = app.add_subcommand("transform", "apply g x dagger(g) to a paravector");
    transform->add_option("--kind", kind, "rotor or boost")
        ->check(CLI::IsMember({"rotor", "boost"}))
        ->capture_default_str();
    transform->add_option("--axis", axis_text, "unit axis, comma separated")
        ->capture_default_str();
    transform->add_option("--param", param, "angle (radians) or rapidity")->required();
    transform->add_option("--x", x_text, "paravector x0,x1,x2,x3")->capture_default_str();
    transform->add_flag("--json", as_json, "machine-readable output");

    std::size_t group_n = 2;
    bool special = false;
    auto* group = app.add_subcommand("group-info", "hyperbolic unitary group audit");
    group->add_option("--n", group_n, "matrix dimension")
        ->check(CLI::Range(std::size_t{1}, std::size_t{5}))
        ->capture_default_str();
    group->add_flag("--special", special, "SU(n,H) instead of U(n,H)");
    group->add_option("--seed", seed, "RNG seed")->capture_default_str();
    group->add_option("--trials", trials, "random closure trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    group->add_flag("--json", as_json, "machine-readable report");

    std::string grid = "64x64";
    std::string h_text = "auto";
    std::string p_text = "1,0,0,0.6";
    double mass = 0.8;
    int refinements = 3;
    auto* kg = app.add_subcommand("kg-verify", "lattice Klein-Gordon convergence study");
    kg->set_help_flag("--help", "print help");
    kg->add_option("--grid", grid, "starting grid, e.g. 64x64")->capture_default_str();
    kg->add_option("--h", h_text, "lattice spacing, or 'auto' for a commensurate box")
        ->capture_default_str();
    kg->add_option("--p", p_text, "four-momentum p0,p1,p2,p3")->capture_default_str();
    kg->add_option("--m", mass, "mass")->capture_default_str();
    kg->add_option("--refinements", refinements, "number of grids")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    kg->add_flag("--json", as_json, "machine-readable output only");

    std::string k_text = "1,0,0,1";
    std::string eps_text = "0,1,0,0";
    auto* maxwell = app.add_subcommand("maxwell", "plane-wave gauge field residual");
    maxwell->add_option("--k", k_text, "wave four-vector k0,k1,k2,k3")->capture_default_str();
    maxwell->add_option("--eps", eps_text, "polarization paravector")->capture_default_str();
    maxwell->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);

        if (check->parsed()) return cmd_check_identities(seed, trials, tol, as_json);
        if (transform->parsed())
            return cmd_transform(kind, parse_csv_doubles(axis_text, 3, "--axis"), param,
                                 parse_csv_doubles(x_text, 4, "--x"), as_json);
        if (group->parsed()) return cmd_group_info(group_n, special, seed, trials, as_json);
        if (kg->parsed())
            return cmd_kg_verify(grid, h_text, parse_csv_doubles(p_text, 4, "--p"), mass,
                                 refinements, as_json);
        if (maxwell->parsed())
            return cmd_maxwell(parse_csv_doubles(k_text, 4, "--k"),
                               parse_csv_doubles(eps_text, 4, "--eps"), as_json);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const hyper::BadAxis& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hyper::IncommensurateWave& e) {
        std::cerr << "error: " << e.what()
                  << " (use --h auto to pick a commensurate spacing)\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
