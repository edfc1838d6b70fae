#pragma once

#include <cstdint>

#include "hyper/report.hpp"

namespace hyper {

/// Property suites behind `check-identities` and the acceptance tests.
/// Every check records its worst residual over the trials against the
/// tolerance the contract fixes.  Fixed seed implies identical residuals.

std::vector<CheckResult> suite_ring_axioms(std::uint64_t seed, std::uint64_t trials);
std::vector<CheckResult> suite_algebra_tables();
std::vector<CheckResult> suite_involutions(std::uint64_t seed, std::uint64_t trials);
std::vector<CheckResult> suite_matrix_oracle(std::uint64_t seed, std::uint64_t trials);
std::vector<CheckResult> suite_spin_group(std::uint64_t seed, std::uint64_t trials);
std::vector<CheckResult> suite_complex_pair(std::uint64_t seed, std::uint64_t trials);
std::vector<CheckResult> suite_unitary_groups(std::uint64_t seed, std::uint64_t trials);
std::vector<CheckResult> suite_rep_eigenvalues();

/// All of the above with the spec tolerances; `tol_override` < 0 keeps the
/// per-check defaults.
Report run_identity_suites(std::uint64_t seed, std::uint64_t trials, double tol_override = -1.0);

} // namespace hyper
