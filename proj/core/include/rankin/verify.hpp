#pragma once

#include <cstddef>
#include <utility>

#include "rankin/bounds.hpp"
#include "rankin/family.hpp"

namespace rankin {

/// Pass/fail slack tolerance. Sums here involve at most ~1e4 terms of
/// magnitude <= max weight squared, so 1e-9 dominates the rounding budget.
inline constexpr double kSlackTolerance = 1e-9;

/// Decomposition residual tolerance, relative to max(1, |total|).
inline constexpr double kResidualTolerance = 1e-10;

/// A family checked against the coherence and distance inequalities.
/// Everything is recomputed from the raw vectors; incoming report fields are
/// never trusted.
struct CoherenceReport {
    double coherence = 0.0;         // M
    double min_distance_sq = 0.0;   // N
    double coherence_bound = 0.0;
    double distance_bound = 0.0;
    double slack = 0.0;             // coherence - coherence_bound
    std::pair<std::size_t, std::size_t> witness{0, 0};
    bool satisfied = false;         // slack >= -tolerance
    double tolerance = kSlackTolerance;
};

/// Numerical replay of the proof's Fubini split of ||synthesis(chi)||^2 into
/// diagonal and off-diagonal parts.
struct DecompositionReport {
    double total = 0.0;         // sum_{i,j} w_i w_j <tau_i,tau_j>
    double diag_part = 0.0;     // sum_i w_i^2 <tau_i,tau_i>
    double offdiag_part = 0.0;  // sum_{i!=j} w_i w_j <tau_i,tau_j>
    double residual = 0.0;      // total - diag_part - offdiag_part
};

/// Checks the continuous Rankin inequalities on a normalized family.
/// Throws UndefinedError on fewer than 2 atoms and PreconditionError when a
/// vector norm deviates from 1 beyond kNormTolerance.
CoherenceReport check_rankin(const VectorFamily& fam, double tolerance = kSlackTolerance);

/// Splits the weighted Gram total along the diagonal. Each of the three sums
/// is accumulated independently, so the residual measures real rounding.
DecompositionReport proof_decomposition(const VectorFamily& fam);

/// Instance-specific replay of the proof's final inequality:
/// (total - diag_part)/offdiagonal_mass. Sits between the closed-form bound
/// and the actual coherence.
double implied_coherence_floor(const VectorFamily& fam);

/// N - 2(1 - M); zero to ~1e-12 for normalized families.
double polarization_residual(const VectorFamily& fam);

}  // namespace rankin
