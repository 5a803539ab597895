#include "rankin/verify.hpp"

#include <cmath>
#include <string>

#include "rankin/errors.hpp"
#include "rankin/summation.hpp"

namespace rankin {

namespace {

// Verification recomputes from raw vectors; it never trusts flags.
void require_normalized(const VectorFamily& fam) {
    const double dev = fam.max_norm_deviation();
    if (dev > kNormTolerance) {
        throw PreconditionError(
            "family is not normalized",
            {{"normalization", dev,
              "max | ||tau_i|| - 1 | = " + std::to_string(dev)}});
    }
}

}  // namespace

CoherenceReport check_rankin(const VectorFamily& fam, double tolerance) {
    if (fam.size() < 2) {
        throw UndefinedError("check_rankin needs at least 2 atoms");
    }
    require_normalized(fam);

    const auto bound = rankin_bound(fam.space());
    const auto m = fam.coherence();
    const auto dist = fam.min_pairwise_distance_sq();

    CoherenceReport report;
    report.coherence = m.value;
    report.min_distance_sq = dist.value;
    report.coherence_bound = bound.coherence_bound;
    report.distance_bound = bound.distance_bound;
    report.slack = m.value - bound.coherence_bound;
    report.witness = {m.first, m.second};
    report.tolerance = tolerance;
    report.satisfied = report.slack >= -tolerance;
    return report;
}

DecompositionReport proof_decomposition(const VectorFamily& fam) {
    require_normalized(fam);
    const auto g = fam.gram();
    const auto& space = fam.space();
    const std::size_t n = fam.size();

    // Three independently accumulated sums; the residual then measures real
    // rounding instead of being zero by construction.
    KahanSum total, diag, off;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double term = space.weight(i) * space.weight(j) * g(i, j);
            total.add(term);
            if (i == j) {
                diag.add(term);
            } else {
                off.add(term);
            }
        }
    }

    DecompositionReport report;
    report.total = total.value();
    report.diag_part = diag.value();
    report.offdiag_part = off.value();
    report.residual = report.total - report.diag_part - report.offdiag_part;
    return report;
}

double implied_coherence_floor(const VectorFamily& fam) {
    if (fam.size() < 2) {
        throw UndefinedError("implied_coherence_floor needs at least 2 atoms");
    }
    const auto dec = proof_decomposition(fam);
    return (dec.total - dec.diag_part) / fam.space().offdiagonal_mass();
}

double polarization_residual(const VectorFamily& fam) {
    const double m = fam.coherence().value;
    const double n = fam.min_pairwise_distance_sq().value;
    return std::abs(n - 2.0 * (1.0 - m));
}

}  // namespace rankin
