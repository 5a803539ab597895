#include "rankin/bounds.hpp"

#include "rankin/errors.hpp"

namespace rankin {

BoundReport rankin_bound(const MeasureSpace& space) {
    if (space.size() < 2) {
        throw UndefinedError("the Rankin bound is undefined on a single atom: "
                             "the supremum ranges over an empty pair set");
    }
    // The ratio is computed on max-normalized weights, so equal-weight spaces
    // of any size yield exactly -1/(n-1) and rescaled weights reproduce the
    // same bound to the last few ulps.
    const double ratio = space.mass_ratio();
    BoundReport report;
    report.coherence_bound = -ratio;
    report.distance_bound = 2.0 * (1.0 - report.coherence_bound);
    report.diagonal_mass = space.diagonal_mass();
    report.offdiagonal_mass = space.offdiagonal_mass();
    return report;
}

ClassicalBound classical_rankin_bound(std::size_t n) {
    if (n < 2) {
        throw UndefinedError("the classical Rankin bound needs n >= 2");
    }
    ClassicalBound b;
    b.coherence_bound = -(1.0 / static_cast<double>(n - 1));
    b.distance_bound = 2.0 * (1.0 - b.coherence_bound);
    return b;
}

}  // namespace rankin
