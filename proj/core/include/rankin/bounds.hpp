#pragma once

#include <cstddef>

#include "rankin/measure.hpp"

namespace rankin {

/// Right-hand sides of the continuous Rankin inequalities, reported with the
/// masses they were computed from so reports are auditable without
/// recomputation.
struct BoundReport {
    double coherence_bound = 0.0;   // -diag/offdiag, the (CD0) right side
    double distance_bound = 0.0;    // 2*(1 - coherence_bound), the (CD) right side
    double diagonal_mass = 0.0;
    double offdiagonal_mass = 0.0;
};

/// Continuous Rankin bound of a weighted atomic space. Throws UndefinedError
/// on a single atom (the supremum ranges over an empty pair set).
BoundReport rankin_bound(const MeasureSpace& space);

struct ClassicalBound {
    double coherence_bound = 0.0;  // -1/(n-1)
    double distance_bound = 0.0;   // 2n/(n-1)
};

/// Counting-measure special case; bit-identical to
/// rankin_bound(counting_space(n)). Throws UndefinedError for n < 2.
ClassicalBound classical_rankin_bound(std::size_t n);

}  // namespace rankin
