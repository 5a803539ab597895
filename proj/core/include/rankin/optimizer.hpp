#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rankin/family.hpp"
#include "rankin/matrix.hpp"
#include "rankin/measure.hpp"

namespace rankin {

/// Gap below which a result is certified as attaining the bound.
inline constexpr double kEqualityGap = 1e-6;

/// Annealed projected gradient descent on the product of unit spheres.
/// The objective is the temperature-smoothed soft maximum of off-diagonal
/// Gram entries; the temperature decays geometrically every decay_interval
/// iterations (or immediately once progress at the current temperature
/// stalls), and the final family is re-scored with the exact coherence.
struct OptimizerConfig {
    std::size_t restarts = 16;
    std::size_t max_iters = 5000;        // per restart
    double initial_temperature = 1.0;
    double temperature_decay = 0.85;     // factor in (0,1)
    std::size_t decay_interval = 200;    // iterations between decays
    double step_size = 0.05;             // halved on objective increase
    double tolerance = 1e-10;            // smoothed-objective change
    std::uint64_t seed = 0;
    unsigned threads = 1;                // 1 = sequential, bit-for-bit deterministic

    /// Throws InvalidArgument on any violated range constraint.
    void validate() const;
};

struct RestartTrace {
    std::size_t restart = 0;
    std::size_t iterations = 0;
    double final_smoothed = 0.0;
    double final_coherence = 0.0;  // exact re-scoring of the final iterate
};

enum class Certificate { equality_certified, gap_positive };

struct OptimizerResult {
    VectorFamily best_family;
    double achieved_coherence = 0.0;
    double bound = 0.0;
    double gap = 0.0;  // achieved - bound
    std::size_t best_restart = 0;
    Certificate certificate = Certificate::gap_positive;
    std::vector<RestartTrace> traces;
};

/// value = T log sum_{i<j} exp(<tau_i,tau_j>/T) over unordered distinct
/// pairs, computed with the usual max shift; the gradient is its exact
/// ambient derivative, before any tangent-space projection.
/// Throws InvalidArgument for temperature <= 0, UndefinedError for < 2 atoms.
std::pair<double, Matrix> smoothed_objective(const VectorFamily& fam, double temperature);

/// Runs cfg.restarts independent descents (restart r seeded with seed + r)
/// and returns the best final family, lowest coherence first, ties broken by
/// lowest restart index.
OptimizerResult minimize_coherence(const MeasureSpace& space, std::size_t dim,
                                   const OptimizerConfig& cfg = {});

/// n unit vectors with every pairwise inner product -1/(n-1): the regular
/// simplex, in Helmert coordinates padded with zeros to dimension d.
/// Throws UndefinedError when d < n-1 (equality forces affine independence).
VectorFamily simplex_family(std::size_t n, std::size_t d);

}  // namespace rankin
