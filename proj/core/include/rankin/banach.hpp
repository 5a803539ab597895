#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rankin/family.hpp"
#include "rankin/measure.hpp"
#include "rankin/verify.hpp"

namespace rankin {

/// Tolerance for the pairing and norm conditions (i)-(iii).
inline constexpr double kConditionTolerance = 1e-9;

/// Conjugate exponent as a total function on [1, inf]; infinity is
/// represented by std::numeric_limits<double>::infinity().
double conjugate_exponent(double p);

/// lp norm of a vector, p in [1, inf].
double lp_norm(std::span<const double> v, double p);

/// Norming functional of a unit lp vector: f(v) = 1 and ||f||_q = 1.
/// For 1 < p < inf: f_k = sign(v_k) |v_k|^{p-1}. The p = 1 and p = inf maps
/// are multivalued; the canonical selections are the sign vector and the
/// first-max coordinate respectively.
/// Throws PreconditionError unless | ||v||_p - 1 | <= kNormTolerance.
std::vector<double> duality_functional(std::span<const double> v, double p);

/// Paired collections (f_j, tau_j) over lp/lq aligned with the atoms of a
/// weighted space. Construction checks shapes only; the theorem conditions
/// are validated by validate_conditions / check_functional_rankin.
class FunctionalFamily {
public:
    FunctionalFamily(MeasureSpace space, std::size_t dim, double p,
                     std::vector<double> vectors_row_major,
                     std::vector<double> functionals_row_major);

    /// Builds the functionals from the vectors with duality_functional.
    /// The family's lp norms must be 1 within kNormTolerance.
    static FunctionalFamily from_vector_family(const VectorFamily& fam, double p);

    const MeasureSpace& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return space_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

    std::span<const double> vector(std::size_t i) const {
        return {vectors_.data() + i * dim_, dim_};
    }
    std::span<const double> functional(std::size_t i) const {
        return {functionals_.data() + i * dim_, dim_};
    }
    const std::vector<double>& vectors_data() const noexcept { return vectors_; }
    const std::vector<double>& functionals_data() const noexcept { return functionals_; }

    /// f_j(tau_k) = sum_m f_j[m] tau_k[m].
    double pair_value(std::size_t j, std::size_t k) const;

private:
    MeasureSpace space_;
    std::size_t dim_;
    double p_;
    double q_;
    std::vector<double> vectors_;
    std::vector<double> functionals_;
};

/// Validity of the theorem hypotheses on a family.
/// The integral form of condition (iii) is what the proof uses; the
/// pointwise form is reported but never enforced.
struct ConditionReport {
    double max_pairing_error = 0.0;          // (i): max_j |f_j(tau_j) - 1|
    double max_functional_norm_excess = 0.0; // (ii): max_j (||f_j||_q - 1)
    double max_vector_norm_excess = 0.0;     // (ii): max_j (||tau_j||_p - 1)
    double integral_condition = 0.0;         // (iii): sum_{j,k} w_j w_k f_j(tau_k)
    double min_pointwise_value = 0.0;        // min_j sum_k w_k f_j(tau_k)
    bool pairing_ok = false;
    bool norms_ok = false;
    bool integral_ok = false;
    bool pointwise_ok = false;

    bool valid() const noexcept { return pairing_ok && norms_ok && integral_ok; }
};

ConditionReport validate_conditions(const FunctionalFamily& fam,
                                    double tolerance = kConditionTolerance);

/// sum_{j,k} w_j w_k f_j(tau_k): the integral of theta_f theta_tau chi_Omega
/// in atomic form. Condition (iii) asks this to be >= 0.
double gram_sum_condition(const FunctionalFamily& fam);

/// max over ordered distinct pairs (j,k) of f_j(tau_k). Ordered because
/// f_j(tau_k) != f_k(tau_j) in general; ties broken lexicographically.
PairValue functional_coherence(const FunctionalFamily& fam);

/// Mirror of CoherenceReport without the distance fields (no norm
/// polarization in Banach spaces).
struct FunctionalCoherenceReport {
    double coherence = 0.0;
    double coherence_bound = 0.0;
    double slack = 0.0;
    std::pair<std::size_t, std::size_t> witness{0, 0};
    bool satisfied = false;
    double tolerance = kSlackTolerance;
    double integral_condition = 0.0;
    bool pointwise_condition_ok = false;  // flagged only, never rejected
};

/// Verifies the functional continuous Rankin bound. Conditions (i)-(iii)
/// are preconditions: on violation a PreconditionError listing the failed
/// conditions is thrown, never a bound verdict.
FunctionalCoherenceReport check_functional_rankin(const FunctionalFamily& fam,
                                                  double tolerance = kSlackTolerance);

/// Extension point for ambient spaces other than lp: the caller supplies the
/// pairing table and the norms of its own Banach space. pairing(j,k) must be
/// f_j(tau_k); the norm claims are trusted within the tolerance checks.
struct PairingData {
    Matrix pairing;                        // n x n table of f_j(tau_k)
    std::vector<double> functional_norms;  // ||f_j|| in the caller's dual norm
    std::vector<double> vector_norms;      // ||tau_j|| in the caller's norm
};

ConditionReport validate_conditions(const MeasureSpace& space, const PairingData& data,
                                    double tolerance = kConditionTolerance);

FunctionalCoherenceReport check_functional_rankin(const MeasureSpace& space,
                                                  const PairingData& data,
                                                  double tolerance = kSlackTolerance);

}  // namespace rankin
