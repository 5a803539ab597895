#include "rankin/banach.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "rankin/bounds.hpp"
#include "rankin/errors.hpp"
#include "rankin/summation.hpp"

namespace rankin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sign_of(double x) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return -1.0;
    return 0.0;
}

}  // namespace

double conjugate_exponent(double p) {
    if (std::isnan(p) || p < 1.0) {
        throw InvalidArgument("p must lie in [1, inf]");
    }
    if (p == 1.0) return kInf;
    if (p == kInf) return 1.0;
    return p / (p - 1.0);
}

double lp_norm(std::span<const double> v, double p) {
    if (std::isnan(p) || p < 1.0) {
        throw InvalidArgument("p must lie in [1, inf]");
    }
    if (p == kInf) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }
    if (p == 1.0) {
        double s = 0.0;
        for (double x : v) s += std::abs(x);
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    }
    double s = 0.0;
    for (double x : v) s += std::pow(std::abs(x), p);
    return std::pow(s, 1.0 / p);
}

std::vector<double> duality_functional(std::span<const double> v, double p) {
    const double nv = lp_norm(v, p);
    if (std::abs(nv - 1.0) > kNormTolerance) {
        throw PreconditionError("duality_functional needs a unit lp vector",
                                {{"unit-norm", std::abs(nv - 1.0),
                                  "|| v ||_p = " + std::to_string(nv)}});
    }
    std::vector<double> f(v.size(), 0.0);
    if (p == 2.0) {
        // self-dual; copying keeps the Hilbert reduction exact
        f.assign(v.begin(), v.end());
    } else if (p == 1.0) {
        for (std::size_t k = 0; k < v.size(); ++k) f[k] = sign_of(v[k]);
    } else if (p == kInf) {
        std::size_t m = 0;
        for (std::size_t k = 1; k < v.size(); ++k) {
            if (std::abs(v[k]) > std::abs(v[m])) m = k;
        }
        f[m] = sign_of(v[m]);
    } else {
        for (std::size_t k = 0; k < v.size(); ++k) {
            f[k] = sign_of(v[k]) * std::pow(std::abs(v[k]), p - 1.0);
        }
    }
    return f;
}

FunctionalFamily::FunctionalFamily(MeasureSpace space, std::size_t dim, double p,
                                   std::vector<double> vectors_row_major,
                                   std::vector<double> functionals_row_major)
    : space_(std::move(space)), dim_(dim), p_(p), q_(conjugate_exponent(p)),
      vectors_(std::move(vectors_row_major)),
      functionals_(std::move(functionals_row_major)) {
    if (dim_ == 0) {
        throw InvalidArgument("functional family dimension must be positive");
    }
    if (vectors_.size() != space_.size() * dim_ ||
        functionals_.size() != space_.size() * dim_) {
        throw InvalidArgument("vector/functional data size does not match atoms * dim");
    }
}

FunctionalFamily FunctionalFamily::from_vector_family(const VectorFamily& fam, double p) {
    std::vector<double> funcs;
    funcs.reserve(fam.size() * fam.dim());
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto f = duality_functional(fam.vector(i), p);
        funcs.insert(funcs.end(), f.begin(), f.end());
    }
    return FunctionalFamily(fam.space(), fam.dim(), p, fam.data(), std::move(funcs));
}

double FunctionalFamily::pair_value(std::size_t j, std::size_t k) const {
    double s = 0.0;
    const double* f = functionals_.data() + j * dim_;
    const double* t = vectors_.data() + k * dim_;
    for (std::size_t m = 0; m < dim_; ++m) s += f[m] * t[m];
    return s;
}

namespace {

// The lp family reduces to a pairing table plus its claimed norms; the
// extension-point path supplies the same data directly.
PairingData build_pairing(const FunctionalFamily& fam) {
    const std::size_t n = fam.size();
    PairingData data;
    data.pairing = Matrix(n, n);
    data.functional_norms.reserve(n);
    data.vector_norms.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            data.pairing(j, k) = fam.pair_value(j, k);
        }
        data.functional_norms.push_back(lp_norm(fam.functional(j), fam.q()));
        data.vector_norms.push_back(lp_norm(fam.vector(j), fam.p()));
    }
    return data;
}

void require_pairing_shape(const MeasureSpace& space, const PairingData& data) {
    const std::size_t n = space.size();
    if (data.pairing.rows() != n || data.pairing.cols() != n ||
        data.functional_norms.size() != n || data.vector_norms.size() != n) {
        throw InvalidArgument("pairing data does not match the atom count");
    }
}

}  // namespace

ConditionReport validate_conditions(const MeasureSpace& space, const PairingData& data,
                                    double tolerance) {
    require_pairing_shape(space, data);
    ConditionReport rep;
    const std::size_t n = space.size();

    for (std::size_t j = 0; j < n; ++j) {
        rep.max_pairing_error =
            std::max(rep.max_pairing_error, std::abs(data.pairing(j, j) - 1.0));
        rep.max_functional_norm_excess =
            std::max(rep.max_functional_norm_excess, data.functional_norms[j] - 1.0);
        rep.max_vector_norm_excess =
            std::max(rep.max_vector_norm_excess, data.vector_norms[j] - 1.0);
    }

    // (theta_f theta_tau chi)(j) = sum_k w_k f_j(tau_k); the integral weighs
    // the rows once more
    rep.min_pointwise_value = kInf;
    KahanSum integral;
    for (std::size_t j = 0; j < n; ++j) {
        KahanSum row;
        for (std::size_t k = 0; k < n; ++k) {
            row.add(space.weight(k) * data.pairing(j, k));
            integral.add(space.weight(j) * space.weight(k) * data.pairing(j, k));
        }
        rep.min_pointwise_value = std::min(rep.min_pointwise_value, row.value());
    }
    rep.integral_condition = integral.value();

    rep.pairing_ok = rep.max_pairing_error <= tolerance;
    rep.norms_ok = rep.max_functional_norm_excess <= tolerance &&
                   rep.max_vector_norm_excess <= tolerance;
    rep.integral_ok = rep.integral_condition >= -tolerance;
    rep.pointwise_ok = rep.min_pointwise_value >= -tolerance;
    return rep;
}

ConditionReport validate_conditions(const FunctionalFamily& fam, double tolerance) {
    return validate_conditions(fam.space(), build_pairing(fam), tolerance);
}

double gram_sum_condition(const FunctionalFamily& fam) {
    KahanSum acc;
    const std::size_t n = fam.size();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            acc.add(fam.space().weight(j) * fam.space().weight(k) * fam.pair_value(j, k));
        }
    }
    return acc.value();
}

PairValue functional_coherence(const FunctionalFamily& fam) {
    const std::size_t n = fam.size();
    if (n < 2) {
        throw UndefinedError("functional coherence needs at least 2 atoms");
    }
    PairValue best;
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            const double v = fam.pair_value(j, k);
            if (first || v > best.value) {
                best = {v, j, k};
                first = false;
            }
        }
    }
    return best;
}

FunctionalCoherenceReport check_functional_rankin(const MeasureSpace& space,
                                                  const PairingData& data,
                                                  double tolerance) {
    require_pairing_shape(space, data);
    const std::size_t n = space.size();
    if (n < 2) {
        throw UndefinedError("check_functional_rankin needs at least 2 atoms");
    }
    const auto cond = validate_conditions(space, data);
    if (!cond.valid()) {
        std::vector<PreconditionError::Item> items;
        if (!cond.pairing_ok) {
            items.push_back({"(i) pairing", cond.max_pairing_error,
                             "max_j |f_j(tau_j) - 1| exceeds tolerance"});
        }
        if (!cond.norms_ok) {
            items.push_back({"(ii) norms",
                             std::max(cond.max_functional_norm_excess,
                                      cond.max_vector_norm_excess),
                             "a functional or vector norm exceeds 1"});
        }
        if (!cond.integral_ok) {
            items.push_back({"(iii) integral", -cond.integral_condition,
                             "sum_{j,k} w_j w_k f_j(tau_k) is negative"});
        }
        throw PreconditionError("functional family violates the theorem hypotheses",
                                std::move(items));
    }

    PairValue m;
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            const double v = data.pairing(j, k);
            if (first || v > m.value) {
                m = {v, j, k};
                first = false;
            }
        }
    }

    const auto bound = rankin_bound(space);
    FunctionalCoherenceReport report;
    report.coherence = m.value;
    report.coherence_bound = bound.coherence_bound;
    report.slack = m.value - bound.coherence_bound;
    report.witness = {m.first, m.second};
    report.tolerance = tolerance;
    report.satisfied = report.slack >= -tolerance;
    report.integral_condition = cond.integral_condition;
    report.pointwise_condition_ok = cond.pointwise_ok;
    return report;
}

FunctionalCoherenceReport check_functional_rankin(const FunctionalFamily& fam,
                                                  double tolerance) {
    return check_functional_rankin(fam.space(), build_pairing(fam), tolerance);
}

}  // namespace rankin
