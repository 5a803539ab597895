#include "rankin/family.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "rankin/errors.hpp"
#include "rankin/summation.hpp"

namespace rankin {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double norm(std::span<const double> v) {
    return std::sqrt(dot(v, v));
}

}  // namespace

VectorFamily::VectorFamily(MeasureSpace space, std::size_t dim,
                           std::vector<double> row_major, Normalization mode)
    : space_(std::move(space)), dim_(dim), data_(std::move(row_major)),
      normalized_(mode != Normalization::none) {
    if (dim_ == 0) {
        throw InvalidArgument("family dimension must be positive");
    }
    if (data_.size() != space_.size() * dim_) {
        throw InvalidArgument("vector data size does not match atoms * dim");
    }
    if (mode == Normalization::strict) {
        for (std::size_t i = 0; i < space_.size(); ++i) {
            const double nv = norm(vector(i));
            if (std::abs(nv - 1.0) > kNormTolerance) {
                throw NormalizationError("vector " + std::to_string(i) +
                                         " has norm " + std::to_string(nv));
            }
        }
    } else if (mode == Normalization::renormalize) {
        for (std::size_t i = 0; i < space_.size(); ++i) {
            const double nv = norm(vector(i));
            if (nv == 0.0 || !std::isfinite(nv)) {
                throw InvalidArgument("vector " + std::to_string(i) +
                                      " cannot be renormalized");
            }
            for (std::size_t k = 0; k < dim_; ++k) data_[i * dim_ + k] /= nv;
        }
    }
}

VectorFamily VectorFamily::from_rows(MeasureSpace space,
                                     const std::vector<std::vector<double>>& rows,
                                     Normalization mode) {
    if (rows.empty()) {
        throw InvalidArgument("family needs at least one vector");
    }
    const std::size_t d = rows.front().size();
    std::vector<double> data;
    data.reserve(rows.size() * d);
    for (const auto& r : rows) {
        if (r.size() != d) {
            throw InvalidArgument("rows have inconsistent dimensions");
        }
        data.insert(data.end(), r.begin(), r.end());
    }
    return VectorFamily(std::move(space), d, std::move(data), mode);
}

double VectorFamily::max_norm_deviation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        worst = std::max(worst, std::abs(norm(vector(i)) - 1.0));
    }
    return worst;
}

PairValue VectorFamily::coherence() const {
    const std::size_t n = size();
    if (n < 2) {
        throw UndefinedError("coherence is a supremum over distinct pairs; "
                             "need at least 2 atoms");
    }
    PairValue best;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = dot(vector(i), vector(j));
            if (first || v > best.value) {
                best = {v, i, j};
                first = false;
            }
        }
    }
    return best;
}

PairValue VectorFamily::abs_coherence() const {
    const std::size_t n = size();
    if (n < 2) {
        throw UndefinedError("abs_coherence needs at least 2 atoms");
    }
    PairValue best;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = std::abs(dot(vector(i), vector(j)));
            if (first || v > best.value) {
                best = {v, i, j};
                first = false;
            }
        }
    }
    return best;
}

PairValue VectorFamily::min_pairwise_distance_sq() const {
    const std::size_t n = size();
    if (n < 2) {
        throw UndefinedError("pairwise distance needs at least 2 atoms");
    }
    PairValue best;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < dim_; ++k) {
                const double diff = data_[i * dim_ + k] - data_[j * dim_ + k];
                s += diff * diff;
            }
            if (first || s < best.value) {
                best = {s, i, j};
                first = false;
            }
        }
    }
    return best;
}

Matrix VectorFamily::gram() const {
    const std::size_t n = size();
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = dot(vector(i), vector(j));
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

CoefficientFunction VectorFamily::analysis(std::span<const double> h) const {
    if (h.size() != dim_) {
        throw InvalidArgument("analysis argument has wrong dimension");
    }
    CoefficientFunction f{std::vector<double>(size())};
    for (std::size_t i = 0; i < size(); ++i) {
        f.values[i] = dot(h, vector(i));
    }
    return f;
}

std::vector<double> VectorFamily::synthesis(const CoefficientFunction& f) const {
    if (f.values.size() != size()) {
        throw InvalidArgument("coefficient function length does not match atoms");
    }
    std::vector<double> out(dim_, 0.0);
    for (std::size_t i = 0; i < size(); ++i) {
        const double c = space_.weight(i) * f.values[i];
        for (std::size_t k = 0; k < dim_; ++k) {
            out[k] += c * data_[i * dim_ + k];
        }
    }
    return out;
}

std::vector<double> VectorFamily::frame_operator_apply(std::span<const double> h) const {
    if (h.size() != dim_) {
        throw InvalidArgument("frame operator argument has wrong dimension");
    }
    std::vector<double> out(dim_, 0.0);
    for (std::size_t i = 0; i < size(); ++i) {
        const double c = space_.weight(i) * dot(h, vector(i));
        for (std::size_t k = 0; k < dim_; ++k) {
            out[k] += c * data_[i * dim_ + k];
        }
    }
    return out;
}

double VectorFamily::weighted_gram_total() const {
    KahanSum acc;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        acc.add(space_.weight(i) * space_.weight(i) * dot(vector(i), vector(i)));
        for (std::size_t j = i + 1; j < n; ++j) {
            acc.add(2.0 * space_.weight(i) * space_.weight(j) * dot(vector(i), vector(j)));
        }
    }
    return acc.value();
}

VectorFamily discretize(Shape shape, std::size_t n) {
    if (n < 2) {
        throw InvalidArgument("discretization needs at least 2 atoms");
    }
    std::vector<Atom> atoms;
    atoms.reserve(n);
    std::vector<double> data;

    if (shape == Shape::circle) {
        const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
        data.reserve(n * 2);
        for (std::size_t k = 0; k < n; ++k) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                                 static_cast<double>(n);
            atoms.push_back({std::to_string(k), w});
            data.push_back(std::cos(theta));
            data.push_back(std::sin(theta));
        }
        return VectorFamily(MeasureSpace(std::move(atoms)), 2, std::move(data));
    }

    // Fibonacci lattice: z strides (-1, 1) at half-step offsets, golden-angle
    // longitude. Deterministic and near-uniform.
    const double w = 4.0 * std::numbers::pi / static_cast<double>(n);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    data.reserve(n * 3);
    for (std::size_t k = 0; k < n; ++k) {
        const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double theta = golden * static_cast<double>(k);
        atoms.push_back({std::to_string(k), w});
        data.push_back(r * std::cos(theta));
        data.push_back(r * std::sin(theta));
        data.push_back(z);
    }
    return VectorFamily(MeasureSpace(std::move(atoms)), 3, std::move(data),
                        Normalization::renormalize);
}

}  // namespace rankin
