#pragma once

// Shared generators and independent oracles. The oracles deliberately
// re-derive everything with their own loops so they cannot share a bug with
// the library paths they check.

#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "rankin/family.hpp"
#include "rankin/measure.hpp"

namespace testsup {

struct MassOracle {
    double diagonal = 0.0;
    double offdiagonal = 0.0;
};

/// Enumerates all ordered atom pairs (i,j) and accumulates w_i*w_j.
inline MassOracle enumerate_masses(const std::vector<double>& weights) {
    MassOracle m;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        for (std::size_t j = 0; j < weights.size(); ++j) {
            const double w = weights[i] * weights[j];
            if (i == j) {
                m.diagonal += w;
            } else {
                m.offdiagonal += w;
            }
        }
    }
    return m;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

struct BrutePair {
    double value = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
};

/// Brute-force double loop over unordered distinct pairs, max inner product.
inline BrutePair brute_max_inner(const std::vector<std::vector<double>>& rows) {
    BrutePair best;
    bool first = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const double v = dot(rows[i], rows[j]);
            if (first || v > best.value) {
                best = {v, i, j};
                first = false;
            }
        }
    }
    return best;
}

/// Brute-force minimum squared distance over unordered distinct pairs.
inline BrutePair brute_min_dist_sq(const std::vector<std::vector<double>>& rows) {
    BrutePair best;
    bool first = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < rows[i].size(); ++k) {
                const double d = rows[i][k] - rows[j][k];
                s += d * d;
            }
            if (first || s < best.value) {
                best = {s, i, j};
                first = false;
            }
        }
    }
    return best;
}

inline std::vector<double> random_unit_vector(std::mt19937_64& rng, std::size_t d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(d);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (auto& x : v) {
            x = gauss(rng);
            norm += x * x;
        }
        norm = std::sqrt(norm);
    } while (norm < 1e-12);
    for (auto& x : v) x /= norm;
    return v;
}

inline std::vector<std::vector<double>> random_unit_rows(std::mt19937_64& rng,
                                                         std::size_t n, std::size_t d) {
    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(random_unit_vector(rng, d));
    return rows;
}

/// Weights log-uniform in [wmin, wmax].
inline rankin::MeasureSpace random_space(std::mt19937_64& rng, std::size_t n,
                                         double wmin = 0.1, double wmax = 10.0) {
    std::uniform_real_distribution<double> u(std::log(wmin), std::log(wmax));
    std::vector<rankin::Atom> atoms;
    atoms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        atoms.push_back({std::to_string(i), std::exp(u(rng))});
    }
    return rankin::MeasureSpace(std::move(atoms));
}

inline rankin::VectorFamily random_normalized_family(std::mt19937_64& rng, std::size_t n,
                                                     std::size_t d, bool weighted = true) {
    auto space = weighted ? random_space(rng, n) : rankin::counting_space(n);
    std::vector<double> data;
    data.reserve(n * d);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = random_unit_vector(rng, d);
        data.insert(data.end(), v.begin(), v.end());
    }
    return rankin::VectorFamily(std::move(space), d, std::move(data),
                                rankin::Normalization::renormalize);
}

}  // namespace testsup
