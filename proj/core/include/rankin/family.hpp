#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rankin/matrix.hpp"
#include "rankin/measure.hpp"

namespace rankin {

/// Constructor tolerance for strict normalization: |norm - 1| <= 1e-9.
inline constexpr double kNormTolerance = 1e-9;

/// How constructors treat vector norms.
enum class Normalization {
    strict,       ///< reject any vector whose norm deviates from 1 beyond kNormTolerance
    renormalize,  ///< divide each vector by its norm; zero vectors are rejected
    none,         ///< keep raw entries; the family is not flagged normalized
};

/// A pairwise extremum together with the atom pair attaining it.
struct PairValue {
    double value = 0.0;
    std::size_t first = 0;
    std::size_t second = 0;
};

/// Element of L2(Omega, mu) supported on the atoms: one value per atom.
/// The measure weight enters through the pairing, not the stored values.
struct CoefficientFunction {
    std::vector<double> values;

    /// chi_Omega, the constant-one function.
    static CoefficientFunction ones(std::size_t n) {
        return CoefficientFunction{std::vector<double>(n, 1.0)};
    }
};

/// Vectors in R^d aligned one-to-one with the atoms of a measure space.
/// Immutable; every operation is a pure function safe to call concurrently.
class VectorFamily {
public:
    /// `row_major` holds size*dim entries, vector i at rows i*dim..i*dim+dim-1.
    VectorFamily(MeasureSpace space, std::size_t dim, std::vector<double> row_major,
                 Normalization mode = Normalization::strict);

    static VectorFamily from_rows(MeasureSpace space,
                                  const std::vector<std::vector<double>>& rows,
                                  Normalization mode = Normalization::strict);

    const MeasureSpace& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return space_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    bool normalized() const noexcept { return normalized_; }

    std::span<const double> vector(std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    const std::vector<double>& data() const noexcept { return data_; }

    /// max_i | ||tau_i|| - 1 |.
    double max_norm_deviation() const;

    /// M: maximum signed inner product over distinct atom pairs
    /// (no absolute value; ties broken by lexicographically smallest pair).
    PairValue coherence() const;

    /// max |<tau_i, tau_j>| over distinct pairs. Convenience only; the
    /// Rankin inequalities are about the signed coherence above.
    PairValue abs_coherence() const;

    /// N: minimum squared Euclidean distance over distinct atom pairs.
    PairValue min_pairwise_distance_sq() const;

    /// G[i][j] = <tau_i, tau_j>.
    Matrix gram() const;

    /// Analysis operator: alpha -> <h, tau_alpha>.
    CoefficientFunction analysis(std::span<const double> h) const;

    /// Synthesis operator: sum_i w_i f_i tau_i (atomic weak integral).
    std::vector<double> synthesis(const CoefficientFunction& f) const;

    /// Frame operator S = synthesis . analysis: h -> sum_i w_i <h,tau_i> tau_i.
    std::vector<double> frame_operator_apply(std::span<const double> h) const;

    /// sum_{i,j} w_i w_j <tau_i, tau_j>; equals ||synthesis(chi)||^2 up to
    /// 1e-10 relative.
    double weighted_gram_total() const;

private:
    MeasureSpace space_;
    std::size_t dim_;
    std::vector<double> data_;
    bool normalized_;
};

enum class Shape { circle, sphere };

/// Equal-weight quadrature families realizing continuous families at finite
/// resolution. circle: atoms at angles 2*pi*k/n, weight 2*pi/n, dim 2.
/// sphere: Fibonacci-lattice points, weight 4*pi/n, dim 3.
VectorFamily discretize(Shape shape, std::size_t n);

}  // namespace rankin
