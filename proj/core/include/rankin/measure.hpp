#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rankin {

struct Atom {
    std::string label;
    double weight = 1.0;
};

/// Finite atomic measure space: a list of positively weighted atoms.
/// Atom identity is positional; labels are opaque and may repeat.
/// Immutable after construction.
class MeasureSpace {
public:
    /// Throws InvalidArgument if the list is empty or any weight is not
    /// strictly positive and finite.
    explicit MeasureSpace(std::vector<Atom> atoms);

    std::size_t size() const noexcept { return atoms_.size(); }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    const Atom& atom(std::size_t i) const { return atoms_[i]; }
    double weight(std::size_t i) const { return atoms_[i].weight; }

    double total_mass() const noexcept { return total_mass_; }

    /// Product-measure mass of the diagonal {(a,a)}: sum of squared weights.
    double diagonal_mass() const noexcept { return diagonal_mass_; }

    /// Product-measure mass of the distinct-atom pairs: total^2 - diagonal.
    double offdiagonal_mass() const noexcept;

    /// Ratio diagonal/offdiagonal computed on weights normalized by the
    /// largest one. Scale-free: equal-weight spaces give exactly 1/(n-1).
    double mass_ratio() const;

private:
    std::vector<Atom> atoms_;
    double total_mass_ = 0.0;
    double diagonal_mass_ = 0.0;
};

/// n atoms of unit weight, labelled "0".."n-1".
MeasureSpace counting_space(std::size_t n);

}  // namespace rankin
