#include "rankin/measure.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rankin/errors.hpp"
#include "rankin/summation.hpp"

namespace rankin {

MeasureSpace::MeasureSpace(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) {
        throw InvalidArgument("measure space needs at least one atom");
    }
    KahanSum total, diag;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const double w = atoms_[i].weight;
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw InvalidArgument("atom " + std::to_string(i) +
                                  " has non-positive or non-finite weight");
        }
        total.add(w);
        diag.add(w * w);
    }
    total_mass_ = total.value();
    diagonal_mass_ = diag.value();
}

double MeasureSpace::offdiagonal_mass() const noexcept {
    return total_mass_ * total_mass_ - diagonal_mass_;
}

double MeasureSpace::mass_ratio() const {
    double wmax = 0.0;
    for (const auto& a : atoms_) wmax = std::max(wmax, a.weight);
    KahanSum total, diag;
    for (const auto& a : atoms_) {
        const double u = a.weight / wmax;
        total.add(u);
        diag.add(u * u);
    }
    const double t = total.value();
    const double d = diag.value();
    return d / (t * t - d);
}

MeasureSpace counting_space(std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("counting space needs n >= 1");
    }
    std::vector<Atom> atoms;
    atoms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        atoms.push_back({std::to_string(i), 1.0});
    }
    return MeasureSpace(std::move(atoms));
}

}  // namespace rankin
