#pragma once

#include <utility>
#include <vector>

#include "slicebergman/quaternion.hpp"

namespace slicebergman {

/// Slice regular function on the ball |q| < radius, represented by its finite
/// power series f(q) = sum_n q^n a_n (powers on the left, coefficients on the
/// right, as the right vector-space structure requires).
struct SeriesFunction {
    std::vector<Quaternion> coeffs;  // a_0 ... a_d
    double radius = 1.0;
};

/// Horner evaluation of sum_n q^n a_n; throws std::domain_error for |q| >= radius.
Quaternion evaluate(const SeriesFunction& f, const Quaternion& q);

/// Reconstructs f(x + yJ) from the values of f on the slice C_I:
///   f(x+yJ) = 1/2 (1 - JI) f(x+yI) + 1/2 (1 + JI) f(x-yI),
/// products taken in exactly that order.
template <typename F>
Quaternion representation_formula(F&& f_slice, double x, double y, const ImaginaryUnit& I,
                                  const ImaginaryUnit& J) {
    const Quaternion ji = J * I;
    const Quaternion fp = f_slice(recompose(x, y, I));
    const Quaternion fm = f_slice(recompose(x, -y, I));
    return 0.5 * ((Quaternion{1.0} - ji) * fp) + 0.5 * ((Quaternion{1.0} + ji) * fm);
}

/// Unique slice regular extension of a holomorphic h on C_I, evaluated at q:
///   ext(h)(x+yJ) = 1/2 [h(x+yI) + h(x-yI)] + (JI/2) [h(x-yI) - h(x+yI)].
template <typename F>
Quaternion extend(F&& h, const ImaginaryUnit& I, const Quaternion& q) {
    const SliceDecomposition d = decompose(q);
    const Quaternion hp = h(recompose(d.x, d.y, I));
    const Quaternion hm = h(recompose(d.x, -d.y, I));
    return 0.5 * (hp + hm) + 0.5 * ((d.unit * I) * (hm - hp));
}

/// Pointwise splitting v = F + G J with F, G in the slice C_I; requires J
/// perpendicular to I (tolerance 1e-12 on the direction inner product).
std::pair<Quaternion, Quaternion> split_value(const Quaternion& v, const ImaginaryUnit& I,
                                              const ImaginaryUnit& J);

/// Weighted Bergman inner product from the coefficients:
///   <f, g> = sum_n n! R^{2n} Gamma(alpha+1)/Gamma(n+alpha+1) conj(a_n) b_n
/// (conj(a_n) to the left of b_n). Requires matching radii.
Quaternion inner_product_coeffs(const SeriesFunction& f, const SeriesFunction& g, double alpha);

}  // namespace slicebergman
