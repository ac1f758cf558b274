#include "slicebergman/slicefun.hpp"

#include <cmath>

#include "slicebergman/special.hpp"

namespace slicebergman {

Quaternion evaluate(const SeriesFunction& f, const Quaternion& q) {
    if (abs(q) >= f.radius)
        throw std::domain_error("evaluate: point outside the ball of convergence");
    if (f.coeffs.empty()) return Quaternion{};
    Quaternion acc = f.coeffs.back();
    for (std::size_t n = f.coeffs.size() - 1; n-- > 0;) acc = q * acc + f.coeffs[n];
    return acc;
}

std::pair<Quaternion, Quaternion> split_value(const Quaternion& v, const ImaginaryUnit& I,
                                              const ImaginaryUnit& J) {
    if (std::fabs(dot(I, J)) > 1e-12)
        throw std::invalid_argument("split_value: J must be perpendicular to I");

    // {1, I, J, IJ} is an orthonormal real basis of H; project componentwise.
    const Quaternion qi = I.as_quaternion();
    const Quaternion qj = J.as_quaternion();
    const Quaternion qij = qi * qj;
    const auto comp = [&v](const Quaternion& e) {
        return v.w * e.w + v.x * e.x + v.y * e.y + v.z * e.z;
    };
    const double a = v.w;
    const double b = comp(qi);
    const double c = comp(qj);
    const double d = comp(qij);
    return {Quaternion{a} + qi * b, Quaternion{c} + qi * d};
}

Quaternion inner_product_coeffs(const SeriesFunction& f, const SeriesFunction& g,
                                double alpha) {
    if (f.radius != g.radius)
        throw std::invalid_argument("inner_product_coeffs: radius mismatch");
    if (alpha <= 0.0) throw std::invalid_argument("inner_product_coeffs: alpha must be positive");

    const std::size_t n_common = std::min(f.coeffs.size(), g.coeffs.size());
    Quaternion acc{};
    double r2n = 1.0;
    const double r2 = f.radius * f.radius;
    for (std::size_t n = 0; n < n_common; ++n) {
        const double norm_sq = r2n / gamma_ratio(static_cast<unsigned>(n), alpha);
        acc += (conj(f.coeffs[n]) * g.coeffs[n]) * norm_sq;
        r2n *= r2;
    }
    return acc;
}

}  // namespace slicebergman
