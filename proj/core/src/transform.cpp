#include "slicebergman/transform.hpp"

#include <cmath>

namespace slicebergman {

namespace {

void require_alpha_match(double a, double b, const char* who) {
    if (std::fabs(a - b) > 1e-12 * (1.0 + std::fabs(a)))
        throw std::invalid_argument(std::string(who) + ": alpha mismatch");
}

}  // namespace

double basis_phi(unsigned n, double alpha, double t) {
    if (t < 0.0) throw std::domain_error("basis_phi: t must be nonnegative");
    return laguerre(n, alpha, t) / std::sqrt(gamma_ratio(n, alpha));
}

Quaternion evaluate_phi(const LaguerreCoefficients& phi, double t) {
    Quaternion acc{};
    for (std::size_t n = 0; n < phi.coeffs.size(); ++n)
        acc += basis_phi(static_cast<unsigned>(n), phi.alpha, t) * phi.coeffs[n];
    return acc;
}

Quaternion kernel_A(double t, const Quaternion& q, const KernelParams& params) {
    if (abs(q) >= params.R) throw std::domain_error("kernel_A: point outside the ball");
    // 1 - q/R has positive scalar part inside the ball, so no branch issue
    const Quaternion pref = slice_pow(Quaternion{1.0} - q / params.R, -params.alpha - 1.0);
    const Quaternion expo = slice_exp((q * inverse(q - Quaternion{params.R})) * t);
    return pref * expo;
}

Quaternion forward(const LaguerreCoefficients& phi, const Quaternion& q,
                   const KernelParams& params, const HalfLineRule& rule) {
    require_alpha_match(phi.alpha, params.alpha, "forward");
    require_alpha_match(rule.alpha, params.alpha, "forward");
    return integrate_halfline(
        rule, [&](double t) { return kernel_A(t, q, params) * evaluate_phi(phi, t); });
}

SeriesFunction forward_coeffs(const LaguerreCoefficients& phi, const KernelParams& params) {
    require_alpha_match(phi.alpha, params.alpha, "forward_coeffs");
    SeriesFunction f;
    f.radius = params.R;
    f.coeffs.resize(phi.coeffs.size());
    double rn = 1.0;
    for (std::size_t n = 0; n < phi.coeffs.size(); ++n) {
        const double cn = std::sqrt(gamma_ratio(static_cast<unsigned>(n), params.alpha)) / rn;
        f.coeffs[n] = cn * phi.coeffs[n];
        rn *= params.R;
    }
    return f;
}

Quaternion inverse(const SeriesFunction& f, double t, const KernelParams& params,
                   const DiskRule& rule) {
    if (t < 0.0) throw std::domain_error("inverse: t must be nonnegative");
    if (f.radius != params.R) throw std::invalid_argument("inverse: radius mismatch");
    require_alpha_match(rule.alpha, params.alpha, "inverse");
    if (rule.R != params.R) throw std::invalid_argument("inverse: rule built for different R");

    return integrate_disk(rule, [&](const Quaternion& z) {
        const Quaternion zb = conj(z);
        return slice_exp((zb * inverse(zb - Quaternion{params.R})) * t) *
               slice_pow(Quaternion{1.0} - zb / params.R, -params.alpha - 1.0) *
               evaluate(f, z);
    });
}

Quaternion kernel_kernel_integral(const Quaternion& q, const Quaternion& q2,
                                  const KernelParams& params, const HalfLineRule& rule) {
    require_alpha_match(rule.alpha, params.alpha, "kernel_kernel_integral");
    return integrate_halfline(rule, [&](double t) {
        return kernel_A(t, q, params) * conj(kernel_A(t, q2, params));
    });
}

}  // namespace slicebergman
