#include "slicebergman/bergman.hpp"

#include <cmath>

namespace slicebergman {

namespace {

void require_inside_ball(const Quaternion& q, double R, const char* who) {
    if (abs(q) >= R) throw std::domain_error(std::string(who) + ": point outside the ball");
}

}  // namespace

SeriesFunction basis_f(unsigned n, const KernelParams& params) {
    SeriesFunction f;
    f.radius = params.R;
    f.coeffs.assign(n + 1, Quaternion{});
    f.coeffs[n] =
        Quaternion{std::sqrt(gamma_ratio(n, params.alpha)) / std::pow(params.R, n)};
    return f;
}

double monomial_norm_sq(unsigned n, const KernelParams& params) {
    return std::pow(params.R * params.R, n) / gamma_ratio(n, params.alpha);
}

Quaternion kernel_series(const Quaternion& q, const Quaternion& p, const KernelParams& params,
                         const SeriesTruncation& trunc, std::size_t* terms_used) {
    require_inside_ball(q, params.R, "kernel_series");
    require_inside_ball(p, params.R, "kernel_series");
    return i_series(params.alpha + 1.0, q / params.R, conj(p) / params.R, trunc, terms_used);
}

Quaternion kernel_closed(const Quaternion& q, const Quaternion& p, const KernelParams& params,
                         const SeriesTruncation& trunc, std::size_t* terms_used) {
    require_inside_ball(q, params.R, "kernel_closed");
    require_inside_ball(p, params.R, "kernel_closed");
    const double r2 = params.R * params.R;
    const Quaternion pb = conj(p);
    const Quaternion base =
        Quaternion{1.0} - pb * (2.0 * real_part(q) / r2) + (pb * pb) * (abs_sq(q) / (r2 * r2));
    // I-series on the left, the real-exponent power on the right
    return i_series(-params.alpha - 1.0, conj(q) / params.R, pb / params.R, trunc, terms_used) *
           slice_pow(base, -params.alpha - 1.0);
}

Quaternion kernel_alpha1(const Quaternion& q, const Quaternion& p, double R) {
    require_inside_ball(q, R, "kernel_alpha1");
    require_inside_ball(p, R, "kernel_alpha1");
    const double r2 = R * R;
    const Quaternion b1 =
        Quaternion{1.0} - q * (2.0 * real_part(p) / r2) + (q * q) * (abs_sq(p) / (r2 * r2));
    const Quaternion b2 =
        Quaternion{1.0} - (q * p) * (2.0 / r2) + (q * q * p * p) * (1.0 / (r2 * r2));
    if (abs(b1) == 0.0) throw std::domain_error("kernel_alpha1: singular factor");
    const Quaternion b1inv = inverse(b1);
    return b1inv * b1inv * b2;
}

Quaternion kernel_alpha1_conj(const Quaternion& q, const Quaternion& p, double R) {
    require_inside_ball(q, R, "kernel_alpha1_conj");
    require_inside_ball(p, R, "kernel_alpha1_conj");
    const double r2 = R * R;
    const Quaternion qb = conj(q);
    const Quaternion pb = conj(p);
    const Quaternion a =
        Quaternion{1.0} - (qb * pb) * (2.0 / r2) + (qb * qb * pb * pb) * (1.0 / (r2 * r2));
    const Quaternion b =
        Quaternion{1.0} - pb * (2.0 * real_part(q) / r2) + (pb * pb) * (abs_sq(q) / (r2 * r2));
    if (abs(b) == 0.0) throw std::domain_error("kernel_alpha1_conj: singular factor");
    const Quaternion binv = inverse(b);
    return a * binv * binv;
}

Quaternion kernel_via_representation(const Quaternion& q, const Quaternion& p,
                                     const KernelParams& params) {
    require_inside_ball(q, params.R, "kernel_via_representation");
    require_inside_ball(p, params.R, "kernel_via_representation");
    const double r2 = params.R * params.R;
    const Quaternion pb = conj(p);
    const SliceDecomposition dq = decompose(q);
    const ImaginaryUnit unit_p = decompose(p).unit;  // canonical i for real p

    const auto one_slice_kernel = [&](const Quaternion& z) {
        return slice_pow(Quaternion{1.0} - (z * pb) / r2, -params.alpha - 1.0);
    };
    const Quaternion zp = recompose(dq.x, dq.y, unit_p);
    const Quaternion k1 = one_slice_kernel(zp);
    const Quaternion k2 = one_slice_kernel(conj(zp));
    return 0.5 * (k1 + k2) + 0.5 * ((dq.unit * unit_p) * (k2 - k1));
}

Quaternion reproduce(const SeriesFunction& f, const Quaternion& q, const KernelParams& params,
                     const DiskRule& rule) {
    require_inside_ball(q, params.R, "reproduce");
    if (rule.alpha != params.alpha || rule.R != params.R)
        throw std::invalid_argument("reproduce: rule built for different (alpha, R)");
    return integrate_disk(rule, [&](const Quaternion& z) {
        return kernel_series(q, z, params) * evaluate(f, z);
    });
}

}  // namespace slicebergman
