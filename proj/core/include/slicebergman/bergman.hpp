#pragma once

#include "slicebergman/quadrature.hpp"
#include "slicebergman/quaternion.hpp"
#include "slicebergman/slicefun.hpp"
#include "slicebergman/special.hpp"

namespace slicebergman {

/// Weight exponent and ball radius of the weighted slice Bergman space
/// A^{2,alpha}_slice(B_R).
struct KernelParams {
    double alpha;
    double R;

    KernelParams(double alpha_, double R_) : alpha(alpha_), R(R_) {
        if (alpha <= 0.0 || R <= 0.0)
            throw std::invalid_argument("KernelParams: alpha and R must be positive");
    }
};

/// Orthonormal basis element f_n(q) = sqrt(Gamma(n+alpha+1)/(n! Gamma(alpha+1))) (q/R)^n
/// as a monomial SeriesFunction.
SeriesFunction basis_f(unsigned n, const KernelParams& params);

/// ||q^n||^2 = n! R^{2n} Gamma(alpha+1)/Gamma(n+alpha+1).
double monomial_norm_sq(unsigned n, const KernelParams& params);

/// Basis expansion of the reproducing kernel,
///   K(q,p) = sum_n (alpha+1)_n / (n! R^{2n}) q^n conj(p)^n
///          = I^{alpha+1}(q/R, conj(p)/R).
Quaternion kernel_series(const Quaternion& q, const Quaternion& p, const KernelParams& params,
                         const SeriesTruncation& trunc = {}, std::size_t* terms_used = nullptr);

/// Closed form: I^{-alpha-1}(conj(q)/R, conj(p)/R) times, on the right,
/// (1 - 2 Re(q) conj(p)/R^2 + |q|^2 conj(p)^2/R^4)^{-alpha-1} taken in the slice of p.
Quaternion kernel_closed(const Quaternion& q, const Quaternion& p, const KernelParams& params,
                         const SeriesTruncation& trunc = {}, std::size_t* terms_used = nullptr);

/// alpha = 1 rational form
///   (1 - 2 q Re(p)/R^2 + q^2 |p|^2/R^4)^{-2} (1 - 2 q p/R^2 + q^2 p^2/R^4)
/// using integer-power quaternion inversion (first factor lies in the slice of q).
Quaternion kernel_alpha1(const Quaternion& q, const Quaternion& p, double R);

/// Conjugate-variable alpha = 1 rational form
///   (1 - 2 conj(q) conj(p)/R^2 + conj(q)^2 conj(p)^2/R^4)
///   (1 - 2 Re(q) conj(p)/R^2 + |q|^2 conj(p)^2/R^4)^{-2};
/// stated at R = 1, scaled to general R by the substitution q/R, p/R.
Quaternion kernel_alpha1_conj(const Quaternion& q, const Quaternion& p, double R);

/// Kernel assembled from the one-slice kernel K_h(z, p) = (1 - z conj(p)/R^2)^{-alpha-1}
/// through the representation formula: with (x, y, I) = decompose(q), I_p the unit
/// of p (canonical i for real p) and z_p = x + I_p y,
///   1/2 (K_h(z_p,p) + K_h(conj(z_p),p)) + (I I_p/2)(K_h(conj(z_p),p) - K_h(z_p,p)).
Quaternion kernel_via_representation(const Quaternion& q, const Quaternion& p,
                                     const KernelParams& params);

/// Reproducing integral: integrate_disk of z -> kernel_series(q, z) f(z); equals
/// evaluate(f, q) up to quadrature error. The rule must carry the same (alpha, R).
Quaternion reproduce(const SeriesFunction& f, const Quaternion& q, const KernelParams& params,
                     const DiskRule& rule);

}  // namespace slicebergman
