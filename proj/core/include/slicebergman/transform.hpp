#pragma once

#include "slicebergman/bergman.hpp"
#include "slicebergman/quadrature.hpp"
#include "slicebergman/quaternion.hpp"
#include "slicebergman/slicefun.hpp"

namespace slicebergman {

/// Element of L^{2,alpha}(R+, H) expanded over the orthonormal Laguerre system:
/// phi(t) = sum_n phi_n(t) c_n, with ||phi||^2 = sum_n |c_n|^2.
struct LaguerreCoefficients {
    double alpha;
    std::vector<Quaternion> coeffs;  // c_0 ... c_d
};

/// Orthonormal half-line basis phi_n(t) = L_n^(alpha)(t) / sqrt(gamma_ratio(n, alpha)).
double basis_phi(unsigned n, double alpha, double t);

/// phi(t) = sum_n phi_n(t) c_n.
Quaternion evaluate_phi(const LaguerreCoefficients& phi, double t);

/// Bargmann kernel A(t; q) = (1 - q/R)^{-alpha-1} exp(t q (q - R)^{-1}); all
/// factors lie in the slice of q.
Quaternion kernel_A(double t, const Quaternion& q, const KernelParams& params);

/// Forward transform by quadrature: integrate_halfline of t -> A(t; q) phi(t).
/// Maps phi_n to f_n (unitary isometry onto the Bergman space).
Quaternion forward(const LaguerreCoefficients& phi, const Quaternion& q,
                   const KernelParams& params, const HalfLineRule& rule);

/// Coefficient-space forward transform: c_n attaches to f_n; exact, no quadrature.
SeriesFunction forward_coeffs(const LaguerreCoefficients& phi, const KernelParams& params);

/// Inverse transform by quadrature: integrate_disk of
///   q -> exp(t conj(q) (conj(q) - R)^{-1}) (1 - conj(q)/R)^{-alpha-1} f(q);
/// the density (1 - |q|^2/R^2)^{alpha-1} alpha/(pi R^2) lives in the rule's
/// weights and is not applied again here.
Quaternion inverse(const SeriesFunction& f, double t, const KernelParams& params,
                   const DiskRule& rule);

/// integrate_halfline of t -> A(t; q) conj(A(t; q2)); equals kernel_series(q, q2)
/// up to quadrature error.
Quaternion kernel_kernel_integral(const Quaternion& q, const Quaternion& q2,
                                  const KernelParams& params, const HalfLineRule& rule);

}  // namespace slicebergman
