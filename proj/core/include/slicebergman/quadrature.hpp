#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "slicebergman/quaternion.hpp"

namespace slicebergman {

/// Raised when the implicit-QL sweep cap is exceeded while diagonalizing a
/// Jacobi matrix. Hard error, never silent degradation.
struct EigenSolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gauss rule for the normalized half-line measure t^alpha e^{-t} / Gamma(alpha+1) dt
/// on [0, inf). Weights sum to 1.
struct HalfLineRule {
    double alpha;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Tensor rule for the normalized measure (alpha / pi R^2)(1 - |z|^2/R^2)^{alpha-1} dxdy
/// on the disk of radius R inside the slice of `unit`. Radial nodes live in
/// t = (r/R)^2; a sample point is z = R sqrt(t) (cos th + unit sin th) with the
/// angular_count-point equispaced trapezoid rule in th.
struct DiskRule {
    double alpha;
    double R;
    ImaginaryUnit unit;
    std::vector<double> radial_nodes;    // in (0, 1)
    std::vector<double> radial_weights;  // sum to 1
    std::size_t angular_count;
};

/// Generalized Gauss-Laguerre rule by Golub-Welsch: nodes are the eigenvalues of
/// the symmetric tridiagonal Jacobi matrix (diagonal 2k+alpha+1, off-diagonal
/// sqrt(k(k+alpha))); weights are the squared first eigenvector components
/// (zeroth moment 1 for the normalized measure).
HalfLineRule build_halfline(double alpha, std::size_t n);

/// Radial part: Gauss-Jacobi on [0,1] with weight (1-t)^{alpha-1}, normalized to
/// total mass 1. Angular part: n_angular equal weights 1/n_angular.
DiskRule build_disk(double alpha, double R, const ImaginaryUnit& unit, std::size_t n_radial,
                    std::size_t n_angular);

/// Sample point z_{ij} = R sqrt(t_i) (cos th_j + unit sin th_j), th_j = 2 pi j / n_angular.
Quaternion disk_point(const DiskRule& rule, std::size_t radial_index,
                      std::size_t angular_index);

template <typename F>
Quaternion integrate_halfline(const HalfLineRule& rule, F&& f) {
    Quaternion acc{};
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        acc += Quaternion(f(rule.nodes[k])) * rule.weights[k];
    return acc;
}

template <typename F>
Quaternion integrate_disk(const DiskRule& rule, F&& f) {
    Quaternion acc{};
    const double wang = 1.0 / static_cast<double>(rule.angular_count);
    for (std::size_t i = 0; i < rule.radial_nodes.size(); ++i) {
        Quaternion ring{};
        for (std::size_t j = 0; j < rule.angular_count; ++j)
            ring += Quaternion(f(disk_point(rule, i, j)));
        acc += ring * (rule.radial_weights[i] * wang);
    }
    return acc;
}

}  // namespace slicebergman
