#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "slicebergman/quaternion.hpp"
#include "slicebergman/special.hpp"

namespace slicebergman {

/// Probe configuration for the R -> infinity degeneration under the coupling
/// alpha = nu R^2. All radii must exceed 2 max(|probe_q|, |probe_p|) so every
/// series stays well inside its ball of convergence.
struct LimitSweep {
    double nu;
    std::vector<double> radii;
    Quaternion probe_q;
    Quaternion probe_p;
};

struct SweepRow {
    double R;
    double density_err;
    std::array<double, 4> basis_err;  // n = 0..3
    double kernel_err;
};

/// |(1 - |q|^2/R^2)^{nu R^2} - e^{-nu |q|^2}|, the pointwise degeneration of
/// the hyperbolic-type density into the Gaussian one.
double density_limit_error(double nu, const Quaternion& q, double R);

/// |f_n(q) at alpha = nu R^2  -  sqrt(nu^n/n!) q^n|, Bergman basis against the
/// Bargmann-Fock basis.
double basis_limit_error(double nu, unsigned n, const Quaternion& q, double R);

/// Gamma(x+a) / (x^{a-b} Gamma(x+b)) through log-Gamma differences (no overflow);
/// tends to 1 as x -> infinity.
double binet_ratio(double x, double a, double b);

/// |kernel_series(q, p; alpha = nu R^2, R) - fock_kernel(nu, q, p)|.
double kernel_limit_error(double nu, const Quaternion& q, const Quaternion& p, double R,
                          const SeriesTruncation& trunc = {});

/// One row per radius, sorted by R ascending; deterministic.
std::vector<SweepRow> run_sweep(const LimitSweep& sweep);

/// CSV: header `R,density_err,basis0_err,basis1_err,basis2_err,basis3_err,kernel_err`,
/// floats in scientific notation with 6 significant digits.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace slicebergman
