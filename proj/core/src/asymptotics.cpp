#include "slicebergman/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "slicebergman/bergman.hpp"

namespace slicebergman {

double density_limit_error(double nu, const Quaternion& q, double R) {
    const double u = abs_sq(q) / (R * R);
    if (u >= 1.0) throw std::domain_error("density_limit_error: point outside the ball");
    // (1-u)^(nu R^2) through log1p for accuracy at large exponents
    const double bergman_density = std::exp(nu * R * R * std::log1p(-u));
    return std::fabs(bergman_density - std::exp(-nu * abs_sq(q)));
}

double basis_limit_error(double nu, unsigned n, const Quaternion& q, double R) {
    const KernelParams params{nu * R * R, R};
    const Quaternion bergman = evaluate(basis_f(n, params), q);
    double lf = 0.0;  // log n!
    for (unsigned k = 2; k <= n; ++k) lf += std::log(static_cast<double>(k));
    const double fock_coeff = std::exp(0.5 * (n * std::log(nu) - lf));
    return abs(bergman - int_pow(q, n) * fock_coeff);
}

double binet_ratio(double x, double a, double b) {
    if (x + a <= 0.0 || x + b <= 0.0)
        throw std::domain_error("binet_ratio: arguments of Gamma must be positive");
    return std::exp(std::lgamma(x + a) - std::lgamma(x + b) - (a - b) * std::log(x));
}

double kernel_limit_error(double nu, const Quaternion& q, const Quaternion& p, double R,
                          const SeriesTruncation& trunc) {
    const KernelParams params{nu * R * R, R};
    return abs(kernel_series(q, p, params, trunc) - fock_kernel(nu, q, p, trunc));
}

std::vector<SweepRow> run_sweep(const LimitSweep& sweep) {
    if (sweep.nu <= 0.0) throw std::invalid_argument("run_sweep: nu must be positive");
    if (sweep.radii.empty()) throw std::invalid_argument("run_sweep: no radii");
    const double probe_reach = 2.0 * std::max(abs(sweep.probe_q), abs(sweep.probe_p));
    for (double R : sweep.radii)
        if (R <= probe_reach)
            throw std::invalid_argument("run_sweep: radii must exceed 2 max(|q|, |p|)");

    std::vector<double> radii = sweep.radii;
    std::sort(radii.begin(), radii.end());

    std::vector<SweepRow> rows;
    rows.reserve(radii.size());
    for (double R : radii) {
        SweepRow row{};
        row.R = R;
        row.density_err = density_limit_error(sweep.nu, sweep.probe_q, R);
        for (unsigned n = 0; n < 4; ++n)
            row.basis_err[n] = basis_limit_error(sweep.nu, n, sweep.probe_q, R);
        row.kernel_err = kernel_limit_error(sweep.nu, sweep.probe_q, sweep.probe_p, R);
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "R,density_err,basis0_err,basis1_err,basis2_err,basis3_err,kernel_err\n";
    char buf[32];
    const auto sci = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.5e", v);
        return std::string(buf);
    };
    for (const SweepRow& row : rows) {
        out << sci(row.R) << ',' << sci(row.density_err);
        for (double e : row.basis_err) out << ',' << sci(e);
        out << ',' << sci(row.kernel_err) << '\n';
    }
}

}  // namespace slicebergman
