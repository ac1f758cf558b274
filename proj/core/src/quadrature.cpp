#include "slicebergman/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slicebergman {

namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix, rotating a carried
// vector z along (EISPACK imtqlx lineage). On return diag holds the
// eigenvalues and z the first components of the normalized eigenvectors.
void tridiag_ql(std::vector<double>& diag, std::vector<double>& sub, std::vector<double>& z) {
    const std::size_t n = diag.size();
    if (n <= 1) return;
    constexpr int max_sweeps = 64;
    const double prec = 2.220446049250313e-16;

    sub.resize(n, 0.0);
    sub[n - 1] = 0.0;

    for (std::size_t l = 0; l < n; ++l) {
        int sweeps = 0;
        for (;;) {
            std::size_t m = l;
            while (m + 1 < n &&
                   std::fabs(sub[m]) > prec * (std::fabs(diag[m]) + std::fabs(diag[m + 1])))
                ++m;
            if (m == l) break;
            if (++sweeps > max_sweeps)
                throw EigenSolveError("tridiagonal QL: sweep cap exceeded");

            double g = (diag[l + 1] - diag[l]) / (2.0 * sub[l]);
            double r = std::hypot(g, 1.0);
            g = diag[m] - diag[l] + sub[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (std::size_t ii = m; ii-- > l;) {
                double f = s * sub[ii];
                const double b = c * sub[ii];
                r = std::hypot(f, g);
                sub[ii + 1] = r;
                if (r == 0.0) {  // recover from underflow, retry the sweep
                    diag[ii + 1] -= p;
                    sub[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[ii + 1] - p;
                r = (diag[ii] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[ii + 1] = g + p;
                g = c * r - b;
                f = z[ii + 1];
                z[ii + 1] = s * z[ii] + c * f;
                z[ii] = c * z[ii] - s * f;
            }
            if (underflow) continue;
            diag[l] -= p;
            sub[l] = g;
            sub[m] = 0.0;
        }
    }
}

// Nodes = eigenvalues, weights = mu0 * (first eigenvector components)^2,
// sorted ascending. mu0 = 1 for the normalized measures used here.
void golub_welsch(std::vector<double> diag, std::vector<double> sub,
                  std::vector<double>& nodes, std::vector<double>& weights) {
    const std::size_t n = diag.size();
    std::vector<double> z(n, 0.0);
    z[0] = 1.0;
    tridiag_ql(diag, sub, z);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&diag](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });

    nodes.resize(n);
    weights.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        nodes[k] = diag[order[k]];
        weights[k] = z[order[k]] * z[order[k]];
    }
}

}  // namespace

HalfLineRule build_halfline(double alpha, std::size_t n) {
    if (alpha <= -1.0) throw std::invalid_argument("build_halfline: alpha must exceed -1");
    if (n == 0) throw std::invalid_argument("build_halfline: need at least one node");

    std::vector<double> diag(n);
    std::vector<double> sub(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (std::size_t k = 1; k < n; ++k)
        sub[k - 1] = std::sqrt(static_cast<double>(k) * (k + alpha));

    HalfLineRule rule;
    rule.alpha = alpha;
    golub_welsch(std::move(diag), std::move(sub), rule.nodes, rule.weights);
    return rule;
}

DiskRule build_disk(double alpha, double R, const ImaginaryUnit& unit, std::size_t n_radial,
                    std::size_t n_angular) {
    if (alpha <= 0.0 || R <= 0.0)
        throw std::invalid_argument("build_disk: alpha and R must be positive");
    if (n_radial == 0 || n_angular < 2)
        throw std::invalid_argument("build_disk: need n_radial >= 1 and n_angular >= 2");

    // Jacobi weight (1-x)^A (1+x)^B on [-1,1] with A = alpha-1, B = 0;
    // recurrence coefficients of the monic orthogonal polynomials.
    const double A = alpha - 1.0;
    const double B = 0.0;
    const std::size_t n = n_radial;
    std::vector<double> diag(n);
    std::vector<double> sub(n, 0.0);
    const double s = A + B;
    diag[0] = (B - A) / (s + 2.0);
    for (std::size_t k = 1; k < n; ++k) {
        const double t = 2.0 * k + s;
        diag[k] = (B * B - A * A) / (t * (t + 2.0));
    }
    if (n > 1) sub[0] = std::sqrt(4.0 * (1.0 + A) * (1.0 + B) / ((s + 2.0) * (s + 2.0) * (s + 3.0)));
    for (std::size_t k = 2; k < n; ++k) {
        const double t = 2.0 * k + s;
        sub[k - 1] = std::sqrt(4.0 * k * (k + A) * (k + B) * (k + s) /
                               (t * t * (t + 1.0) * (t - 1.0)));
    }

    DiskRule rule{alpha, R, unit, {}, {}, n_angular};
    golub_welsch(std::move(diag), std::move(sub), rule.radial_nodes, rule.radial_weights);
    // map [-1,1] -> [0,1] with t = (x+1)/2; keeps (1-t)^(alpha-1) at the t = 1 end
    for (double& t : rule.radial_nodes) t = 0.5 * (t + 1.0);
    return rule;
}

Quaternion disk_point(const DiskRule& rule, std::size_t radial_index,
                      std::size_t angular_index) {
    const double r = rule.R * std::sqrt(rule.radial_nodes[radial_index]);
    const double theta =
        2.0 * M_PI * static_cast<double>(angular_index) / static_cast<double>(rule.angular_count);
    return recompose(r * std::cos(theta), r * std::sin(theta), rule.unit);
}

}  // namespace slicebergman
