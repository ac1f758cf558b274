#include "slicebergman/special.hpp"

#include <cmath>
#include <functional>

namespace slicebergman {

double pochhammer(double a, unsigned n) {
    double r = 1.0;
    for (unsigned k = 0; k < n; ++k) r *= a + static_cast<double>(k);
    return r;
}

double gamma_ratio(unsigned n, double alpha) {
    if (alpha <= -1.0) throw std::domain_error("gamma_ratio: alpha must exceed -1");
    double r = 1.0;
    for (unsigned k = 1; k <= n; ++k) r *= (alpha + k) / k;
    return r;
}

double laguerre(unsigned n, double alpha, double t) {
    if (n == 0) return 1.0;
    double lm1 = 1.0;               // L_0
    double l = 1.0 + alpha - t;     // L_1
    for (unsigned k = 1; k < n; ++k) {
        const double lp1 = ((2.0 * k + alpha + 1.0 - t) * l - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

namespace {

bool is_nonpositive_integer(double a) { return a <= 0.0 && a == std::nearbyint(a); }

// Sums sum_n c_n q^n p^n where c_0 = 1 and c_{n+1} = c_n * coeff_ratio(n).
// The scalar magnitude sigma_n = c_n |q|^n |p|^n is carried separately from the
// unit directions (q/|q|)^n and (p/|p|)^n, so intermediates never overflow even
// when c_n alone would (large alpha in the R -> infinity regime).
Quaternion power_series(const std::function<double(unsigned)>& coeff_ratio,
                        const Quaternion& q, const Quaternion& p,
                        const SeriesTruncation& trunc, std::size_t* terms_used) {
    const double aq = abs(q);
    const double ap = abs(p);

    Quaternion acc{1.0};  // n = 0 term
    if (terms_used) *terms_used = 1;
    if (aq == 0.0 || ap == 0.0) return acc;

    const Quaternion uq = q / aq;
    const Quaternion up = p / ap;
    Quaternion qdir{1.0};
    Quaternion pdir{1.0};
    double sigma = 1.0;

    for (unsigned n = 0; n + 1 < trunc.max_terms; ++n) {
        sigma *= coeff_ratio(n) * aq * ap;
        if (sigma == 0.0) return acc;  // terminating series
        qdir = qdir * uq;
        pdir = pdir * up;
        acc += (qdir * pdir) * sigma;
        if (terms_used) ++*terms_used;
        if (std::abs(sigma) <= trunc.rel_tol * abs(acc)) return acc;
    }
    throw TruncationError("series did not reach rel_tol within max_terms terms");
}

}  // namespace

Quaternion i_series(double a, const Quaternion& q, const Quaternion& p,
                    const SeriesTruncation& trunc, std::size_t* terms_used) {
    if (!is_nonpositive_integer(a) && abs(q) * abs(p) >= 1.0)
        throw std::domain_error("i_series: |q||p| >= 1 outside the radius of convergence");
    return power_series([a](unsigned n) { return (a + n) / (n + 1.0); }, q, p, trunc,
                        terms_used);
}

Quaternion gauss_2f1_star(double a, double b, double c, const Quaternion& q,
                          const Quaternion& p, const SeriesTruncation& trunc,
                          std::size_t* terms_used) {
    if (b == c) return i_series(a, q, p, trunc, terms_used);  // (b)_n/(c)_n cancels termwise

    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (!terminating && abs(q) * abs(p) >= 1.0)
        throw std::domain_error("gauss_2f1_star: |q||p| >= 1 outside the radius of convergence");

    // n at which the terminating numerator factor vanishes, if any
    const double stop_n = terminating
                              ? std::min(is_nonpositive_integer(a) ? -a : 1e300,
                                         is_nonpositive_integer(b) ? -b : 1e300)
                              : 1e300;
    if (is_nonpositive_integer(c) && -c < stop_n)
        throw std::domain_error("gauss_2f1_star: (c)_n vanishes before the series terminates");

    return power_series(
        [a, b, c](unsigned n) { return (a + n) * (b + n) / ((c + n) * (n + 1.0)); }, q, p,
        trunc, terms_used);
}

Quaternion fock_kernel(double nu, const Quaternion& q, const Quaternion& p,
                       const SeriesTruncation& trunc, std::size_t* terms_used) {
    if (nu <= 0.0) throw std::domain_error("fock_kernel: nu must be positive");
    return power_series([nu](unsigned n) { return nu / (n + 1.0); }, q, conj(p), trunc,
                        terms_used);
}

}  // namespace slicebergman
