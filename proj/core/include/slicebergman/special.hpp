#pragma once

#include <cstddef>
#include <stdexcept>

#include "slicebergman/quaternion.hpp"

namespace slicebergman {

/// Stopping rule for the two-variable power series: summation stops when the
/// term magnitude falls below rel_tol times the running partial-sum magnitude,
/// and fails once max_terms terms have been added without reaching it.
struct SeriesTruncation {
    double rel_tol = 1e-14;
    std::size_t max_terms = 512;
};

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
double pochhammer(double a, unsigned n);

/// Gamma(n+alpha+1) / (n! Gamma(alpha+1)) by the stable product
/// prod_{k=1..n} (alpha+k)/k; never formed from two large Gamma values.
double gamma_ratio(unsigned n, double alpha);

/// Generalized Laguerre polynomial L_n^(alpha)(t) via the three-term
/// recurrence (k+1) L_{k+1} = (2k+alpha+1-t) L_k - (k+alpha) L_{k-1}.
double laguerre(unsigned n, double alpha, double t);

/// I^a(q, p) = sum_n (a)_n / n! q^n p^n, factor order exactly q^n then p^n.
/// Finite sum for nonpositive integer a; otherwise requires |q||p| < 1.
Quaternion i_series(double a, const Quaternion& q, const Quaternion& p,
                    const SeriesTruncation& trunc = {}, std::size_t* terms_used = nullptr);

/// Left-sided Gauss hypergeometric sum_n q^n p^n / n! (a)_n (b)_n / (c)_n.
/// The ratio (b)_n/(c)_n cancels symbolically whenever b = c (including b = c
/// nonpositive integers); otherwise a vanishing (c)_n is a domain error.
Quaternion gauss_2f1_star(double a, double b, double c, const Quaternion& q,
                          const Quaternion& p, const SeriesTruncation& trunc = {},
                          std::size_t* terms_used = nullptr);

/// Exponential kernel of the slice Bargmann-Fock space:
/// e_*^[nu q, conj(p)] = sum_n nu^n q^n conj(p)^n / n!  (entire).
Quaternion fock_kernel(double nu, const Quaternion& q, const Quaternion& p,
                       const SeriesTruncation& trunc = {}, std::size_t* terms_used = nullptr);

}  // namespace slicebergman
