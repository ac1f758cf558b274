#include "slicebergman/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "slicebergman/asymptotics.hpp"
#include "slicebergman/bergman.hpp"
#include "slicebergman/transform.hpp"

namespace slicebergman {

std::uint64_t Rng::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Quaternion Rng::ball(double radius) {
    for (;;) {
        const Quaternion v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0),
                           uniform(-1.0, 1.0)};
        const double n = abs(v);
        if (n <= 1.0 && n > 1e-3) return v * (radius / n) * std::pow(uniform(), 0.25);
    }
}

ImaginaryUnit Rng::unit() {
    for (;;) {
        const double x = uniform(-1.0, 1.0);
        const double y = uniform(-1.0, 1.0);
        const double z = uniform(-1.0, 1.0);
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n <= 1.0 && n > 1e-3) return {x / n, y / n, z / n};
    }
}

namespace {

SeriesTruncation trunc_of(const VerifyConfig& c) { return {c.rel_tol, c.max_terms}; }

double rel_residual(const Quaternion& got, const Quaternion& want) {
    return abs(got - want) / abs(want);
}

// --- criterion 1: closed-form identity, series vs closed ----------------------

CheckResult check_kernel_identity(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 1);
    const SeriesTruncation trunc = trunc_of(cfg);
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.5, 4.0}) {
        for (double R : {1.0, 3.0}) {
            const KernelParams params{alpha, R};
            for (int trial = 0; trial < 25; ++trial) {
                const Quaternion q = rng.ball(0.9 * R);
                const Quaternion p = rng.ball(0.9 * R);
                const Quaternion ks = kernel_series(q, p, params, trunc);
                const Quaternion kc = kernel_closed(q, p, params, trunc);
                worst = std::max(worst, rel_residual(kc, ks));
            }
        }
    }
    return {1, "kernel identity: series form vs closed form", worst, 1e-9, worst <= 1e-9};
}

// --- criterion 2: alpha = 1 rational forms ------------------------------------

CheckResult check_alpha1_forms(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 2);
    const KernelParams params{1.0, cfg.R};
    double worst_series = 0.0;
    double worst_pair = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        {
            const Quaternion q = rng.ball(0.9 * cfg.R);
            const Quaternion p = rng.ball(0.9 * cfg.R);
            const Quaternion ks = kernel_series(q, p, params, trunc_of(cfg));
            worst_series = std::max(worst_series, rel_residual(kernel_alpha1(q, p, cfg.R), ks));
        }
        {
            const Quaternion q = rng.ball(0.9);
            const Quaternion p = rng.ball(0.9);
            worst_pair = std::max(
                worst_pair,
                rel_residual(kernel_alpha1_conj(q, p, 1.0), kernel_alpha1(q, p, 1.0)));
        }
    }
    const bool pass = worst_series <= 1e-10 && worst_pair <= 1e-12;
    const double scaled =
        std::max(worst_series, worst_pair * 1e2);  // report against the tighter budget
    return {2, "alpha=1 rational forms vs series and vs each other", scaled, 1e-10, pass};
}

// --- criterion 3: slice restriction matches the one-slice kernel --------------

CheckResult check_slice_restriction(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 3);
    const KernelParams params{cfg.alpha, cfg.R};
    const SeriesTruncation trunc = trunc_of(cfg);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const ImaginaryUnit I = rng.unit();
        const double r = 0.9 * cfg.R / std::sqrt(2.0);
        const Quaternion z = recompose(rng.uniform(-r, r), rng.uniform(-r, r), I);
        const Quaternion w = recompose(rng.uniform(-r, r), rng.uniform(-r, r), I);
        const Quaternion ref =
            slice_pow(Quaternion{1.0} - (z * conj(w)) / (cfg.R * cfg.R), -cfg.alpha - 1.0);
        worst = std::max(worst, rel_residual(kernel_series(z, w, params, trunc), ref));
        worst = std::max(worst, rel_residual(kernel_closed(z, w, params, trunc), ref));
        worst = std::max(worst, rel_residual(kernel_via_representation(z, w, params), ref));
        // the alpha = 1 rational form, against its own one-slice reference
        const Quaternion ref1 = slice_pow(Quaternion{1.0} - (z * conj(w)) / (cfg.R * cfg.R), -2.0);
        worst = std::max(worst, rel_residual(kernel_alpha1(z, w, cfg.R), ref1));
    }
    return {3, "slice restriction: every kernel form vs (1 - z conj(w)/R^2)^(-a-1)", worst,
            1e-10, worst <= 1e-10};
}

// --- criterion 4: representation-formula kernel vs closed form ----------------

CheckResult check_representation_kernel(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 4);
    const KernelParams params{cfg.alpha, cfg.R};
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Quaternion q = rng.ball(0.9 * cfg.R);
        const Quaternion p = rng.ball(0.9 * cfg.R);
        worst = std::max(worst, rel_residual(kernel_via_representation(q, p, params),
                                             kernel_closed(q, p, params, trunc_of(cfg))));
    }
    return {4, "representation-formula kernel vs closed form", worst, 1e-10, worst <= 1e-10};
}

// --- criterion 5: orthonormality of both bases --------------------------------

CheckResult check_orthonormality(const VerifyConfig& cfg) {
    constexpr unsigned kBasis = 16;  // n, m <= 15
    double worst = 0.0;

    const HalfLineRule hl = build_halfline(cfg.alpha, cfg.halfline_nodes);
    std::array<std::array<double, kBasis>, kBasis> gram_phi{};
    for (std::size_t k = 0; k < hl.nodes.size(); ++k) {
        std::array<double, kBasis> phi;
        for (unsigned n = 0; n < kBasis; ++n) phi[n] = basis_phi(n, cfg.alpha, hl.nodes[k]);
        for (unsigned n = 0; n < kBasis; ++n)
            for (unsigned m = 0; m < kBasis; ++m) gram_phi[n][m] += hl.weights[k] * phi[n] * phi[m];
    }
    for (unsigned n = 0; n < kBasis; ++n)
        for (unsigned m = 0; m < kBasis; ++m)
            worst = std::max(worst, std::fabs(gram_phi[n][m] - (n == m ? 1.0 : 0.0)));

    const KernelParams params{cfg.alpha, cfg.R};
    const DiskRule disk = build_disk(cfg.alpha, cfg.R, ImaginaryUnit::canonical_i(),
                                     cfg.radial_nodes, cfg.angular_nodes);
    std::array<std::array<Quaternion, kBasis>, kBasis> gram_f{};
    const double wang = 1.0 / static_cast<double>(disk.angular_count);
    std::array<double, kBasis> scale;
    for (unsigned n = 0; n < kBasis; ++n) scale[n] = std::sqrt(gamma_ratio(n, cfg.alpha));
    for (std::size_t i = 0; i < disk.radial_nodes.size(); ++i) {
        for (std::size_t j = 0; j < disk.angular_count; ++j) {
            const Quaternion z = disk_point(disk, i, j) / cfg.R;
            std::array<Quaternion, kBasis> f;
            f[0] = Quaternion{1.0};
            for (unsigned n = 1; n < kBasis; ++n) f[n] = f[n - 1] * z;
            for (unsigned n = 0; n < kBasis; ++n) f[n] = f[n] * scale[n];
            const double w = disk.radial_weights[i] * wang;
            for (unsigned n = 0; n < kBasis; ++n)
                for (unsigned m = 0; m < kBasis; ++m)
                    gram_f[n][m] += (conj(f[n]) * f[m]) * w;
        }
    }
    for (unsigned n = 0; n < kBasis; ++n)
        for (unsigned m = 0; m < kBasis; ++m)
            worst = std::max(
                worst, abs(gram_f[n][m] - Quaternion{n == m ? 1.0 : 0.0}));

    return {5, "orthonormality: Gram matrices of phi_n and f_n, n,m <= 15", worst, 1e-8,
            worst <= 1e-8};
}

// --- criterion 6: kernel-kernel integral vs kernel series ---------------------

CheckResult check_kernel_kernel(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 6);
    const KernelParams params{cfg.alpha, cfg.R};
    const HalfLineRule rule = build_halfline(cfg.alpha, cfg.halfline_nodes);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const Quaternion q = rng.ball(0.5 * cfg.R);
        const Quaternion q2 = rng.ball(0.5 * cfg.R);
        worst = std::max(worst, rel_residual(kernel_kernel_integral(q, q2, params, rule),
                                             kernel_series(q, q2, params, trunc_of(cfg))));
    }
    return {6, "kernel-kernel half-line integral vs kernel series", worst, 1e-6, worst <= 1e-6};
}

// --- criterion 7: forward transform maps phi_n to f_n -------------------------

CheckResult check_basis_mapping(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 7);
    const KernelParams params{cfg.alpha, cfg.R};
    const HalfLineRule rule = build_halfline(cfg.alpha, cfg.halfline_nodes);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const Quaternion q = rng.ball(0.7 * cfg.R);
        for (unsigned n = 0; n <= 12; ++n) {
            LaguerreCoefficients phi{cfg.alpha, std::vector<Quaternion>(n + 1)};
            phi.coeffs[n] = Quaternion{1.0};
            worst = std::max(worst, abs(forward(phi, q, params, rule) -
                                        evaluate(basis_f(n, params), q)));
        }
    }
    return {7, "forward transform: phi_n maps to f_n", worst, 1e-7, worst <= 1e-7};
}

// --- criterion 8: isometry of the coefficient-space transform -----------------

CheckResult check_isometry(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 8);
    const KernelParams params{cfg.alpha, cfg.R};
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        LaguerreCoefficients phi{cfg.alpha, {}};
        double norm_sq = 0.0;
        for (int n = 0; n <= 10; ++n) {
            const Quaternion c = rng.ball(1.0);
            phi.coeffs.push_back(c);
            norm_sq += abs_sq(c);
        }
        const SeriesFunction f = forward_coeffs(phi, params);
        const double norm_f =
            std::sqrt(real_part(inner_product_coeffs(f, f, cfg.alpha)));
        worst = std::max(worst, std::fabs(norm_f - std::sqrt(norm_sq)));
    }
    return {8, "isometry: ||forward_coeffs(phi)|| vs ||phi||", worst, 1e-10, worst <= 1e-10};
}

// --- criterion 9: inverse transform maps f_n to phi_n --------------------------

CheckResult check_inverse(const VerifyConfig& cfg) {
    const KernelParams params{cfg.alpha, cfg.R};
    const DiskRule rule = build_disk(cfg.alpha, cfg.R, ImaginaryUnit::canonical_i(),
                                     cfg.radial_nodes, cfg.angular_nodes);
    double worst = 0.0;
    for (unsigned n = 0; n <= 8; ++n) {
        const SeriesFunction f = basis_f(n, params);
        for (double t : {0.1, 1.0, 5.0}) {
            worst = std::max(worst, abs(inverse(f, t, params, rule) -
                                        Quaternion{basis_phi(n, cfg.alpha, t)}));
        }
    }
    return {9, "inverse transform: f_n maps to phi_n", worst, 1e-5, worst <= 1e-5};
}

// --- criterion 10: reproducing property ---------------------------------------

CheckResult check_reproduce(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 10);
    const KernelParams params{cfg.alpha, cfg.R};
    const DiskRule rule = build_disk(cfg.alpha, cfg.R, ImaginaryUnit::canonical_i(),
                                     cfg.radial_nodes, cfg.angular_nodes);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        SeriesFunction f;
        f.radius = cfg.R;
        for (int n = 0; n <= 10; ++n) f.coeffs.push_back(rng.ball(1.0));
        const Quaternion q = rng.ball(0.75 * cfg.R);
        worst = std::max(worst, abs(reproduce(f, q, params, rule) - evaluate(f, q)));
    }
    return {10, "reproducing property on random degree-10 polynomials", worst, 1e-8,
            worst <= 1e-8};
}

// --- criterion 11: asymptotic degeneration into the Fock theory ---------------

CheckResult check_asymptotics(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 11);
    const Quaternion q = rng.ball(1.0);
    const Quaternion p = rng.ball(1.0);

    // violation measure: 0 when every column is strictly decreasing (or
    // identically zero) and every empirical order sits inside [1.5, 2.5]
    double violation = 0.0;
    const auto check_monotone = [&violation](const std::vector<double>& col) {
        if (std::all_of(col.begin(), col.end(), [](double e) { return e == 0.0; })) return;
        for (std::size_t i = 0; i + 1 < col.size(); ++i)
            if (!(col[i + 1] < col[i]))
                violation = std::max(violation, col[i + 1] - col[i] + 1.0);
    };

    for (double nu : {0.5, 1.0}) {
        const LimitSweep sweep{nu, {5.0, 10.0, 20.0, 40.0, 80.0}, q, p};
        const std::vector<SweepRow> rows = run_sweep(sweep);

        std::vector<double> density, kernel;
        std::array<std::vector<double>, 4> basis;
        for (const SweepRow& row : rows) {
            density.push_back(row.density_err);
            kernel.push_back(row.kernel_err);
            for (unsigned n = 0; n < 4; ++n) basis[n].push_back(row.basis_err[n]);
        }
        check_monotone(density);
        check_monotone(kernel);
        for (unsigned n = 0; n < 4; ++n) check_monotone(basis[n]);

        for (std::size_t i = 0; i + 1 < kernel.size(); ++i) {
            const double order = std::log2(kernel[i] / kernel[i + 1]);
            if (order < 1.5) violation = std::max(violation, 1.5 - order);
            if (order > 2.5) violation = std::max(violation, order - 2.5);
        }
    }
    return {11, "asymptotics: monotone sweep errors, kernel order in [1.5, 2.5]", violation,
            0.0, violation == 0.0};
}

// --- criterion 12: quadrature monomial exactness -------------------------------

CheckResult check_quadrature_exactness(const VerifyConfig& cfg) {
    double worst = 0.0;

    // half-line: integral of t^k against the normalized measure is (alpha+1)_k
    const auto halfline_table = [&worst](double alpha, std::size_t N, unsigned kmax) {
        const HalfLineRule rule = build_halfline(alpha, N);
        for (unsigned k = 0; k <= kmax; ++k) {
            double got = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                got += rule.weights[i] * std::pow(rule.nodes[i], k);
            const double want = pochhammer(alpha + 1.0, k);
            worst = std::max(worst, std::fabs(got - want) / want);
        }
    };
    for (double alpha : {0.5, 1.0, 2.5})
        for (std::size_t N : {std::size_t{1}, std::size_t{2}, std::size_t{8}, std::size_t{32}})
            halfline_table(alpha, N, static_cast<unsigned>(2 * N - 1));
    // spot check the default-size rule on low moments ((alpha+1)_k stays in range)
    halfline_table(cfg.alpha, cfg.halfline_nodes, 40);

    // disk: <e_n, e_m> = delta_nm n! R^{2n} Gamma(a+1)/Gamma(n+a+1); residuals are
    // measured against the natural scale sqrt(||e_n|| ||e_m||)
    for (double alpha : {1.0, 2.5}) {
        const KernelParams params{alpha, cfg.R};
        const DiskRule rule = build_disk(alpha, cfg.R, ImaginaryUnit::canonical_i(), 16, 48);
        constexpr unsigned kMax = 12;
        std::array<std::array<Quaternion, kMax + 1>, kMax + 1> moments{};
        const double wang = 1.0 / static_cast<double>(rule.angular_count);
        for (std::size_t i = 0; i < rule.radial_nodes.size(); ++i) {
            for (std::size_t j = 0; j < rule.angular_count; ++j) {
                const Quaternion z = disk_point(rule, i, j);
                std::array<Quaternion, kMax + 1> pow_z;
                pow_z[0] = Quaternion{1.0};
                for (unsigned n = 1; n <= kMax; ++n) pow_z[n] = pow_z[n - 1] * z;
                const double w = rule.radial_weights[i] * wang;
                for (unsigned n = 0; n <= kMax; ++n)
                    for (unsigned m = 0; m <= kMax; ++m)
                        moments[n][m] += (conj(pow_z[n]) * pow_z[m]) * w;
            }
        }
        for (unsigned n = 0; n <= kMax; ++n) {
            for (unsigned m = 0; m <= kMax; ++m) {
                const double want = (n == m) ? monomial_norm_sq(n, params) : 0.0;
                const double scale = std::sqrt(monomial_norm_sq(n, params) *
                                               monomial_norm_sq(m, params));
                worst = std::max(worst, abs(moments[n][m] - Quaternion{want}) / scale);
            }
        }
    }

    return {12, "quadrature monomial exactness tables", worst, 1e-11, worst <= 1e-11};
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identity", "ortho",      "isometry",
                                                "reproduce", "kkintegral", "asymptotic"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config) {
    std::vector<CheckResult> results;
    const bool all = suite == "all";
    if (all || suite == "identity") {
        results.push_back(check_kernel_identity(config));
        results.push_back(check_alpha1_forms(config));
        results.push_back(check_slice_restriction(config));
        results.push_back(check_representation_kernel(config));
    }
    if (all || suite == "ortho") {
        results.push_back(check_orthonormality(config));
        results.push_back(check_quadrature_exactness(config));
    }
    if (all || suite == "kkintegral") results.push_back(check_kernel_kernel(config));
    if (all || suite == "isometry") {
        results.push_back(check_basis_mapping(config));
        results.push_back(check_isometry(config));
        results.push_back(check_inverse(config));
    }
    if (all || suite == "reproduce") results.push_back(check_reproduce(config));
    if (all || suite == "asymptotic") results.push_back(check_asymptotics(config));
    if (results.empty()) throw std::invalid_argument("unknown suite: " + suite);

    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.criterion < b.criterion; });
    return results;
}

}  // namespace slicebergman
