#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slicebergman/quadrature.hpp"
#include "slicebergman/special.hpp"

using namespace slicebergman;

TEST_CASE("half-line rule: one node matches the first two moments") {
    for (double alpha : {0.5, 2.0}) {
        const HalfLineRule rule = build_halfline(alpha, 1);
        REQUIRE(rule.nodes.size() == 1);
        CHECK(rule.nodes[0] == doctest::Approx(alpha + 1.0));
        CHECK(rule.weights[0] == doctest::Approx(1.0));
    }
}

TEST_CASE("half-line rule: weights sum to one") {
    for (double alpha : {0.5, 1.0, 2.5}) {
        for (std::size_t n : {std::size_t{2}, std::size_t{16}, std::size_t{128}}) {
            const HalfLineRule rule = build_halfline(alpha, n);
            double sum = 0.0;
            for (double w : rule.weights) sum += w;
            CHECK(std::fabs(sum - 1.0) <= 1e-13);
        }
    }
}

TEST_CASE("half-line rule: t^2 against the alpha = 0 measure is Gamma(3) = 2") {
    const HalfLineRule rule = build_halfline(0.0, 2);
    const Quaternion got = integrate_halfline(rule, [](double t) { return Quaternion{t * t}; });
    CHECK(real_part(got) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("half-line rule: monomial exactness, moment k is (alpha+1)_k") {
    for (double alpha : {0.5, 1.0, 2.5}) {
        for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{8}, std::size_t{32}}) {
            const HalfLineRule rule = build_halfline(alpha, n);
            for (unsigned k = 0; k < 2 * n; ++k) {
                double got = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                    got += rule.weights[i] * std::pow(rule.nodes[i], k);
                const double want = pochhammer(alpha + 1.0, k);
                CHECK(std::fabs(got - want) <= 1e-11 * want);
            }
        }
    }
}

TEST_CASE("half-line rule: nodes positive and strictly increasing") {
    const HalfLineRule rule = build_halfline(1.0, 128);
    CHECK(rule.nodes.front() > 0.0);
    for (std::size_t i = 0; i + 1 < rule.nodes.size(); ++i)
        CHECK(rule.nodes[i] < rule.nodes[i + 1]);
}

TEST_CASE("half-line rule: Laguerre orthogonality at the rule's degree") {
    const double alpha = 1.5;
    const HalfLineRule rule = build_halfline(alpha, 32);
    for (unsigned n = 0; n <= 15; ++n) {
        for (unsigned m = 0; m <= 15; ++m) {
            const Quaternion got = integrate_halfline(rule, [&](double t) {
                return Quaternion{laguerre(n, alpha, t) * laguerre(m, alpha, t)};
            });
            const double want = (n == m) ? gamma_ratio(n, alpha) : 0.0;
            CHECK(std::fabs(real_part(got) - want) <= 1e-10 * (1.0 + std::fabs(want)));
        }
    }

    SUBCASE("a low-degree cross term captured by a small rule") {
        const HalfLineRule small = build_halfline(1.0, 8);  // exact through degree 15
        const Quaternion got = integrate_halfline(small, [](double t) {
            return Quaternion{laguerre(2, 1.0, t) * laguerre(5, 1.0, t)};
        });
        CHECK(std::fabs(real_part(got)) <= 1e-12);
    }
}

TEST_CASE("disk rule: normalized mass and angular symmetry") {
    const DiskRule rule = build_disk(1.5, 2.0, ImaginaryUnit::canonical_j(), 24, 48);
    CHECK(abs(integrate_disk(rule, [](const Quaternion&) { return Quaternion{1.0}; }) -
              Quaternion{1.0}) <= 1e-13);
    CHECK(abs(integrate_disk(rule, [](const Quaternion& z) { return z; })) <= 1e-13);
    CHECK(abs(integrate_disk(rule, [](const Quaternion& z) { return conj(z) * z * z; })) <=
          1e-12);
}

TEST_CASE("disk rule: |z|^2 integrates to R^2/(alpha+1)") {
    const double alpha = 1.5;
    const double R = 2.0;
    const DiskRule rule = build_disk(alpha, R, ImaginaryUnit::canonical_i(), 16, 8);
    const Quaternion got =
        integrate_disk(rule, [](const Quaternion& z) { return Quaternion{abs_sq(z)}; });
    CHECK(real_part(got) == doctest::Approx(R * R / (alpha + 1.0)).epsilon(1e-12));
}

TEST_CASE("disk rule: |z|^4 at alpha = 1, R = 1 integrates to 1/3") {
    const DiskRule rule = build_disk(1.0, 1.0, ImaginaryUnit::canonical_i(), 16, 8);
    const Quaternion got = integrate_disk(
        rule, [](const Quaternion& z) { return Quaternion{abs_sq(z) * abs_sq(z)}; });
    CHECK(real_part(got) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("disk rule: monomial moment table") {
    const double alpha = 2.5;
    const double R = 1.5;
    const DiskRule rule = build_disk(alpha, R, ImaginaryUnit::canonical_i(), 8, 32);
    for (unsigned n = 0; n <= 8; ++n) {
        for (unsigned m = 0; m <= 8; ++m) {
            const Quaternion got = integrate_disk(rule, [&](const Quaternion& z) {
                return int_pow(conj(z), n) * int_pow(z, m);
            });
            const double norm_n = std::pow(R * R, n) / gamma_ratio(n, alpha);
            const double want = (n == m) ? norm_n : 0.0;
            const double scale =
                std::sqrt(norm_n * std::pow(R * R, m) / gamma_ratio(m, alpha));
            CHECK(abs(got - Quaternion{want}) <= 1e-11 * scale);
        }
    }
}

TEST_CASE("disk rule: refinement stability for a smooth non-polynomial integrand") {
    const double R = 1.3;
    const auto f = [R](const Quaternion& z) { return slice_exp(conj(z) / (2.0 * R)); };
    const DiskRule coarse = build_disk(1.0, R, ImaginaryUnit::canonical_i(), 64, 128);
    const DiskRule fine = build_disk(1.0, R, ImaginaryUnit::canonical_i(), 128, 256);
    CHECK(abs(integrate_disk(coarse, f) - integrate_disk(fine, f)) <= 1e-10);
}

TEST_CASE("constructor preconditions") {
    CHECK_THROWS_AS(build_halfline(-1.5, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_halfline(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_disk(0.0, 1.0, ImaginaryUnit::canonical_i(), 4, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_disk(1.0, 1.0, ImaginaryUnit::canonical_i(), 4, 1),
                    std::invalid_argument);
}
