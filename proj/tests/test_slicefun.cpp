#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slicebergman/quadrature.hpp"
#include "slicebergman/slicefun.hpp"
#include "slicebergman/special.hpp"
#include "slicebergman/verification.hpp"

using namespace slicebergman;

namespace {

const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
const Quaternion qk{0, 0, 0, 1};

bool close(const Quaternion& a, const Quaternion& b, double tol) {
    return abs(a - b) <= tol;
}

SeriesFunction random_poly(Rng& rng, unsigned degree, double radius) {
    SeriesFunction f;
    f.radius = radius;
    for (unsigned n = 0; n <= degree; ++n) f.coeffs.push_back(rng.ball(1.0));
    return f;
}

}  // namespace

TEST_CASE("evaluate") {
    SUBCASE("constant") {
        const SeriesFunction f{{Quaternion{2, -1, 0.5, 3}}, 1.0};
        CHECK(evaluate(f, Quaternion{0.1, 0.2, 0, 0}) == f.coeffs[0]);
    }
    SUBCASE("monomial e_2 at j") {
        const SeriesFunction f{{{}, {}, Quaternion{1.0}}, 2.0};
        CHECK(close(evaluate(f, qj), Quaternion{-1.0}, 0.0));
    }
    SUBCASE("powers multiply coefficients from the left") {
        const SeriesFunction f{{{}, qi}, 2.0};  // f(q) = q i
        CHECK(close(evaluate(f, qj), -qk, 0.0));  // j i = -k
    }
    SUBCASE("outside the ball") {
        const SeriesFunction f{{Quaternion{1.0}}, 1.0};
        CHECK_THROWS_AS(evaluate(f, Quaternion{1.5}), std::domain_error);
    }
}

TEST_CASE("representation formula") {
    const auto f_sq = [](const Quaternion& q) { return q * q; };

    SUBCASE("J = I collapses to direct evaluation") {
        const ImaginaryUnit I = ImaginaryUnit::canonical_i();
        const Quaternion got = representation_formula(f_sq, 0.7, 0.4, I, I);
        CHECK(close(got, f_sq(recompose(0.7, 0.4, I)), 1e-15));
    }
    SUBCASE("y = 0 collapses to the real point") {
        const Quaternion got = representation_formula(
            f_sq, 0.5, 0.0, ImaginaryUnit::canonical_i(), ImaginaryUnit::canonical_j());
        CHECK(close(got, Quaternion{0.25}, 1e-15));
    }
    SUBCASE("q^2 reconstructed across slices") {
        // f(1 + 2j) = (1+2j)^2 = -3 + 4j, rebuilt from values on C_i
        const Quaternion got =
            representation_formula(f_sq, 1.0, 2.0, ImaginaryUnit::canonical_i(),
                                   ImaginaryUnit::canonical_j());
        CHECK(close(got, Quaternion{-3, 0, 4, 0}, 1e-14));
    }
    SUBCASE("consistency with direct evaluation of series functions") {
        Rng rng(43);
        for (int trial = 0; trial < 50; ++trial) {
            const SeriesFunction f = random_poly(rng, 6, 4.0);
            const ImaginaryUnit I = rng.unit();
            const ImaginaryUnit J = rng.unit();
            const double x = rng.uniform(-1.5, 1.5);
            const double y = rng.uniform(0.0, 1.5);
            const Quaternion direct = evaluate(f, recompose(x, y, J));
            const Quaternion via_formula = representation_formula(
                [&f](const Quaternion& z) { return evaluate(f, z); }, x, y, I, J);
            CHECK(close(via_formula, direct, 1e-12 * (1.0 + abs(direct))));
        }
    }
}

TEST_CASE("extension") {
    SUBCASE("point already in the slice") {
        const ImaginaryUnit I = ImaginaryUnit::canonical_i();
        const auto h = [](const Quaternion& z) { return z * z + Quaternion{1.0}; };
        const Quaternion q = recompose(0.3, 0.8, I);
        CHECK(close(extend(h, I, q), h(q), 1e-15));
    }
    SUBCASE("constants extend to constants") {
        const Quaternion c{1, -2, 3, 0.5};
        Rng rng(47);
        for (int trial = 0; trial < 20; ++trial) {
            const Quaternion q = rng.ball(3.0);
            CHECK(close(extend([&c](const Quaternion&) { return c; },
                               ImaginaryUnit::canonical_i(), q),
                        c, 1e-15));
        }
    }
    SUBCASE("restriction of q^3 extends back to q^3") {
        Rng rng(53);
        const auto cube = [](const Quaternion& z) { return z * z * z; };
        for (int trial = 0; trial < 50; ++trial) {
            const Quaternion q = rng.ball(2.0);
            const ImaginaryUnit I = rng.unit();
            CHECK(close(extend(cube, I, q), int_pow(q, 3), 1e-12 * (1.0 + abs_sq(q) * abs(q))));
        }
    }
}

TEST_CASE("pointwise splitting") {
    SUBCASE("worked example") {
        const auto [F, G] = split_value(Quaternion{1, 2, 3, 4}, ImaginaryUnit::canonical_i(),
                                        ImaginaryUnit::canonical_j());
        CHECK(close(F, Quaternion{1, 2, 0, 0}, 0.0));
        CHECK(close(G, Quaternion{3, 4, 0, 0}, 0.0));
    }
    SUBCASE("value already in the slice") {
        const auto [F, G] = split_value(Quaternion{2, -1, 0, 0}, ImaginaryUnit::canonical_i(),
                                        ImaginaryUnit::canonical_j());
        CHECK(close(F, Quaternion{2, -1, 0, 0}, 0.0));
        CHECK(close(G, Quaternion{}, 0.0));
    }
    SUBCASE("recombination on random values and slices") {
        Rng rng(59);
        for (int trial = 0; trial < 50; ++trial) {
            const Quaternion v = rng.ball(3.0);
            const ImaginaryUnit I = rng.unit();
            // build J perpendicular to I from a random direction
            const Quaternion raw = rng.unit().as_quaternion();
            const Quaternion proj = raw - dot(ImaginaryUnit(raw.x, raw.y, raw.z), I) * I;
            if (imag_norm(proj) < 1e-3) continue;
            const ImaginaryUnit J(proj.x, proj.y, proj.z);
            const auto [F, G] = split_value(v, I, J);
            CHECK(close(F + G * J, v, 1e-14 * (1.0 + abs(v))));
            // F and G live in C_I
            CHECK(std::fabs(dot(I, J)) <= 1e-12);
        }
    }
    SUBCASE("non-perpendicular units are rejected") {
        CHECK_THROWS_AS(split_value(Quaternion{1, 1, 1, 1}, ImaginaryUnit::canonical_i(),
                                    ImaginaryUnit(1, 1, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("coefficient inner product") {
    SUBCASE("disjoint monomials are orthogonal") {
        const SeriesFunction e1{{{}, Quaternion{1.0}}, 1.0};
        const SeriesFunction e2{{{}, {}, Quaternion{1.0}}, 1.0};
        CHECK(close(inner_product_coeffs(e1, e2, 1.0), Quaternion{}, 0.0));
    }
    SUBCASE("monomial norm at alpha = 1, R = 1") {
        const SeriesFunction e1{{{}, Quaternion{1.0}}, 1.0};
        CHECK(real_part(inner_product_coeffs(e1, e1, 1.0)) == doctest::Approx(0.5));
    }
    SUBCASE("radius mismatch") {
        const SeriesFunction f{{Quaternion{1.0}}, 1.0};
        const SeriesFunction g{{Quaternion{1.0}}, 2.0};
        CHECK_THROWS_AS(inner_product_coeffs(f, g, 1.0), std::invalid_argument);
    }
    SUBCASE("matches the disk quadrature on random degree-5 pairs") {
        Rng rng(61);
        const double alpha = 1.5;
        const double R = 1.2;
        const DiskRule rule = build_disk(alpha, R, ImaginaryUnit::canonical_i(), 32, 64);
        for (int trial = 0; trial < 10; ++trial) {
            const SeriesFunction f = random_poly(rng, 5, R);
            const SeriesFunction g = random_poly(rng, 5, R);
            const Quaternion via_coeffs = inner_product_coeffs(f, g, alpha);
            const Quaternion via_quad = integrate_disk(rule, [&](const Quaternion& z) {
                return conj(evaluate(f, z)) * evaluate(g, z);
            });
            CHECK(close(via_quad, via_coeffs, 1e-10 * (1.0 + abs(via_coeffs))));
        }
    }
    SUBCASE("squared norm is real, nonnegative, slice-independent") {
        Rng rng(67);
        const double alpha = 2.0;
        const double R = 1.0;
        const DiskRule rule_i = build_disk(alpha, R, ImaginaryUnit::canonical_i(), 32, 64);
        const DiskRule rule_k = build_disk(alpha, R, ImaginaryUnit::canonical_k(), 32, 64);
        for (int trial = 0; trial < 10; ++trial) {
            const SeriesFunction f = random_poly(rng, 5, R);
            const Quaternion nsq = inner_product_coeffs(f, f, alpha);
            CHECK(real_part(nsq) >= 0.0);
            CHECK(imag_norm(nsq) <= 1e-14 * (1.0 + real_part(nsq)));
            const auto integrand = [&](const Quaternion& z) {
                const Quaternion v = evaluate(f, z);
                return conj(v) * v;
            };
            const Quaternion n_i = integrate_disk(rule_i, integrand);
            const Quaternion n_k = integrate_disk(rule_k, integrand);
            CHECK(close(n_i, n_k, 1e-10 * (1.0 + abs(n_i))));
            CHECK(close(n_i, nsq, 1e-10 * (1.0 + abs(nsq))));
        }
    }
}
