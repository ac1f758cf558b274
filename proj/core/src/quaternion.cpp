#include "slicebergman/quaternion.hpp"

namespace slicebergman {

SliceDecomposition decompose(const Quaternion& q) {
    const double y = imag_norm(q);
    if (y <= 1e-14 * (1.0 + abs(q))) {
        return {q.w, y, ImaginaryUnit::canonical_i()};
    }
    return {q.w, y, ImaginaryUnit(q.x / y, q.y / y, q.z / y)};
}

Quaternion slice_exp(const Quaternion& q) {
    const SliceDecomposition d = decompose(q);
    const double ex = std::exp(d.x);
    return recompose(ex * std::cos(d.y), ex * std::sin(d.y), d.unit);
}

Quaternion int_pow(Quaternion q, unsigned n) {
    Quaternion acc{1.0};
    while (n != 0) {
        if (n & 1u) acc = acc * q;
        q = q * q;
        n >>= 1u;
    }
    return acc;
}

Quaternion slice_pow(const Quaternion& q, double s) {
    const bool integral = (s == std::nearbyint(s));
    const SliceDecomposition d = decompose(q);

    if (d.y <= 1e-14 * (1.0 + abs(q))) {
        if (d.x > 0.0) return Quaternion{std::pow(d.x, s)};
        if (integral) {
            if (d.x == 0.0 && s <= 0.0)
                throw BranchCutError("slice_pow: zero base with nonpositive exponent");
            // std::pow handles negative bases for integral exponents
            return Quaternion{std::pow(d.x, s)};
        }
        throw BranchCutError("slice_pow: nonpositive real base with non-integer exponent");
    }

    const double r = std::hypot(d.x, d.y);
    const double theta = std::atan2(d.y, d.x);  // in (0, pi) since y > 0
    const double rs = std::pow(r, s);
    return recompose(rs * std::cos(s * theta), rs * std::sin(s * theta), d.unit);
}

}  // namespace slicebergman
