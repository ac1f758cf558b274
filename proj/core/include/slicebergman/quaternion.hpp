#pragma once

#include <cmath>
#include <stdexcept>

namespace slicebergman {

/// Element of the real quaternion algebra H = span{1, i, j, k} with
/// Hamilton's multiplication (i^2 = j^2 = k^2 = ijk = -1).
struct Quaternion {
    double w = 0.0;  // scalar part
    double x = 0.0;  // coefficient of i
    double y = 0.0;  // coefficient of j
    double z = 0.0;  // coefficient of k

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    // real numbers embed as scalars
    constexpr Quaternion(double real) : w(real) {}  // NOLINT(google-explicit-constructor)

    friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& a) {
        return {-a.w, -a.x, -a.y, -a.z};
    }

    // Hamilton product; noncommutative
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend constexpr Quaternion operator*(const Quaternion& a, double s) {
        return {a.w * s, a.x * s, a.y * s, a.z * s};
    }
    friend constexpr Quaternion operator*(double s, const Quaternion& a) { return a * s; }
    friend constexpr Quaternion operator/(const Quaternion& a, double s) {
        return {a.w / s, a.x / s, a.y / s, a.z / s};
    }

    Quaternion& operator+=(const Quaternion& b) { return *this = *this + b; }
    Quaternion& operator-=(const Quaternion& b) { return *this = *this - b; }
    Quaternion& operator*=(const Quaternion& b) { return *this = *this * b; }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double real_part(const Quaternion& q) { return q.w; }
constexpr Quaternion imag_part(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

constexpr double abs_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}
inline double abs(const Quaternion& q) { return std::sqrt(abs_sq(q)); }
inline double imag_norm(const Quaternion& q) {
    return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

/// Two-sided inverse conj(q)/|q|^2. Throws for q = 0.
inline Quaternion inverse(const Quaternion& q) {
    const double n2 = abs_sq(q);
    if (n2 == 0.0) throw std::domain_error("quaternion inverse of zero");
    return conj(q) / n2;
}

/// |Im(q)| <= 1e-14 (1 + |q|): below this the argument is treated as real
/// (avoids spurious branch errors from rounding).
inline bool is_effectively_real(const Quaternion& q) {
    return imag_norm(q) <= 1e-14 * (1.0 + abs(q));
}

/// Purely imaginary unit quaternion I (I^2 = -1). Parametrizes the slices
/// C_I = R + R I.
class ImaginaryUnit {
  public:
    /// Normalizes the direction (x, y, z); throws on the zero vector.
    ImaginaryUnit(double x, double y, double z) : x_(x), y_(y), z_(z) {
        const double n = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
        if (n == 0.0) throw std::invalid_argument("imaginary unit from zero vector");
        x_ /= n;
        y_ /= n;
        z_ /= n;
    }

    static ImaginaryUnit canonical_i() { return {1.0, 0.0, 0.0}; }
    static ImaginaryUnit canonical_j() { return {0.0, 1.0, 0.0}; }
    static ImaginaryUnit canonical_k() { return {0.0, 0.0, 1.0}; }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    Quaternion as_quaternion() const { return {0.0, x_, y_, z_}; }

    /// Euclidean inner product of the two directions; 0 means perpendicular slices.
    friend double dot(const ImaginaryUnit& a, const ImaginaryUnit& b) {
        return a.x_ * b.x_ + a.y_ * b.y_ + a.z_ * b.z_;
    }

  private:
    double x_, y_, z_;
};

inline Quaternion operator*(const ImaginaryUnit& i, const Quaternion& q) {
    return i.as_quaternion() * q;
}
inline Quaternion operator*(const Quaternion& q, const ImaginaryUnit& i) {
    return q * i.as_quaternion();
}
inline Quaternion operator*(const ImaginaryUnit& a, const ImaginaryUnit& b) {
    return a.as_quaternion() * b.as_quaternion();
}
inline Quaternion operator*(const ImaginaryUnit& i, double s) { return i.as_quaternion() * s; }

/// q = x + I y with y = |Im(q)| >= 0. For (effectively) real q the unit is the
/// canonical i, so every formula evaluated at real points stays slice-independent.
struct SliceDecomposition {
    double x;
    double y;
    ImaginaryUnit unit;
};

SliceDecomposition decompose(const Quaternion& q);

inline Quaternion recompose(const SliceDecomposition& d) {
    return Quaternion{d.x, 0.0, 0.0, 0.0} + d.unit * d.y;
}
inline Quaternion recompose(double x, double y, const ImaginaryUnit& unit) {
    return Quaternion{x, 0.0, 0.0, 0.0} + unit * y;
}

/// Raised by slice_pow on the branch cut (nonpositive real base, non-integer exponent).
struct BranchCutError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exponential computed inside the slice of q: with q = x + Iy,
/// e^x (cos y + I sin y).
Quaternion slice_exp(const Quaternion& q);

/// Principal-branch real power computed inside the slice of q: with q = x + Iy,
/// y > 0, |q|^s (cos(s t) + I sin(s t)) where t = atan2(y, x) in (0, pi).
/// Real q: x^s for x > 0, and for integer s any sign of x.
Quaternion slice_pow(const Quaternion& q, double s);

/// q^n for nonnegative integer n by binary exponentiation (Hamilton products only).
Quaternion int_pow(Quaternion q, unsigned n);

}  // namespace slicebergman
