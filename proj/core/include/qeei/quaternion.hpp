#pragma once

#include <cmath>
#include <iosfwd>
#include <string>

namespace qeei {

/// Real quaternion w + x i + y j + z k with i^2 = j^2 = k^2 = ijk = -1.
///
/// Multiplication is the Hamilton product and is not commutative, so every
/// product in this library is written in the order it is meant.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }

  constexpr Quaternion& operator+=(const Quaternion& q) {
    w += q.w; x += q.x; y += q.y; z += q.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& q) {
    w -= q.w; x -= q.x; y -= q.y; z -= q.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s; x /= s; y /= s; z /= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator/(Quaternion q, double s) { return q /= s; }

/// Hamilton product p q.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// Squared modulus w^2 + x^2 + y^2 + z^2.
constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

/// sqrt(norm_sq(q)).
inline double modulus(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// conj(q) / norm_sq(q); throws Error(kZeroDivisor) for q = 0.
Quaternion inverse(const Quaternion& q);

/// Largest componentwise absolute difference.
double max_abs_diff(const Quaternion& p, const Quaternion& q);

/// "a+bi+cj+dk" with signs absorbed and zero parts dropped ("1-2i+3k").
/// Components are printed with `precision` significant digits.
std::string to_string(const Quaternion& q, int precision = 6);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qeei
