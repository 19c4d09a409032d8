#pragma once

/**
 * Quaternions, biquaternions and unit imaginary quaternions.
 *
 * Components are always stored in the order (w, x, y, z) <-> (1, i, j, k).
 * A biquaternion is re + I*im where I is the complex unit; I commutes with
 * the quaternion units i, j, k.
 */

#include <array>
#include <cmath>
#include <complex>

#include "twistorlab/error.hpp"

namespace twistorlab {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

struct Quaternion {
  double w{0.0}, x{0.0}, y{0.0}, z{0.0};

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w{w_}, x{x_}, y{y_}, z{z_} {}

  // e_mu = {1, i, j, k}
  static constexpr Quaternion unit(int mu) {
    return {mu == 0 ? 1.0 : 0.0, mu == 1 ? 1.0 : 0.0, mu == 2 ? 1.0 : 0.0, mu == 3 ? 1.0 : 0.0};
  }

  constexpr double operator[](int mu) const {
    return mu == 0 ? w : mu == 1 ? x : mu == 2 ? y : z;
  }
  constexpr double& operator[](int mu) {
    return mu == 0 ? w : mu == 1 ? x : mu == 2 ? y : z;
  }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr Quaternion vector() const { return {0.0, x, y, z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

// Throws ZeroDivisor for q = 0.
Quaternion inverse(const Quaternion& q);

enum class ConjKind { Quaternion, Complex, Both };

struct Biquaternion {
  Quaternion re;
  Quaternion im;

  constexpr Biquaternion() = default;
  constexpr Biquaternion(const Quaternion& r, const Quaternion& i = {}) : re{r}, im{i} {}
  constexpr Biquaternion(double s) : re{s} {}  // NOLINT: real scalars embed implicitly
  Biquaternion(Complex s) : re{s.real()}, im{s.imag()} {}  // NOLINT

  static constexpr Biquaternion unit(int mu) { return {Quaternion::unit(mu)}; }

  // Complex coefficient of e_mu: re[mu] + I*im[mu].
  Complex component(int mu) const { return {re[mu], im[mu]}; }
  static Biquaternion from_components(const std::array<Complex, 4>& c) {
    return {{c[0].real(), c[1].real(), c[2].real(), c[3].real()},
            {c[0].imag(), c[1].imag(), c[2].imag(), c[3].imag()}};
  }

  Complex scalar() const { return component(0); }
  constexpr Biquaternion vector() const { return {re.vector(), im.vector()}; }

  // Quaternion conjugate: reverses i, j, k in both banks.
  constexpr Biquaternion qconj() const { return {re.conj(), im.conj()}; }
  // Complex conjugate: reverses the complex unit.
  constexpr Biquaternion cconj() const { return {re, -im}; }

  // Sum of squares of all 8 real components.
  constexpr double norm2() const { return re.norm2() + im.norm2(); }
  double norm() const { return std::sqrt(norm2()); }

  // a * qconj(a), always a complex scalar.
  Complex qnorm() const { return {re.norm2() - im.norm2(), 2.0 * dot(re, im)}; }

  constexpr Biquaternion& operator+=(const Biquaternion& o) {
    re += o.re; im += o.im;
    return *this;
  }
  constexpr Biquaternion& operator-=(const Biquaternion& o) {
    re -= o.re; im -= o.im;
    return *this;
  }
  constexpr bool operator==(const Biquaternion&) const = default;
};

constexpr Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
constexpr Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
constexpr Biquaternion operator-(const Biquaternion& a) { return {-a.re, -a.im}; }
constexpr Biquaternion operator*(double s, const Biquaternion& a) { return {s * a.re, s * a.im}; }
constexpr Biquaternion operator*(const Biquaternion& a, double s) { return {s * a.re, s * a.im}; }
inline Biquaternion operator*(Complex s, const Biquaternion& a) {
  return {s.real() * a.re - s.imag() * a.im, s.real() * a.im + s.imag() * a.re};
}
inline Biquaternion operator*(const Biquaternion& a, Complex s) { return s * a; }
inline Biquaternion operator/(const Biquaternion& a, Complex s) { return (1.0 / s) * a; }

constexpr Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Biquaternion bq_mul(const Biquaternion& a, const Biquaternion& b) { return a * b; }

constexpr Biquaternion bq_conj(const Biquaternion& a, ConjKind kind) {
  switch (kind) {
    case ConjKind::Quaternion: return a.qconj();
    case ConjKind::Complex: return a.cconj();
    case ConjKind::Both: return a.qconj().cconj();
  }
  return a;
}

// Scale-relative zero-divisor test: |a qconj(a)| < 1e-12 (1 + |a|^2).
bool is_zero_divisor(const Biquaternion& a);

// qconj(a) / (a qconj(a)). Throws ZeroDivisor.
Biquaternion bq_inv(const Biquaternion& a);
inline Biquaternion inverse(const Biquaternion& a) { return bq_inv(a); }

// Point on the twistor fibre: Re = 0, |eta| = 1.
class UnitImaginary {
 public:
  UnitImaginary() : q_{0.0, 1.0, 0.0, 0.0} {}
  UnitImaginary(double x, double y, double z);

  // Strips the real part and rescales; throws InvalidArgument on a zero
  // vector part.
  static UnitImaginary normalized(const Quaternion& q);
  // Accepts q only when it is already unit imaginary to within tol.
  static UnitImaginary checked(const Quaternion& q, double tol = 1e-10);

  const Quaternion& quat() const { return q_; }
  operator Quaternion() const { return q_; }      // NOLINT
  operator Biquaternion() const { return {q_}; }  // NOLINT

 private:
  explicit UnitImaginary(const Quaternion& q, int) : q_{q} {}
  Quaternion q_;
};

// Projectors pi^(+-)_eta = I +- eta. eta may be a complexified structure.
inline Biquaternion pi_plus(const Biquaternion& eta) { return Biquaternion{kI} + eta; }
inline Biquaternion pi_minus(const Biquaternion& eta) { return Biquaternion{kI} - eta; }

// Identifies a complex number with span{1, i} inside H.
constexpr Quaternion from_complex(Complex z) { return {z.real(), z.imag(), 0.0, 0.0}; }

// z1 + z2 j
inline Quaternion complex_pair(Complex z1, Complex z2) {
  return from_complex(z1) + from_complex(z2) * Quaternion::unit(2);
}

}  // namespace twistorlab
