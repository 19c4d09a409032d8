#pragma once

/**
 * Closed-form biquaternion fields with exact first derivatives.
 *
 * A Field is evaluated on a Jet: a value together with its partial
 * derivatives along the 8 real coordinates of H_C. Slots 0..3 are the real
 * parts x_mu of the point, slots 4..7 the imaginary parts y_mu (the point is
 * sum_mu (x_mu + I y_mu) e_mu). Fields over the real domain only seed slots
 * 0..3.
 */

#include <array>
#include <functional>
#include <utility>

#include "twistorlab/quat.hpp"

namespace twistorlab {

inline constexpr int kJetSlots = 8;

struct Jet {
  Biquaternion value;
  std::array<Biquaternion, kJetSlots> d{};
  int n{0};  // leading slots in use; the rest are zero

  Jet() = default;
  Jet(const Biquaternion& v) : value{v} {}  // NOLINT: constants lift implicitly
  Jet(double v) : value{v} {}               // NOLINT
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(Complex s, const Jet& a);
Jet operator*(double s, const Jet& a);

Jet conj(const Jet& a, ConjKind kind);
inline Jet qconj(const Jet& a) { return conj(a, ConjKind::Quaternion); }

// a^-1 with d(a^-1) = -a^-1 da a^-1. Throws SingularField on a zero divisor.
Jet inverse(const Jet& a);

// Complex-analytic functions of a complex-scalar jet. The vector part of the
// value must vanish (relative 1e-10); throws SingularField otherwise.
Jet analytic(const Jet& a, Complex (*f)(Complex), Complex (*df)(Complex));
// Principal branch; throws BranchFailure on the cut (zero or negative real).
Jet csqrt(const Jet& a);
Jet cexp(const Jet& a);
Jet csin(const Jet& a);
Jet ccos(const Jet& a);
Jet csinh(const Jet& a);
Jet ccosh(const Jet& a);

enum class Domain { Real, Complex };

class Field {
 public:
  using Fn = std::function<Jet(const Jet&)>;

  Field() = default;
  explicit Field(Fn fn, Domain domain = Domain::Real) : fn_{std::move(fn)}, domain_{domain} {}

  static Field constant(const Biquaternion& c, Domain domain = Domain::Real);
  static Field identity(Domain domain = Domain::Real);

  Domain domain() const { return domain_; }

  // Seeds the coordinate jet at p and evaluates. For the real domain the
  // imaginary bank of p is ignored.
  Jet jet(const Biquaternion& p) const;
  Biquaternion operator()(const Biquaternion& p) const { return jet(p).value; }

  // Value at a point of H_C without seeding derivatives or dropping the
  // imaginary bank.
  Biquaternion at(const Biquaternion& p) const { return fn_(Jet{p}).value; }

  // Evaluates the field on an already-seeded jet (composition).
  Jet apply(const Jet& x) const { return fn_(x); }

  // Same map, re-tagged for the complexified domain.
  Field complexified() const { return Field{fn_, Domain::Complex}; }

 private:
  Fn fn_;
  Domain domain_{Domain::Real};
};

// Jet of the coordinate map at p.
Jet seed(const Biquaternion& p, Domain domain);

// Central finite-difference partials of F at p (test oracle; step h relative
// to 1 + |p|).
std::array<Biquaternion, kJetSlots> finite_difference(const Field& f, const Biquaternion& p,
                                                      double h = 1e-5);

}  // namespace twistorlab
