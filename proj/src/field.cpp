#include "twistorlab/field.hpp"

#include <algorithm>

namespace twistorlab {

Jet operator+(const Jet& a, const Jet& b) {
  Jet r{a.value + b.value};
  r.n = std::max(a.n, b.n);
  for (int k = 0; k < r.n; ++k) r.d[k] = a.d[k] + b.d[k];
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet r{a.value - b.value};
  r.n = std::max(a.n, b.n);
  for (int k = 0; k < r.n; ++k) r.d[k] = a.d[k] - b.d[k];
  return r;
}

Jet operator-(const Jet& a) {
  Jet r{-a.value};
  r.n = a.n;
  for (int k = 0; k < r.n; ++k) r.d[k] = -a.d[k];
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r{a.value * b.value};
  r.n = std::max(a.n, b.n);
  for (int k = 0; k < r.n; ++k) r.d[k] = a.d[k] * b.value + a.value * b.d[k];
  return r;
}

Jet operator*(Complex s, const Jet& a) {
  Jet r{s * a.value};
  r.n = a.n;
  for (int k = 0; k < r.n; ++k) r.d[k] = s * a.d[k];
  return r;
}

Jet operator*(double s, const Jet& a) {
  Jet r{s * a.value};
  r.n = a.n;
  for (int k = 0; k < r.n; ++k) r.d[k] = s * a.d[k];
  return r;
}

Jet conj(const Jet& a, ConjKind kind) {
  Jet r{bq_conj(a.value, kind)};
  r.n = a.n;
  for (int k = 0; k < r.n; ++k) r.d[k] = bq_conj(a.d[k], kind);
  return r;
}

Jet inverse(const Jet& a) {
  Biquaternion inv;
  try {
    inv = bq_inv(a.value);
  } catch (const Error&) {
    throw Error(ErrorCode::SingularField, "inversion of a zero divisor inside a field");
  }
  Jet r{inv};
  r.n = a.n;
  for (int k = 0; k < r.n; ++k) r.d[k] = -(inv * a.d[k] * inv);
  return r;
}

Jet analytic(const Jet& a, Complex (*f)(Complex), Complex (*df)(Complex)) {
  if (a.value.vector().norm() > 1e-10 * (1.0 + a.value.norm())) {
    throw Error(ErrorCode::SingularField, "scalar function applied to a non-scalar biquaternion");
  }
  const Complex z = a.value.scalar();
  const Complex slope = df(z);
  Jet r{Biquaternion{f(z)}};
  r.n = a.n;
  for (int k = 0; k < r.n; ++k) r.d[k] = slope * a.d[k];
  return r;
}

Jet csqrt(const Jet& a) {
  const Complex z = a.value.scalar();
  if (std::abs(z) < 1e-14 * (1.0 + a.value.norm()) ||
      (z.real() < 0.0 && std::abs(z.imag()) <= 1e-14 * std::abs(z))) {
    throw Error(ErrorCode::BranchFailure, "square root evaluated on its branch cut");
  }
  return analytic(
      a, [](Complex w) { return std::sqrt(w); },
      [](Complex w) { return 0.5 / std::sqrt(w); });
}

Jet cexp(const Jet& a) {
  return analytic(
      a, [](Complex w) { return std::exp(w); }, [](Complex w) { return std::exp(w); });
}

Jet csin(const Jet& a) {
  return analytic(
      a, [](Complex w) { return std::sin(w); }, [](Complex w) { return std::cos(w); });
}

Jet ccos(const Jet& a) {
  return analytic(
      a, [](Complex w) { return std::cos(w); }, [](Complex w) { return -std::sin(w); });
}

Jet csinh(const Jet& a) {
  return analytic(
      a, [](Complex w) { return std::sinh(w); }, [](Complex w) { return std::cosh(w); });
}

Jet ccosh(const Jet& a) {
  return analytic(
      a, [](Complex w) { return std::cosh(w); }, [](Complex w) { return std::sinh(w); });
}

Jet seed(const Biquaternion& p, Domain domain) {
  Jet x{domain == Domain::Real ? Biquaternion{p.re} : p};
  x.n = domain == Domain::Real ? 4 : kJetSlots;
  for (int mu = 0; mu < 4; ++mu) {
    x.d[mu] = Biquaternion::unit(mu);
    if (domain == Domain::Complex) x.d[4 + mu] = kI * Biquaternion::unit(mu);
  }
  return x;
}

Field Field::constant(const Biquaternion& c, Domain domain) {
  return Field{[c](const Jet&) { return Jet{c}; }, domain};
}

Field Field::identity(Domain domain) {
  return Field{[](const Jet& x) { return x; }, domain};
}

Jet Field::jet(const Biquaternion& p) const { return fn_(seed(p, domain_)); }

std::array<Biquaternion, kJetSlots> finite_difference(const Field& f, const Biquaternion& p,
                                                      double h) {
  std::array<Biquaternion, kJetSlots> out{};
  const double step = h * (1.0 + p.norm());
  const int slots = f.domain() == Domain::Real ? 4 : 8;
  for (int k = 0; k < slots; ++k) {
    Biquaternion dp;
    if (k < 4) {
      dp.re[k] = step;
    } else {
      dp.im[k - 4] = step;
    }
    out[k] = (1.0 / (2.0 * step)) * (f(p + dp) - f(p - dp));
  }
  return out;
}

}  // namespace twistorlab
