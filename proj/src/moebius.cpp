#include "twistorlab/moebius.hpp"

#include <Eigen/Dense>

namespace twistorlab {

namespace {

constexpr Quaternion kJ = Quaternion::unit(2);

using Vec8 = Eigen::Matrix<double, 8, 1>;

Vec8 to_vec(const Biquaternion& b) {
  Vec8 v;
  for (int mu = 0; mu < 4; ++mu) {
    v[mu] = b.re[mu];
    v[4 + mu] = b.im[mu];
  }
  return v;
}

Biquaternion from_vec(const Vec8& v) {
  Biquaternion b;
  for (int mu = 0; mu < 4; ++mu) {
    b.re[mu] = v[mu];
    b.im[mu] = v[4 + mu];
  }
  return b;
}

// Minimizes sum_mu |target[mu] - L_mu(x)|^2 where column k of the system is
// the image of real_basis(k). Returns x and the max coefficient residual.
template <class Lin>
std::pair<Biquaternion, double> least_squares(const std::array<Biquaternion, 4>& target, Lin lin) {
  Eigen::Matrix<double, 32, 8> a;
  Eigen::Matrix<double, 32, 1> b;
  for (int k = 0; k < 8; ++k) {
    const auto col = lin(real_basis(k));
    for (int mu = 0; mu < 4; ++mu) a.block<8, 1>(8 * mu, k) = to_vec(col[mu]);
  }
  for (int mu = 0; mu < 4; ++mu) b.segment<8>(8 * mu) = to_vec(target[mu]);
  const Eigen::Matrix<double, 8, 8> n = a.transpose() * a;
  const Vec8 x = n.ldlt().solve(a.transpose() * b);
  const Biquaternion sol = from_vec(x);
  const auto fit = lin(sol);
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu) r = std::max(r, (target[mu] - fit[mu]).norm());
  return {sol, r};
}

Biquaternion inv_or(const Biquaternion& a, ErrorCode code, const char* what) {
  if (is_zero_divisor(a)) throw Error(code, what);
  return bq_inv(a);
}

bool is_normalized(const Biquaternion& phi) { return std::abs(phi.qnorm() - 1.0) <= 1e-10; }

}  // namespace

UnitImaginary mob_apply(const SphereMoebius& m, const UnitImaginary& eta) {
  const Quaternion a = m.alpha + eta.quat() * m.beta;
  if (a.norm2() <= 1e-24 * (1.0 + m.alpha.norm2() + m.beta.norm2())) {
    throw Error(ErrorCode::SingularMoebius, "alpha + eta beta vanishes");
  }
  return UnitImaginary::normalized(inverse(a) * eta.quat() * a);
}

SphereMoebius mob_from_cp1(Complex a, Complex b, Complex c, Complex d) {
  const double scale = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  if (!(std::abs(a * d - b * c) > 1e-12 * scale)) {
    throw Error(ErrorCode::DegenerateMap, "ad = bc");
  }
  const Quaternion head = from_complex(a) + from_complex(c) * kJ;
  const Quaternion tail = (kJ * from_complex(b) + from_complex(d)).conj();
  // 2 alpha = head + tail, 2 i beta = head - tail
  const Quaternion i = Quaternion::unit(1);
  return {0.5 * (head + tail), -0.5 * (i * (head - tail))};
}

LorentzBiquaternion::LorentzBiquaternion(const Biquaternion& phi, double tol) : phi_{phi} {
  if (std::abs(phi.qnorm() - 1.0) > tol) {
    throw Error(ErrorCode::NotNormalized, "phi phibar != 1");
  }
}

Biquaternion MinkowskiQuaternion::biquaternion() const {
  return {Quaternion{x0}, Quaternion{0.0, x1, x2, x3}};
}

MinkowskiQuaternion MinkowskiQuaternion::from(const Biquaternion& q, double tol) {
  const double scale = 1.0 + q.norm();
  if (q.re.vector().norm() > tol * scale || std::abs(q.im.w) > tol * scale) {
    throw Error(ErrorCode::InvalidArgument, "not a Minkowskian quaternion");
  }
  return {q.re.w, q.im.x, q.im.y, q.im.z};
}

MinkowskiQuaternion lorentz_apply(const LorentzBiquaternion& phi, const MinkowskiQuaternion& q) {
  const Biquaternion& p = phi.value();
  return MinkowskiQuaternion::from(p * q.biquaternion() * bq_conj(p, ConjKind::Both));
}

Generator mob_generator(const Field& phi, const Biquaternion& p, const Biquaternion& v) {
  const Biquaternion value = phi(p);
  if (!is_normalized(value)) throw Error(ErrorCode::NotNormalized, "phi phibar != 1 at p");
  const Biquaternion g = value.qconj() * differential(phi, p).contract(v);
  return {g.re, g.im};
}

Biquaternion bq_mob_apply(const BqMoebius& m, const Biquaternion& q) {
  const Biquaternion den = m.gamma * q + m.delta;
  return (m.alpha * q + m.beta) * inv_or(den, ErrorCode::SingularPoint, "gamma q + delta is a zero divisor");
}

BqMoebius bq_mob_compose(const BqMoebius& a, const BqMoebius& b) {
  return {a.alpha * b.alpha + a.beta * b.gamma, a.alpha * b.beta + a.beta * b.delta,
          a.gamma * b.alpha + a.delta * b.gamma, a.gamma * b.beta + a.delta * b.delta};
}

Field bq_mob_field(const BqMoebius& m, Domain domain) {
  return Field{[m](const Jet& q) {
                 try {
                   return (Jet{m.alpha} * q + Jet{m.beta}) * inverse(Jet{m.gamma} * q + Jet{m.delta});
                 } catch (const Error&) {
                   throw Error(ErrorCode::SingularPoint, "gamma q + delta is a zero divisor");
                 }
               },
               domain};
}

MoebiusFactor bq_mob_factor(const BqMoebius& m, Domain domain) {
  constexpr auto kCode = ErrorCode::DegenerateFactorization;
  inv_or(m.alpha, kCode, "alpha is not invertible");
  inv_or(m.beta, kCode, "beta is not invertible");
  const Biquaternion gi = inv_or(m.gamma, kCode, "gamma is not invertible");
  const Biquaternion di = inv_or(m.delta, kCode, "delta is not invertible");
  MoebiusFactor f;
  f.at = inv_or(m.alpha * gi * m.delta - m.beta, kCode, "alpha gamma^-1 delta - beta is not invertible");
  f.bt = inv_or(m.alpha - m.beta * di * m.gamma, kCode, "alpha - beta delta^-1 gamma is not invertible");
  f.gt = m.gamma;
  f.dt = m.delta;
  const Biquaternion at = f.at, bt = f.bt, gt = f.gt, dt = f.dt;
  f.chi = Field{[at, bt](const Jet& q) { return inverse(q * Jet{at} + Jet{bt}); }, domain};
  f.psi = Field{[gt, dt](const Jet& q) { return inverse(Jet{gt} * q + Jet{dt}); }, domain};
  return f;
}

double factorization_residual(const BqMoebius& m, const MoebiusFactor& f, const Biquaternion& p) {
  const QOneForm dk = differential(bq_mob_field(m, f.chi.domain()), p);
  return (dk - f.chi(p) * dq() * f.psi(p)).norm();
}

Field normalized_phi(const Field& chi) {
  return Field{[chi](const Jet& q) {
                 const Jet c = chi.apply(q);
                 return c * inverse(csqrt(c * qconj(c)));
               },
               chi.domain()};
}

Theorem1Residuals theorem1_residual(const Field& kappa, const Field& phi, const Biquaternion& p) {
  const Jet pj = phi.jet(p);
  if (!is_normalized(pj.value)) throw Error(ErrorCode::NotNormalized, "phi phibar != 1 at p");
  const QOneForm dk = differential(kappa, p);
  const QOneForm dphi = differential(phi, p);
  const Biquaternion ph = pj.value;
  const Biquaternion phbar = ph.qconj();

  std::array<Biquaternion, 4> t1, t2;
  for (int mu = 0; mu < 4; ++mu) {
    t1[mu] = dk.real_coeff(mu);
    t2[mu] = phbar * dphi.real_coeff(mu);
  }
  const auto [nu, r1] = least_squares(t1, [&](const Biquaternion& x) {
    std::array<Biquaternion, 4> out;
    for (int mu = 0; mu < 4; ++mu) out[mu] = ph * Biquaternion::unit(mu) * x;
    return out;
  });
  const auto [xi, r2] = least_squares(t2, [&](const Biquaternion& x) {
    std::array<Biquaternion, 4> out;
    const Biquaternion xb = x.qconj();
    for (int mu = 0; mu < 4; ++mu) {
      const Biquaternion e = Biquaternion::unit(mu);
      out[mu] = 0.5 * (e * x - xb * e.qconj());
    }
    return out;
  });
  return {r1, r2, nu, xi};
}

}  // namespace twistorlab
