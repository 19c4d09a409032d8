#include "twistorlab/fct.hpp"

#include <cmath>

namespace twistorlab {

namespace {

Biquaternion e(int mu) { return Biquaternion::unit(mu); }

const QTwoForm& dq_dqbar() {
  static const QTwoForm f = wedge(dq(), dqbar());
  return f;
}

const QTwoForm& dqbar_dq() {
  static const QTwoForm f = wedge(dqbar(), dq());
  return f;
}

Biquaternion xi_at(const Field& xi, const Biquaternion& q) {
  try {
    return xi.at(q);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::SingularField || err.code() == ErrorCode::ZeroDivisor) {
      throw Error(ErrorCode::SingularOnPath, "potential is singular on the path");
    }
    throw;
  }
}

struct Pair {
  Biquaternion chi{1.0};
  Biquaternion psi{1.0};
};

// Classical RK4 for chi' = chi (v xi), psi' = (xi v) psi, from identity.
Pair integrate(const Field& xi, const Biquaternion& start, const Biquaternion& v, double t0, double t1, int n) {
  const double h = (t1 - t0) / n;
  Pair s;
  auto rhs = [&](double t, const Pair& y) {
    const Biquaternion x = xi_at(xi, start + t * v);
    return Pair{y.chi * (v * x), (x * v) * y.psi};
  };
  for (int k = 0; k < n; ++k) {
    const double t = t0 + k * h;
    const Pair k1 = rhs(t, s);
    const Pair k2 = rhs(t + 0.5 * h, {s.chi + (0.5 * h) * k1.chi, s.psi + (0.5 * h) * k1.psi});
    const Pair k3 = rhs(t + 0.5 * h, {s.chi + (0.5 * h) * k2.chi, s.psi + (0.5 * h) * k2.psi});
    const Pair k4 = rhs(t + h, {s.chi + h * k3.chi, s.psi + h * k3.psi});
    s.chi += (h / 6.0) * (k1.chi + 2.0 * k2.chi + 2.0 * k3.chi + k4.chi);
    s.psi += (h / 6.0) * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi);
  }
  return s;
}

int default_steps(double length) {
  return std::max(1, static_cast<int>(std::ceil(kStepsPerUnit * length)));
}

Biquaternion null_velocity(const NullLine& l, Complex scale) {
  const Biquaternion v = scale * l.direction();
  if (!is_null(v, 1e-10)) throw Error(ErrorCode::NonNullDirection, "velocity is not null");
  return v;
}

Complex hermitian(const Biquaternion& a, const Biquaternion& b) {
  Complex s{};
  for (int mu = 0; mu < 4; ++mu) s += std::conj(a.component(mu)) * b.component(mu);
  return s;
}

}  // namespace

Quaternion bpst_xi(const Quaternion& q) { return -(q.conj() / (1.0 + q.norm2())); }

Field bpst_xi_field(Domain domain) {
  return Field{[](const Jet& q) {
                 const Jet qb = qconj(q);
                 return -(qb * inverse(Jet{1.0} + q * qb));
               },
               domain};
}

QOneForm nabla_apply(const Field& xi, const Field& f, const Biquaternion& p) {
  const Biquaternion x = xi.domain() == Domain::Real ? xi(p) : xi.at(p);
  const Biquaternion fv = f(p);
  return differential(f, p) + dq() * (x * fv) + (fv * x) * dq();
}

Complex sigma_lambda(const QOneForm& w) {
  Complex s{};
  for (int mu = 0; mu < 4; ++mu) s += w.hol[mu].component(mu);
  return 0.25 * s;
}

QOneForm sigma_bar(const QOneForm& w) { return w - sigma_lambda(w) * dq(); }

double fct_residual(const Field& xi, const Field& f, const Biquaternion& p) {
  return sigma_bar(nabla_apply(xi, f, p)).norm();
}

bool f_is_real(const Field& f, const Biquaternion& p, double tol) {
  const Biquaternion v = f(p);
  return v.vector().norm() < tol * (1.0 + v.norm());
}

XiResiduals xi_conditions_residual(const Field& xi, const Biquaternion& p) {
  const Jet j = xi.jet(p);
  const Biquaternion x = j.value, xb = x.qconj();
  Biquaternion dbar;
  QTwoForm t = -1.0 * (xb * dqbar_dq() * x);
  for (int mu = 0; mu < 4; ++mu) {
    dbar += 0.5 * (e(mu) * j.d[mu]);
    t = t + 0.5 * (e(mu) * dqbar_dq() * j.d[mu]);
  }
  return {t.norm(), dbar.vector().norm()};
}

Curvature curvature(const Field& xi, const Biquaternion& p) {
  const Jet j = xi.jet(p);
  const Biquaternion x = j.value, xb = x.qconj();
  const QTwoForm& w = dq_dqbar();
  const QTwoForm& wb = dqbar_dq();
  Biquaternion dbar, rdbar;  // d_qbar xi and xi <-d_qbar
  QTwoForm lterm, rterm;     // sum e_mu wb d_mu xi, sum d_mu xi w e_mu
  for (int mu = 0; mu < 4; ++mu) {
    dbar += 0.5 * (e(mu) * j.d[mu]);
    rdbar += 0.5 * (j.d[mu] * e(mu));
    lterm = lterm + 0.5 * (e(mu) * wb * j.d[mu]);
    rterm = rterm + 0.5 * (j.d[mu] * w * e(mu));
  }
  Curvature c;
  c.left = 0.5 * (-1.0 * (w * (dbar + xb * x)) + lterm - xb * wb * x);
  c.right = 0.5 * ((rdbar + x * xb) * wb - (rterm - x * w * xb));
  return c;
}

Curvature curvature_direct(const Field& xi, const Biquaternion& p) {
  const Jet j = xi.jet(p);
  const Biquaternion x = j.value;
  QOneForm a, b;
  for (int mu = 0; mu < 4; ++mu) {
    a.hol[mu] = e(mu) * x;
    b.hol[mu] = x * e(mu);
  }
  QTwoForm da, db;
  for (int k = 0; k < 6; ++k) {
    const auto [mu, nu] = kTwoFormBasis[k];
    da.c[k] = e(nu) * j.d[mu] - e(mu) * j.d[nu];
    db.c[k] = j.d[mu] * e(nu) - j.d[nu] * e(mu);
  }
  return {da + wedge(a, a), db - wedge(b, b)};
}

QTwoForm s2_form(const Biquaternion& g) {
  const Biquaternion gb = g.qconj();
  return 0.5 * (gb * dqbar_dq() - dq_dqbar() * gb);
}

TransportState transport_segment(const Field& xi, const Biquaternion& start, const Biquaternion& v, double t0,
                                 double t1, int steps) {
  const int n = steps > 0 ? steps : default_steps(std::abs(t1 - t0) * std::max(1.0, v.norm()));
  const Pair s = integrate(xi, start, v, t0, t1, n);
  TransportState out{s.chi, s.psi, t1, 0.0};
  if (n >= 2) {
    const Pair half = integrate(xi, start, v, t0, t1, n / 2);
    out.error_estimate = std::max((half.chi - s.chi).norm(), (half.psi - s.psi).norm()) / 15.0;
  }
  return out;
}

TransportState transport(const Field& xi, const NullLine& l, Complex scale, double t0, double t1, int steps) {
  return transport_segment(xi, l.p, null_velocity(l, scale), t0, t1, steps);
}

double transport_order_ratio(const Field& xi, const NullLine& l, Complex scale, double t0, double t1, int n) {
  const Biquaternion v = null_velocity(l, scale);
  const Pair s1 = integrate(xi, l.p, v, t0, t1, n);
  const Pair s2 = integrate(xi, l.p, v, t0, t1, 2 * n);
  const Pair s4 = integrate(xi, l.p, v, t0, t1, 4 * n);
  const Biquaternion rc = s4.chi + (1.0 / 15.0) * (s4.chi - s2.chi);
  const Biquaternion rp = s4.psi + (1.0 / 15.0) * (s4.psi - s2.psi);
  const double coarse = std::hypot((s1.chi - rc).norm(), (s1.psi - rp).norm());
  const double fine = std::hypot((s2.chi - rc).norm(), (s2.psi - rp).norm());
  return coarse / fine;
}

LambdaPath lambda_transport(const Field& f, const NullLine& l, double t0, double t1, int steps) {
  const Biquaternion v = l.direction();
  const Field fc = f.complexified();
  const int n = steps > 0 ? steps : default_steps(std::abs(t1 - t0));
  const double h = (t1 - t0) / n;

  auto rhs = [&](double t) {
    const Biquaternion q = l.p + t * v;
    const Biquaternion fv = fc.at(q);
    const Complex den = 1.0 + q.qnorm();
    if (std::abs(den) < 1e-12) throw Error(ErrorCode::SingularOnPath, "1 + q qbar vanishes");
    return -2.0 * (v * fv.qconj() + fv * v.qconj()).scalar() / (den * den);
  };

  LambdaPath path;
  Complex lam = sigma_lambda(nabla_apply(bpst_xi_field(), fc, l.p + t0 * v));
  path.t.push_back(t0);
  path.lambda.push_back(lam);
  path.q.push_back(l.p + t0 * v);
  for (int k = 0; k < n; ++k) {
    const double t = t0 + k * h;
    const Complex k1 = rhs(t), k2 = rhs(t + 0.5 * h), k4 = rhs(t + h);
    lam += (h / 6.0) * (k1 + 4.0 * k2 + k4);
    path.t.push_back(t + h);
    path.lambda.push_back(lam);
    path.q.push_back(l.p + (t + h) * v);
  }
  return path;
}

AmbiMapData ambimap_eval(const Field& xi, const Field& f, const NullLine& l, int samples) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "ambimap_eval needs at least two samples");
  const Biquaternion v = null_velocity(l, 1.0);
  const Field fc = f.complexified();
  const Biquaternion eta1{l.eta1}, eta2{l.eta2};

  std::vector<Biquaternion> m1, m2, kappa;
  Pair s;
  double t_prev = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    if (k > 0) {
      const Pair seg = integrate(xi, l.p, v, t_prev, t, default_steps(t - t_prev));
      s.chi = s.chi * seg.chi;
      s.psi = seg.psi * s.psi;
    }
    t_prev = t;
    const Biquaternion ci = bq_inv(s.chi), pi = bq_inv(s.psi);
    m1.push_back(ci * eta1 * s.chi);
    m2.push_back(s.psi * eta2 * pi);
    kappa.push_back(s.chi * fc.at(l.p + t * v) * s.psi);
  }

  AmbiMapData out{m1.front(), m2.front(), kappa.front(), 0.0, 0.0};
  for (int a = 0; a < samples; ++a) {
    for (int b = 0; b < samples; ++b) {
      if (a == b) continue;
      out.constancy = std::max({out.constancy, (pi_plus(m1[a]) * pi_minus(m1[b])).norm(),
                                (pi_minus(m2[b]) * pi_plus(m2[a])).norm()});
      const Biquaternion d = kappa[a] - kappa[b];
      const double scale = 1.0 + d.norm();
      out.collinearity = std::max({out.collinearity, (pi_plus(m1[a]) * d).norm() / scale,
                                   (d * pi_plus(m2[a])).norm() / scale});
    }
  }
  if (out.constancy > 10.0 * kAmbiTol || out.collinearity > 10.0 * kAmbiTol) {
    throw Error(ErrorCode::NotASolution, "induced map is not constant / collinear on the null line");
  }
  return out;
}

double patching_check(const Field& xi, const Field& f, const NullLine& l, const NullHyperplane& s,
                      const NullHyperplane& t, int samples) {
  const Biquaternion v = l.direction();
  const Biquaternion qs = chart_coords(s, l), qt = chart_coords(t, l);
  const Complex zt = hermitian(v, qt - qs) / hermitian(v, v);
  const Field fc = f.complexified();

  // transport from qs + za v to qs + zb v
  auto along = [&](Complex za, Complex zb) {
    const Biquaternion dv = (zb - za) * v;
    return integrate(xi, qs + za * v, dv, 0.0, 1.0, default_steps(std::max(1.0, std::abs(zb - za))));
  };

  const Pair fpair = along(zt, 0.0);  // chi_T, psi_T at q_S
  double r = 0.0;
  for (int k = 0; k < samples; ++k) {
    // sample both inside and a little beyond the segment [q_S, q_T]
    const Complex z = zt * (static_cast<double>(k) / std::max(1, samples - 1) * 1.5 - 0.25);
    const Pair ps = along(0.0, z), pt = along(zt, z);
    const Biquaternion fq = fc.at(qs + z * v);
    const Biquaternion ks = ps.chi * fq * ps.psi;
    const Biquaternion kt = pt.chi * fq * pt.psi;
    r = std::max(r, (kt - fpair.chi * ks * fpair.psi).norm() / (1.0 + kt.norm()));
  }
  return r;
}

ConformalPair conformal_pullback(const Field& xi, const Field& f, const BqMoebius& g) {
  const MoebiusFactor fac = bq_mob_factor(g, xi.domain());
  const Field gf = bq_mob_field(g, xi.domain());
  const Biquaternion gamma = g.gamma;
  const Field chi = fac.chi, psi = fac.psi;
  Field xi2{[=](const Jet& q) {
              const Jet gq = gf.apply(q);
              return psi.apply(q) * (xi.apply(gq) * chi.apply(q) - Jet{gamma});
            },
            xi.domain()};
  Field f2{[=](const Jet& q) {
             const Jet gq = gf.apply(q);
             return inverse(chi.apply(q)) * f.apply(gq) * inverse(psi.apply(q));
           },
           f.domain()};
  return {xi2, f2};
}

}  // namespace twistorlab
