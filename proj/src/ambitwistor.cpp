#include "twistorlab/ambitwistor.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace twistorlab {

namespace {

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

double relative(const Biquaternion& r, const Biquaternion& offset) { return r.norm() / (1.0 + offset.norm()); }

bool same(const UnitImaginary& a, const UnitImaginary& b) { return (a.quat() - b.quat()).norm() < 1e-12; }

}  // namespace

Biquaternion NullLine::direction() const {
  const Biquaternion m1 = pi_minus(eta1), m2 = pi_minus(eta2);
  for (int mu = 0; mu < 4; ++mu) {
    const Biquaternion v = m1 * Biquaternion::unit(mu) * m2;
    const double n = v.norm();
    if (n > 1e-8) return (1.0 / n) * v;
  }
  throw Error(ErrorCode::InvalidArgument, "null line has no direction");
}

double alpha_residual(const AlphaPlane& a, const Biquaternion& q) {
  const Biquaternion d = q - a.c;
  return relative(pi_plus(a.eta) * d, d);
}

double beta_residual(const BetaPlane& b, const Biquaternion& q) {
  const Biquaternion d = q - b.c;
  return relative(d * pi_plus(b.eta), d);
}

double hyperplane_residual(const NullHyperplane& h, const Biquaternion& q) {
  const Biquaternion d = q - h.q0;
  return relative(pi_plus(h.eta1) * d * pi_plus(h.eta2), d);
}

double line_residual(const NullLine& l, const Biquaternion& q) {
  return std::max(alpha_residual({l.p, l.eta1}, q), beta_residual({l.p, l.eta2}, q));
}

bool alpha_contains(const AlphaPlane& a, const Biquaternion& q, double tol) { return alpha_residual(a, q) < tol; }
bool beta_contains(const BetaPlane& b, const Biquaternion& q, double tol) { return beta_residual(b, q) < tol; }
bool hyperplane_contains(const NullHyperplane& h, const Biquaternion& q, double tol) {
  return hyperplane_residual(h, q) < tol;
}
bool line_contains(const NullLine& l, const Biquaternion& q, double tol) { return line_residual(l, q) < tol; }

bool planes_intersect(const AlphaPlane& a, const BetaPlane& b, double tol) {
  const Biquaternion d = a.c - b.c;
  return relative(pi_plus(a.eta) * d * pi_plus(b.eta), d) < tol;
}

NullLine null_line_from(const AlphaPlane& a, const BetaPlane& b) {
  if (!planes_intersect(a, b)) throw Error(ErrorCode::NoIntersection, "alpha- and beta-plane do not meet");
  const Biquaternion m1 = pi_minus(a.eta), p2 = pi_plus(b.eta);
  // pi-_eta1 delta pi+_eta2 = (c2 - c1) pi+_eta2, minimum-norm delta
  Eigen::Matrix<double, 8, 8> m;
  for (int k = 0; k < 8; ++k) {
    Biquaternion e;
    if (k < 4) {
      e.re[k] = 1.0;
    } else {
      e.im[k - 4] = 1.0;
    }
    m.col(k) = to_vec(m1 * e * p2);
  }
  const Vec8 rhs = to_vec((b.c - a.c) * p2);
  const Vec8 x = m.completeOrthogonalDecomposition().solve(rhs);
  const Biquaternion p = a.c + m1 * from_vec(x);
  NullLine line{p, a.eta, b.eta};
  if (!alpha_contains({a.c, a.eta}, p) || !beta_contains({b.c, b.eta}, p)) {
    throw Error(ErrorCode::NoIntersection, "incidence solve did not converge");
  }
  return line;
}

double null_residual(const Biquaternion& v) { return std::abs(v.qnorm()) / (1.0 + v.norm2()); }

bool is_null(const Biquaternion& v, double tol) { return null_residual(v) < tol; }

Biquaternion chart_coords(const NullHyperplane& h, const NullLine& l) {
  if (same(h.eta1, l.eta1) || same(h.eta2, l.eta2)) {
    throw Error(ErrorCode::ChartSingular, "line shares a structure with the hyperplane");
  }
  const Biquaternion q = l.p - h.q0;
  const Biquaternion d1 = inverse(Biquaternion{h.eta1.quat() - l.eta1.quat()});
  const Biquaternion d2 = inverse(Biquaternion{h.eta2.quat() - l.eta2.quat()});
  const Biquaternion delta = d1 * q * d2;
  return l.p - pi_minus(l.eta1) * delta * pi_minus(l.eta2);
}

MinkCoords mink_convert(const Biquaternion& q) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex q0 = q.component(0), q1 = q.component(1), q2 = q.component(2), q3 = q.component(3);
  return {s * (q0 + kI * q3), s * (q0 - kI * q3), s * (q1 + kI * q2), s * (-q1 + kI * q2)};
}

Biquaternion mink_inverse(const MinkCoords& m) {
  const double s = 1.0 / std::sqrt(2.0);
  return Biquaternion::from_components({s * (m.z + m.zt), s * (m.w - m.wt), -kI * s * (m.w + m.wt),
                                        -kI * s * (m.z - m.zt)});
}

std::pair<Biquaternion, Biquaternion> klein_intersections(const AlphaPlane& z) {
  const Quaternion i = Quaternion::unit(1);
  const Quaternion e = z.eta.quat();
  if ((e - i).norm() < 1e-12 || (e + i).norm() < 1e-12) {
    throw Error(ErrorCode::PoleChart, "alpha-plane structure is +-i");
  }
  const Biquaternion base = pi_plus(z.eta) * z.c;
  return {Biquaternion{inverse(e - i)} * base, Biquaternion{inverse(e + i)} * base};
}

}  // namespace twistorlab
