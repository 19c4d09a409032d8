#include "twistorlab/twistor.hpp"

#include <Eigen/Dense>

namespace twistorlab {

namespace {

constexpr Quaternion kQi = Quaternion::unit(1);
constexpr Quaternion kJ = Quaternion::unit(2);

bool negligible(const Quaternion& q, double scale) { return q.norm() <= 1e-14 * (1.0 + scale); }

// Left multiplication by q as a 4x4 real matrix.
Eigen::Matrix4d left_matrix(const Quaternion& q) {
  Eigen::Matrix4d m;
  for (int mu = 0; mu < 4; ++mu) {
    const Quaternion col = q * Quaternion::unit(mu);
    for (int nu = 0; nu < 4; ++nu) m(nu, mu) = col[nu];
  }
  return m;
}

Quaternion from_vec4(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }
Eigen::Vector4d to_vec4(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

bool block_degenerate(Complex a, Complex b, Complex c, Complex d) {
  const double scale = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  return !(std::abs(a * d - b * c) > 1e-12 * scale);
}

}  // namespace

bool hp_equivalent(const HPPoint& a, const HPPoint& b, double tol) {
  const Quaternion u = a.q1.norm() >= a.q2.norm() ? b.q1 * inverse(a.q1) : b.q2 * inverse(a.q2);
  if (u.norm() == 0.0) return false;
  const double scale = 1.0 + b.q1.norm() + b.q2.norm();
  return (u * a.q1 - b.q1).norm() < tol * scale && (u * a.q2 - b.q2).norm() < tol * scale;
}

HPPoint fibration_pi(const CP3Point& p) {
  return {complex_pair(p.z[0], p.z[1]), complex_pair(p.z[2], p.z[3])};
}

UnitImaginary eta_stereo(Complex z1, Complex z2) {
  const Quaternion v = complex_pair(z1, z2);
  if (v.norm2() == 0.0) throw Error(ErrorCode::InvalidArgument, "eta_stereo of (0, 0)");
  return UnitImaginary::normalized(inverse(v) * kQi * v);
}

Quaternion eta_differential(Complex z, Complex dz) {
  const Quaternion v = from_complex(z) + kJ;
  const Quaternion vi = inverse(v);
  const Quaternion x = from_complex(dz) * vi;
  return vi * (kQi * x - x * kQi) * v;
}

TwistorPoint hp_chart(const HPPoint& p) {
  if (negligible(p.q2, p.q1.norm())) throw Error(ErrorCode::ChartMiss, "q2 = 0");
  const Quaternion vi = inverse(p.q2);
  return {vi * p.q1, UnitImaginary::normalized(vi * kQi * p.q2)};
}

TwistorPoint trivialize_phi(const CP3Point& p) {
  double scale = 0.0;
  for (const auto& z : p.z) scale = std::max(scale, std::abs(z));
  if (!(std::abs(p.z[3]) > 1e-14 * scale)) throw Error(ErrorCode::ChartMiss, "z4 = 0");
  return hp_chart(fibration_pi(p));
}

TwistorPoint transition_tau(const TwistorPoint& p) {
  if (negligible(p.q, 0.0)) throw Error(ErrorCode::OriginSingular, "transition at q = 0");
  const Quaternion qi = inverse(p.q);
  return {qi, UnitImaginary::normalized(qi * p.eta.quat() * p.q)};
}

CP3Point swap_chart(const CP3Point& p) { return {{p.z[2], p.z[3], p.z[0], p.z[1]}}; }

CP3Point LineEmbedding::image(Complex z1, Complex z2) const {
  return {{a * z1 + b * z2, c * z1 + d * z2, at * z1 + bt * z2, ct * z1 + dt * z2}};
}

TwistorPoint SphereData::operator()(const UnitImaginary& eta) const {
  const UnitImaginary me = mob_apply(m, eta);
  return {h + me.quat() * rho, me};
}

SphereData embed_line(const LineEmbedding& e) {
  if (block_degenerate(e.a, e.b, e.c, e.d) || block_degenerate(e.at, e.bt, e.ct, e.dt)) {
    throw Error(ErrorCode::DegenerateEmbedding, "coefficient block is not a Moebius map");
  }
  // q2 carries the fibre map, q1 the tilde pair.
  const SphereMoebius m = mob_from_cp1(e.at, e.bt, e.ct, e.dt);
  const SphereMoebius mt = mob_from_cp1(e.a, e.b, e.c, e.d);
  const Quaternion &al = m.alpha, &be = m.beta, &alt = mt.alpha, &bet = mt.beta;
  SphereData s{{}, {}, m, true};

  const double scale = 1.0 + al.norm() + be.norm();
  bool generic = !negligible(al, scale) && !negligible(be, scale) && !negligible(alt, scale);
  if (generic) {
    const Quaternion ai = inverse(al), bi = inverse(be), ati = inverse(alt);
    const Quaternion mid = be * ai + al * bi;
    generic = !negligible(mid, scale);
    if (generic) {
      const Quaternion midi = inverse(mid);
      s.h = ai * midi * (al * bi + bet * ati) * alt;
      s.rho = bi * midi * (bet * ati - be * ai) * alt;
      return s;
    }
  }
  // alpha h - beta rho = alt, beta h + alpha rho = bet
  Eigen::Matrix<double, 8, 8> a;
  a << left_matrix(al), -left_matrix(be), left_matrix(be), left_matrix(al);
  Eigen::Matrix<double, 8, 1> rhs;
  rhs << to_vec4(alt), to_vec4(bet);
  const Eigen::FullPivLU<Eigen::Matrix<double, 8, 8>> lu(a);
  if (lu.rank() < 8) throw Error(ErrorCode::DegenerateEmbedding, "sphere data system is singular");
  const Eigen::Matrix<double, 8, 1> x = lu.solve(rhs);
  s.h = from_vec4(x.head<4>());
  s.rho = from_vec4(x.tail<4>());
  s.closed_form = false;
  return s;
}

TwistorPoint embed_direct(const LineEmbedding& e, Complex z1, Complex z2) {
  return hp_chart(fibration_pi(e.image(z1, z2)));
}

}  // namespace twistorlab
