#include "twistorlab/forms.hpp"

#include <algorithm>

namespace twistorlab {

namespace {

const Quaternion& unit(int mu) {
  static const std::array<Quaternion, 4> units{Quaternion::unit(0), Quaternion::unit(1),
                                               Quaternion::unit(2), Quaternion::unit(3)};
  return units[mu];
}

Biquaternion bunit(int mu) { return Biquaternion{unit(mu)}; }
Biquaternion bunit_conj(int mu) { return Biquaternion{unit(mu).conj()}; }

template <std::size_t N>
double max_norm(const std::array<Biquaternion, N>& cs) {
  double m = 0.0;
  for (const auto& c : cs) m = std::max(m, c.norm());
  return m;
}

}  // namespace

Biquaternion QOneForm::contract(const Biquaternion& v) const {
  Biquaternion r;
  for (int mu = 0; mu < 4; ++mu) {
    const Complex vm = v.component(mu);
    r += vm * hol[mu] + std::conj(vm) * anti[mu];
  }
  return r;
}

double QOneForm::norm() const { return std::max(max_norm(hol), max_norm(anti)); }

QOneForm operator+(const QOneForm& a, const QOneForm& b) {
  QOneForm r;
  for (int mu = 0; mu < 4; ++mu) {
    r.hol[mu] = a.hol[mu] + b.hol[mu];
    r.anti[mu] = a.anti[mu] + b.anti[mu];
  }
  return r;
}

QOneForm operator-(const QOneForm& a, const QOneForm& b) { return a + (-1.0) * b; }

QOneForm operator*(const Biquaternion& a, const QOneForm& w) {
  QOneForm r;
  for (int mu = 0; mu < 4; ++mu) {
    r.hol[mu] = a * w.hol[mu];
    r.anti[mu] = a * w.anti[mu];
  }
  return r;
}

QOneForm operator*(const QOneForm& w, const Biquaternion& a) {
  QOneForm r;
  for (int mu = 0; mu < 4; ++mu) {
    r.hol[mu] = w.hol[mu] * a;
    r.anti[mu] = w.anti[mu] * a;
  }
  return r;
}

QOneForm operator*(Complex s, const QOneForm& w) {
  QOneForm r;
  for (int mu = 0; mu < 4; ++mu) {
    r.hol[mu] = s * w.hol[mu];
    r.anti[mu] = s * w.anti[mu];
  }
  return r;
}

QOneForm operator*(double s, const QOneForm& w) { return Complex{s, 0.0} * w; }

QOneForm dq() {
  QOneForm w;
  for (int mu = 0; mu < 4; ++mu) w.hol[mu] = bunit(mu);
  return w;
}

QOneForm dqbar() {
  QOneForm w;
  for (int mu = 0; mu < 4; ++mu) w.hol[mu] = bunit_conj(mu);
  return w;
}

QOneForm dx(int mu) {
  QOneForm w;
  w.hol[mu] = Biquaternion{1.0};
  return w;
}

int two_form_index(int mu, int nu) {
  for (int k = 0; k < 6; ++k) {
    if (kTwoFormBasis[k].first == mu && kTwoFormBasis[k].second == nu) return k;
  }
  return -1;
}

Biquaternion QTwoForm::at(int mu, int nu) const {
  if (mu == nu) return {};
  if (mu < nu) return c[two_form_index(mu, nu)];
  return -c[two_form_index(nu, mu)];
}

Biquaternion QTwoForm::contract(const Biquaternion& u, const Biquaternion& v) const {
  Biquaternion r;
  for (int k = 0; k < 6; ++k) {
    const auto [mu, nu] = kTwoFormBasis[k];
    r += (u.component(mu) * v.component(nu) - u.component(nu) * v.component(mu)) * c[k];
  }
  return r;
}

double QTwoForm::norm() const { return max_norm(c); }

QTwoForm operator+(const QTwoForm& a, const QTwoForm& b) {
  QTwoForm r;
  for (int k = 0; k < 6; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

QTwoForm operator-(const QTwoForm& a, const QTwoForm& b) {
  QTwoForm r;
  for (int k = 0; k < 6; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

QTwoForm operator*(const Biquaternion& a, const QTwoForm& f) {
  QTwoForm r;
  for (int k = 0; k < 6; ++k) r.c[k] = a * f.c[k];
  return r;
}

QTwoForm operator*(const QTwoForm& f, const Biquaternion& a) {
  QTwoForm r;
  for (int k = 0; k < 6; ++k) r.c[k] = f.c[k] * a;
  return r;
}

QTwoForm operator*(Complex s, const QTwoForm& f) {
  QTwoForm r;
  for (int k = 0; k < 6; ++k) r.c[k] = s * f.c[k];
  return r;
}

QTwoForm operator*(double s, const QTwoForm& f) { return Complex{s, 0.0} * f; }

QOneForm differential(const Field& f, const Biquaternion& p) {
  const Jet j = f.jet(p);
  QOneForm w;
  if (f.domain() == Domain::Real) {
    for (int mu = 0; mu < 4; ++mu) w.hol[mu] = j.d[mu];
    return w;
  }
  // P = d/dx, Q = d/dy: hol = (P - I Q)/2, anti = (P + I Q)/2.
  for (int mu = 0; mu < 4; ++mu) {
    const Biquaternion iq = kI * j.d[4 + mu];
    w.hol[mu] = 0.5 * (j.d[mu] - iq);
    w.anti[mu] = 0.5 * (j.d[mu] + iq);
  }
  return w;
}

std::array<Biquaternion, 4> partials(const Field& f, const Biquaternion& p) {
  const Jet j = f.jet(p);
  std::array<Biquaternion, 4> out;
  for (int mu = 0; mu < 4; ++mu) out[mu] = j.d[mu];
  return out;
}

Biquaternion del_q(const Field& f, const Biquaternion& p) {
  const auto d = partials(f, p);
  Biquaternion r;
  for (int mu = 0; mu < 4; ++mu) r += bunit_conj(mu) * d[mu];
  return 0.5 * r;
}

Biquaternion del_qbar(const Field& f, const Biquaternion& p) {
  const auto d = partials(f, p);
  Biquaternion r;
  for (int mu = 0; mu < 4; ++mu) r += bunit(mu) * d[mu];
  return 0.5 * r;
}

QOneForm qbar_part(const Field& f, const Biquaternion& p) {
  const auto d = partials(f, p);
  QOneForm w;
  for (int nu = 0; nu < 4; ++nu) {
    Biquaternion c;
    for (int mu = 0; mu < 4; ++mu) c += bunit(mu) * bunit_conj(nu) * d[mu];
    w.hol[nu] = 0.5 * c;
  }
  return w;
}

QOneForm q_part(const Field& f, const Biquaternion& p) {
  const auto d = partials(f, p);
  QOneForm w;
  for (int nu = 0; nu < 4; ++nu) {
    Biquaternion c;
    for (int mu = 0; mu < 4; ++mu) c += bunit(nu) * bunit_conj(mu) * d[mu];
    w.hol[nu] = 0.5 * c;
  }
  return w;
}

QOneForm interleaved_differential(const Field& f, const Biquaternion& p) {
  const auto d = partials(f, p);
  QOneForm w;
  for (int nu = 0; nu < 4; ++nu) {
    Biquaternion c;
    for (int mu = 0; mu < 4; ++mu) {
      // d_q conj(e_mu) f = 1/2 sum_l conj(e_l) conj(e_mu) d_l f
      Biquaternion inner;
      for (int l = 0; l < 4; ++l) inner += bunit_conj(l) * bunit_conj(mu) * d[l];
      c += bunit(mu) * bunit(nu) * (0.5 * inner);
    }
    w.hol[nu] = 0.5 * c;
  }
  return w;
}

QTwoForm wedge(const QOneForm& a, const QOneForm& b) {
  QTwoForm r;
  for (int k = 0; k < 6; ++k) {
    const auto [mu, nu] = kTwoFormBasis[k];
    r.c[k] = a.real_coeff(mu) * b.real_coeff(nu) - a.real_coeff(nu) * b.real_coeff(mu);
  }
  return r;
}

QTwoForm hodge_star(const QTwoForm& f) {
  // *(01)=23, *(02)=-13, *(03)=12, *(12)=03, *(13)=-02, *(23)=01
  QTwoForm r;
  r.c[5] = f.c[0];
  r.c[4] = -f.c[1];
  r.c[3] = f.c[2];
  r.c[2] = f.c[3];
  r.c[1] = -f.c[4];
  r.c[0] = f.c[5];
  return r;
}

DualitySplit sd_split(const QTwoForm& f) {
  const QTwoForm star = hodge_star(f);
  return {0.5 * (f + star), 0.5 * (f - star)};
}

QOneForm apply_Ir(const UnitImaginary& eta, const QOneForm& w) {
  // eta e_mu = sum_nu M[nu][mu] e_nu; new coefficient mu is sum_nu c_nu M[nu][mu].
  const Quaternion& e = eta.quat();
  QOneForm r;
  for (int mu = 0; mu < 4; ++mu) {
    const Quaternion col = e * unit(mu);
    for (int nu = 0; nu < 4; ++nu) {
      const double m = col[nu];
      if (m == 0.0) continue;
      r.hol[mu] += m * w.hol[nu];
      r.anti[mu] += m * w.anti[nu];
    }
  }
  return r;
}

QOneForm script_I(const UnitImaginary& eta, const QOneForm& w) {
  return Biquaternion{eta} * w - apply_Ir(eta, w);
}

QOneForm script_J(const UnitImaginary& eta, const QOneForm& w) {
  const Biquaternion e{eta};
  return e * w - w * e - apply_Ir(eta, w);
}

Biquaternion proj_pm(const Biquaternion& eta, int sign, const Biquaternion& x, Side side) {
  const Biquaternion pi = sign >= 0 ? pi_plus(eta) : pi_minus(eta);
  return side == Side::Left ? pi * x : x * pi;
}

bool is_holomorphic(const QOneForm& w, double tol) {
  return max_norm(w.anti) <= tol * (1.0 + w.norm());
}

Biquaternion real_basis(int k) {
  return k < 4 ? bunit(k) : kI * bunit(k - 4);
}

Lemma1Residuals lemma1_check(const QOneForm& w, const UnitImaginary& eta) {
  const Biquaternion pp = pi_plus(eta);
  const Biquaternion pm = pi_minus(eta);
  const QOneForm projected = pp * w;
  const QOneForm op = script_I(eta, projected);
  Lemma1Residuals r{0.0, op.norm(), 0.0};
  for (int k = 0; k < 8; ++k) {
    const Biquaternion delta = real_basis(k);
    const Biquaternion lhs = pp * w.contract(pm * delta);
    r.r_contract = std::max(r.r_contract, lhs.norm());
    r.r_equiv = std::max(r.r_equiv, (lhs - op.contract(delta)).norm());
  }
  return r;
}

}  // namespace twistorlab
