#pragma once

/**
 * Biquaternion-valued one- and two-forms on H and H_C.
 *
 * A one-form carries two coefficient banks. On a tangent vector
 * delta = sum_mu delta_mu e_mu (delta_mu complex) it contracts as
 *
 *     omega(delta) = sum_mu hol[mu] delta_mu + anti[mu] conj(delta_mu)
 *
 * so the hol bank is complex-linear and the anti bank complex-antilinear. On
 * the real slice only the sum hol + anti matters. Differentials of real-domain
 * fields are stored entirely in the hol bank.
 *
 * Two-forms use the ordered basis dx0^dx1, dx0^dx2, dx0^dx3, dx1^dx2,
 * dx1^dx3, dx2^dx3 and contract complex-bilinearly.
 */

#include <array>
#include <utility>

#include "twistorlab/field.hpp"
#include "twistorlab/quat.hpp"

namespace twistorlab {

struct QOneForm {
  std::array<Biquaternion, 4> hol{};
  std::array<Biquaternion, 4> anti{};

  Biquaternion contract(const Biquaternion& v) const;
  // Coefficient on dx_mu as seen from the real slice.
  Biquaternion real_coeff(int mu) const { return hol[mu] + anti[mu]; }
  // Max over coefficients of their 8-component Euclidean norm.
  double norm() const;
};

QOneForm operator+(const QOneForm& a, const QOneForm& b);
QOneForm operator-(const QOneForm& a, const QOneForm& b);
QOneForm operator*(const Biquaternion& a, const QOneForm& w);  // a * omega
QOneForm operator*(const QOneForm& w, const Biquaternion& a);  // omega * a
QOneForm operator*(Complex s, const QOneForm& w);
QOneForm operator*(double s, const QOneForm& w);

// dq = dx0 + i dx1 + j dx2 + k dx3 and its conjugate.
QOneForm dq();
QOneForm dqbar();
// The single real basis form dx_mu.
QOneForm dx(int mu);

inline constexpr std::array<std::pair<int, int>, 6> kTwoFormBasis{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int two_form_index(int mu, int nu);

struct QTwoForm {
  std::array<Biquaternion, 6> c{};

  // Complex-bilinear, antisymmetric.
  Biquaternion contract(const Biquaternion& u, const Biquaternion& v) const;
  // Coefficient of dx_mu ^ dx_nu for arbitrary (mu, nu).
  Biquaternion at(int mu, int nu) const;
  double norm() const;
};

QTwoForm operator+(const QTwoForm& a, const QTwoForm& b);
QTwoForm operator-(const QTwoForm& a, const QTwoForm& b);
QTwoForm operator*(const Biquaternion& a, const QTwoForm& f);
QTwoForm operator*(const QTwoForm& f, const Biquaternion& a);
QTwoForm operator*(Complex s, const QTwoForm& f);
QTwoForm operator*(double s, const QTwoForm& f);

// Exact differential of F at p.
QOneForm differential(const Field& f, const Biquaternion& p);

// Partials along the real coordinate directions, d_mu F = hol + anti.
std::array<Biquaternion, 4> partials(const Field& f, const Biquaternion& p);

// d_q F = 1/2 sum_mu conj(e_mu) d_mu F, d_qbar F = 1/2 sum_mu e_mu d_mu F.
Biquaternion del_q(const Field& f, const Biquaternion& p);
Biquaternion del_qbar(const Field& f, const Biquaternion& p);

// The two halves of df = d_qbar dqbar f + dq d_q f with the quaternion units
// of the operator kept in place: 1/2 sum_mu e_mu dqbar d_mu f and
// 1/2 sum_mu dq conj(e_mu) d_mu f.
QOneForm qbar_part(const Field& f, const Biquaternion& p);
QOneForm q_part(const Field& f, const Biquaternion& p);

// df = 1/2 sum_mu e_mu dq d_q conj(e_mu) f, evaluated through the operator
// form rather than through the partials directly.
QOneForm interleaved_differential(const Field& f, const Biquaternion& p);

// Noncommutative wedge on real-slice coefficients: a_mu b_nu - a_nu b_mu.
QTwoForm wedge(const QOneForm& a, const QOneForm& b);

// Hodge star for volume form dx0^dx1^dx2^dx3 (Euclidean).
QTwoForm hodge_star(const QTwoForm& f);

struct DualitySplit {
  QTwoForm self_dual;
  QTwoForm anti_self_dual;
};
DualitySplit sd_split(const QTwoForm& f);

// (I^r_eta omega)(v) = omega(eta v).
QOneForm apply_Ir(const UnitImaginary& eta, const QOneForm& w);
// eta omega - I^r_eta(omega)
QOneForm script_I(const UnitImaginary& eta, const QOneForm& w);
// eta omega - omega eta - I^r_eta(omega)
QOneForm script_J(const UnitImaginary& eta, const QOneForm& w);

enum class Side { Left, Right };
// (I + s eta) x or x (I + s eta), s = +1 / -1.
Biquaternion proj_pm(const Biquaternion& eta, int sign, const Biquaternion& x, Side side);

// True iff the antilinear bank vanishes relative to the form's scale.
bool is_holomorphic(const QOneForm& w, double tol = 1e-12);

struct Lemma1Residuals {
  double r_contract;  // max_delta |pi+ omega(pi- delta)| over the 8 real basis vectors
  double r_operator;  // |script_I(pi+ omega)|
  double r_equiv;     // max_delta |pi+ omega(pi- delta) - (script_I pi+ omega)(delta)|
};
Lemma1Residuals lemma1_check(const QOneForm& w, const UnitImaginary& eta);

// The 8 real basis vectors e_mu, I e_mu of H_C.
Biquaternion real_basis(int k);

}  // namespace twistorlab
