#pragma once

/**
 * Frustrated conformal transformations.
 *
 * A potential xi defines the left connection d + dq xi and the right
 * connection d + xi dq. The solution condition for f is that
 *     nabla f = df + dq xi f + f xi dq
 * is a complex multiple of dq.
 *
 * Off the real slice |q|^2 means the complex scalar q qbar, so the basic
 * instanton potential -qbar / (1 + q qbar) is meromorphic on H_C.
 */

#include <vector>

#include "twistorlab/ambitwistor.hpp"
#include "twistorlab/field.hpp"
#include "twistorlab/forms.hpp"
#include "twistorlab/moebius.hpp"

namespace twistorlab {

// -qbar / (1 + |q|^2) on the real slice.
Quaternion bpst_xi(const Quaternion& q);
// The same potential as a field, continued analytically.
Field bpst_xi_field(Domain domain = Domain::Complex);

QOneForm nabla_apply(const Field& xi, const Field& f, const Biquaternion& p);

// Least-squares coefficient of dq in omega, and omega minus that multiple.
Complex sigma_lambda(const QOneForm& w);
QOneForm sigma_bar(const QOneForm& w);

double fct_residual(const Field& xi, const Field& f, const Biquaternion& p);
// True when f(p) has (numerically) no quaternion-imaginary part.
bool f_is_real(const Field& f, const Biquaternion& p, double tol = 1e-10);

struct XiResiduals {
  double r1;  // |(d_qbar - xibar) dqbar^dq xi|
  double r2;  // |Im d_qbar xi|
};
XiResiduals xi_conditions_residual(const Field& xi, const Biquaternion& p);

struct Curvature {
  QTwoForm left;
  QTwoForm right;
};
// Closed forms in terms of d_qbar xi and xibar.
Curvature curvature(const Field& xi, const Biquaternion& p);
// dA + A^A and dB - B^B for A = dq xi, B = xi dq, from the partials of xi.
Curvature curvature_direct(const Field& xi, const Biquaternion& p);

// 1/2 (gbar dqbar^dq - dq^dqbar gbar)
QTwoForm s2_form(const Biquaternion& g);

struct TransportState {
  Biquaternion chi{1.0};
  Biquaternion psi{1.0};
  double t{0.0};
  // |state(steps) - state(steps / 2)| / 15
  double error_estimate{0.0};
};

inline constexpr int kStepsPerUnit = 1024;

// Integrates chi' = chi (v xi(q)), psi' = (xi(q) v) psi along q(t) = start + t v
// from t0 to t1 with classical RK4, starting from chi = psi = 1. v need not
// be null. steps <= 0 selects kStepsPerUnit per unit of |t1 - t0|.
// Throws SingularOnPath.
TransportState transport_segment(const Field& xi, const Biquaternion& start, const Biquaternion& v, double t0,
                                 double t1, int steps = 0);

// Same along L with velocity scale * L.direction(). Throws NonNullDirection if
// the velocity is not null.
TransportState transport(const Field& xi, const NullLine& l, Complex scale, double t0, double t1, int steps = 0);

// |S(n) - R| / |S(2n) - R| with R the Richardson limit from S(2n), S(4n).
double transport_order_ratio(const Field& xi, const NullLine& l, Complex scale, double t0, double t1, int n);

struct LambdaPath {
  std::vector<double> t;
  std::vector<Complex> lambda;
  std::vector<Biquaternion> q;
};

// Integrates 1/2 dlambda = -(dq fbar + f dqbar) / (1 + q qbar)^2 along
// L.p + t L.direction(), starting from the dq-coefficient of nabla f under
// the basic instanton potential. Records every step.
LambdaPath lambda_transport(const Field& f, const NullLine& l, double t0, double t1, int steps = 0);

struct AmbiMapData {
  Biquaternion m1;      // chi^-1 eta1 chi
  Biquaternion m2;      // psi eta2 psi^-1
  Biquaternion kappa0;  // chi f psi at the first sample
  double constancy;     // max over sample pairs of |pi+_m(a) pi-_m(b)| (both sides)
  double collinearity;  // max over pairs of the plane residuals of kappa(a) - kappa(b)
};

inline constexpr double kAmbiTol = 1e-8;

// Samples L.p + t L.direction() at t = k / (samples - 1), k = 0..samples-1.
// Throws NotASolution when a residual exceeds 10 * kAmbiTol.
AmbiMapData ambimap_eval(const Field& xi, const Field& f, const NullLine& l, int samples);

// max over sample points of L of |kappa_T - F_chi kappa_S F_psi| / (1 + |kappa_T|),
// where the S and T descriptions are transported from the chart points of
// L on S and T. Throws ChartSingular.
double patching_check(const Field& xi, const Field& f, const NullLine& l, const NullHyperplane& s,
                      const NullHyperplane& t, int samples = 5);

// Pulls a solution (xi, f) back along the Moebius map g (which must admit a
// factorization): xi' = psi_g (xi(g) chi_g - gamma), f' = chi_g^-1 f(g) psi_g^-1.
struct ConformalPair {
  Field xi;
  Field f;
};
ConformalPair conformal_pullback(const Field& xi, const Field& f, const BqMoebius& g);

}  // namespace twistorlab
