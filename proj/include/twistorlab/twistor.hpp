#pragma once

/**
 * CP^3 as twistor space of HP^1, in the chart z4 = 1 / q2 = 1.
 *
 * A point of the local model H x I_u is a pair (q, eta). Complex numbers are
 * embedded in H as span{1, i}.
 */

#include <array>

#include "twistorlab/moebius.hpp"
#include "twistorlab/quat.hpp"

namespace twistorlab {

struct CP3Point {
  std::array<Complex, 4> z{};
};

// (q1, q2) up to left multiplication by a nonzero quaternion.
struct HPPoint {
  Quaternion q1, q2;
};

// Decides (q1, q2) ~ (q1', q2') by left division through the larger entry.
bool hp_equivalent(const HPPoint& a, const HPPoint& b, double tol = 1e-10);

struct TwistorPoint {
  Quaternion q;
  UnitImaginary eta;
};

// (z1 + z2 j, z3 + z4 j)
HPPoint fibration_pi(const CP3Point& z);

// (z1 + z2 j)^-1 i (z1 + z2 j). Throws InvalidArgument for (0, 0).
UnitImaginary eta_stereo(Complex z1, Complex z2);
// eta(z) = eta_stereo(z, 1)
inline UnitImaginary eta_of(Complex z) { return eta_stereo(z, 1.0); }
// d eta at z along dz: (z + j)^-1 [i, dz (z + j)^-1] (z + j)
Quaternion eta_differential(Complex z, Complex dz);

// (q2^-1 q1, q2^-1 i q2). Throws ChartMiss when q2 = 0.
TwistorPoint hp_chart(const HPPoint& p);

// ((z3 + z4 j)^-1 (z1 + z2 j), eta) in the chart z4 != 0. Throws ChartMiss.
TwistorPoint trivialize_phi(const CP3Point& z);

// (q^-1, q^-1 eta q). Throws OriginSingular at q = 0.
TwistorPoint transition_tau(const TwistorPoint& p);

// The holomorphic chart change of CP^3 matching transition_tau:
// (z1, z2, z3, z4) -> (z3, z4, z1, z2).
CP3Point swap_chart(const CP3Point& z);

// (z1, z2) -> (a z1 + b z2, c z1 + d z2, at z1 + bt z2, ct z1 + dt z2)
struct LineEmbedding {
  Complex a, b, c, d;
  Complex at, bt, ct, dt;

  CP3Point image(Complex z1, Complex z2) const;
};

// tau(eta) = (h + M(eta) rho, M(eta))
struct SphereData {
  Quaternion h;
  Quaternion rho;
  SphereMoebius m;
  // True when h, rho came from the closed forms; false when the generic
  // formulas were singular and the linear system was solved directly.
  bool closed_form{true};

  TwistorPoint operator()(const UnitImaginary& eta) const;
};

// Throws DegenerateEmbedding unless both coefficient blocks are nondegenerate
// CP^1 maps.
SphereData embed_line(const LineEmbedding& e);

// hp_chart(fibration_pi(e.image(z1, z2))): evaluation without sphere data.
TwistorPoint embed_direct(const LineEmbedding& e, Complex z1, Complex z2);

}  // namespace twistorlab
