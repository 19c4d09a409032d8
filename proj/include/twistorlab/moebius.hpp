#pragma once

/**
 * Moebius maps on the fibre of unit imaginaries, the biquaternion picture of
 * the restricted Lorentz group, and fractional-linear maps of H_C.
 */

#include <array>

#include "twistorlab/field.hpp"
#include "twistorlab/forms.hpp"
#include "twistorlab/quat.hpp"

namespace twistorlab {

// eta -> (alpha + eta beta)^-1 eta (alpha + eta beta)
struct SphereMoebius {
  Quaternion alpha{1.0};
  Quaternion beta{};
};

// Throws SingularMoebius when alpha + eta beta vanishes.
UnitImaginary mob_apply(const SphereMoebius& m, const UnitImaginary& eta);

// From the CP^1 map (z1, z2) -> (a z1 + b z2, c z1 + d z2). Throws
// DegenerateMap when ad = bc.
SphereMoebius mob_from_cp1(Complex a, Complex b, Complex c, Complex d);

// phi with phi qconj(phi) = 1.
class LorentzBiquaternion {
 public:
  // Throws NotNormalized if |phi phibar - 1| > tol.
  explicit LorentzBiquaternion(const Biquaternion& phi, double tol = 1e-12);
  const Biquaternion& value() const { return phi_; }

 private:
  Biquaternion phi_;
};

// q_m = x0 + I (i x1 + j x2 + k x3)
struct MinkowskiQuaternion {
  double x0{0.0}, x1{0.0}, x2{0.0}, x3{0.0};

  Biquaternion biquaternion() const;
  // Throws InvalidArgument if q is not of Minkowskian shape within tol.
  static MinkowskiQuaternion from(const Biquaternion& q, double tol = 1e-10);
  // x0^2 - x1^2 - x2^2 - x3^2
  double interval() const { return x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3; }
};

// q_m -> phi q_m conj_both(phi)
MinkowskiQuaternion lorentz_apply(const LorentzBiquaternion& phi, const MinkowskiQuaternion& q);

struct Generator {
  Quaternion gamma;  // rotations
  Quaternion delta;  // boosts
};

// qconj(phi(p)) dphi(v) split into real and imaginary banks. phi must be
// normalized at p (NotNormalized otherwise).
Generator mob_generator(const Field& phi, const Biquaternion& p, const Biquaternion& v);

// kappa(q) = (alpha q + beta)(gamma q + delta)^-1
struct BqMoebius {
  Biquaternion alpha{1.0}, beta{}, gamma{}, delta{1.0};
};

// Throws SingularPoint when gamma q + delta is a zero divisor.
Biquaternion bq_mob_apply(const BqMoebius& m, const Biquaternion& q);
// m1 after m2, i.e. the product of the coefficient matrices.
BqMoebius bq_mob_compose(const BqMoebius& m1, const BqMoebius& m2);
// kappa as a field (for differentials).
Field bq_mob_field(const BqMoebius& m, Domain domain = Domain::Real);

struct MoebiusFactor {
  // chi^-1 = q at + bt, psi^-1 = gt q + dt
  Biquaternion at, bt, gt, dt;
  Field chi;
  Field psi;
};

// dkappa = chi dq psi. Throws DegenerateFactorization when one of the
// required inverses does not exist (the identity map among them).
MoebiusFactor bq_mob_factor(const BqMoebius& m, Domain domain = Domain::Real);

// max coefficient norm of dkappa - chi dq psi at p.
double factorization_residual(const BqMoebius& m, const MoebiusFactor& f, const Biquaternion& p);

// phi = chi / sqrt(chi qconj(chi)), principal branch. The returned field
// throws BranchFailure where chi chibar is zero or a negative real.
Field normalized_phi(const Field& chi);

struct Theorem1Residuals {
  double r1;
  double r2;
  Biquaternion nu;
  Biquaternion xi;
};

// r1 = min_nu |dkappa - phi dq nu|, r2 = min_xi |phibar dphi - (dq xi - xibar dqbar)/2|
// over real-slice coefficients, solved in the 8 real parameters of nu, xi.
// Throws NotNormalized if phi(p) phibar(p) != 1.
Theorem1Residuals theorem1_residual(const Field& kappa, const Field& phi, const Biquaternion& p);

}  // namespace twistorlab
