#pragma once

/**
 * Incidence geometry in complexified Minkowski space H_C.
 *
 * Membership predicates use the scale-relative test
 *     |residual| < tol * (1 + |q - base|).
 */

#include <utility>

#include "twistorlab/quat.hpp"

namespace twistorlab {

inline constexpr double kIncidenceTol = 1e-10;

// pi+_eta (q - c) = 0
struct AlphaPlane {
  Biquaternion c;
  UnitImaginary eta;
};

// (q - c) pi+_eta = 0
struct BetaPlane {
  Biquaternion c;
  UnitImaginary eta;
};

struct NullLine {
  Biquaternion p;
  UnitImaginary eta1;  // alpha-plane structure
  UnitImaginary eta2;  // beta-plane structure

  // Unit-norm representative of pi-_eta1 delta pi-_eta2. Tries delta = 1, i,
  // j, k in turn and keeps the first one that does not vanish.
  Biquaternion direction() const;
  Biquaternion at(Complex t) const { return p + t * direction(); }
};

// pi+_eta1 (q - q0) pi+_eta2 = 0
struct NullHyperplane {
  Biquaternion q0;
  UnitImaginary eta1;
  UnitImaginary eta2;
};

double alpha_residual(const AlphaPlane& a, const Biquaternion& q);
double beta_residual(const BetaPlane& b, const Biquaternion& q);
double hyperplane_residual(const NullHyperplane& h, const Biquaternion& q);
// max of the alpha- and beta-plane residuals through L.p
double line_residual(const NullLine& l, const Biquaternion& q);

bool alpha_contains(const AlphaPlane& a, const Biquaternion& q, double tol = kIncidenceTol);
bool beta_contains(const BetaPlane& b, const Biquaternion& q, double tol = kIncidenceTol);
bool hyperplane_contains(const NullHyperplane& h, const Biquaternion& q, double tol = kIncidenceTol);
bool line_contains(const NullLine& l, const Biquaternion& q, double tol = kIncidenceTol);

// pi+_eta1 (c1 - c2) pi+_eta2 = 0
bool planes_intersect(const AlphaPlane& a, const BetaPlane& b, double tol = kIncidenceTol);

// Throws NoIntersection when the planes do not meet.
NullLine null_line_from(const AlphaPlane& a, const BetaPlane& b);

// |v vbar| / (1 + |v|^2)
double null_residual(const Biquaternion& v);
bool is_null(const Biquaternion& v, double tol = 1e-12);

// Intersection of L with a null hyperplane. Throws ChartSingular when L
// shares a structure with H.
Biquaternion chart_coords(const NullHyperplane& h, const NullLine& l);

struct MinkCoords {
  Complex z, zt, w, wt;
};
MinkCoords mink_convert(const Biquaternion& q);
Biquaternion mink_inverse(const MinkCoords& m);

// Intersections of the alpha-plane Z with pi+_i q = 0 and pi-_i q = 0.
// Throws PoleChart when Z.eta = +-i.
std::pair<Biquaternion, Biquaternion> klein_intersections(const AlphaPlane& z);

}  // namespace twistorlab
