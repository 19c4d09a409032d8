#include "twistorlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>

#include "json.hpp"

#include "twistorlab/ambitwistor.hpp"
#include "twistorlab/error.hpp"
#include "twistorlab/fct.hpp"
#include "twistorlab/forms.hpp"
#include "twistorlab/moebius.hpp"
#include "twistorlab/random.hpp"
#include "twistorlab/twistor.hpp"

namespace twistorlab {

namespace {

// Hands out the per-sample streams of one check.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view id) : seed_{seed}, id_{id} {}
  Rng operator()(std::uint64_t index) const { return Rng(seed_, id_, index); }

 private:
  std::uint64_t seed_;
  std::string_view id_;
};

struct Check {
  const char* id;
  const char* anchor;
  int samples;
  double tol;
  Bound bound;
  bool fixed_tol;  // threshold is not a residual tolerance
  std::function<double(const Sampler&, int)> run;
};

double d(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }
double d(const Biquaternion& a, const Biquaternion& b) { return (a - b).norm(); }
double d(const QTwoForm& a, const QTwoForm& b) { return (a - b).norm(); }

BqMoebius random_bq(Rng& rng) {
  return {rng.biquaternion(), rng.biquaternion(), rng.biquaternion(), rng.biquaternion()};
}

NullLine moderate_line(Rng& rng) {
  return {Biquaternion{0.5 * rng.quaternion(), 0.05 * rng.quaternion()}, rng.unit_imaginary(), rng.unit_imaginary()};
}

NullHyperplane random_hyperplane(Rng& rng, double scale) {
  return {scale * rng.biquaternion(), rng.unit_imaginary(), rng.unit_imaginary()};
}

const Field& bpst() {
  static const Field xi = bpst_xi_field();
  return xi;
}

const Field& identity_c() {
  static const Field f = Field::identity(Domain::Complex);
  return f;
}

QTwoForm dq_dqbar() { return wedge(dq(), dqbar()); }
QTwoForm dqbar_dq() { return wedge(dqbar(), dq()); }

// ---- quaternion algebra ----

std::vector<Check> algebra_checks() {
  return {
      {"algebra.real_part", "real part as an average of conjugations by the basis", 1000, 1e-12, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Quaternion q = rng.quaternion();
           Quaternion sum;
           for (int mu = 0; mu < 4; ++mu) sum += Quaternion::unit(mu) * q * Quaternion::unit(mu).conj();
           worst = std::max(worst, d(0.25 * sum, Quaternion{q.w}));
         }
         return worst;
       }},
      {"algebra.conjugate", "conjugate as a sum over the basis", 1000, 1e-12, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Quaternion q = rng.quaternion();
           Quaternion sum;
           for (int mu = 0; mu < 4; ++mu) sum += Quaternion::unit(mu) * q * Quaternion::unit(mu);
           worst = std::max(worst, d(-0.5 * sum, q.conj()));
         }
         return worst;
       }},
      {"algebra.norm_product", "multiplicative norm", 1000, 1e-12, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Quaternion a = rng.quaternion(), b = rng.quaternion();
           worst = std::max(worst, std::abs((a * b).norm() - a.norm() * b.norm()) / (a.norm() * b.norm()));
         }
         return worst;
       }},
      {"algebra.inverse", "biquaternion inverse round trip", 1000, 1e-10, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion a = rng.biquaternion();
           worst = std::max(worst, d(a * bq_inv(a), Biquaternion{1.0}));
         }
         return worst;
       }},
      {"algebra.conj_antihom", "conjugation reverses products", 1000, 1e-12, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion a = rng.biquaternion(), b = rng.biquaternion();
           worst = std::max(worst, d((a * b).qconj(), b.qconj() * a.qconj()));
         }
         return worst;
       }},
  };
}

// ---- forms ----

std::vector<Check> forms_checks() {
  return {
      {"forms.differential_fd", "jet differential against central differences", 200, 1e-6, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion a = rng.biquaternion(), b = rng.biquaternion(), c = rng.biquaternion();
           const Biquaternion dd = rng.biquaternion(), e = rng.biquaternion();
           const Field f{[=](const Jet& q) {
                           return Jet{a} * q * Jet{b} * q + Jet{c} * qconj(q) + inverse(q + Jet{dd}) * Jet{e};
                         },
                         Domain::Complex};
           const Biquaternion p = rng.near_real_point(0.3), v = rng.biquaternion();
           const double h = 1e-5;
           const Biquaternion fd = (1.0 / (2.0 * h)) * (f(p + h * v) - f(p - h * v));
           worst = std::max(worst, d(differential(f, p).contract(v), fd) / (1.0 + fd.norm()));
         }
         return worst;
       }},
      {"forms.differential_exact", "jet differential of polynomial fields", 200, 1e-12, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion a = rng.biquaternion(), b = rng.biquaternion(), c = rng.biquaternion();
           const Field f{[=](const Jet& q) { return Jet{a} * q * Jet{b} * q + Jet{c} * qconj(q); }, Domain::Complex};
           const Biquaternion p = rng.near_real_point(0.3), v = rng.biquaternion();
           const Biquaternion exact = a * v * b * p + a * p * b * v + c * v.qconj();
           worst = std::max(worst, d(differential(f, p).contract(v), exact) / (1.0 + exact.norm()));
         }
         return worst;
       }},
      {"forms.wedge_identity", "dq ^ w dq in terms of dqbar^dq and dq^dqbar", 1000, 1e-12, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion w = rng.biquaternion();
           const QTwoForm lhs = wedge(dq(), w * dq());
           const QTwoForm rhs = -0.5 * (w.qconj() * dqbar_dq() + dq_dqbar() * w.qconj());
           worst = std::max(worst, d(lhs, rhs) / (1.0 + w.norm()));
         }
         return worst;
       }},
      {"forms.duality_table", "self- and anti-self-duality of the basic two-forms", 1, 0.0, Bound::Upper, true,
       [](const Sampler&, int) {
         double worst = d(hodge_star(dq_dqbar()), dq_dqbar());
         worst = std::max(worst, d(hodge_star(dqbar_dq()), -1.0 * dqbar_dq()));
         for (int i = 1; i < 4; ++i) {
           const Biquaternion ei = Biquaternion::unit(i);
           const QTwoForm asd = wedge(dq(), ei * dqbar());
           const QTwoForm sd = wedge(dqbar(), ei * dq());
           worst = std::max({worst, d(hodge_star(asd), -1.0 * asd), d(hodge_star(sd), sd)});
         }
         return worst;
       }},
      {"forms.star_involution", "hodge star squares to the identity", 100, 1e-14, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           QTwoForm f;
           for (auto& c : f.c) c = rng.biquaternion();
           worst = std::max(worst, d(hodge_star(hodge_star(f)), f));
         }
         return worst;
       }},
      {"forms.projectors", "projector identities for a unit imaginary structure", 1000, 1e-12, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion eta{rng.unit_imaginary()};
           const Biquaternion x = rng.biquaternion();
           worst = std::max(worst, proj_pm(eta, +1, proj_pm(eta, -1, x, Side::Left), Side::Left).norm());
           worst = std::max(worst, proj_pm(eta, -1, proj_pm(eta, +1, x, Side::Right), Side::Right).norm());
           for (int sign : {+1, -1}) {
             for (Side side : {Side::Left, Side::Right}) {
               const Biquaternion once = proj_pm(eta, sign, x, side);
               worst = std::max(worst, d(proj_pm(eta, sign, once, side), 2.0 * (kI * once)));
             }
           }
         }
         return worst;
       }},
      {"forms.holomorphic_equivalence", "holomorphic forms: contraction and operator conditions agree", 100, 1e-10,
       Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           QOneForm w;
           for (auto& c : w.hol) c = rng.biquaternion();
           for (int m = 0; m < 100; ++m) {
             const auto r = lemma1_check(w, rng.unit_imaginary());
             worst = std::max(worst, r.r_equiv / (1.0 + w.norm()));
           }
         }
         return worst;
       }},
      {"forms.antiholomorphic_detected", "a nonzero antiholomorphic bank is detected", 100, 1e-3, Bound::Lower, true,
       [](const Sampler& s, int n) {
         double least = std::numeric_limits<double>::infinity();
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           QOneForm w;
           for (auto& c : w.hol) c = rng.biquaternion();
           for (auto& c : w.anti) c = rng.biquaternion();
           double best = 0.0;
           for (int m = 0; m < 20; ++m) best = std::max(best, lemma1_check(w, rng.unit_imaginary()).r_contract);
           least = std::min(least, best / w.norm());
         }
         return least;
       }},
      {"forms.invariant_subspace", "1/2 (dq xi - xibar dqbar) lies in the invariant subspace", 20, 1e-10,
       Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion xi = rng.biquaternion();
           const QOneForm w = 0.5 * (dq() * xi - xi.qconj() * dqbar());
           for (int m = 0; m < 50; ++m) {
             const UnitImaginary e = rng.unit_imaginary();
             const Biquaternion eb{e};
             worst = std::max(worst, script_I(e, pi_plus(eb) * (eb * w - w * eb)).norm() / (1.0 + xi.norm()));
           }
         }
         return worst;
       }},
  };
}

// ---- Moebius maps ----

std::vector<Check> moebius_checks() {
  return {
      {"moebius.cp1_square", "CP1 maps commute with stereographic projection", 500, 1e-10, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int m = 0; m < 50; ++m) {
           Rng rng = s(m);
           const Complex a = rng.complex(), b = rng.complex(), c = rng.complex(), dd = rng.complex();
           const SphereMoebius mm = mob_from_cp1(a, b, c, dd);
           for (int k = 0; k < n; ++k) {
             const Complex z1 = rng.complex(), z2 = rng.complex();
             const Quaternion lhs = mob_apply(mm, eta_stereo(z1, z2)).quat();
             worst = std::max(worst, d(lhs, eta_stereo(a * z1 + b * z2, c * z1 + dd * z2).quat()));
           }
         }
         return worst;
       }},
      {"moebius.lorentz_interval", "unit biquaternions preserve the Minkowski interval", 1000, 1e-12, Bound::Upper,
       false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion g = rng.biquaternion();
           const Complex sq = std::sqrt(g.qnorm());
           const LorentzBiquaternion phi{g / sq, 1e-12};
           const MinkowskiQuaternion x{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
           const double scale = 1.0 + g.norm2() * g.norm2() / std::norm(sq);
           worst = std::max(worst, std::abs(lorentz_apply(phi, x).interval() - x.interval()) / scale);
         }
         return worst;
       }},
      {"moebius.generator_imaginary", "generators of normalized paths are imaginary", 200, 1e-10, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Field phi = normalized_phi(bq_mob_field(random_bq(rng)));
           const Generator g =
               mob_generator(phi, Biquaternion{rng.quaternion()}, Biquaternion{rng.quaternion()});
           worst = std::max({worst, std::abs(g.gamma.w), std::abs(g.delta.w)});
         }
         return worst;
       }},
      {"moebius.composition", "coefficient matrix product is composition", 100, 1e-10, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const BqMoebius a = random_bq(rng), b = random_bq(rng);
           const Biquaternion x = rng.biquaternion();
           const Biquaternion rhs = bq_mob_apply(a, bq_mob_apply(b, x));
           worst = std::max(worst, d(bq_mob_apply(bq_mob_compose(a, b), x), rhs) / (1.0 + rhs.norm()));
         }
         return worst;
       }},
      {"moebius.factorization", "d kappa = chi dq psi for Moebius maps", 50, 1e-9, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const BqMoebius m = random_bq(rng);
           const MoebiusFactor f = bq_mob_factor(m);
           for (int j = 0; j < 20; ++j) {
             worst = std::max(worst, factorization_residual(m, f, Biquaternion{rng.quaternion()}));
           }
         }
         return worst;
       }},
      {"moebius.conformal_characterization", "factorized maps satisfy the conformal characterization", 50, 1e-8,
       Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const BqMoebius m = random_bq(rng);
           const Field kappa = bq_mob_field(m);
           const Field phi = normalized_phi(bq_mob_factor(m).chi);
           for (int j = 0; j < 4; ++j) {
             const auto r = theorem1_residual(kappa, phi, Biquaternion{rng.quaternion()});
             worst = std::max({worst, r.r1, r.r2});
           }
         }
         return worst;
       }},
  };
}

// ---- twistor projection ----

std::vector<Check> twistor_checks() {
  return {
      {"twistor.chart_diagram", "chart change then trivialization equals transition", 200, 1e-10, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const CP3Point z{{rng.complex(), rng.complex(), rng.complex(), rng.complex()}};
           const TwistorPoint a = trivialize_phi(swap_chart(z));
           const TwistorPoint b = transition_tau(trivialize_phi(z));
           worst = std::max({worst, d(a.q, b.q), d(a.eta.quat(), b.eta.quat())});
         }
         return worst;
       }},
      {"twistor.fibre_structure", "complex structure on the fibre", 200, 1e-8, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Complex z = rng.complex(), v = rng.complex();
           const Quaternion dv = eta_differential(z, v);
           worst = std::max(worst, d(eta_differential(z, Complex{0.0, 1.0} * v), eta_of(z).quat() * dv));
         }
         return worst;
       }},
      {"twistor.ray_invariance", "stereographic structure is constant on complex rays", 500, 1e-12, Bound::Upper,
       false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Complex z1 = rng.complex(), z2 = rng.complex(), l = rng.complex();
           worst = std::max(worst, d(eta_stereo(l * z1, l * z2).quat(), eta_stereo(z1, z2).quat()));
         }
         return worst;
       }},
      {"twistor.sphere_data", "closed-form sphere data of an embedded line", 20, 1e-10, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const LineEmbedding e{rng.complex(), rng.complex(), rng.complex(), rng.complex(),
                                 rng.complex(), rng.complex(), rng.complex(), rng.complex()};
           const SphereData sd = embed_line(e);
           for (int j = 0; j < 50; ++j) {
             const Complex z1 = rng.complex(), z2 = rng.complex();
             const TwistorPoint direct = embed_direct(e, z1, z2);
             const TwistorPoint via = sd(eta_stereo(z1, z2));
             worst = std::max({worst, d(direct.q, via.q) / (1.0 + direct.q.norm()),
                               d(direct.eta.quat(), via.eta.quat())});
           }
         }
         return worst;
       }},
  };
}

// ---- ambitwistor geometry ----

std::vector<Check> ambitwistor_checks() {
  return {
      {"ambitwistor.direction_nullity", "projected directions are null", 1000, 1e-12, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion m1 = pi_minus(rng.unit_imaginary());
           const Biquaternion v = m1 * rng.biquaternion() * pi_minus(rng.unit_imaginary());
           worst = std::max(worst, null_residual(v));
         }
         return worst;
       }},
      {"ambitwistor.alpha_equivalence", "points differing by a projected vector share an alpha-plane", 500, 1e-10,
       Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const AlphaPlane a{rng.biquaternion(), rng.unit_imaginary()};
           worst = std::max(worst, alpha_residual(a, a.c + pi_minus(a.eta) * rng.biquaternion()));
         }
         return worst;
       }},
      {"ambitwistor.incidence", "null line of an intersecting alpha/beta pair", 200, 1e-10, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const AlphaPlane a{rng.biquaternion(), rng.unit_imaginary()};
           const BetaPlane b{a.c + pi_minus(a.eta) * rng.biquaternion(), rng.unit_imaginary()};
           const NullLine l = null_line_from(a, b);
           const Biquaternion q = l.at(rng.complex());
           worst = std::max({worst, alpha_residual(a, l.p), beta_residual(b, l.p), alpha_residual(a, q),
                             beta_residual(b, q)});
         }
         return worst;
       }},
      {"ambitwistor.chart_membership", "chart coordinates lie on the line and the hyperplane", 100, 1e-10,
       Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const NullLine l{rng.biquaternion(), rng.unit_imaginary(), rng.unit_imaginary()};
           const NullHyperplane h = random_hyperplane(rng, 1.0);
           const Biquaternion x = chart_coords(h, l);
           worst = std::max({worst, hyperplane_residual(h, x), line_residual(l, x)});
         }
         return worst;
       }},
      {"ambitwistor.chart_consistency", "two chart descriptions of a line differ by a null direction", 100, 1e-9,
       Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const NullLine l{rng.biquaternion(), rng.unit_imaginary(), rng.unit_imaginary()};
           const Biquaternion xs = chart_coords(random_hyperplane(rng, 0.0), l);
           const Biquaternion xt = chart_coords(random_hyperplane(rng, 1.0), l);
           worst = std::max({worst, null_residual(xs - xt), line_residual({xs, l.eta1, l.eta2}, xt)});
         }
         return worst;
       }},
      {"ambitwistor.translation_invariance", "null lines are invariant under their own translations", 500, 1e-10,
       Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const NullLine l{rng.biquaternion(), rng.unit_imaginary(), rng.unit_imaginary()};
           const Biquaternion q = l.p + pi_minus(l.eta1) * rng.biquaternion() * pi_minus(l.eta2);
           worst = std::max(worst, line_residual(l, q));
         }
         return worst;
       }},
  };
}

// ---- frustrated conformal transformations, general ----

std::vector<Check> fct_checks() {
  return {
      {"fct.null_integrability", "curvature contracts to zero on null lines", 500, 1e-10, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion m1 = pi_minus(rng.unit_imaginary()), m2 = pi_minus(rng.unit_imaginary());
           const Biquaternion v = m1 * rng.biquaternion() * m2, w = m1 * rng.biquaternion() * m2;
           const Curvature c = curvature(bpst(), rng.near_real_point(0.2));
           worst = std::max({worst, c.left.contract(v, w).norm(), c.right.contract(v, w).norm()});
         }
         return worst;
       }},
      {"fct.s2_membership", "wedge with lambda dq spans the S2 forms", 100, 1e-12, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion g = rng.biquaternion();
           const Complex lam = rng.complex();
           const QOneForm r = dq() * g + g.qconj() * dqbar();
           worst = std::max(worst, d(wedge(lam * r, dq()), lam * s2_form(g)) / (1.0 + std::abs(lam) * g.norm()));
         }
         return worst;
       }},
      {"fct.transport_order", "transport step halving is fourth order", 10, 4.0, Bound::Upper, true,
       [](const Sampler& s, int n) {
         // |ratio - 16| over generic lines; the window [12, 20] is tol = 4
         Rng coeff = s(0);
         const Biquaternion a = 0.5 * coeff.biquaternion(), b = 0.5 * coeff.biquaternion();
         const Biquaternion c = 0.5 * coeff.biquaternion();
         const Field xi{[=](const Jet& q) { return Jet{a} * q * Jet{b} + Jet{c}; }};
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k + 1);
           const NullLine l{0.5 * rng.biquaternion(), rng.unit_imaginary(), rng.unit_imaginary()};
           worst = std::max(worst, std::abs(transport_order_ratio(xi, l, 1.0, 0.0, 1.0, 32) - 16.0));
         }
         return worst;
       }},
      {"fct.conformal_covariance", "conformal images of the basic solution are solutions", 50, 1e-8, Bound::Upper,
       false,
       [](const Sampler& s, int n) {
         const Field xi = bpst_xi_field(Domain::Real);
         const Field id = Field::identity();
         const ConformalPair shifted = conformal_pullback(xi, id, BqMoebius{2.0, 1.0, 1.0, 1.0});
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion p{rng.quaternion()};
           worst = std::max(worst, fct_residual(bpst(), identity_c(), p));
           worst = std::max(worst, fct_residual(shifted.xi, shifted.f, p) /
                                       (1.0 + nabla_apply(shifted.xi, shifted.f, p).norm()));
         }
         return worst;
       }},
  };
}

// ---- the basic instanton ----

std::vector<Check> bpst_checks() {
  return {
      {"bpst.curvature_left", "left curvature is dq^dqbar / (1 + |q|^2)^2", 100, 1e-9, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion p{rng.quaternion()};
           const double w = 1.0 + p.norm2();
           worst = std::max(worst, d(curvature(bpst(), p).left, (1.0 / (w * w)) * dq_dqbar()));
         }
         return worst;
       }},
      {"bpst.curvature_right", "right curvature is -dqbar^dq / (1 + |q|^2)^2", 100, 1e-9, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion p{rng.quaternion()};
           const double w = 1.0 + p.norm2();
           worst = std::max(worst, d(curvature(bpst(), p).right, (-1.0 / (w * w)) * dqbar_dq()));
         }
         return worst;
       }},
      {"bpst.curvature_direct", "closed-form curvature matches dA + A^A", 100, 1e-9, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Biquaternion p = rng.near_real_point(0.2);
           const Curvature a = curvature(bpst(), p), b = curvature_direct(bpst(), p);
           worst = std::max({worst, d(a.left, b.left), d(a.right, b.right)});
         }
         return worst;
       }},
      {"bpst.duality", "left curvature self-dual, right curvature anti-self-dual", 100, 1e-9, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const Curvature c = curvature(bpst(), Biquaternion{rng.quaternion()});
           worst = std::max({worst, sd_split(c.left).anti_self_dual.norm(), sd_split(c.right).self_dual.norm()});
         }
         return worst;
       }},
      {"bpst.xi_conditions", "potential conditions", 100, 1e-9, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const auto r = xi_conditions_residual(bpst(), Biquaternion{rng.quaternion()});
           worst = std::max({worst, r.r1, r.r2});
         }
         return worst;
       }},
      {"bpst.fct_residual", "f = q solves the frustrated equation", 100, 1e-9, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           worst = std::max(worst, fct_residual(bpst(), identity_c(), Biquaternion{rng.quaternion()}));
         }
         return worst;
       }},
      {"bpst.lambda_closed_form", "transported lambda is (1 - |q|^2) / (1 + |q|^2)", 20, 1e-8, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const LambdaPath path = lambda_transport(identity_c(), moderate_line(rng), 0.0, 1.0);
           for (std::size_t j = 0; j < path.t.size(); ++j) {
             const Complex qq = path.q[j].qnorm();
             worst = std::max(worst, std::abs(path.lambda[j] - (1.0 - qq) / (1.0 + qq)));
           }
         }
         return worst;
       }},
      {"bpst.transport_origin", "transport is trivial on lines through the origin", 20, 1e-10, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const NullLine l{Biquaternion{}, rng.unit_imaginary(), rng.unit_imaginary()};
           const TransportState st = transport(bpst(), l, rng.complex(), 0.0, 1.0);
           worst = std::max({worst, d(st.chi, Biquaternion{1.0}), d(st.psi, Biquaternion{1.0})});
         }
         return worst;
       }},
      {"bpst.transport_reparam", "transport does not depend on the parametrization", 20, 1e-8, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const NullLine l = moderate_line(rng);
           const TransportState a = transport(bpst(), l, 1.0, 0.0, 1.0);
           const TransportState b = transport(bpst(), l, 0.5, 0.0, 2.0);
           worst = std::max({worst, d(a.chi, b.chi), d(a.psi, b.psi)});
         }
         return worst;
       }},
      {"bpst.ambimap", "induced structures constant and images null-collinear on null lines", 20, 1e-8,
       Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const AmbiMapData a = ambimap_eval(bpst(), identity_c(), moderate_line(rng), 5);
           worst = std::max({worst, a.constancy, a.collinearity});
         }
         return worst;
       }},
      {"bpst.patching", "two-chart patching of the induced map", 10, 1e-7, Bound::Upper, false,
       [](const Sampler& s, int n) {
         double worst = 0.0;
         for (int k = 0; k < n; ++k) {
           Rng rng = s(k);
           const NullLine l = moderate_line(rng);
           const NullHyperplane hs = random_hyperplane(rng, 0.0), ht = random_hyperplane(rng, 0.3);
           worst = std::max(worst, patching_check(bpst(), identity_c(), l, hs, ht));
         }
         return worst;
       }},
  };
}

struct Suite {
  const char* name;
  const char* anchor;
  std::vector<Check> (*checks)();
};

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites{
      {"algebra", "quaternion and biquaternion algebra", algebra_checks},
      {"forms", "quaternionic differential forms and duality", forms_checks},
      {"moebius", "Moebius maps, Lorentz action and factorization", moebius_checks},
      {"twistor", "twistor fibration, charts and embedded lines", twistor_checks},
      {"ambitwistor", "null planes, null lines and chart coordinates", ambitwistor_checks},
      {"fct", "curvature, transport and covariance of frustrated maps", fct_checks},
      {"bpst", "the basic instanton potential and f = q", bpst_checks},
  };
  return suites;
}

CheckResult evaluate(const Check& c, std::uint64_t seed, int samples, double tol) {
  CheckResult r;
  r.id = c.id;
  r.anchor = c.anchor;
  r.samples = samples > 0 ? samples : c.samples;
  r.tol = (tol > 0.0 && !c.fixed_tol) ? tol : c.tol;
  r.bound = c.bound;
  try {
    r.value = c.run(Sampler(seed, c.id), r.samples);
    r.pass = c.bound == Bound::Upper ? r.value <= r.tol : r.value > r.tol;
  } catch (const std::exception& e) {
    r.value = std::numeric_limits<double>::quiet_NaN();
    r.pass = false;
    r.error = e.what();
  }
  if (std::isnan(r.value)) r.pass = false;
  return r;
}

std::vector<Check> select(std::string_view name) {
  std::vector<Check> checks;
  for (const auto& s : registry()) {
    if (name == "all" || name == s.name) {
      auto more = s.checks();
      checks.insert(checks.end(), more.begin(), more.end());
    }
  }
  if (checks.empty()) throw Error(ErrorCode::UnknownSuite, std::string(name));
  return checks;
}

}  // namespace

std::vector<SuiteInfo> list_suites() {
  std::vector<SuiteInfo> out;
  int total = 0;
  for (const auto& s : registry()) {
    const int n = static_cast<int>(s.checks().size());
    out.push_back({s.name, s.anchor, n});
    total += n;
  }
  out.push_back({"all", "every suite above, in order", total});
  return out;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed, int samples, double tol) {
  const std::vector<Check> checks = select(name);
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::future<CheckResult>> futures;
  futures.reserve(checks.size());
  for (const auto& c : checks) {
    futures.push_back(std::async(std::launch::async, [&c, seed, samples, tol] { return evaluate(c, seed, samples, tol); }));
  }

  SuiteReport report;
  report.suite = std::string(name);
  report.seed = seed;
  report.samples = samples;
  report.tol = tol;
  report.pass = true;
  for (auto& f : futures) {
    report.checks.push_back(f.get());
    report.pass = report.pass && report.checks.back().pass;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CheckResult run_check(std::string_view id, std::uint64_t seed, int samples, double tol) {
  for (const auto& c : select("all")) {
    if (id == c.id) return evaluate(c, seed, samples, tol);
  }
  throw Error(ErrorCode::UnknownSuite, "no check '" + std::string(id) + "'");
}

std::vector<std::string> list_checks(std::string_view suite) {
  std::vector<std::string> ids;
  for (const auto& c : select(suite)) ids.emplace_back(c.id);
  return ids;
}

std::string report_json(const SuiteReport& report, bool include_timing) {
  using nlohmann::ordered_json;
  auto number = [](double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); };
  ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  j["tol"] = report.tol;
  j["pass"] = report.pass;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json o;
    o["id"] = c.id;
    o["anchor"] = c.anchor;
    o["samples"] = c.samples;
    o["bound"] = c.bound == Bound::Upper ? "max" : "min";
    o["value"] = number(c.value);
    o["tol"] = c.tol;
    o["pass"] = c.pass;
    if (!c.error.empty()) o["error"] = c.error;
    checks.push_back(std::move(o));
  }
  j["checks"] = std::move(checks);
  if (include_timing) j["wall_seconds"] = report.wall_seconds;
  return j.dump(2) + "\n";
}

}  // namespace twistorlab
