#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "twistorlab/ambitwistor.hpp"
#include "twistorlab/random.hpp"

using namespace twistorlab;
using namespace twistorlab::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

NullLine random_line(Rng& rng) { return {rng.biquaternion(), rng.unit_imaginary(), rng.unit_imaginary()}; }

}  // namespace

TEST_CASE("alpha and beta planes") {
  Rng rng(89);
  const AlphaPlane a{rng.biquaternion(), rng.unit_imaginary()};
  CHECK(alpha_contains(a, a.c));
  for (int n = 0; n < 500; ++n) {
    const Biquaternion q = a.c + pi_minus(a.eta) * rng.biquaternion();
    CHECK(alpha_contains(a, q));
    const BetaPlane b{a.c, rng.unit_imaginary()};
    CHECK(beta_contains(b, a.c + rng.biquaternion() * pi_minus(b.eta)));
  }
  CHECK_FALSE(alpha_contains({Biquaternion{}, UnitImaginary(1, 0, 0)}, Biquaternion{1.0}));
}

TEST_CASE("planes_intersect and null_line_from") {
  Rng rng(97);
  const Biquaternion c = rng.biquaternion();
  CHECK(planes_intersect({c, rng.unit_imaginary()}, {c, rng.unit_imaginary()}));
  const UnitImaginary ei(1, 0, 0);
  CHECK_FALSE(planes_intersect({Biquaternion{1.0}, ei}, {Biquaternion{}, ei}));

  const NullLine l0 = null_line_from({Biquaternion{}, ei}, {Biquaternion{}, UnitImaginary(0, 1, 0)});
  CHECK(l0.p.norm() < 1e-15);
  CHECK(dist(l0.eta2, J) == 0.0);

  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const AlphaPlane a{rng.biquaternion(), rng.unit_imaginary()};
    const BetaPlane b{a.c + pi_minus(a.eta) * rng.biquaternion(), rng.unit_imaginary()};
    CHECK(planes_intersect(a, b));
    const NullLine l = null_line_from(a, b);
    worst = std::max({worst, alpha_residual(a, l.p), beta_residual(b, l.p)});
    // every point of the line is on both planes
    const Biquaternion q = l.at(rng.complex());
    worst = std::max({worst, alpha_residual(a, q), beta_residual(b, q)});
  }
  CHECK(worst < 1e-10);

  CHECK(code_of([&] { null_line_from({Biquaternion{1.0}, ei}, {Biquaternion{}, ei}); }) ==
        ErrorCode::NoIntersection);
}

TEST_CASE("null directions") {
  CHECK_FALSE(is_null(Biquaternion{1.0}));
  CHECK(is_null(Biquaternion{}));
  Rng rng(101);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Biquaternion v = pi_minus(rng.unit_imaginary()) * rng.biquaternion() * pi_minus(rng.unit_imaginary());
    worst = std::max(worst, null_residual(v));
  }
  CHECK(worst < 1e-12);

  // eta2 = -eta1 kills pi- 1 pi-; the direction must still be found
  const UnitImaginary e(0.0, 0.6, 0.8);
  const NullLine opp{Biquaternion{}, e, UnitImaginary::normalized(-e.quat())};
  const Biquaternion d = opp.direction();
  CHECK(std::abs(d.norm() - 1.0) < 1e-14);
  CHECK(is_null(d));
  const UnitImaginary ei(1, 0, 0);
  const NullLine poles{Biquaternion{}, ei, UnitImaginary(-1, 0, 0)};
  CHECK(std::abs(poles.direction().norm() - 1.0) < 1e-14);
}

TEST_CASE("translation invariance of null lines") {
  Rng rng(103);
  for (int n = 0; n < 500; ++n) {
    const NullLine l = random_line(rng);
    const Biquaternion q = l.p + pi_minus(l.eta1) * rng.biquaternion() * pi_minus(l.eta2);
    CHECK(line_contains(l, q));
  }
}

TEST_CASE("chart_coords") {
  Rng rng(107);
  const NullHyperplane h{Biquaternion{}, rng.unit_imaginary(), rng.unit_imaginary()};
  const NullLine through0{Biquaternion{}, rng.unit_imaginary(), rng.unit_imaginary()};
  CHECK(chart_coords(h, through0).norm() < 1e-15);
  CHECK(code_of([&] { chart_coords(h, NullLine{rng.biquaternion(), h.eta1, rng.unit_imaginary()}); }) ==
        ErrorCode::ChartSingular);

  double worst = 0.0, worst_pair = 0.0;
  for (int n = 0; n < 100; ++n) {
    const NullLine l = random_line(rng);
    const NullHyperplane s{Biquaternion{}, rng.unit_imaginary(), rng.unit_imaginary()};
    const NullHyperplane t{rng.biquaternion(), rng.unit_imaginary(), rng.unit_imaginary()};
    const Biquaternion xs = chart_coords(s, l), xt = chart_coords(t, l);
    worst = std::max({worst, hyperplane_residual(s, xs), line_residual(l, xs), hyperplane_residual(t, xt),
                      line_residual(l, xt)});
    worst_pair = std::max({worst_pair, null_residual(xs - xt), line_residual({xs, l.eta1, l.eta2}, xt)});
  }
  CHECK(worst < 1e-10);
  CHECK(worst_pair < 1e-9);
}

TEST_CASE("mink_convert") {
  const MinkCoords zero = mink_convert(Biquaternion{});
  CHECK(std::abs(zero.z) + std::abs(zero.zt) + std::abs(zero.w) + std::abs(zero.wt) == 0.0);
  const MinkCoords one = mink_convert(Biquaternion{1.0});
  CHECK(std::abs(one.z - 1.0 / std::sqrt(2.0)) < 1e-16);
  CHECK(std::abs(one.zt - 1.0 / std::sqrt(2.0)) < 1e-16);
  CHECK(std::abs(one.w) == 0.0);

  Rng rng(109);
  double worst = 0.0, worst_slice = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Biquaternion q = rng.biquaternion();
    worst = std::max(worst, dist(mink_inverse(mink_convert(q)), q));
    const MinkCoords r = mink_convert(Biquaternion{rng.quaternion()});
    worst_slice = std::max({worst_slice, std::abs(r.zt - std::conj(r.z)), std::abs(r.wt + std::conj(r.w))});
  }
  CHECK(worst < 1e-14);
  CHECK(worst_slice < 1e-15);
}

TEST_CASE("klein_intersections") {
  const auto [p0, m0] = klein_intersections({Biquaternion{}, UnitImaginary(0, 1, 0)});
  CHECK(p0.norm() == 0.0);
  CHECK(m0.norm() == 0.0);
  CHECK(code_of([] { klein_intersections({Biquaternion{1.0}, UnitImaginary(1, 0, 0)}); }) == ErrorCode::PoleChart);

  Rng rng(113);
  const UnitImaginary ei(1, 0, 0);
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const AlphaPlane z{rng.biquaternion(), rng.unit_imaginary()};
    const auto [qp, qm] = klein_intersections(z);
    worst = std::max({worst, alpha_residual(z, qp), alpha_residual(z, qm),
                      (pi_plus(Biquaternion{ei}) * qp).norm() / (1.0 + qp.norm()),
                      (pi_minus(Biquaternion{ei}) * qm).norm() / (1.0 + qm.norm())});
  }
  CHECK(worst < 1e-10);
}
