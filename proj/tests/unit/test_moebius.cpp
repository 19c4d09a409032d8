#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "twistorlab/moebius.hpp"
#include "twistorlab/random.hpp"

using namespace twistorlab;
using namespace twistorlab::testing;

namespace {

// (z1 + z2 j)^-1 i (z1 + z2 j), straight from the Hamilton product.
Quaternion stereo(Complex z1, Complex z2) {
  const Quaternion v = complex_pair(z1, z2);
  return inverse(v) * I * v;
}

BqMoebius random_bq(Rng& rng) {
  return {rng.biquaternion(), rng.biquaternion(), rng.biquaternion(), rng.biquaternion()};
}

}  // namespace

TEST_CASE("mob_apply examples") {
  const UnitImaginary ei(1, 0, 0);
  const UnitImaginary eta(0.2, -0.7, 0.4);
  CHECK(dist(mob_apply(SphereMoebius{}, eta), eta.quat()) < 1e-15);
  CHECK(dist(mob_apply({Quaternion{}, -K}, UnitImaginary(-1, 0, 0)), I) < 1e-15);
  CHECK(dist(mob_apply({K, Quaternion{}}, ei), -I) < 1e-15);
  // alpha + eta beta = 0 at eta = i for alpha = -i, beta = 1... use alpha = 1, beta = i: 1 + i*i = 0
  CHECK_THROWS_AS(mob_apply({Quaternion{1.0}, I}, ei), Error);
}

TEST_CASE("mob_from_cp1 examples") {
  const auto id = mob_from_cp1(1.0, 0.0, 0.0, 1.0);
  CHECK(dist(id.alpha, Quaternion{1.0}) == 0.0);
  CHECK(dist(id.beta, Quaternion{}) == 0.0);
  const auto swap = mob_from_cp1(0.0, 1.0, 1.0, 0.0);
  CHECK(dist(swap.alpha, Quaternion{}) < 1e-16);
  CHECK(dist(swap.beta, -K) < 1e-16);
  const auto two = mob_from_cp1(2.0, 0.0, 0.0, 2.0);
  CHECK(dist(two.alpha, Quaternion{2.0}) == 0.0);
  CHECK_THROWS_AS(mob_from_cp1(1.0, 2.0, 2.0, 4.0), Error);
  try {
    mob_from_cp1(1.0, 2.0, 2.0, 4.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateMap);
  }
}

TEST_CASE("CP1 compatibility square and composition") {
  Rng rng(41);
  double worst = 0.0, worst_comp = 0.0;
  for (int m = 0; m < 20; ++m) {
    const Complex a = rng.complex(), b = rng.complex(), c = rng.complex(), d = rng.complex();
    const Complex a2 = rng.complex(), b2 = rng.complex(), c2 = rng.complex(), d2 = rng.complex();
    const SphereMoebius mm = mob_from_cp1(a, b, c, d);
    const SphereMoebius m2 = mob_from_cp1(a2, b2, c2, d2);
    const SphereMoebius prod = mob_from_cp1(a * a2 + b * c2, a * b2 + b * d2, c * a2 + d * c2, c * b2 + d * d2);
    for (int n = 0; n < 50; ++n) {
      const Complex z1 = rng.complex(), z2 = rng.complex();
      const UnitImaginary eta = UnitImaginary::checked(stereo(z1, z2));
      worst = std::max(worst, dist(mob_apply(mm, eta), stereo(a * z1 + b * z2, c * z1 + d * z2)));
      worst_comp = std::max(worst_comp, dist(mob_apply(mm, mob_apply(m2, eta)), mob_apply(prod, eta)));
    }
  }
  CHECK(worst < 1e-10);
  CHECK(worst_comp < 1e-10);
}

TEST_CASE("lorentz_apply") {
  const MinkowskiQuaternion q{0.3, 1.2, -0.4, 2.0};
  const auto id = lorentz_apply(LorentzBiquaternion{Biquaternion{1.0}}, q);
  CHECK(id.x0 == doctest::Approx(q.x0));
  CHECK(id.x3 == doctest::Approx(q.x3));

  const double th = 0.7;
  const auto rot = lorentz_apply(LorentzBiquaternion{Biquaternion{Quaternion{std::cos(th / 2), std::sin(th / 2)}}}, q);
  CHECK(std::abs(rot.x0 - q.x0) < 1e-15);
  CHECK(std::abs(rot.x1 - q.x1) < 1e-15);
  CHECK(std::abs(rot.x2 - (std::cos(th) * q.x2 - std::sin(th) * q.x3)) < 1e-14);
  CHECK(std::abs(rot.x3 - (std::sin(th) * q.x2 + std::cos(th) * q.x3)) < 1e-14);

  const double u = 0.9;
  const Biquaternion boost{Quaternion{std::cosh(u / 2)}, Quaternion{0.0, std::sinh(u / 2)}};
  const auto b = lorentz_apply(LorentzBiquaternion{boost}, MinkowskiQuaternion{1.0});
  CHECK(std::abs(b.x0 - std::cosh(u)) < 1e-15);
  CHECK(std::abs(b.x1 - std::sinh(u)) < 1e-15);
  CHECK(std::abs(b.x2) < 1e-15);

  CHECK_THROWS_AS(LorentzBiquaternion{Biquaternion{2.0}}, Error);

  Rng rng(43);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Biquaternion g = rng.biquaternion();
    const Complex s = std::sqrt(g.qnorm());
    const LorentzBiquaternion phi{g / s, 1e-12};
    const MinkowskiQuaternion x{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    const auto y = lorentz_apply(phi, x);
    worst = std::max(worst, std::abs(y.interval() - x.interval()) / (1.0 + g.norm2() * g.norm2() / std::norm(s)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("mob_generator") {
  const Biquaternion p{Quaternion{0.4, 0.1, -0.2, 0.3}};
  const Biquaternion t{1.0};
  const Field c = Field::constant(Biquaternion{Quaternion{0.6, 0.8}});
  const Generator g0 = mob_generator(c, p, t);
  CHECK(g0.gamma.norm() == 0.0);
  CHECK(g0.delta.norm() == 0.0);

  auto x0 = [](const Jet& q) { return 0.5 * (q + qconj(q)); };
  const Field rot{[=](const Jet& q) {
    const Jet s = x0(q);
    return ccos(s) + csin(s) * Jet{Biquaternion{I}};
  }};
  const Generator gr = mob_generator(rot, p, t);
  CHECK(dist(gr.gamma, I) < 1e-15);
  CHECK(gr.delta.norm() < 1e-15);

  const Field boost{[=](const Jet& q) {
    const Jet s = x0(q);
    return ccosh(s) + csinh(s) * Jet{Biquaternion{Quaternion{}, I}};
  }};
  const Generator gb = mob_generator(boost, p, t);
  CHECK(gb.gamma.norm() < 1e-15);
  CHECK(dist(gb.delta, I) < 1e-15);

  CHECK_THROWS_AS(mob_generator(Field::constant(Biquaternion{2.0}), p, t), Error);

  Rng rng(47);
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const BqMoebius m = random_bq(rng);
    const Field phi = normalized_phi(bq_mob_field(m));
    const Biquaternion q{rng.quaternion()};
    const Generator g = mob_generator(phi, q, Biquaternion{rng.quaternion()});
    worst = std::max({worst, std::abs(g.gamma.w), std::abs(g.delta.w)});
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("bq_mob_apply and composition") {
  const Biquaternion q{Quaternion{0.5, -1, 2, 0.25}, Quaternion{0.1, 0, 0.3, 0}};
  CHECK(dist(bq_mob_apply(BqMoebius{}, q), q) < 1e-15);
  CHECK(dist(bq_mob_apply({2.0, 1.0, 1.0, 1.0}, Biquaternion{}), Biquaternion{1.0}) < 1e-15);
  CHECK(dist(bq_mob_apply({0.0, 1.0, 1.0, 0.0}, Biquaternion{J}), Biquaternion{-J}) < 1e-15);
  try {
    bq_mob_apply({0.0, 1.0, 1.0, 0.0}, Biquaternion{});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularPoint);
  }

  Rng rng(53);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const BqMoebius a = random_bq(rng), b = random_bq(rng);
    const Biquaternion x = rng.biquaternion();
    const Biquaternion lhs = bq_mob_apply(bq_mob_compose(a, b), x);
    const Biquaternion rhs = bq_mob_apply(a, bq_mob_apply(b, x));
    worst = std::max(worst, dist(lhs, rhs) / (1.0 + rhs.norm()));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("bq_mob_factor") {
  const BqMoebius m{2.0, 1.0, 1.0, 1.0};
  const MoebiusFactor f = bq_mob_factor(m);
  CHECK(dist(f.at, Biquaternion{1.0}) < 1e-15);
  CHECK(dist(f.bt, Biquaternion{1.0}) < 1e-15);
  const Biquaternion q{Quaternion{0.3, 0.2, -0.5, 1.0}};
  const Biquaternion inv = bq_inv(q + 1.0);
  CHECK(dist(f.chi(q), inv) < 1e-15);
  CHECK(dist(f.psi(q), inv) < 1e-15);
  CHECK(factorization_residual(m, f, q) < 1e-14);

  try {
    bq_mob_factor(BqMoebius{});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateFactorization);
  }

  Rng rng(59);
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    const BqMoebius r = random_bq(rng);
    const MoebiusFactor rf = bq_mob_factor(r);
    for (int k = 0; k < 20; ++k) {
      const Biquaternion x{rng.quaternion()};
      worst = std::max(worst, factorization_residual(r, rf, x));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("theorem1_residual") {
  const Biquaternion p{Quaternion{0.3, -0.1, 0.7, 0.2}};
  const Field one = Field::constant(Biquaternion{1.0});
  const auto r = theorem1_residual(Field::identity(), one, p);
  CHECK(r.r1 < 1e-15);
  CHECK(r.r2 < 1e-15);
  CHECK(dist(r.nu, Biquaternion{1.0}) < 1e-14);

  const Field bar{[](const Jet& q) { return qconj(q); }};
  CHECK(theorem1_residual(bar, one, p).r1 > 0.1);

  const BqMoebius m{2.0, 1.0, 1.0, 1.0};
  const MoebiusFactor f = bq_mob_factor(m);
  const Field phi = normalized_phi(f.chi);
  Rng rng(61);
  double worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const auto t = theorem1_residual(bq_mob_field(m), phi, Biquaternion{rng.quaternion()});
    worst = std::max({worst, t.r1, t.r2});
  }
  CHECK(worst < 1e-8);

  worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const BqMoebius r = random_bq(rng);
    const Field rphi = normalized_phi(bq_mob_factor(r).chi);
    for (int k = 0; k < 5; ++k) {
      const auto t = theorem1_residual(bq_mob_field(r), rphi, Biquaternion{rng.quaternion()});
      worst = std::max({worst, t.r1, t.r2});
    }
  }
  CHECK(worst < 1e-8);

  CHECK_THROWS_AS(theorem1_residual(Field::identity(), Field::constant(Biquaternion{2.0}), p), Error);
  const Field cut = normalized_phi(Field::constant(Biquaternion{Quaternion{}, Quaternion{1.0}}));
  try {
    cut(p);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BranchFailure);
  }
}
