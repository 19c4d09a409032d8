#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "twistorlab/random.hpp"
#include "twistorlab/twistor.hpp"

using namespace twistorlab;
using namespace twistorlab::testing;

namespace {

CP3Point random_cp3(Rng& rng) {
  return {{rng.complex(), rng.complex(), rng.complex(), rng.complex()}};
}

LineEmbedding random_embedding(Rng& rng) {
  return {rng.complex(), rng.complex(), rng.complex(), rng.complex(),
          rng.complex(), rng.complex(), rng.complex(), rng.complex()};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("fibration_pi") {
  const HPPoint a = fibration_pi({{1.0, 0.0, 0.0, 1.0}});
  CHECK(dist(a.q1, Quaternion{1.0}) == 0.0);
  CHECK(dist(a.q2, J) == 0.0);
  const HPPoint b = fibration_pi({{0.0, 1.0, 1.0, 0.0}});
  CHECK(dist(b.q1, J) == 0.0);
  CHECK(dist(b.q2, Quaternion{1.0}) == 0.0);

  Rng rng(67);
  for (int n = 0; n < 100; ++n) {
    const CP3Point z = random_cp3(rng);
    const Complex l = rng.complex();
    CP3Point lz = z;
    for (auto& c : lz.z) c *= l;
    CHECK(hp_equivalent(fibration_pi(z), fibration_pi(lz)));
  }
  CHECK_FALSE(hp_equivalent(fibration_pi({{1.0, 0.0, 0.0, 1.0}}), fibration_pi({{0.0, 1.0, 1.0, 0.0}})));
}

TEST_CASE("eta_stereo") {
  CHECK(dist(eta_stereo(1.0, 0.0), I) < 1e-15);
  CHECK(dist(eta_stereo(0.0, 1.0), -I) < 1e-15);
  CHECK(dist(eta_stereo(Complex{0.0, 1.0}, 1.0), J) < 1e-15);
  CHECK(code_of([] { eta_stereo(0.0, 0.0); }) == ErrorCode::InvalidArgument);

  Rng rng(71);
  double worst = 0.0;
  for (int n = 0; n < 500; ++n) {
    const Complex z1 = rng.complex(), z2 = rng.complex(), l = rng.complex();
    worst = std::max(worst, dist(eta_stereo(l * z1, l * z2), eta_stereo(z1, z2)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("fibre complex structure") {
  Rng rng(73);
  double worst_hol = 0.0, worst_fd = 0.0;
  for (int n = 0; n < 200; ++n) {
    const Complex z = rng.complex(), v = rng.complex();
    const Quaternion dv = eta_differential(z, v);
    const Quaternion div = eta_differential(z, Complex{0.0, 1.0} * v);
    worst_hol = std::max(worst_hol, dist(div, eta_of(z).quat() * dv));
    const double h = 1e-6;
    const Quaternion fd = (eta_of(z + h * v).quat() - eta_of(z - h * v).quat()) / (2.0 * h);
    worst_fd = std::max(worst_fd, dist(fd, dv) / (1.0 + dv.norm()));
  }
  CHECK(worst_hol < 1e-8);
  CHECK(worst_fd < 1e-8);
}

TEST_CASE("trivialize_phi and transition_tau") {
  const TwistorPoint o = trivialize_phi({{0.0, 0.0, 0.0, 1.0}});
  CHECK(o.q.norm() == 0.0);
  CHECK(dist(o.eta, -I) < 1e-15);
  const TwistorPoint p = trivialize_phi({{1.0, 0.0, 0.0, 1.0}});
  CHECK(dist(p.q, -J) < 1e-15);
  CHECK(dist(p.eta, -I) < 1e-15);
  CHECK(code_of([] { trivialize_phi({{0.0, 0.0, 1.0, 0.0}}); }) == ErrorCode::ChartMiss);

  const UnitImaginary eta(0.3, 0.1, -0.9);
  const TwistorPoint t1 = transition_tau({Quaternion{1.0}, eta});
  CHECK(dist(t1.q, Quaternion{1.0}) < 1e-15);
  CHECK(dist(t1.eta, eta) < 1e-15);
  const TwistorPoint tj = transition_tau({J, UnitImaginary(1, 0, 0)});
  CHECK(dist(tj.q, -J) < 1e-15);
  CHECK(dist(tj.eta, -I) < 1e-15);
  CHECK(code_of([&] { transition_tau({Quaternion{}, eta}); }) == ErrorCode::OriginSingular);

  Rng rng(79);
  double worst = 0.0, worst_inv = 0.0, worst_chart = 0.0;
  for (int n = 0; n < 200; ++n) {
    const CP3Point z = random_cp3(rng);
    const TwistorPoint a = trivialize_phi(swap_chart(z));
    const TwistorPoint b = transition_tau(trivialize_phi(z));
    worst = std::max({worst, dist(a.q, b.q), dist(a.eta, b.eta)});
    const TwistorPoint back = transition_tau(b);
    const TwistorPoint orig = trivialize_phi(z);
    worst_inv = std::max({worst_inv, dist(back.q, orig.q), dist(back.eta, orig.eta)});
    const HPPoint hp = fibration_pi(z);
    worst_chart = std::max(worst_chart, dist(inverse(hp.q2) * hp.q1, orig.q));
  }
  CHECK(worst < 1e-10);
  CHECK(worst_inv < 1e-10);
  CHECK(worst_chart < 1e-12);
}

TEST_CASE("embed_line") {
  const SphereData id = embed_line({1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0});
  CHECK(dist(id.h, Quaternion{1.0}) < 1e-15);
  CHECK(id.rho.norm() < 1e-15);
  CHECK(dist(id.m.alpha, Quaternion{1.0}) == 0.0);
  CHECK(id.m.beta.norm() == 0.0);
  CHECK(code_of([] { embed_line({0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0}); }) ==
        ErrorCode::DegenerateEmbedding);

  Rng rng(83);
  double worst = 0.0;
  int closed = 0;
  for (int n = 0; n < 20; ++n) {
    const LineEmbedding e = random_embedding(rng);
    const SphereData s = embed_line(e);
    closed += s.closed_form ? 1 : 0;
    for (int k = 0; k < 50; ++k) {
      const Complex z1 = rng.complex(), z2 = rng.complex();
      const TwistorPoint direct = embed_direct(e, z1, z2);
      const TwistorPoint viasd = s(eta_stereo(z1, z2));
      worst = std::max({worst, dist(direct.q, viasd.q) / (1.0 + direct.q.norm()), dist(direct.eta, viasd.eta)});
    }
  }
  CHECK(closed == 20);
  CHECK(worst < 1e-10);
}
