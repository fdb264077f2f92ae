#include <cmath>

#include "doctest.h"
#include "octant/dynamics.hpp"
#include "octant/state.hpp"
#include "test_util.hpp"

using namespace octant;
using namespace octant::test;

TEST_CASE("make_pure normalizes amplitudes and wraps phases") {
  const PureState ground = make_pure(1, 0, 0, 0, 0);
  CHECK(ground.alpha == 1.0);
  CHECK(ground.beta == 0.0);

  const PureState eq = equal_superposition();
  const double third = 1.0 / std::sqrt(3.0);
  CHECK(eq.alpha == doctest::Approx(third).epsilon(1e-14));
  CHECK(eq.beta == doctest::Approx(third).epsilon(1e-14));
  CHECK(eq.gamma == doctest::Approx(third).epsilon(1e-14));
  CHECK(eq.phi1 == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(eq.phi2 == doctest::Approx(3 * kPi / 4).epsilon(1e-14));

  const PureState s = make_pure(3, 4, 0, 0, 0);
  CHECK(s.alpha == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(s.beta == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(s.gamma == 0.0);

  const PureState wrapped = make_pure(1, 1, 0, -kPi / 2, 7 * kPi);
  CHECK(wrapped.phi1 == doctest::Approx(3 * kPi / 2).epsilon(1e-14));
  CHECK(wrapped.phi2 == doctest::Approx(kPi).epsilon(1e-14));

  CHECK_THROWS_AS(make_pure(0, 0, 0, 0, 0), ValidationError);
  CHECK_THROWS_AS(make_pure(-1, 1, 0, 0, 0), ValidationError);
}

TEST_CASE("pure_to_density matches the outer-product form") {
  const DensityMatrix ground = pure_to_density(make_pure(1, 0, 0, 0, 0));
  CHECK(ground.m(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(ground.m(1, 1)) == 0.0);
  CHECK(std::abs(ground.m(0, 1)) == 0.0);

  const DensityMatrix rho = pure_to_density(equal_superposition());
  CHECK(std::abs(rho.m(0, 1)) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(std::abs(rho.m(0, 2)) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(std::abs(rho.m(1, 2)) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(std::arg(rho.m(0, 1)) == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(std::arg(rho.m(0, 2)) == doctest::Approx(3 * kPi / 4).epsilon(1e-12));
  CHECK(std::arg(rho.m(1, 2)) == doctest::Approx(kPi / 4).epsilon(1e-12));
  CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-13));

  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix two = pure_to_density(make_pure(r, r, 0, 0, 0));
  CHECK(two.m(0, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(two.m(2, j)) == 0.0);
    CHECK(std::abs(two.m(j, 2)) == 0.0);
  }
}

TEST_CASE("validate_density reports the violated invariant") {
  Matrix3c uniform = Matrix3c::Zero();
  uniform.diagonal().setConstant(1.0 / 3);
  CHECK_NOTHROW(validate_density(uniform));

  Matrix3c skew = uniform;
  skew(0, 1) = 1e-3;
  try {
    validate_density(skew);
    FAIL("expected hermiticity error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == ValidationError::Kind::hermiticity);
    CHECK(std::string(e.what()).find("hermiticity") != std::string::npos);
  }

  Matrix3c heavy = Matrix3c::Zero();
  heavy.diagonal() << 0.6, 0.6, 0.3;
  try {
    validate_density(heavy);
    FAIL("expected trace error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == ValidationError::Kind::trace);
    CHECK(e.violation == doctest::Approx(1.5));
  }
  CHECK_THROWS_AS(validate_density(Matrix3c::Zero()), ValidationError);

  Matrix3c negative = Matrix3c::Zero();
  negative.diagonal() << 1.5, -0.5, 0.0;
  try {
    validate_density(negative);
    FAIL("expected positivity error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == ValidationError::Kind::positivity);
    CHECK(std::string(e.what()).find("positivity") != std::string::npos);
    CHECK(e.violation == doctest::Approx(-0.5).epsilon(1e-12));
  }
}

TEST_CASE("the showcase mixed matrix is not positive semidefinite") {
  // Unit trace and Hermitian, but its smallest eigenvalue is genuinely
  // negative, so strict validation rejects it and the lax path lets it
  // through for display.
  const Matrix3c demo = demo_mixed_matrix();
  try {
    validate_density(demo);
    FAIL("expected positivity error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == ValidationError::Kind::positivity);
    CHECK(e.violation == doctest::Approx(-0.015657).epsilon(1e-3));
  }
  CHECK_NOTHROW(validate_density_lax(demo));
}

TEST_CASE("phase_readout magnitudes and phases") {
  const PhaseReadout demo = phase_readout(DensityMatrix{demo_mixed_matrix()});
  CHECK(demo.r01.magnitude == doctest::Approx(0.75).epsilon(1e-13));
  CHECK(demo.r02.magnitude == doctest::Approx(0.50).epsilon(1e-13));
  CHECK(demo.r12.magnitude == doctest::Approx(1.00).epsilon(1e-13));
  CHECK(demo.r01.phase == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(demo.r02.phase == doctest::Approx(3 * kPi / 4).epsilon(1e-12));
  CHECK(demo.r12.phase == doctest::Approx(kPi / 4).epsilon(1e-12));

  Matrix3c mix = Matrix3c::Zero();
  mix.diagonal() << 0.2, 0.3, 0.5;
  const PhaseReadout mixture = phase_readout(DensityMatrix{mix});
  for (const PairReadout* pr : {&mixture.r01, &mixture.r02, &mixture.r12}) {
    CHECK(pr->magnitude_defined);
    CHECK(pr->magnitude == 0.0);
    CHECK_FALSE(pr->phase_defined);
  }

  Matrix3c depop = Matrix3c::Zero();
  depop.diagonal() << 0.5, 0.5, 0.0;
  depop(0, 1) = depop(1, 0) = 0.5;
  const PhaseReadout partial = phase_readout(DensityMatrix{depop});
  CHECK(partial.r01.magnitude_defined);
  CHECK(partial.r01.phase_defined);
  CHECK_FALSE(partial.r02.magnitude_defined);
  CHECK_FALSE(partial.r12.magnitude_defined);
}

TEST_CASE("phase_readout properties over random states") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = random_density(rng);
    const PhaseReadout r = phase_readout(rho);
    for (const PairReadout* pr : {&r.r01, &r.r02, &r.r12}) {
      if (pr->magnitude_defined) {
        CHECK(pr->magnitude >= 0.0);
        CHECK(pr->magnitude <= 1.0 + 1e-9);
      }
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = pure_to_density(random_pure(rng));
    const PhaseReadout r = phase_readout(rho);
    for (const PairReadout* pr : {&r.r01, &r.r02, &r.r12}) {
      if (pr->magnitude_defined) {
        CHECK(pr->magnitude == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("phase_readout recovers pure-state phases") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const PureState s = random_populated_pure(rng);
    const PhaseReadout r = phase_readout(pure_to_density(s));
    REQUIRE(r.r01.phase_defined);
    REQUIRE(r.r02.phase_defined);
    REQUIRE(r.r12.phase_defined);
    CHECK(std::abs(r.r01.phase - s.phi1) < 1e-10);
    CHECK(std::abs(r.r02.phase - s.phi2) < 1e-10);
    CHECK(std::abs(r.r12.phase - wrap_angle(s.phi2 - s.phi1)) < 1e-10);
  }
}

TEST_CASE("gellmann basis normalization") {
  const auto& basis = gellmann_matrices();
  for (int j = 0; j < 8; ++j) {
    CHECK((basis[j] - basis[j].adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(basis[j].trace()) < 1e-15);
    for (int k = 0; k < 8; ++k) {
      const double expected = j == k ? 2.0 : 0.0;
      CHECK((basis[j] * basis[k]).trace().real() == doctest::Approx(expected).epsilon(1e-13));
    }
  }
}

TEST_CASE("gellmann decompose and compose") {
  Matrix3c uniform = Matrix3c::Identity() / 3.0;
  const GellMannCoefficients mixed = gellmann_decompose(DensityMatrix{uniform});
  for (double a : mixed.a) CHECK(std::abs(a) < 1e-15);
  CHECK(mixed.identity_coeff == doctest::Approx(1.0 / 3).epsilon(1e-14));

  Matrix3c ground = Matrix3c::Zero();
  ground(0, 0) = 1.0;
  const GellMannCoefficients g = gellmann_decompose(DensityMatrix{ground});
  CHECK(g.a[2] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(g.a[7] == doctest::Approx(0.5 / std::sqrt(3.0)).epsilon(1e-14));
  for (int j : {0, 1, 3, 4, 5, 6}) CHECK(std::abs(g.a[j]) < 1e-15);

  GellMannCoefficients inverse;
  inverse.a[2] = 0.5;
  inverse.a[7] = 0.5 / std::sqrt(3.0);
  inverse.identity_coeff = 1.0 / 3;
  CHECK((gellmann_compose(inverse) - ground).cwiseAbs().maxCoeff() < 1e-14);

  GellMannCoefficients zero;
  zero.identity_coeff = 1.0 / 3;
  CHECK((gellmann_compose(zero) - uniform).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("gellmann round trip is the identity") {
  std::mt19937 rng(99);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = random_density(rng);
    const Matrix3c back = gellmann_compose(gellmann_decompose(rho));
    worst = std::max(worst, (back - rho.m).cwiseAbs().maxCoeff());
  }
  const Matrix3c demo = demo_mixed_matrix();
  const Matrix3c back = gellmann_compose(gellmann_decompose(DensityMatrix{demo}));
  worst = std::max(worst, (back - demo).cwiseAbs().maxCoeff());
  CHECK(worst < 1e-12);
}

TEST_CASE("dark_state geometry") {
  const PureState equal = dark_state(2.0, 2.0);
  CHECK(equal.alpha == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(equal.beta == 0.0);
  CHECK(equal.gamma == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(equal.phi2 == doctest::Approx(kPi));

  const PureState bare = dark_state(1.0, 0.0);
  CHECK(bare.alpha == 0.0);
  CHECK(bare.gamma == 1.0);
  CHECK(bare.phi2 == doctest::Approx(kPi));

  const PureState tilted = dark_state(1.0, std::sqrt(3.0));
  CHECK(tilted.alpha == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
  CHECK(tilted.gamma == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(dark_state(0.0, 1.0), ValidationError);
  CHECK_THROWS_AS(dark_state(1.0, -1.0), ValidationError);
}

TEST_CASE("dark_state is annihilated by the resonant hamiltonian") {
  for (const auto& [o1, o2] : {std::pair{2.0, 2.0}, {1.0, 0.0}, {1.0, std::sqrt(3.0)},
                               {5.0, 0.3}}) {
    const Matrix3c h = build_hamiltonian(o1, o2, 0.0, 0.0);
    const Vector3c psi = dark_state(o1, o2).amplitudes();
    CHECK((h * psi).norm() <= 1e-12 * h.norm());
  }
}

TEST_CASE("purity values") {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    CHECK(purity(pure_to_density(random_pure(rng))) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(purity(DensityMatrix{Matrix3c::Identity() / 3.0}) == doctest::Approx(1.0 / 3));

  const Matrix3c demo = demo_mixed_matrix();
  double brute = 0.0;  // elementwise sum oracle
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) brute += std::norm(demo(r, c));
  }
  CHECK(purity(DensityMatrix{demo}) == doctest::Approx(brute).epsilon(1e-14));
  CHECK(purity(DensityMatrix{demo}) == doctest::Approx(53.0 / 72.0).epsilon(1e-13));
}

TEST_CASE("non-finite inputs are rejected") {
  const double nan = std::nan("");
  CHECK_THROWS_AS(make_pure(nan, 1, 0, 0, 0), ValidationError);
  CHECK_THROWS_AS(make_pure(1, 0, 0, nan, 0), ValidationError);
  CHECK_THROWS_AS(dark_state(nan, 1.0), ValidationError);

  Matrix3c poisoned = Matrix3c::Identity() / 3.0;
  poisoned(1, 2) = complexd(nan, 0.0);
  poisoned(2, 1) = complexd(nan, 0.0);
  CHECK_THROWS_AS(validate_density(poisoned), ValidationError);
  CHECK_THROWS_AS(validate_density_lax(poisoned), ValidationError);

  Matrix3c infinite = Matrix3c::Identity() / 3.0;
  infinite(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(validate_density(infinite), ValidationError);
}
