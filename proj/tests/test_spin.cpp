#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jlp/rng.hpp"
#include "jlp/spin.hpp"

using namespace jlp;

namespace {

const std::complex<double> kI(0.0, 1.0);

SpinElement random_spin(CounterRng& rng, int d, bool selfadjoint = false) {
  SpinElement x(d);
  x.unit_coeff() = selfadjoint ? std::complex<double>(rng.next_gaussian(), 0.0)
                               : rng.next_complex_gaussian();
  for (int k = 0; k < d - 1; ++k)
    x.hilbert_part()(k) = selfadjoint
                              ? std::complex<double>(rng.next_gaussian(), 0.0)
                              : rng.next_complex_gaussian();
  return x;
}

double coeff_gap(const SpinElement& a, const SpinElement& b) {
  double g = std::abs(a.unit_coeff() - b.unit_coeff());
  if (a.hilbert_part().size())
    g = std::max(g, (a.hilbert_part() - b.hilbert_part()).cwiseAbs().maxCoeff());
  return g;
}

}  // namespace

TEST_CASE("product") {
  CounterRng rng(30, 0);
  for (int d : {1, 2, 3, 6, 10}) {
    const SpinElement y = random_spin(rng, d);
    CHECK(coeff_gap(spin_mul(spin_unit(d), y), y) <= 1e-15);
  }
  // e_j o e_j = 1, e_1 o e_2 = 0
  CHECK(coeff_gap(spin_mul(spin_basis(4, 1), spin_basis(4, 1)), spin_unit(4)) == 0.0);
  CHECK(coeff_gap(spin_mul(spin_basis(4, 1), spin_basis(4, 2)), SpinElement(4)) == 0.0);

  // (a e + b 1)^2 = (a^2 + b^2) 1 + 2ab e for real a, b
  const double a = 1.25, b = -0.5;
  SpinElement x(2);
  x.unit_coeff() = b;
  x.hilbert_part()(0) = a;
  SpinElement want(2);
  want.unit_coeff() = a * a + b * b;
  want.hilbert_part()(0) = 2 * a * b;
  CHECK(coeff_gap(spin_mul(x, x), want) <= 1e-15);

  CHECK_THROWS_AS(spin_mul(spin_unit(3), spin_unit(4)), std::invalid_argument);
}

TEST_CASE("involution") {
  CHECK(coeff_gap(spin_involution(spin_unit(5)), spin_unit(5)) == 0.0);
  CHECK(coeff_gap(spin_involution(spin_basis(5, 3)), spin_basis(5, 3)) == 0.0);

  CounterRng rng(31, 0);
  const SpinElement x = random_spin(rng, 6);
  CHECK(coeff_gap(spin_involution(spin_involution(x)), x) == 0.0);
  const SpinElement lhs = spin_involution(kI * x);
  const SpinElement rhs = -kI * spin_involution(x);
  CHECK(coeff_gap(lhs, rhs) <= 1e-15);
}

TEST_CASE("operator norm") {
  CHECK(spin_opnorm(spin_unit(4)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spin_opnorm(spin_basis(4, 1)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spin_opnorm(spin_unit(4) + spin_basis(4, 1)) ==
        doctest::Approx(2.0).epsilon(1e-14));

  CounterRng rng(32, 0);
  const SpinModel pm3 = pauli_model(3);
  const SpinModel pm4 = pauli_model(4);
  for (int t = 0; t < 300; ++t) {
    const SpinElement x3 = random_spin(rng, 3);
    CHECK(std::abs(spin_opnorm(x3) - operator_norm(spin_embed(x3, pm3))) <=
          1e-10 * std::max(1.0, spin_opnorm(x3)));
    const SpinElement x4 = random_spin(rng, 4);
    CHECK(std::abs(spin_opnorm(x4) - operator_norm(spin_embed(x4, pm4))) <=
          1e-10 * std::max(1.0, spin_opnorm(x4)));
    const SpinElement y4 = random_spin(rng, 4);
    CHECK(spin_opnorm(spin_mul(x4, y4)) <=
          spin_opnorm(x4) * spin_opnorm(y4) * (1 + 1e-12));
  }
}

TEST_CASE("trace") {
  CHECK(spin_trace(spin_unit(7)) == std::complex<double>(1.0, 0.0));
  CHECK(spin_trace(spin_basis(7, 4)) == std::complex<double>(0.0, 0.0));
  CounterRng rng(33, 0);
  const SpinElement x = random_spin(rng, 7);
  const SpinElement y = random_spin(rng, 7);
  CHECK(std::abs(spin_trace(spin_mul(x, y)) - spin_trace(spin_mul(y, x))) <= 1e-14);
}

TEST_CASE("spectral lp closed forms") {
  CounterRng rng(34, 0);
  // d = 2 with complex coefficients
  for (int t = 0; t < 500; ++t) {
    const std::complex<double> a = rng.next_complex_gaussian();
    const std::complex<double> b = rng.next_complex_gaussian();
    SpinElement x(2);
    x.unit_coeff() = b;
    x.hilbert_part()(0) = a;
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
      const double want = std::pow(
          0.5 * (std::pow(std::abs(a + b), p) + std::pow(std::abs(b - a), p)),
          1.0 / p);
      CHECK(std::abs(spin_spectral_lp(x, p) - want) <= 1e-13 * std::max(1.0, want));
    }
  }
  // unit
  CHECK(spin_spectral_lp(spin_unit(9), 3.3) == doctest::Approx(1.0).epsilon(1e-14));
  // dimension 6 and 10: lambda 1 + sum t_k s_k with real t
  for (int d : {6, 10}) {
    for (int t = 0; t < 300; ++t) {
      const std::complex<double> lambda = rng.next_complex_gaussian();
      SpinElement x(d);
      x.unit_coeff() = lambda;
      double rho2 = 0;
      for (int k = 0; k < d - 1; ++k) {
        const double v = rng.next_gaussian();
        x.hilbert_part()(k) = v;
        rho2 += v * v;
      }
      const double rho = std::sqrt(rho2);
      for (double p : {1.0, 2.5}) {
        const double want = std::pow(
            0.5 * (std::pow(std::abs(lambda + rho), p) +
                   std::pow(std::abs(lambda - rho), p)),
            1.0 / p);
        CHECK(std::abs(spin_spectral_lp(x, p) - want) <= 1e-13 * std::max(1.0, want));
      }
    }
  }
  CHECK_THROWS_AS(spin_spectral_lp(spin_unit(3), 0.5), std::invalid_argument);
}

TEST_CASE("matrix-model oracle") {
  CounterRng rng(35, 0);
  const SpinModel pm3 = pauli_model(3);
  const SpinModel pm4 = pauli_model(4);
  for (int t = 0; t < 400; ++t) {
    for (int d : {3, 4}) {
      const SpinElement x = random_spin(rng, d);
      const SpinModel& m = d == 3 ? pm3 : pm4;
      for (double p : {1.0, 1.5, 3.0}) {
        const double closed = spin_spectral_lp(x, p);
        const double viamat = spectral_lp_norm(spin_embed(x, m), p);
        CHECK(std::abs(closed - viamat) <= 1e-10 * std::max(1.0, closed));
      }
    }
  }
}

TEST_CASE("jordan wigner model") {
  const SpinModel m2 = jw_model(2);
  CHECK(m2.ambient_n == 2);
  CHECK((m2.generators[0] - pauli_sigma(1)).cwiseAbs().maxCoeff() == 0.0);

  const SpinModel m3 = jw_model(3);
  CHECK(m3.ambient_n == 2);
  CHECK((m3.generators[0] * m3.generators[1] + m3.generators[1] * m3.generators[0])
            .cwiseAbs()
            .maxCoeff() == 0.0);

  const SpinModel m4 = jw_model(4);
  CHECK(m4.ambient_n == 4);
  CHECK(m4.generators.size() == 3);
  for (size_t a = 0; a < 3; ++a)
    for (size_t b = a + 1; b < 3; ++b)
      CHECK((m4.generators[a] * m4.generators[b] +
             m4.generators[b] * m4.generators[a])
                .cwiseAbs()
                .maxCoeff() <= 1e-13);

  // products of nonempty subsets of distinct generators are traceless
  for (int d : {4, 6, 10}) {
    const SpinModel m = jw_model(d);
    for (int mask = 1; mask < (1 << (d - 1)); ++mask) {
      Eigen::MatrixXcd prod =
          Eigen::MatrixXcd::Identity(m.ambient_n, m.ambient_n);
      for (int k = 0; k < d - 1; ++k)
        if (mask & (1 << k)) prod = prod * m.generators[k];
      CHECK(std::abs(prod.trace()) / double(m.ambient_n) <= 1e-13);
    }
  }
}

TEST_CASE("pauli model") {
  const SpinModel m3 = pauli_model(3);
  CHECK((spin_embed(spin_basis(3, 1), m3).mat() - pauli_sigma(1)).cwiseAbs().maxCoeff() ==
        0.0);
  const SpinModel m4 = pauli_model(4);
  CHECK((spin_embed(spin_basis(4, 3), m4).mat() - pauli_sigma(3)).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(operator_norm(spin_embed(spin_unit(3) + spin_basis(3, 1), m3)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(pauli_model(5), std::invalid_argument);
}

TEST_CASE("quaternionic model") {
  const SpinModel m = h2h_model();
  CHECK(m.ambient_n == 4);
  CHECK((m.generators[0] -
         Eigen::Vector4cd(1, 1, -1, -1).asDiagonal().toDenseMatrix())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  for (size_t a = 0; a < 5; ++a)
    for (size_t b = a + 1; b < 5; ++b)
      CHECK((m.generators[a] * m.generators[b] + m.generators[b] * m.generators[a])
                .cwiseAbs()
                .maxCoeff() <= 1e-13);

  CounterRng rng(36, 0);
  for (int t = 0; t < 200; ++t) {
    const SpinElement x = random_spin(rng, 6);
    // spin trace (a+b)/2 equals tr/4 of the image
    CHECK(std::abs(spin_trace(x) - trace(spin_embed(x, m))) <= 1e-13);
  }
}

TEST_CASE("embedding is a trace-preserving isometry") {
  CounterRng rng(37, 0);
  const SpinModel jw6 = jw_model(6);
  CHECK((spin_embed(spin_unit(6), jw6).mat() -
         Eigen::MatrixXcd::Identity(jw6.ambient_n, jw6.ambient_n))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  // normal image: lambda 1 + rho e_1 with real lambda, rho
  for (int t = 0; t < 100; ++t) {
    SpinElement x(6);
    x.unit_coeff() = rng.next_gaussian();
    x.hilbert_part()(0) = rng.next_gaussian();
    for (double p : {1.0, 3.0}) {
      CHECK(std::abs(dixmier_norm(spin_embed(x, jw6), p) - spin_spectral_lp(x, p)) <=
            1e-10 * std::max(1.0, spin_spectral_lp(x, p)));
    }
  }
  // generic isometry oracle
  for (int t = 0; t < 200; ++t) {
    const SpinElement x = random_spin(rng, 6);
    for (double p : {1.0, 2.0, 3.5}) {
      const double closed = spin_spectral_lp(x, p);
      CHECK(std::abs(spectral_lp_norm(spin_embed(x, jw6), p) - closed) <=
            1e-10 * std::max(1.0, closed));
    }
  }
  CHECK_THROWS_AS(spin_embed(spin_unit(5), jw6), std::invalid_argument);
}

TEST_CASE("model independence at d = 3") {
  CounterRng rng(38, 0);
  const SpinModel pm = pauli_model(3);
  const SpinModel jw = jw_model(3);
  for (int t = 0; t < 1000; ++t) {
    const SpinElement x = random_spin(rng, 3);
    for (double p : {1.0, 1.7, 4.0}) {
      const double a = dixmier_norm(spin_embed(x, pm), p);
      const double b = dixmier_norm(spin_embed(x, jw), p);
      CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, a));
    }
  }
}

TEST_CASE("jordan identity") {
  CounterRng rng(39, 0);
  for (int d : {2, 4, 10}) {
    for (int t = 0; t < 300; ++t) {
      const SpinElement x = random_spin(rng, d);
      const SpinElement y = random_spin(rng, d);
      const SpinElement x2 = spin_mul(x, x);
      const SpinElement diff =
          spin_mul(x, spin_mul(y, x2)) - spin_mul(spin_mul(x, y), x2);
      const double sx = std::abs(x.unit_coeff()) + x.hilbert_part().norm();
      const double sy = std::abs(y.unit_coeff()) + y.hilbert_part().norm();
      CHECK(coeff_gap(diff, SpinElement(d)) <= 1e-11 * std::max(1.0, sx * sx * sx * sy));
    }
  }
}

TEST_CASE("triangle inequality across dimensions") {
  CounterRng rng(40, 0);
  for (int d : {2, 3, 4, 6, 10}) {
    for (int t = 0; t < 10000; ++t) {
      const SpinElement x = random_spin(rng, d);
      const SpinElement y = random_spin(rng, d);
      const double p = (t % 2) ? 1.0 : 3.0;
      const double nx = spin_spectral_lp(x, p);
      const double ny = spin_spectral_lp(y, p);
      CHECK(nx + ny - spin_spectral_lp(x + y, p) >= -1e-10 * (nx + ny));
    }
  }
}

TEST_CASE("dim-10 closed form vs interpolation for selfadjoint elements") {
  CounterRng rng(41, 0);
  const SpinModel jw10 = jw_model(10);
  for (int t = 0; t < 100; ++t) {
    const SpinElement x = random_spin(rng, 10, true);
    for (double p : {1.0, 2.5}) {
      const double closed = spin_spectral_lp(x, p);
      CHECK(std::abs(dixmier_norm(spin_embed(x, jw10), p) - closed) <=
            1e-10 * std::max(1.0, closed));
    }
  }
}
