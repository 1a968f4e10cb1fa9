#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jlp/matkit.hpp"
#include "jlp/rng.hpp"
#include "jlp/spin.hpp"

using namespace jlp;

namespace {

const std::complex<double> kI(0.0, 1.0);
const std::vector<double> kP = {1.0, 1.5, 2.0, 3.0, 4.0};

Eigen::MatrixXcd random_complex(CounterRng& rng, int n) {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.next_complex_gaussian();
  return m;
}

CMatrix random_cmatrix(CounterRng& rng, int n,
                       TraceMode mode = TraceMode::Normalized) {
  return CMatrix(random_complex(rng, n), mode);
}

CMatrix hermitian_part(const CMatrix& a) {
  return CMatrix(0.5 * (a.mat() + a.mat().adjoint()), a.trace_mode());
}

}  // namespace

TEST_CASE("jordan product") {
  const CMatrix s1(pauli_sigma(1), TraceMode::Normalized);
  const CMatrix s2(pauli_sigma(2), TraceMode::Normalized);
  CHECK(jordan_mul(s1, s2).mat().cwiseAbs().maxCoeff() == 0.0);
  CHECK((jordan_mul(s1, s1).mat() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() ==
        0.0);

  CounterRng rng(10, 0);
  const CMatrix a = random_cmatrix(rng, 3);
  const CMatrix id = identity_matrix(3, TraceMode::Normalized);
  CHECK((jordan_mul(a, id).mat() - a.mat()).cwiseAbs().maxCoeff() == 0.0);
  const CMatrix b = random_cmatrix(rng, 3);
  CHECK((jordan_mul(a, b).mat() - jordan_mul(b, a).mat()).cwiseAbs().maxCoeff() <= 1e-14);

  CHECK_THROWS_AS(jordan_mul(a, random_cmatrix(rng, 2)), std::invalid_argument);
  CHECK_THROWS_AS(jordan_mul(a, random_cmatrix(rng, 3, TraceMode::Unnormalized)),
                  std::invalid_argument);
}

TEST_CASE("eigh") {
  const CMatrix s1(pauli_sigma(1), TraceMode::Normalized);
  const EigDecomp d1 = eigh(s1);
  CHECK(d1.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(d1.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));

  // 2x2 closed form {m - r, m + r}, r = sqrt(u1^2 + u2^2 + u3^2)
  CounterRng rng(11, 0);
  for (int t = 0; t < 200; ++t) {
    const double m = rng.next_gaussian(), u1 = rng.next_gaussian(),
                 u2 = rng.next_gaussian(), u3 = rng.next_gaussian();
    Eigen::Matrix2cd h;
    h << m + u1, u2 + kI * u3, u2 - kI * u3, m - u1;
    const double r = std::sqrt(u1 * u1 + u2 * u2 + u3 * u3);
    const EigDecomp d = eigh(CMatrix(h, TraceMode::Normalized));
    CHECK(d.eigenvalues(0) == doctest::Approx(m - r).epsilon(1e-12));
    CHECK(d.eigenvalues(1) == doctest::Approx(m + r).epsilon(1e-12));
  }

  // reconstruction oracle on random Hermitian matrices
  for (int n : {2, 5, 16}) {
    const CMatrix h = hermitian_part(random_cmatrix(rng, n));
    const EigDecomp d = eigh(h);
    const double scale = h.mat().cwiseAbs().maxCoeff();
    CHECK((d.eigenvectors * d.eigenvalues.asDiagonal().toDenseMatrix() *
               d.eigenvectors.adjoint() -
           h.mat())
              .cwiseAbs()
              .maxCoeff() <= 1e-12 * scale);
    CHECK((d.eigenvectors.adjoint() * d.eigenvectors -
           Eigen::MatrixXcd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
    for (int k = 0; k + 1 < n; ++k) CHECK(d.eigenvalues(k) <= d.eigenvalues(k + 1));
  }

  CHECK_THROWS_AS(eigh(CMatrix(random_complex(rng, 3), TraceMode::Normalized)),
                  std::invalid_argument);
}

TEST_CASE("matfun") {
  CounterRng rng(12, 0);
  const CMatrix h = hermitian_part(random_cmatrix(rng, 4));
  CHECK((matfun(h, [](double t) { return t; }).mat() - h.mat()).cwiseAbs().maxCoeff() <=
        1e-12 * h.mat().cwiseAbs().maxCoeff());

  Eigen::MatrixXcd d49 = Eigen::Vector2cd(4, 9).asDiagonal();
  const CMatrix r = matfun(CMatrix(d49, TraceMode::Normalized),
                           [](double t) { return std::sqrt(t); });
  CHECK((r.mat() - Eigen::Vector2cd(2, 3).asDiagonal().toDenseMatrix())
            .cwiseAbs()
            .maxCoeff() <= 1e-14);

  // x = E12: x* o x = I/2, so t^{p/2} gives 2^{-p/2} I
  const CMatrix e12 = matrix_unit(2, 0, 1, TraceMode::Unnormalized);
  for (double p : kP) {
    const CMatrix f = matfun(jordan_mul(adjoint(e12), e12),
                             [p](double t) { return std::pow(t, 0.5 * p); });
    CHECK((f.mat() - std::pow(0.5, 0.5 * p) * Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() <= 1e-15);
  }

  CHECK_THROWS_AS(matfun(CMatrix(Eigen::Vector2cd(-1, 1).asDiagonal(),
                                 TraceMode::Normalized),
                         [](double t) { return std::sqrt(t); }),
                  std::domain_error);
}

TEST_CASE("dixmier norm") {
  const CMatrix e12 = matrix_unit(2, 0, 1, TraceMode::Unnormalized);
  for (double p : kP) CHECK(dixmier_norm(e12, p) == doctest::Approx(1.0).epsilon(1e-14));

  Eigen::MatrixXcd x0 = pauli_sigma(1) + kI * pauli_sigma(2);
  for (double p : kP)
    CHECK(dixmier_norm(CMatrix(x0, TraceMode::Normalized), p) ==
          doctest::Approx(std::exp2(1.0 - 1.0 / p)).epsilon(1e-13));

  CHECK(dixmier_norm(identity_matrix(5, TraceMode::Normalized), 3.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(dixmier_norm(e12, 0.5), std::invalid_argument);
}

TEST_CASE("spectral norm") {
  const CMatrix e12 = matrix_unit(2, 0, 1, TraceMode::Unnormalized);
  for (double p : kP)
    CHECK(spectral_lp_norm(e12, p) ==
          doctest::Approx(std::exp2(1.0 / p - 0.5)).epsilon(1e-14));

  // diagonal (hence normal) elements fall back to the Dixmier value
  const CMatrix d12(Eigen::Vector2cd(1, 2).asDiagonal(), TraceMode::Normalized);
  CHECK(spectral_lp_norm(d12, 1.0) == doctest::Approx(1.5).epsilon(1e-14));

  CHECK(spectral_lp_norm(identity_matrix(4, TraceMode::Normalized), 2.5) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(spectral_lp_norm(e12, 0.99), std::invalid_argument);
}

TEST_CASE("s2 closed forms") {
  // optimality witness alpha=0, beta=1, gamma=i
  for (double p : kP) {
    const S2ClosedForms f = s2_closed_forms(0.0, 1.0, kI, p);
    CHECK(f.m == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(f.r == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(f.s == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(f.spectral == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(f.dixmier == doctest::Approx(std::exp2(1.0 - 1.0 / p)).epsilon(1e-14));
  }

  // scalar multiples of the identity
  const std::complex<double> alpha(0.7, -0.4);
  const S2ClosedForms g = s2_closed_forms(alpha, 0.0, 0.0, 3.0);
  CHECK(g.r == 0.0);
  CHECK(g.s == 0.0);
  CHECK(g.spectral == doctest::Approx(std::abs(alpha)).epsilon(1e-14));
  CHECK(g.dixmier == doctest::Approx(std::abs(alpha)).epsilon(1e-14));

  CounterRng rng(13, 0);
  for (int t = 0; t < 500; ++t) {
    const std::complex<double> a = rng.next_complex_gaussian();
    const std::complex<double> b = rng.next_complex_gaussian();
    const std::complex<double> c = rng.next_complex_gaussian();
    const CMatrix x(a * Eigen::Matrix2cd::Identity() + b * pauli_sigma(1) +
                        c * pauli_sigma(2),
                    TraceMode::Normalized);
    for (double p : {1.0, 2.0, 3.5}) {
      const S2ClosedForms f = s2_closed_forms(a, b, c, p);
      CHECK(std::abs(f.spectral - spectral_lp_norm(x, p)) <=
            1e-12 * std::max(1.0, f.spectral));
      CHECK(std::abs(f.dixmier - dixmier_norm(x, p)) <= 1e-12 * std::max(1.0, f.dixmier));
    }
    // real coefficients: w = 0, r = s, spectral = dixmier
    const S2ClosedForms fr =
        s2_closed_forms(std::real(a), std::real(b), std::real(c), 1.5);
    CHECK(fr.r == doctest::Approx(fr.s).epsilon(1e-14));
    CHECK(fr.spectral == doctest::Approx(fr.dixmier).epsilon(1e-13));
  }
}

TEST_CASE("psi embedding") {
  const CMatrix e12 = matrix_unit(2, 0, 1, TraceMode::Unnormalized);
  const CMatrix i2 = identity_matrix(2, TraceMode::Unnormalized);
  for (double p : kP) {
    CHECK(dixmier_norm(psi_embed(e12), p) ==
          doctest::Approx(std::exp2(1.0 / p)).epsilon(1e-14));
    CHECK(dixmier_norm(psi_embed(i2), p) ==
          doctest::Approx(std::exp2(1.0 / p + 0.5)).epsilon(1e-14));
  }
  CounterRng rng(14, 0);
  for (int t = 0; t < 100; ++t) {
    const CMatrix a = random_cmatrix(rng, 3, TraceMode::Unnormalized);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double lhs = dixmier_norm(psi_embed(a), p);
      const double rhs = std::sqrt(2.0) * spectral_lp_norm(a, p);
      CHECK(std::abs(lhs - rhs) <= 1e-11 * rhs);
    }
  }
}

TEST_CASE("sandwich bounds and coincidences") {
  CounterRng rng(15, 0);
  for (int n : {2, 3, 4}) {
    for (int t = 0; t < 10000; ++t) {
      const CMatrix x = random_cmatrix(rng, n);
      for (double p : {1.0, 1.5, 3.0, 4.0}) {
        const double spec = spectral_lp_norm(x, p);
        const double dix = dixmier_norm(x, p);
        const double bound = std::exp2(std::abs(1.0 / p - 0.5));
        if (p <= 2) {
          CHECK(spec - dix >= -1e-10 * dix);
          CHECK(bound * dix - spec >= -1e-10 * dix);
        } else {
          CHECK(dix - spec >= -1e-10 * dix);
          CHECK(bound * spec - dix >= -1e-10 * dix);
        }
      }
      const double s2n = spectral_lp_norm(x, 2.0);
      CHECK(std::abs(s2n - dixmier_norm(x, 2.0)) <= 1e-10 * s2n);
    }
  }
}

TEST_CASE("normal elements") {
  CounterRng rng(16, 0);
  for (int t = 0; t < 500; ++t) {
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_complex(rng, 3));
    const Eigen::MatrixXcd u = qr.householderQ();
    Eigen::VectorXcd z(3);
    for (int k = 0; k < 3; ++k) z(k) = rng.next_complex_gaussian();
    const CMatrix x(u * z.asDiagonal() * u.adjoint(), TraceMode::Normalized);
    for (double p : {1.0, 3.0}) {
      const double dix = dixmier_norm(x, p);
      CHECK(std::abs(spectral_lp_norm(x, p) - dix) <= 1e-10 * dix);
    }
  }
}

TEST_CASE("triangle inequality") {
  CounterRng rng(17, 0);
  for (int t = 0; t < 10000; ++t) {
    const int n = 2 + (t % 3);
    const CMatrix x = random_cmatrix(rng, n);
    const CMatrix y = random_cmatrix(rng, n);
    const double p = (t % 2) ? 1.0 : 2.7;
    const double nx = spectral_lp_norm(x, p);
    const double ny = spectral_lp_norm(y, p);
    CHECK(nx + ny - spectral_lp_norm(x + y, p) >= -1e-10 * (nx + ny));
  }
}

TEST_CASE("mccarthy trace inequalities") {
  CounterRng rng(18, 0);
  const auto trace_power = [](const CMatrix& h, double r) {
    const Eigen::VectorXd lam = clamp_positive_spectrum(eigh(h).eigenvalues);
    double acc = 0;
    for (Eigen::Index k = 0; k < lam.size(); ++k) acc += std::pow(lam(k), r);
    return trace_weight(h.dim(), h.trace_mode()) * acc;
  };
  for (int t = 0; t < 1000; ++t) {
    const Eigen::MatrixXcd ga = random_complex(rng, 3);
    const Eigen::MatrixXcd gb = random_complex(rng, 3);
    const CMatrix a(ga.adjoint() * ga, TraceMode::Normalized);
    const CMatrix b(gb.adjoint() * gb, TraceMode::Normalized);
    const CMatrix ab = a + b;
    CHECK(trace_power(a, 0.5) + trace_power(b, 0.5) - trace_power(ab, 0.5) >= -1e-10);
    CHECK(trace_power(ab, 2.0) - trace_power(a, 2.0) - trace_power(b, 2.0) >=
          -1e-10 * trace_power(ab, 2.0));
  }
}

TEST_CASE("trace-preserving homomorphism is isometric") {
  CounterRng rng(19, 0);
  for (int t = 0; t < 200; ++t) {
    const CMatrix a = random_cmatrix(rng, 3);
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(6, 6);
    big.topLeftCorner(3, 3) = a.mat();
    big.bottomRightCorner(3, 3) = a.mat();
    const CMatrix d(big, TraceMode::Normalized);
    for (double p : {1.0, 2.0, 3.5}) {
      CHECK(std::abs(spectral_lp_norm(d, p) - spectral_lp_norm(a, p)) <=
            1e-12 * spectral_lp_norm(a, p));
      CHECK(std::abs(dixmier_norm(d, p) - dixmier_norm(a, p)) <=
            1e-12 * dixmier_norm(a, p));
    }
  }
}

TEST_CASE("hermiticity predicate and trace modes") {
  CounterRng rng(20, 0);
  const CMatrix h = hermitian_part(random_cmatrix(rng, 4));
  CHECK(is_hermitian(h));
  CHECK(!is_hermitian(random_cmatrix(rng, 4)));
  CHECK(trace(identity_matrix(7, TraceMode::Normalized)) ==
        std::complex<double>(1.0, 0.0));
  CHECK(trace(identity_matrix(7, TraceMode::Unnormalized)) ==
        std::complex<double>(7.0, 0.0));
}
