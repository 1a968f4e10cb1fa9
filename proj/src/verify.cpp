#include "jlp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "jlp/compare.hpp"
#include "jlp/hypercomplex.hpp"
#include "jlp/rng.hpp"

namespace jlp {
namespace {

const std::complex<double> kI(0.0, 1.0);
const std::vector<double> kPGrid = {1.0, 1.5, 2.0, 3.0, 4.0};

struct Collector {
  std::vector<CheckResult> results;
  std::string only;

  bool wants(const std::string& name) const {
    return only.empty() || name.find(only) != std::string::npos;
  }
  void add(const std::string& name, double residual, double tol_scale = 1.0,
           std::string detail = "") {
    if (!wants(name)) return;
    results.push_back({name, residual, tol_scale, std::move(detail)});
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Octonion random_octonion(CounterRng& rng) {
  Octonion x;
  for (int k = 0; k < 8; ++k) x[k] = rng.next_gaussian();
  return x;
}

Bioctonion random_bioctonion(CounterRng& rng) {
  Bioctonion x;
  for (int k = 0; k < 8; ++k) x[k] = rng.next_complex_gaussian();
  return x;
}

Eigen::MatrixXcd random_complex(CounterRng& rng, int n) {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.next_complex_gaussian();
  return m;
}

Eigen::MatrixXcd random_hermitian(CounterRng& rng, int n) {
  const Eigen::MatrixXcd a = random_complex(rng, n);
  return 0.5 * (a + a.adjoint());
}

SpinElement random_spin(CounterRng& rng, int d, bool selfadjoint_real = false) {
  SpinElement x(d);
  x.unit_coeff() = selfadjoint_real
                       ? std::complex<double>(rng.next_gaussian(), 0.0)
                       : rng.next_complex_gaussian();
  for (int k = 0; k < d - 1; ++k)
    x.hilbert_part()(k) = selfadjoint_real
                              ? std::complex<double>(rng.next_gaussian(), 0.0)
                              : rng.next_complex_gaussian();
  return x;
}

AlbertElement random_albert(CounterRng& rng, bool selfadjoint) {
  const auto coeff = [&]() -> std::complex<double> {
    return selfadjoint ? std::complex<double>(rng.next_gaussian(), 0.0)
                       : rng.next_complex_gaussian();
  };
  Bioctonion off[3];
  for (auto& o : off)
    for (int k = 0; k < 8; ++k) o[k] = coeff();
  const std::complex<double> a = coeff(), b = coeff(), c = coeff();
  return AlbertElement(a, b, c, off[0], off[1], off[2]);
}

double positive_trace_power(const CMatrix& h, double r) {
  const Eigen::VectorXd lam = clamp_positive_spectrum(eigh(h).eigenvalues);
  double acc = 0.0;
  for (Eigen::Index k = 0; k < lam.size(); ++k) acc += std::pow(lam(k), r);
  return trace_weight(h.dim(), h.trace_mode()) * acc;
}

void check_octonions(Collector& out) {
  const OctonionTable& table = octonion_table();
  double basis_res = 0, anti_res = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Octonion prod = Octonion::basis(i) * Octonion::basis(j);
      Octonion expect;
      expect[table.index(i, j)] = double(table.sign(i, j));
      basis_res = std::max(basis_res, coeff_norm(prod - expect));
      if (i >= 1 && j >= 1 && i != j) {
        const Octonion anti =
            prod + Octonion::basis(j) * Octonion::basis(i);
        anti_res = std::max(anti_res, coeff_norm(anti));
      }
    }
  out.add("octonion.table-products", basis_res, 1, "64 basis products vs the table");
  out.add("octonion.anticommutation", anti_res, 1, "e_i e_j + e_j e_i = 0, exact");

  CounterRng rng(101, 0);
  double comp = 0, alt = 0, conj_res = 0;
  for (int t = 0; t < 10000; ++t) {
    const Octonion x = random_octonion(rng);
    const Octonion y = random_octonion(rng);
    const double nx = norm_form(x), ny = norm_form(y);
    comp = std::max(comp, std::abs(norm_form(x * y) - nx * ny) / (nx * ny));
    const double scale = std::sqrt(nx) * std::sqrt(nx) * std::sqrt(ny);
    alt = std::max(alt, coeff_norm(x * (x * y) - (x * x) * y) / scale);
    alt = std::max(alt, coeff_norm((y * x) * x - y * (x * x)) / scale);
  }
  for (int t = 0; t < 2000; ++t) {
    const Bioctonion x = random_bioctonion(rng);
    const Bioctonion y = random_bioctonion(rng);
    const double scale = coeff_norm(x) * coeff_norm(y);
    conj_res = std::max(conj_res, coeff_norm(conj(x * y) - conj(y) * conj(x)) / scale);
  }
  out.add("octonion.composition", comp, 0.01, "N(xy) = N(x)N(y), 1e4 samples");
  out.add("octonion.alternativity", alt, 0.01, "x(xy) = (xx)y and (yx)x = y(xx)");
  out.add("octonion.conjugation", conj_res, 0.01, "conj(xy) = conj(y) conj(x)");

  double quat_exact =
      (quat_embed({0, 1, 0, 0}) * quat_embed({0, 0, 1, 0}) - quat_embed({0, 0, 0, 1}))
          .cwiseAbs()
          .maxCoeff();
  double quat_rand = 0;
  for (int t = 0; t < 1000; ++t) {
    const Quaternion q{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian(),
                       rng.next_gaussian()};
    const Quaternion r{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian(),
                       rng.next_gaussian()};
    const double scale = std::sqrt(abs_squared(q) * abs_squared(r));
    quat_rand = std::max(
        quat_rand,
        (quat_embed(q * r) - quat_embed(q) * quat_embed(r)).cwiseAbs().maxCoeff() /
            scale);
    quat_rand = std::max(
        quat_rand, (quat_embed(conj(q)) - quat_embed(q).adjoint()).cwiseAbs().maxCoeff() /
                       std::sqrt(abs_squared(q)));
  }
  out.add("quaternion.embed-ijk", quat_exact, 1, "embed(i) embed(j) = embed(k)");
  out.add("quaternion.embed-homomorphism", quat_rand, 0.001,
          "multiplicative and *-preserving, 1e3 pairs");
}

void check_matkit(Collector& out) {
  const CMatrix s1(pauli_sigma(1), TraceMode::Normalized);
  const CMatrix s2(pauli_sigma(2), TraceMode::Normalized);
  const CMatrix id2 = identity_matrix(2, TraceMode::Normalized);
  double pauli_res = jordan_mul(s1, s2).mat().cwiseAbs().maxCoeff();
  pauli_res = std::max(pauli_res,
                       (jordan_mul(s1, s1) - id2).mat().cwiseAbs().maxCoeff());
  out.add("jordan.pauli-relations", pauli_res, 1, "s1 o s2 = 0, s1 o s1 = I");

  CounterRng rng(202, 0);
  double recon = 0;
  for (int n : {2, 4, 8}) {
    for (int t = 0; t < 50; ++t) {
      const CMatrix h(random_hermitian(rng, n), TraceMode::Normalized);
      const EigDecomp d = eigh(h);
      const Eigen::MatrixXcd back = d.eigenvectors *
                                    d.eigenvalues.asDiagonal().toDenseMatrix() *
                                    d.eigenvectors.adjoint();
      recon = std::max(recon, (back - h.mat()).cwiseAbs().maxCoeff() /
                                  h.mat().cwiseAbs().maxCoeff());
    }
  }
  out.add("eigh.reconstruction", recon, 0.01, "V diag(l) V* = H");

  const CMatrix e12 = matrix_unit(2, 0, 1, TraceMode::Unnormalized);
  double wit_spec = 0, wit_dix = 0, wit_slack = 0;
  for (double p : kPGrid) {
    wit_spec = std::max(wit_spec,
                        std::abs(spectral_lp_norm(e12, p) - std::exp2(1 / p - 0.5)));
    wit_dix = std::max(wit_dix, std::abs(dixmier_norm(e12, p) - 1.0));
    wit_slack = std::max(
        wit_slack, std::abs(bound_check(spectral_lp_norm(e12, p), dixmier_norm(e12, p), p)));
  }
  out.add("witness.e12-spectral", wit_spec, 0.01, "= 2^{1/p-1/2} for p in the grid");
  out.add("witness.e12-dixmier", wit_dix, 0.01, "= 1 for every p");
  out.add("witness.e12-attains-bound", wit_slack, 0.01, "comparison slack = 0");

  double s2opt = 0;
  for (double p : kPGrid) {
    const S2ClosedForms f = s2_closed_forms(0.0, 1.0, kI, p);
    s2opt = std::max(s2opt, std::abs(f.spectral - std::sqrt(2.0)));
    s2opt = std::max(s2opt, std::abs(f.dixmier - std::exp2(1.0 - 1.0 / p)));
  }
  out.add("s2.optimality-witness", s2opt, 0.01,
          "s1 + i s2: spectral sqrt(2), Dixmier 2^{1-1/p}");

  double s2path = 0, s2normal = 0;
  for (int t = 0; t < 300; ++t) {
    const std::complex<double> a = rng.next_complex_gaussian();
    const std::complex<double> b = rng.next_complex_gaussian();
    const std::complex<double> c = rng.next_complex_gaussian();
    Eigen::MatrixXcd m = a * Eigen::Matrix2cd::Identity() + b * pauli_sigma(1) +
                         c * pauli_sigma(2);
    const CMatrix x(m, TraceMode::Normalized);
    for (double p : kPGrid) {
      const S2ClosedForms f = s2_closed_forms(a, b, c, p);
      s2path = std::max(s2path, rel(f.spectral, spectral_lp_norm(x, p)));
      s2path = std::max(s2path, rel(f.dixmier, dixmier_norm(x, p)));
    }
    const S2ClosedForms g =
        s2_closed_forms(std::real(a), std::real(b), std::real(c), 1.5);
    s2normal = std::max(s2normal, rel(g.spectral, g.dixmier));
  }
  out.add("s2.closed-vs-matrix-path", s2path, 0.01,
          "closed forms vs generic matrix norms");
  out.add("s2.normal-coincidence", s2normal, 0.01,
          "real coefficients give spectral = Dixmier");

  double offnormal_min = 1e300;
  int kept = 0;
  for (int t = 0; kept < 200; ++t) {
    CounterRng r2(203, t);
    const std::complex<double> a = r2.next_complex_gaussian();
    const std::complex<double> b = r2.next_complex_gaussian();
    const std::complex<double> c = r2.next_complex_gaussian();
    if (std::abs(std::imag(std::conj(b) * c)) <= 0.1) continue;
    ++kept;
    const S2ClosedForms f = s2_closed_forms(a, b, c, 1.0);
    offnormal_min = std::min(offnormal_min, std::abs(f.spectral - f.dixmier) / f.dixmier);
  }
  out.add("s2.off-normal-separation", std::max(0.0, 1e-6 - offnormal_min), 1,
          "non-normal samples keep the norms > 1e-6 apart at p = 1");

  double sandwich = 0, p2res = 0, tri = 0;
  for (int n : {2, 3, 4}) {
    const AlgebraId id{AlgebraId::Kind::Matrix, n, TraceMode::Normalized, 0};
    for (int t = 0; t < 300; ++t) {
      const CMatrix x(random_complex(rng, n), TraceMode::Normalized);
      for (double p : kPGrid) {
        const double spec = spectral_lp_norm(x, p);
        const double dix = dixmier_norm(x, p);
        const double lo = p <= 2 ? spec - dix : dix - spec;
        const double hi = equivalence_bound(p) * (p <= 2 ? dix : spec) -
                          (p <= 2 ? spec : dix);
        sandwich = std::max(sandwich, std::max(-lo, -hi) / std::max(1.0, dix));
      }
      p2res = std::max(p2res, rel(spectral_lp_norm(x, 2), dixmier_norm(x, 2)));
      const CMatrix y(random_complex(rng, n), TraceMode::Normalized);
      const double slack =
          spectral_lp_norm(x, 1.5) + spectral_lp_norm(y, 1.5) -
          spectral_lp_norm(x + y, 1.5);
      tri = std::max(tri, -slack / std::max(1.0, spectral_lp_norm(x, 1.5)));
    }
    (void)id;
  }
  out.add("sandwich.matrix", sandwich, 1, "directional inequalities, n in {2,3,4}");
  out.add("p2.matrix-coincidence", p2res, 1, "spectral = Dixmier at p = 2");
  out.add("triangle.matrix", tri, 1, "spectral L^p triangle inequality");

  double normal_res = 0;
  for (int t = 0; t < 200; ++t) {
    const Eigen::MatrixXcd g = random_complex(rng, 3);
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    const Eigen::MatrixXcd u = qr.householderQ();
    Eigen::VectorXcd z(3);
    for (int k = 0; k < 3; ++k) z(k) = rng.next_complex_gaussian();
    const CMatrix x(u * z.asDiagonal() * u.adjoint(), TraceMode::Normalized);
    for (double p : {1.0, 3.0})
      normal_res = std::max(normal_res, rel(spectral_lp_norm(x, p), dixmier_norm(x, p)));
  }
  out.add("normal.coincidence", normal_res, 1,
          "U diag(z) U*: spectral = Dixmier at p in {1,3}");

  double carthy_half = 0, carthy_two = 0;
  for (int t = 0; t < 1000; ++t) {
    const Eigen::MatrixXcd ga = random_complex(rng, 3);
    const Eigen::MatrixXcd gb = random_complex(rng, 3);
    const CMatrix a(ga.adjoint() * ga, TraceMode::Normalized);
    const CMatrix b(gb.adjoint() * gb, TraceMode::Normalized);
    const CMatrix ab = a + b;
    const double h = positive_trace_power(a, 0.5) + positive_trace_power(b, 0.5) -
                     positive_trace_power(ab, 0.5);
    const double w = positive_trace_power(ab, 2.0) - positive_trace_power(a, 2.0) -
                     positive_trace_power(b, 2.0);
    const double scale2 = std::max(1.0, positive_trace_power(ab, 2.0));
    carthy_half = std::max(carthy_half, -h / std::max(1.0, positive_trace_power(ab, 0.5)));
    carthy_two = std::max(carthy_two, -w / scale2);
  }
  out.add("mccarthy.concave-half", carthy_half, 1,
          "tau((a+b)^{1/2}) <= tau(a^{1/2}) + tau(b^{1/2})");
  out.add("mccarthy.convex-two", carthy_two, 1,
          "tau((a+b)^2) >= tau(a^2) + tau(b^2)");

  double homiso = 0;
  for (int t = 0; t < 100; ++t) {
    const CMatrix a(random_complex(rng, 3), TraceMode::Normalized);
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(6, 6);
    big.topLeftCorner(3, 3) = a.mat();
    big.bottomRightCorner(3, 3) = a.mat();
    const CMatrix d(big, TraceMode::Normalized);
    for (double p : {1.0, 2.5}) {
      homiso = std::max(homiso, rel(spectral_lp_norm(d, p), spectral_lp_norm(a, p)));
      homiso = std::max(homiso, rel(dixmier_norm(d, p), dixmier_norm(a, p)));
    }
  }
  out.add("homomorphism.block-isometry", homiso, 0.01,
          "a -> diag(a,a) preserves both norms");

  double psi_res = 0;
  for (double p : kPGrid) {
    psi_res = std::max(psi_res,
                       std::abs(dixmier_norm(psi_embed(e12), p) - std::exp2(1 / p)));
    const CMatrix i2 = identity_matrix(2, TraceMode::Unnormalized);
    psi_res = std::max(
        psi_res, std::abs(dixmier_norm(psi_embed(i2), p) - std::exp2(1 / p + 0.5)));
  }
  double psi_rand = 0;
  for (int t = 0; t < 100; ++t) {
    const CMatrix a(random_complex(rng, 3), TraceMode::Unnormalized);
    for (double p : {1.0, 2.5}) {
      psi_rand = std::max(psi_rand, rel(dixmier_norm(psi_embed(a), p),
                                        std::sqrt(2.0) * spectral_lp_norm(a, p)));
    }
  }
  out.add("psi.block-witnesses", psi_res, 0.01,
          "||Psi(E12)|| = 2^{1/p}, ||Psi(I2)|| = 2^{1/p+1/2}");
  out.add("psi.sqrt2-identity", psi_rand, 0.1,
          "||Psi(a)||_D = sqrt(2) ||a||_{L^p}");
}

void check_spin(Collector& out) {
  CounterRng rng(303, 0);

  double d2 = 0;
  for (int t = 0; t < 500; ++t) {
    const std::complex<double> a = rng.next_complex_gaussian();
    const std::complex<double> b = rng.next_complex_gaussian();
    SpinElement x(2);
    x.unit_coeff() = b;
    x.hilbert_part()(0) = a;
    for (double p : kPGrid) {
      const double want = std::pow(
          0.5 * (std::pow(std::abs(a + b), p) + std::pow(std::abs(b - a), p)), 1 / p);
      d2 = std::max(d2, rel(spin_spectral_lp(x, p), want));
    }
  }
  out.add("spin.closed-form-d2", d2, 0.01,
          "x = a e + b 1: ((|a+b|^p + |b-a|^p)/2)^{1/p}");

  double dsa = 0;
  for (int d : {2, 6, 10}) {
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
      for (double p : kPGrid) {
        const double want =
            std::pow(0.5 * (std::pow(std::abs(lambda + rho), p) +
                            std::pow(std::abs(lambda - rho), p)),
                     1 / p);
        dsa = std::max(dsa, rel(spin_spectral_lp(x, p), want));
      }
    }
  }
  out.add("spin.closed-form-selfadjoint", dsa, 0.01,
          "lambda 1 + h: ((|lambda+rho|^p + |lambda-rho|^p)/2)^{1/p}, d in {2,6,10}");

  double model_agree = 0;
  for (int d : {2, 3, 4, 6, 10}) {
    const SpinModel jw = jw_model(d);
    for (int t = 0; t < 60; ++t) {
      const SpinElement x = random_spin(rng, d);
      for (double p : {1.0, 1.5, 3.0})
        model_agree = std::max(
            model_agree, rel(spin_spectral_lp(x, p),
                             spectral_lp_norm(spin_embed(x, jw), p)));
    }
  }
  {
    const SpinModel pm3 = pauli_model(3);
    const SpinModel pm4 = pauli_model(4);
    const SpinModel h2h = h2h_model();
    for (int t = 0; t < 60; ++t) {
      const SpinElement x3 = random_spin(rng, 3);
      const SpinElement x4 = random_spin(rng, 4);
      const SpinElement x6 = random_spin(rng, 6);
      for (double p : {1.0, 3.0}) {
        model_agree = std::max(model_agree,
                               rel(spin_spectral_lp(x3, p),
                                   spectral_lp_norm(spin_embed(x3, pm3), p)));
        model_agree = std::max(model_agree,
                               rel(spin_spectral_lp(x4, p),
                                   spectral_lp_norm(spin_embed(x4, pm4), p)));
        model_agree = std::max(model_agree,
                               rel(spin_spectral_lp(x6, p),
                                   spectral_lp_norm(spin_embed(x6, h2h), p)));
      }
    }
  }
  out.add("spin.model-agreement", model_agree, 1,
          "closed form vs matrix-model spectral norm, every model");

  double indep = 0;
  const SpinModel pm3 = pauli_model(3);
  const SpinModel jw3 = jw_model(3);
  for (int t = 0; t < 1000; ++t) {
    const SpinElement x = random_spin(rng, 3);
    for (double p : {1.0, 2.0, 3.5})
      indep = std::max(indep, rel(dixmier_norm(spin_embed(x, pm3), p),
                                  dixmier_norm(spin_embed(x, jw3), p)));
  }
  out.add("spin.model-independence", indep, 1,
          "Pauli vs Jordan-Wigner interpolation norms, d = 3");

  const SpinModel h2h = h2h_model();
  double h2h_res =
      (h2h.generators[0] -
       Eigen::Vector4cd(1, 1, -1, -1).asDiagonal().toDenseMatrix())
          .cwiseAbs()
          .maxCoeff();
  double h2h_trace = 0;
  for (int t = 0; t < 200; ++t) {
    const SpinElement x = random_spin(rng, 6);
    h2h_trace = std::max(
        h2h_trace,
        std::abs(spin_trace(x) - trace(spin_embed(x, h2h))));
  }
  out.add("h2h.diagonal-symmetry", h2h_res, 1, "image of s1 is diag(1,1,-1,-1)");
  out.add("h2h.trace-preserving", h2h_trace, 0.001, "(a+b)/2 = tr/4 of the image");

  double opn = std::abs(spin_opnorm(spin_unit(4)) - 1.0);
  opn = std::max(opn, std::abs(spin_opnorm(spin_basis(4, 1)) - 1.0));
  opn = std::max(opn,
                 std::abs(spin_opnorm(spin_unit(4) + spin_basis(4, 1)) - 2.0));
  double opn_model = 0, submult = 0;
  for (int d : {3, 4}) {
    const SpinModel m = pauli_model(d);
    for (int t = 0; t < 200; ++t) {
      const SpinElement x = random_spin(rng, d);
      opn_model = std::max(
          opn_model, rel(spin_opnorm(x), operator_norm(spin_embed(x, m))));
      const SpinElement y = random_spin(rng, d);
      submult = std::max(submult, (spin_opnorm(spin_mul(x, y)) -
                                   spin_opnorm(x) * spin_opnorm(y)) /
                                      std::max(1.0, spin_opnorm(x) * spin_opnorm(y)));
    }
  }
  out.add("spin.opnorm-values", opn, 0.01, "||1|| = 1, ||e1|| = 1, ||1 + e1|| = 2");
  out.add("spin.opnorm-vs-model", opn_model, 1, "matches the image operator norm");
  out.add("spin.opnorm-submultiplicative", std::max(0.0, submult), 1,
          "||x o y|| <= ||x|| ||y||");

  double jid = 0;
  for (int d : {3, 6, 10}) {
    for (int t = 0; t < 200; ++t) {
      const SpinElement x = random_spin(rng, d);
      const SpinElement y = random_spin(rng, d);
      const SpinElement x2 = spin_mul(x, x);
      const SpinElement lhs = spin_mul(x, spin_mul(y, x2));
      const SpinElement rhs = spin_mul(spin_mul(x, y), x2);
      const SpinElement diff = lhs - rhs;
      double dn = std::abs(diff.unit_coeff());
      if (diff.hilbert_part().size()) dn = std::max(dn, diff.hilbert_part().norm());
      const double sx = std::abs(x.unit_coeff()) + x.hilbert_part().norm();
      const double sy = std::abs(y.unit_coeff()) + y.hilbert_part().norm();
      jid = std::max(jid, dn / std::max(1.0, sx * sx * sx * sy));
    }
  }
  out.add("spin.jordan-identity", jid, 0.1, "x o (y o x^2) = (x o y) o x^2");

  double tri = 0;
  for (int d : {2, 3, 4, 6, 10}) {
    for (int t = 0; t < 1000; ++t) {
      const SpinElement x = random_spin(rng, d);
      const SpinElement y = random_spin(rng, d);
      for (double p : {1.0, 1.5, 3.0}) {
        const double nx = spin_spectral_lp(x, p);
        const double slack = nx + spin_spectral_lp(y, p) - spin_spectral_lp(x + y, p);
        tri = std::max(tri, -slack / std::max(1.0, nx));
      }
    }
  }
  out.add("spin.triangle", tri, 1, "spectral L^p triangle inequality, all dims");

  double d10 = 0;
  const SpinModel jw10 = jw_model(10);
  for (int t = 0; t < 100; ++t) {
    const SpinElement x = random_spin(rng, 10, true);
    for (double p : {1.0, 3.0})
      d10 = std::max(d10, rel(spin_spectral_lp(x, p),
                              dixmier_norm(spin_embed(x, jw10), p)));
  }
  out.add("spin.d10-closed-vs-interpolation", d10, 1,
          "selfadjoint dimension-10 closed form matches the Clifford model");
}

void check_albert(Collector& out) {
  CounterRng rng(404, 0);

  const AlbertElement d123 = alb_diag(1.0, 2.0, 3.0);
  const CharCubic t = alb_char_cubic(d123);
  double cubic_res = std::abs(t.t1 - 6.0) + std::abs(t.t2 - 11.0) + std::abs(t.t3 - 6.0);
  const CharCubic ti = alb_char_cubic(alb_identity());
  cubic_res += std::abs(ti.t1 - 3.0) + std::abs(ti.t2 - 3.0) + std::abs(ti.t3 - 1.0);
  out.add("albert.cubic-diagonal", cubic_res, 1,
          "diag(1,2,3) -> (6,11,6), identity -> (3,3,1)");

  const Eigen::Vector3d lam = alb_eigenvalues(d123);
  out.add("albert.eigenvalues-diagonal",
          (lam - Eigen::Vector3d(1, 2, 3)).cwiseAbs().maxCoeff(), 0.01,
          "diag(1,2,3) eigenvalues");
  out.add("albert.lp-diag123", std::abs(alb_spectral_lp(d123, 1.0) - 2.0), 1e-4,
          "(1+2+3)/3 = 2 at p = 1");
  out.add("albert.lp-identity", std::abs(alb_spectral_lp(alb_identity(), 2.5) - 1.0),
          0.01, "||1|| = 1");

  double ch = 0, sq = 0, trassoc = 0, jid = 0, p2 = 0, paths = 0, hom = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const AlbertElement x = random_albert(rng, true);
    const CharCubic c = alb_char_cubic(x);
    const AlbertElement x2 = alb_mul(x, x);
    const AlbertElement x3 = alb_mul(x2, x);
    const AlbertElement r = x3 - c.t1 * x2 + c.t2 * x - c.t3 * alb_identity();
    const double scale = std::max(1.0, std::pow(alb_coeff_scale(x), 3.0));
    ch = std::max(ch, alb_coeff_scale(r) / scale);

    if (trial < 300) {
      Eigen::Vector3d l = alb_eigenvalues(x);
      Eigen::Vector3d l2 = alb_eigenvalues(x2);
      Eigen::Vector3d lsq = l.cwiseProduct(l);
      std::sort(lsq.data(), lsq.data() + 3);
      sq = std::max(sq, (lsq - l2).cwiseAbs().maxCoeff() /
                            std::max(1.0, l2.cwiseAbs().maxCoeff()));
      p2 = std::max(p2, rel(alb_spectral_lp(x, 2.0),
                            std::sqrt(std::real(alb_trace(x2)))));
      // general path through x* o x against the eigenvalue formula
      const AlbertElement cc = alb_mul(alb_adjoint(x), x);
      const Eigen::Vector3d mu = alb_eigenvalues(cc);
      for (double p : {1.0, 3.0}) {
        double acc = 0;
        for (int k = 0; k < 3; ++k) acc += std::pow(std::max(mu(k), 0.0), 0.5 * p);
        paths = std::max(paths, rel(std::pow(acc / 3.0, 1 / p), alb_spectral_lp(x, p)));
      }
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const AlbertElement x = random_albert(rng, false);
    const AlbertElement y = random_albert(rng, false);
    const AlbertElement z = random_albert(rng, false);
    const std::complex<double> lhs = alb_trace(alb_mul(x, alb_mul(y, z)));
    const std::complex<double> rhs = alb_trace(alb_mul(alb_mul(x, y), z));
    const double scale = std::max(
        1.0, alb_coeff_scale(x) * alb_coeff_scale(y) * alb_coeff_scale(z));
    trassoc = std::max(trassoc, std::abs(lhs - rhs) / scale);

    const AlbertElement x2 = alb_mul(x, x);
    const AlbertElement rj = alb_mul(x, alb_mul(y, x2)) - alb_mul(alb_mul(x, y), x2);
    const double sx = alb_coeff_scale(x), sy = alb_coeff_scale(y);
    jid = std::max(jid, alb_coeff_scale(rj) / std::max(1.0, sx * sx * sx * sy));

    const std::complex<double> s = rng.next_complex_gaussian();
    hom = std::max(hom, rel(alb_spectral_lp(s * x, 1.5),
                            std::abs(s) * alb_spectral_lp(x, 1.5)));
  }
  out.add("albert.cayley-hamilton", ch, 10, "residual on 1e3 selfadjoint samples");
  out.add("albert.eigenvalue-squares", sq, 10, "eig(x o x) = eig(x)^2 as multisets");
  out.add("albert.trace-associativity", trassoc, 0.1,
          "tau(x o (y o z)) = tau((x o y) o z)");
  out.add("albert.jordan-identity", jid, 1, "x o (y o x^2) = (x o y) o x^2");
  out.add("albert.p2-trace-identity", p2, 1, "||x||_2 = sqrt(tau(x o x))");
  out.add("albert.selfadjoint-path-agreement", paths, 1,
          "general x* o x route vs eigenvalue formula");
  out.add("albert.homogeneity", hom, 0.01, "||s x|| = |s| ||x||");
}

void check_compare(Collector& out) {
  CounterRng rng(505, 0);

  const CMatrix e12 = matrix_unit(2, 0, 1, TraceMode::Unnormalized);
  const auto [l1, dual] = duality_gap(e12);
  double duality_res =
      std::abs(l1 - std::sqrt(2.0)) + std::abs(dual - 1.0);
  out.add("duality.e12-gap", duality_res, 0.01, "(sqrt(2), 1): no isometric duality");

  const auto [il1, idual] = duality_gap(identity_matrix(2, TraceMode::Unnormalized));
  out.add("duality.identity", std::abs(il1 - 2.0) + std::abs(idual - 2.0), 0.01,
          "(2, 2) for the identity");

  double sa_dual = 0;
  for (int t = 0; t < 100; ++t) {
    Eigen::MatrixXcd h(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h(i, j) = rng.next_complex_gaussian();
    const CMatrix x(0.5 * (h + h.adjoint()), TraceMode::Normalized);
    const auto [a, b] = duality_gap(x);
    sa_dual = std::max(sa_dual, rel(a, b));
  }
  out.add("duality.selfadjoint-coincidence", sa_dual, 1,
          "selfadjoint elements close the gap");

  const AlgebraId m2{AlgebraId::Kind::Matrix, 2, TraceMode::Normalized, 0};
  const AlgebraId s2{AlgebraId::Kind::Sym2, 0, TraceMode::Normalized, 0};
  const AlgebraId sp2{AlgebraId::Kind::Spin, 0, TraceMode::Normalized, 2};
  const AlgebraId albert{AlgebraId::Kind::Albert, 0, TraceMode::Normalized, 0};

  double ent = std::abs(entropy(identity_matrix(2, TraceMode::Normalized), m2));
  ent = std::max(ent, std::abs(entropy(Element(spin_unit(2)), sp2)));
  ent = std::max(ent, std::abs(entropy(Element(alb_identity()), albert)));
  out.add("entropy.unit", ent, 0.01, "H(1) = 0 in every algebra");

  Eigen::MatrixXcd diag20 = Eigen::Vector2cd(2, 0).asDiagonal();
  out.add("entropy.matrix-diag20",
          std::abs(entropy(CMatrix(diag20, TraceMode::Normalized), m2) + 1.0), 0.01,
          "h = diag(2,0), tr/2: H = -1");
  out.add("entropy.spin-two-point",
          std::abs(entropy(Element(spin_unit(2) + spin_basis(2, 1)), sp2) + 1.0),
          0.01, "h = 1 + e: H = -1");

  double interp_id = 0, s2wit = 0, spin3real = 0;
  for (int t = 0; t < 50; ++t) {
    const AlgebraId m3{AlgebraId::Kind::Matrix, 3, TraceMode::Normalized, 0};
    const Element x = sample_element(m3, 99, t);
    for (double p : {1.0, 2.5})
      interp_id = std::max(
          interp_id, rel(interpolation_lp(x, m3, p),
                         dixmier_norm(std::get<CMatrix>(x), p)));
  }
  for (double p : kPGrid) {
    const Element w = *witness_element(s2);
    s2wit = std::max(s2wit, std::abs(interpolation_lp(w, s2, p) -
                                     std::exp2(1.0 - 1.0 / p)));
  }
  const AlgebraId sp3{AlgebraId::Kind::Spin, 0, TraceMode::Normalized, 3};
  for (int t = 0; t < 200; ++t) {
    const SpinElement x = random_spin(rng, 3, true);
    for (double p : {1.0, 3.0})
      spin3real = std::max(spin3real, rel(interpolation_lp(Element(x), sp3, p),
                                          spin_spectral_lp(x, p)));
  }
  out.add("interpolation.matrix-identity-embedding", interp_id, 1,
          "matrix algebras: interpolation = Dixmier");
  out.add("interpolation.s2-witness", s2wit, 0.01,
          "s1 + i s2 -> 2^{1-1/p}");
  out.add("interpolation.spin3-normal", spin3real, 1,
          "real-coefficient spin elements: interpolation = spectral");

  const std::vector<double> ps = {1.0, 2.0, 3.0};
  const auto rows = ratio_report(m2, ps, 400, 7, 1);
  double maxslack = 0, p2dev = 0, wit_bound = 0;
  for (const NormReport& row : rows) {
    maxslack = std::max(maxslack, -row.slack / std::max(1.0, *row.interpolation));
    if (row.p == 2.0) p2dev = std::max(p2dev, std::abs(row.ratio - 1.0));
    if (row.index == -1) wit_bound = std::max(wit_bound, std::abs(row.slack));
  }
  out.add("report.no-bound-violations", maxslack, 1, "4e2 samples of m:2");
  out.add("report.p2-ratio-one", p2dev, 1, "p = 2 column is identically 1");
  out.add("report.witness-attains-bound", wit_bound, 0.01, "witness rows saturate");
}

}  // namespace

std::vector<CheckResult> run_verify_checks(const std::string& only) {
  Collector out;
  out.only = only;
  check_octonions(out);
  check_matkit(out);
  check_spin(out);
  check_albert(out);
  check_compare(out);
  return out.results;
}

}  // namespace jlp
