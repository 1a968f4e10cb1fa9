#include "jlp/matkit.hpp"

#include <algorithm>
#include <cmath>

namespace jlp {
namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  if (a.trace_mode() != b.trace_mode())
    throw std::invalid_argument(std::string(what) + ": mixed trace conventions");
}

void require_p(double p, const char* what) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument(std::string(what) + ": requires p >= 1");
}

}  // namespace

CMatrix identity_matrix(Eigen::Index n, TraceMode mode) {
  return CMatrix(Eigen::MatrixXcd::Identity(n, n), mode);
}

CMatrix matrix_unit(Eigen::Index n, Eigen::Index i, Eigen::Index j, TraceMode mode) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  m(i, j) = 1.0;
  return CMatrix(std::move(m), mode);
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "operator+");
  return CMatrix(a.mat() + b.mat(), a.trace_mode());
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "operator-");
  return CMatrix(a.mat() - b.mat(), a.trace_mode());
}

CMatrix operator*(const std::complex<double>& s, const CMatrix& a) {
  return CMatrix(s * a.mat(), a.trace_mode());
}

CMatrix jordan_mul(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "jordan_mul");
  return CMatrix(0.5 * (a.mat() * b.mat() + b.mat() * a.mat()), a.trace_mode());
}

CMatrix adjoint(const CMatrix& a) { return CMatrix(a.mat().adjoint(), a.trace_mode()); }

std::complex<double> trace(const CMatrix& a) {
  return trace_weight(a.dim(), a.trace_mode()) * a.mat().trace();
}

bool is_hermitian(const CMatrix& a, double rel_tol) {
  const double scale = a.mat().cwiseAbs().maxCoeff();
  const double gap = (a.mat() - a.mat().adjoint()).cwiseAbs().maxCoeff();
  return gap <= rel_tol * std::max(scale, 1e-300);
}

EigDecomp eigh(const CMatrix& h) {
  if (!is_hermitian(h)) throw std::invalid_argument("eigh: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.mat());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: solver failed");
  return EigDecomp{solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix matfun(const CMatrix& h, const std::function<double(double)>& f) {
  EigDecomp d = eigh(h);
  Eigen::VectorXd fl(d.eigenvalues.size());
  for (Eigen::Index k = 0; k < fl.size(); ++k) {
    fl(k) = f(d.eigenvalues(k));
    if (!std::isfinite(fl(k)))
      throw std::domain_error("matfun: f undefined at an eigenvalue");
  }
  return CMatrix(d.eigenvectors * fl.asDiagonal() * d.eigenvectors.adjoint(),
                 h.trace_mode());
}

Eigen::VectorXd clamp_positive_spectrum(const Eigen::VectorXd& eigenvalues, double rel_tol) {
  const double top = eigenvalues.size() ? eigenvalues.maxCoeff() : 0.0;
  const double floor = -rel_tol * std::max(top, 1e-300);
  Eigen::VectorXd out = eigenvalues;
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    if (out(k) < floor)
      throw std::domain_error("clamp_positive_spectrum: eigenvalue below tolerance");
    if (out(k) < 0.0) out(k) = 0.0;
  }
  return out;
}

Eigen::VectorXd singular_values(const CMatrix& a) {
  // Hermitian inputs: singular values are |eigenvalues|. The general path
  // solves the Hermitian dilation [[0, a], [a*, 0]], whose spectrum is the
  // plus/minus singular-value pairs; unlike BDCSVD it keeps full accuracy
  // on the highly degenerate spectra spin-model images produce, and it
  // avoids the precision loss of squaring into a* a.
  if (is_hermitian(a)) {
    Eigen::VectorXd s = eigh(a).eigenvalues.cwiseAbs();
    std::sort(s.data(), s.data() + s.size(), std::greater<double>());
    return s;
  }
  const Eigen::Index n = a.dim();
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  d.topRightCorner(n, n) = a.mat();
  d.bottomLeftCorner(n, n) = a.mat().adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(d, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("singular_values: solver failed");
  const Eigen::VectorXd s = solver.eigenvalues().tail(n).cwiseMax(0.0);
  return s.reverse();
}

double operator_norm(const CMatrix& a) {
  Eigen::VectorXd s = singular_values(a);
  return s.size() ? s(0) : 0.0;
}

double dixmier_norm(const CMatrix& a, double p) {
  require_p(p, "dixmier_norm");
  const Eigen::VectorXd s = singular_values(a);
  const double w = trace_weight(a.dim(), a.trace_mode());
  double acc = 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) acc += std::pow(s(k), p);
  return std::pow(w * acc, 1.0 / p);
}

double spectral_lp_norm(const CMatrix& a, double p) {
  require_p(p, "spectral_lp_norm");
  const CMatrix c = jordan_mul(adjoint(a), a);
  const Eigen::VectorXd mu = clamp_positive_spectrum(eigh(c).eigenvalues);
  const double w = trace_weight(a.dim(), a.trace_mode());
  double acc = 0.0;
  for (Eigen::Index k = 0; k < mu.size(); ++k) acc += std::pow(mu(k), 0.5 * p);
  return std::pow(w * acc, 1.0 / p);
}

S2ClosedForms s2_closed_forms(std::complex<double> alpha, std::complex<double> beta,
                              std::complex<double> gamma, double p) {
  require_p(p, "s2_closed_forms");
  const double m = std::norm(alpha) + std::norm(beta) + std::norm(gamma);
  const double u = 2.0 * std::real(std::conj(alpha) * beta);
  const double v = 2.0 * std::real(std::conj(alpha) * gamma);
  const double w = 2.0 * std::imag(std::conj(beta) * gamma);
  const double r = std::hypot(u, v);
  const double s = std::sqrt(u * u + v * v + w * w);
  const auto two_point = [p, m](double t) {
    Eigen::VectorXd pair(2);
    pair << m - t, m + t;
    pair = clamp_positive_spectrum(pair);
    return std::pow(0.5 * (std::pow(pair(0), 0.5 * p) + std::pow(pair(1), 0.5 * p)),
                    1.0 / p);
  };
  return S2ClosedForms{m, r, s, two_point(r), two_point(s)};
}

CMatrix psi_embed(const CMatrix& a) {
  const Eigen::Index n = a.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = a.mat();
  m.bottomLeftCorner(n, n) = a.mat().adjoint();
  return CMatrix(std::move(m), TraceMode::Unnormalized);
}

}  // namespace jlp
