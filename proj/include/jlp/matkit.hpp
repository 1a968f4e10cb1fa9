#ifndef JLP_MATKIT_HPP
#define JLP_MATKIT_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>

namespace jlp {

// Trace convention carried by the value; Normalized means Tr/n.
enum class TraceMode { Normalized, Unnormalized };

inline double trace_weight(Eigen::Index n, TraceMode mode) {
  return mode == TraceMode::Normalized ? 1.0 / double(n) : 1.0;
}

// Dense square complex matrix with an attached trace convention.
class CMatrix {
 public:
  CMatrix(Eigen::MatrixXcd entries, TraceMode mode)
      : m_(std::move(entries)), mode_(mode) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("CMatrix: must be square");
  }

  const Eigen::MatrixXcd& mat() const { return m_; }
  TraceMode trace_mode() const { return mode_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Eigen::MatrixXcd m_;
  TraceMode mode_;
};

CMatrix identity_matrix(Eigen::Index n, TraceMode mode);
// Matrix unit E_{ij} (zero-based indices).
CMatrix matrix_unit(Eigen::Index n, Eigen::Index i, Eigen::Index j, TraceMode mode);

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const std::complex<double>& s, const CMatrix& a);

// Symmetrized product (AB + BA)/2.
CMatrix jordan_mul(const CMatrix& a, const CMatrix& b);

CMatrix adjoint(const CMatrix& a);

// Trace under the carried convention (Tr or Tr/n).
std::complex<double> trace(const CMatrix& a);

bool is_hermitian(const CMatrix& a, double rel_tol = 1e-14);

struct EigDecomp {
  Eigen::VectorXd eigenvalues;    // ascending
  Eigen::MatrixXcd eigenvectors;  // unitary, columns match eigenvalues
};

// Hermitian eigendecomposition; throws std::invalid_argument on
// non-Hermitian input.
EigDecomp eigh(const CMatrix& h);

// Functional calculus V f(lambda) V* for Hermitian h.
CMatrix matfun(const CMatrix& h, const std::function<double(double)>& f);

// Clamp the spectrum of a theoretically positive operator: values in
// [-rel_tol * max, 0) go to 0, anything more negative throws
// std::domain_error.
Eigen::VectorXd clamp_positive_spectrum(const Eigen::VectorXd& eigenvalues,
                                        double rel_tol = 1e-10);

// Singular values, descending.
Eigen::VectorXd singular_values(const CMatrix& a);

// Largest singular value.
double operator_norm(const CMatrix& a);

// tau(|a|^p)^(1/p) with |a| = (a* a)^(1/2), tau per the trace convention.
double dixmier_norm(const CMatrix& a, double p);

// tau[(a* o a)^(p/2)]^(1/p), the Jordan-modulus L^p norm.
double spectral_lp_norm(const CMatrix& a, double p);

// Closed forms for x = alpha I + beta s1 + gamma s2 in the symmetric 2x2
// model under the normalized trace. m is the unit coefficient of x* o x,
// r/s the spectral radii of x* o x and x* x about m; both norms are
// (((m -. t)^{p/2} + (m + t)^{p/2}) / 2)^{1/p} with t = r resp. s.
struct S2ClosedForms {
  double m, r, s;
  double spectral, dixmier;
};
S2ClosedForms s2_closed_forms(std::complex<double> alpha, std::complex<double> beta,
                              std::complex<double> gamma, double p);

// Block embedding [[a, 0], [a*, 0]] into M_{2n}; the result carries the
// unnormalized trace, under which its Dixmier L^p norm equals
// sqrt(2) * spectral_lp_norm(a) taken with the unnormalized trace.
CMatrix psi_embed(const CMatrix& a);

}  // namespace jlp

#endif  // JLP_MATKIT_HPP
