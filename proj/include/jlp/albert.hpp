#ifndef JLP_ALBERT_HPP
#define JLP_ALBERT_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "jlp/hypercomplex.hpp"

namespace jlp {

// Hermitian-patterned 3x3 matrix over the bioctonions: complex diagonal
// (a, b, c) and off-diagonal entries alpha, beta, gamma at positions
// (1,2), (1,3), (2,3), with octonionic conjugates below the diagonal.
class AlbertElement {
 public:
  AlbertElement() = default;
  AlbertElement(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                Bioctonion alpha, Bioctonion beta, Bioctonion gamma)
      : diag_{a, b, c}, off_{std::move(alpha), std::move(beta), std::move(gamma)} {}

  std::complex<double> a() const { return diag_[0]; }
  std::complex<double> b() const { return diag_[1]; }
  std::complex<double> c() const { return diag_[2]; }
  const Bioctonion& alpha() const { return off_[0]; }
  const Bioctonion& beta() const { return off_[1]; }
  const Bioctonion& gamma() const { return off_[2]; }

 private:
  std::array<std::complex<double>, 3> diag_{};
  std::array<Bioctonion, 3> off_{};
};

AlbertElement alb_identity();
AlbertElement alb_diag(std::complex<double> a, std::complex<double> b,
                       std::complex<double> c);

AlbertElement operator+(const AlbertElement& x, const AlbertElement& y);
AlbertElement operator-(const AlbertElement& x, const AlbertElement& y);
AlbertElement operator*(const std::complex<double>& s, const AlbertElement& x);

// Largest coefficient magnitude, used for relative tolerances.
double alb_coeff_scale(const AlbertElement& x);

// Symmetrized bioctonion matrix product; throws std::logic_error if the
// result leaves the Hermitian pattern beyond internal tolerance.
AlbertElement alb_mul(const AlbertElement& x, const AlbertElement& y);

// Conjugate-linear adjoint fixing the real form H_3(O).
AlbertElement alb_adjoint(const AlbertElement& x);

// Normalized trace (a + b + c)/3.
std::complex<double> alb_trace(const AlbertElement& x);

bool alb_is_selfadjoint(const AlbertElement& x, double tol = 1e-12);

// Coefficients of the characteristic cubic of a selfadjoint element:
// lambda^3 - t1 lambda^2 + t2 lambda - t3. The coefficient formulas are
// validated once per process against the Jordan Cayley-Hamilton identity
// on random selfadjoint elements; failure throws std::logic_error.
struct CharCubic {
  double t1, t2, t3;
};
CharCubic alb_char_cubic(const AlbertElement& x);

// Ascending Jordan eigenvalues of a selfadjoint element, via the
// trigonometric three-real-root method on the depressed cubic.
Eigen::Vector3d alb_eigenvalues(const AlbertElement& x);

// ((|l1|^p + |l2|^p + |l3|^p)/3)^{1/p} for selfadjoint x; for general x
// the quantity tau[(x* o x)^{p/2}]^{1/p} through the eigenvalues of the
// selfadjoint positive element x* o x.
double alb_spectral_lp(const AlbertElement& x, double p);

}  // namespace jlp

#endif  // JLP_ALBERT_HPP
