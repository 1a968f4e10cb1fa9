#ifndef JLP_SPIN_HPP
#define JLP_SPIN_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "jlp/matkit.hpp"

namespace jlp {

// Element lambda * 1 + sum_k z_k e_k of the complex spin factor whose
// ambient Hilbert space C 1 + C^{d-1} has dimension d >= 1. The unit
// coefficient is kept apart from the Hilbert part because the product and
// involution are stated in exactly these coordinates.
class SpinElement {
 public:
  explicit SpinElement(int d)
      : lambda_(0.0), z_(Eigen::VectorXcd::Zero(d - 1)) {
    if (d < 1) throw std::invalid_argument("SpinElement: d >= 1 required");
  }
  SpinElement(std::complex<double> lambda, Eigen::VectorXcd z)
      : lambda_(lambda), z_(std::move(z)) {}

  int dim() const { return int(z_.size()) + 1; }
  std::complex<double> unit_coeff() const { return lambda_; }
  const Eigen::VectorXcd& hilbert_part() const { return z_; }

  std::complex<double>& unit_coeff() { return lambda_; }
  Eigen::VectorXcd& hilbert_part() { return z_; }

 private:
  std::complex<double> lambda_;
  Eigen::VectorXcd z_;
};

SpinElement spin_unit(int d);
// Basis vector e_k, k in 1..d-1.
SpinElement spin_basis(int d, int k);

SpinElement operator+(const SpinElement& x, const SpinElement& y);
SpinElement operator-(const SpinElement& x, const SpinElement& y);
SpinElement operator*(const std::complex<double>& s, const SpinElement& x);

// Hilbert-space inner product, conjugate-linear in the second slot.
std::complex<double> spin_inner(const SpinElement& x, const SpinElement& y);

// Conjugation: lambda -> conj(lambda), z_k -> -conj(z_k).
SpinElement spin_conj(const SpinElement& x);

// Product <x,1> y + <y,1> x - <x, conj(y)> 1.
SpinElement spin_mul(const SpinElement& x, const SpinElement& y);

// Involution x* = 2 <1,x> 1 - conj(x).
SpinElement spin_involution(const SpinElement& x);

bool spin_is_selfadjoint(const SpinElement& x, double tol = 1e-12);

// Operator norm: ||x||^2 = <x,x> + sqrt(<x,x>^2 - |<x,conj(x)>|^2).
double spin_opnorm(const SpinElement& x);

// Canonical tracial state tau(lambda 1 + h) = lambda.
std::complex<double> spin_trace(const SpinElement& x);

// Eigenvalue pair of x* o x: the product decomposes as m 1 + h with m real
// and h selfadjoint orthogonal to 1, giving the pair m -+ ||h||_2 (the low
// end clamped at 0). The decomposition is recomputed and guarded at
// runtime; a failure of the expected form raises std::logic_error.
Eigen::Vector2d spin_modulus_spectrum(const SpinElement& x);

// Jordan-modulus L^p norm from the pair above, each eigenvalue carrying
// trace weight 1/2.
double spin_spectral_lp(const SpinElement& x, double p);

// Matrix model of a spin factor: d-1 pairwise anticommuting Hermitian
// unitaries with vanishing normalized trace, acting on C^{ambient_n}.
struct SpinModel {
  int d = 1;
  int ambient_n = 1;
  std::vector<Eigen::MatrixXcd> generators;
};

// Jordan-Wigner realization in M_{2^ceil((d-1)/2)}: sigma1/sigma2 at the
// active site with sigma3 strings to the left.
SpinModel jw_model(int d);

// Pauli model in M_2: d = 3 gives {sigma1, sigma2} (image S_2(C)),
// d = 4 gives {sigma1, sigma2, sigma3}.
SpinModel pauli_model(int d);

// Quaternionic model of the dimension-6 factor in M_4(C), obtained by
// applying the 2x2 complex representation entrywise to the symmetries of
// the 2x2 quaternionic Hermitian matrices.
SpinModel h2h_model();

// lambda I + sum z_k generator_k, with the normalized trace; linear,
// *-preserving, unital and trace-preserving.
CMatrix spin_embed(const SpinElement& x, const SpinModel& model);

// Paper-convention Pauli matrices: sigma1 = diag(1,-1), sigma2 = [[0,1],[1,0]],
// sigma3 = [[0,i],[-i,0]].
Eigen::Matrix2cd pauli_sigma(int k);

}  // namespace jlp

#endif  // JLP_SPIN_HPP
