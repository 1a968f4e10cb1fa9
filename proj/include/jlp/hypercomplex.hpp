#ifndef JLP_HYPERCOMPLEX_HPP
#define JLP_HYPERCOMPLEX_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace jlp {

// Signed-index Cayley table over the basis (1, e1..e7):
// e_i * e_j = sign(i,j) * e_{index(i,j)}, with index 0 denoting the unit.
struct OctonionTable {
  Eigen::Matrix<int, 8, 8> sign;
  Eigen::Matrix<int, 8, 8> index;
  OctonionTable();
};

// Shared table instance; construction self-checks the transcription
// (anticommutation, diagonal squares, permutation structure) and throws
// std::logic_error if the table is inconsistent.
const OctonionTable& octonion_table();

// Octonion over a real or complex scalar field. With Scalar = double this
// is the real octonion algebra of the Cayley table above; with
// Scalar = std::complex<double> it is the bioctonion algebra, and the
// octonionic conjugation below stays complex-linear.
template <typename Scalar>
class Cayley {
 public:
  using Coeffs = Eigen::Matrix<Scalar, 8, 1>;

  Cayley() : c_(Coeffs::Zero()) {}
  explicit Cayley(const Coeffs& c) : c_(c) {}

  static Cayley unit() {
    Coeffs c = Coeffs::Zero();
    c(0) = Scalar(1);
    return Cayley(c);
  }
  // Basis element e_k for k in 1..7 (k = 0 gives the unit).
  static Cayley basis(int k) {
    if (k < 0 || k > 7) throw std::invalid_argument("Cayley::basis: k out of range");
    Coeffs c = Coeffs::Zero();
    c(k) = Scalar(1);
    return Cayley(c);
  }

  const Coeffs& coeffs() const { return c_; }
  Scalar operator[](int k) const { return c_(k); }
  Scalar& operator[](int k) { return c_(k); }
  Scalar scalar_part() const { return c_(0); }

  Cayley& operator+=(const Cayley& o) { c_ += o.c_; return *this; }
  Cayley& operator-=(const Cayley& o) { c_ -= o.c_; return *this; }
  Cayley& operator*=(const Scalar& s) { c_ *= s; return *this; }

 private:
  Coeffs c_;
};

using Octonion = Cayley<double>;
using Bioctonion = Cayley<std::complex<double>>;

template <typename Scalar>
Cayley<Scalar> operator+(Cayley<Scalar> a, const Cayley<Scalar>& b) { return a += b; }
template <typename Scalar>
Cayley<Scalar> operator-(Cayley<Scalar> a, const Cayley<Scalar>& b) { return a -= b; }
template <typename Scalar>
Cayley<Scalar> operator-(const Cayley<Scalar>& a) { return Cayley<Scalar>(-a.coeffs()); }
template <typename Scalar>
Cayley<Scalar> operator*(const Scalar& s, Cayley<Scalar> a) { return a *= s; }
template <typename Scalar>
Cayley<Scalar> operator*(Cayley<Scalar> a, const Scalar& s) { return a *= s; }

// Bilinear Cayley product through the table.
template <typename Scalar>
Cayley<Scalar> operator*(const Cayley<Scalar>& x, const Cayley<Scalar>& y) {
  const OctonionTable& t = octonion_table();
  typename Cayley<Scalar>::Coeffs z = Cayley<Scalar>::Coeffs::Zero();
  for (int i = 0; i < 8; ++i) {
    const Scalar xi = x[i];
    if (xi == Scalar(0)) continue;
    for (int j = 0; j < 8; ++j) {
      const Scalar yj = y[j];
      if (yj == Scalar(0)) continue;
      z(t.index(i, j)) += double(t.sign(i, j)) * xi * yj;
    }
  }
  return Cayley<Scalar>(z);
}

// Octonionic conjugation: keeps c0, negates e1..e7. Complex-linear for
// bioctonions.
template <typename Scalar>
Cayley<Scalar> conj(const Cayley<Scalar>& x) {
  typename Cayley<Scalar>::Coeffs c = x.coeffs();
  c.template tail<7>() *= Scalar(-1);
  return Cayley<Scalar>(c);
}

// Norm form N(x) = x * conj(x) = sum of squared coefficients (no complex
// conjugation: for bioctonions this is the complex quadratic form).
template <typename Scalar>
Scalar norm_form(const Cayley<Scalar>& x) {
  return x.coeffs().cwiseProduct(x.coeffs()).sum();
}

inline double coeff_norm(const Octonion& x) { return x.coeffs().norm(); }
inline double coeff_norm(const Bioctonion& x) { return x.coeffs().norm(); }

// Quaternions over (1, i, j, k).
struct Quaternion {
  double a = 0, b = 0, c = 0, d = 0;

  Quaternion() = default;
  Quaternion(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}
};

inline Quaternion operator+(const Quaternion& x, const Quaternion& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

inline Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
          x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
          x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

inline Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

inline double abs_squared(const Quaternion& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

// Standard 2x2 complex representation: 1 -> I, i -> diag(i,-i),
// j -> [[0,1],[-1,0]], k -> [[0,i],[i,0]]. Real-algebra *-homomorphism with
// Re(q) = (tr/2) of the image.
Eigen::Matrix2cd quat_embed(const Quaternion& q);

}  // namespace jlp

#endif  // JLP_HYPERCOMPLEX_HPP
