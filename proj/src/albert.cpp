#include "jlp/albert.hpp"

#include <cmath>
#include <stdexcept>

#include "jlp/rng.hpp"

namespace jlp {
namespace {

using Full = std::array<std::array<Bioctonion, 3>, 3>;

Bioctonion scalar_bioct(std::complex<double> s) {
  Bioctonion b;
  b[0] = s;
  return b;
}

Full to_full(const AlbertElement& x) {
  Full f;
  f[0][0] = scalar_bioct(x.a());
  f[1][1] = scalar_bioct(x.b());
  f[2][2] = scalar_bioct(x.c());
  f[0][1] = x.alpha();
  f[1][0] = conj(x.alpha());
  f[0][2] = x.beta();
  f[2][0] = conj(x.beta());
  f[1][2] = x.gamma();
  f[2][1] = conj(x.gamma());
  return f;
}

Full full_mul(const Full& x, const Full& y) {
  Full z;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Bioctonion acc;
      for (int k = 0; k < 3; ++k) acc += x[i][k] * y[k][j];
      z[i][j] = acc;
    }
  return z;
}

// Coefficientwise complex conjugation of a bioctonion (not the octonionic
// conjugation); fixes the real form.
Bioctonion complex_conj(const Bioctonion& x) {
  Bioctonion out;
  for (int k = 0; k < 8; ++k) out[k] = std::conj(x[k]);
  return out;
}

double off_diag_scalar_residual(const Bioctonion& upper, const Bioctonion& lower) {
  return coeff_norm(lower - conj(upper));
}

// Complex norm form N restricted to scalar output.
std::complex<double> nform(const Bioctonion& x) { return norm_form(x); }

CharCubic char_cubic_unchecked(const AlbertElement& x) {
  const double a = std::real(x.a()), b = std::real(x.b()), c = std::real(x.c());
  const Bioctonion& al = x.alpha();
  const Bioctonion& be = x.beta();
  const Bioctonion& ga = x.gamma();
  const double na = std::real(nform(al));
  const double nb = std::real(nform(be));
  const double ng = std::real(nform(ga));
  const double t1 = a + b + c;
  const double t2 = a * b + b * c + c * a - na - nb - ng;
  const double triple = std::real(((al * ga) * conj(be)).scalar_part());
  const double t3 = a * b * c - a * ng - b * nb - c * na + 2.0 * triple;
  return CharCubic{t1, t2, t3};
}

// One-time oracle for the cubic coefficient formulas: Jordan
// Cayley-Hamilton residual on random selfadjoint elements.
void validate_char_cubic() {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CounterRng rng(0xA1BE47ull, i);
    Bioctonion off[3];
    for (auto& o : off)
      for (int k = 0; k < 8; ++k) o[k] = rng.next_gaussian();
    const AlbertElement x(rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian(),
                          off[0], off[1], off[2]);
    const CharCubic t = char_cubic_unchecked(x);
    const AlbertElement x2 = alb_mul(x, x);
    const AlbertElement x3 = alb_mul(x2, x);
    const AlbertElement r = x3 - t.t1 * x2 + t.t2 * x - t.t3 * alb_identity();
    const double scale = std::max(1.0, std::pow(alb_coeff_scale(x), 3.0));
    if (alb_coeff_scale(r) > 1e-9 * scale)
      throw std::logic_error("albert: characteristic cubic failed Cayley-Hamilton oracle");
  }
}

void ensure_cubic_validated() {
  static const bool ok = [] {
    validate_char_cubic();
    return true;
  }();
  (void)ok;
}

}  // namespace

AlbertElement alb_identity() { return alb_diag(1.0, 1.0, 1.0); }

AlbertElement alb_diag(std::complex<double> a, std::complex<double> b,
                       std::complex<double> c) {
  return AlbertElement(a, b, c, Bioctonion(), Bioctonion(), Bioctonion());
}

AlbertElement operator+(const AlbertElement& x, const AlbertElement& y) {
  return AlbertElement(x.a() + y.a(), x.b() + y.b(), x.c() + y.c(),
                       x.alpha() + y.alpha(), x.beta() + y.beta(),
                       x.gamma() + y.gamma());
}

AlbertElement operator-(const AlbertElement& x, const AlbertElement& y) {
  return AlbertElement(x.a() - y.a(), x.b() - y.b(), x.c() - y.c(),
                       x.alpha() - y.alpha(), x.beta() - y.beta(),
                       x.gamma() - y.gamma());
}

AlbertElement operator*(const std::complex<double>& s, const AlbertElement& x) {
  return AlbertElement(s * x.a(), s * x.b(), s * x.c(), s * x.alpha(),
                       s * x.beta(), s * x.gamma());
}

double alb_coeff_scale(const AlbertElement& x) {
  double s = std::max({std::abs(x.a()), std::abs(x.b()), std::abs(x.c())});
  for (const Bioctonion* o : {&x.alpha(), &x.beta(), &x.gamma()})
    s = std::max(s, o->coeffs().cwiseAbs().maxCoeff());
  return s;
}

AlbertElement alb_mul(const AlbertElement& x, const AlbertElement& y) {
  const Full fx = to_full(x);
  const Full fy = to_full(y);
  const Full xy = full_mul(fx, fy);
  const Full yx = full_mul(fy, fx);
  Full j;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) j[i][k] = std::complex<double>(0.5) * (xy[i][k] + yx[i][k]);

  const double scale =
      std::max(1.0, alb_coeff_scale(x) * alb_coeff_scale(y));
  const double tol = 1e-12 * scale;
  double residual = 0.0;
  for (int i = 0; i < 3; ++i)
    residual = std::max(residual, j[i][i].coeffs().tail<7>().norm());
  residual = std::max(residual, off_diag_scalar_residual(j[0][1], j[1][0]));
  residual = std::max(residual, off_diag_scalar_residual(j[0][2], j[2][0]));
  residual = std::max(residual, off_diag_scalar_residual(j[1][2], j[2][1]));
  if (residual > tol)
    throw std::logic_error("alb_mul: product left the Hermitian pattern");

  const auto canon = [](const Bioctonion& upper, const Bioctonion& lower) {
    return std::complex<double>(0.5) * (upper + conj(lower));
  };
  return AlbertElement(j[0][0].scalar_part(), j[1][1].scalar_part(),
                       j[2][2].scalar_part(), canon(j[0][1], j[1][0]),
                       canon(j[0][2], j[2][0]), canon(j[1][2], j[2][1]));
}

AlbertElement alb_adjoint(const AlbertElement& x) {
  return AlbertElement(std::conj(x.a()), std::conj(x.b()), std::conj(x.c()),
                       complex_conj(x.alpha()), complex_conj(x.beta()),
                       complex_conj(x.gamma()));
}

std::complex<double> alb_trace(const AlbertElement& x) {
  return (x.a() + x.b() + x.c()) / 3.0;
}

bool alb_is_selfadjoint(const AlbertElement& x, double tol) {
  const double scale = std::max(1.0, alb_coeff_scale(x));
  double gap = std::max({std::abs(std::imag(x.a())), std::abs(std::imag(x.b())),
                         std::abs(std::imag(x.c()))});
  for (const Bioctonion* o : {&x.alpha(), &x.beta(), &x.gamma()})
    gap = std::max(gap, o->coeffs().imag().cwiseAbs().maxCoeff());
  return gap <= tol * scale;
}

CharCubic alb_char_cubic(const AlbertElement& x) {
  ensure_cubic_validated();
  if (!alb_is_selfadjoint(x))
    throw std::invalid_argument("alb_char_cubic: element is not selfadjoint");
  return char_cubic_unchecked(x);
}

Eigen::Vector3d alb_eigenvalues(const AlbertElement& x) {
  const CharCubic t = alb_char_cubic(x);
  // Depressed cubic s^3 + ps + q at s = lambda - t1/3.
  const double p = t.t2 - t.t1 * t.t1 / 3.0;
  const double q = -2.0 * t.t1 * t.t1 * t.t1 / 27.0 + t.t1 * t.t2 / 3.0 - t.t3;
  const double scale = std::max({1e-150, std::abs(t.t1) / 3.0,
                                 std::sqrt(std::abs(t.t2)),
                                 std::cbrt(std::abs(t.t3))});
  double m2 = -p / 3.0;
  if (m2 < -1e-9 * scale * scale)
    throw std::domain_error("alb_eigenvalues: cubic has nonreal roots");
  m2 = std::max(m2, 0.0);

  Eigen::Vector3d roots;
  const double denom = 2.0 * std::pow(m2, 1.5);
  if (denom <= 1e-290) {
    if (std::abs(q) > 1e-9 * scale * scale * scale)
      throw std::domain_error("alb_eigenvalues: cubic has nonreal roots");
    roots.setZero();
  } else {
    double cosarg = -q / denom;
    if (std::abs(cosarg) > 1.0 + 1e-9)
      throw std::domain_error("alb_eigenvalues: cubic has nonreal roots");
    cosarg = std::clamp(cosarg, -1.0, 1.0);
    const double phi = std::acos(cosarg);
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (int k = 0; k < 3; ++k)
      roots(k) = 2.0 * std::sqrt(m2) * std::cos((phi + two_pi * k) / 3.0);
  }
  roots = roots.array() + t.t1 / 3.0;
  std::sort(roots.data(), roots.data() + 3);
  return roots;
}

double alb_spectral_lp(const AlbertElement& x, double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("alb_spectral_lp: requires p >= 1");
  if (alb_is_selfadjoint(x)) {
    const Eigen::Vector3d lam = alb_eigenvalues(x);
    double acc = 0.0;
    for (int k = 0; k < 3; ++k) acc += std::pow(std::abs(lam(k)), p);
    return std::pow(acc / 3.0, 1.0 / p);
  }
  const AlbertElement c = alb_mul(alb_adjoint(x), x);
  if (!alb_is_selfadjoint(c, 1e-10))
    throw std::logic_error("alb_spectral_lp: x* o x is not selfadjoint");
  Eigen::Vector3d mu = alb_eigenvalues(c);
  const double floor = -1e-9 * std::max(1.0, std::abs(mu(2)));
  double acc = 0.0;
  for (int k = 0; k < 3; ++k) {
    if (mu(k) < floor)
      throw std::domain_error("alb_spectral_lp: negative eigenvalue of x* o x");
    acc += std::pow(std::max(mu(k), 0.0), 0.5 * p);
  }
  return std::pow(acc / 3.0, 1.0 / p);
}

}  // namespace jlp
