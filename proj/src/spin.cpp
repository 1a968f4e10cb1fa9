#include "jlp/spin.hpp"

#include <cmath>

#include "jlp/hypercomplex.hpp"

namespace jlp {
namespace {

void require_same_dim(const SpinElement& x, const SpinElement& y, const char* what) {
  if (x.dim() != y.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

double coeff_scale(const SpinElement& x) {
  double s = std::abs(x.unit_coeff());
  if (x.hilbert_part().size()) s = std::max(s, x.hilbert_part().cwiseAbs().maxCoeff());
  return s;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Symmetry contract of a spin-system model, enforced at construction.
void validate_model(const SpinModel& m, const char* what) {
  const double tol = 1e-13;
  const Eigen::MatrixXcd id =
      Eigen::MatrixXcd::Identity(m.ambient_n, m.ambient_n);
  if (int(m.generators.size()) != m.d - 1)
    throw std::logic_error(std::string(what) + ": wrong generator count");
  for (size_t a = 0; a < m.generators.size(); ++a) {
    const Eigen::MatrixXcd& s = m.generators[a];
    if ((s - s.adjoint()).cwiseAbs().maxCoeff() > tol)
      throw std::logic_error(std::string(what) + ": generator not Hermitian");
    if ((s * s - id).cwiseAbs().maxCoeff() > tol)
      throw std::logic_error(std::string(what) + ": generator not a symmetry");
    if (std::abs(s.trace()) / double(m.ambient_n) > tol)
      throw std::logic_error(std::string(what) + ": generator has nonzero trace");
    for (size_t b = a + 1; b < m.generators.size(); ++b) {
      const Eigen::MatrixXcd& t = m.generators[b];
      if ((s * t + t * s).cwiseAbs().maxCoeff() > tol)
        throw std::logic_error(std::string(what) + ": generators do not anticommute");
    }
  }
}

}  // namespace

Eigen::Matrix2cd pauli_sigma(int k) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 1, 0, 0, -1; break;
    case 2: m << 0, 1, 1, 0; break;
    case 3: m << 0, i, -i, 0; break;
    default: throw std::invalid_argument("pauli_sigma: k in 0..3");
  }
  return m;
}

SpinElement spin_unit(int d) {
  SpinElement x(d);
  x.unit_coeff() = 1.0;
  return x;
}

SpinElement spin_basis(int d, int k) {
  if (k < 1 || k >= d) throw std::invalid_argument("spin_basis: k in 1..d-1");
  SpinElement x(d);
  x.hilbert_part()(k - 1) = 1.0;
  return x;
}

SpinElement operator+(const SpinElement& x, const SpinElement& y) {
  require_same_dim(x, y, "operator+");
  return SpinElement(x.unit_coeff() + y.unit_coeff(),
                     x.hilbert_part() + y.hilbert_part());
}

SpinElement operator-(const SpinElement& x, const SpinElement& y) {
  require_same_dim(x, y, "operator-");
  return SpinElement(x.unit_coeff() - y.unit_coeff(),
                     x.hilbert_part() - y.hilbert_part());
}

SpinElement operator*(const std::complex<double>& s, const SpinElement& x) {
  return SpinElement(s * x.unit_coeff(), s * x.hilbert_part());
}

std::complex<double> spin_inner(const SpinElement& x, const SpinElement& y) {
  require_same_dim(x, y, "spin_inner");
  std::complex<double> acc = x.unit_coeff() * std::conj(y.unit_coeff());
  for (Eigen::Index k = 0; k < x.hilbert_part().size(); ++k)
    acc += x.hilbert_part()(k) * std::conj(y.hilbert_part()(k));
  return acc;
}

SpinElement spin_conj(const SpinElement& x) {
  return SpinElement(std::conj(x.unit_coeff()), -x.hilbert_part().conjugate());
}

SpinElement spin_mul(const SpinElement& x, const SpinElement& y) {
  require_same_dim(x, y, "spin_mul");
  const std::complex<double> x1 = spin_inner(x, spin_unit(x.dim()));
  const std::complex<double> y1 = spin_inner(y, spin_unit(y.dim()));
  const std::complex<double> xyc = spin_inner(x, spin_conj(y));
  SpinElement out = x1 * y + y1 * x;
  out.unit_coeff() -= xyc;
  return out;
}

SpinElement spin_involution(const SpinElement& x) {
  // 2<1,x>1 - conj(x), which in these coordinates conjugates every coefficient.
  return SpinElement(std::conj(x.unit_coeff()), x.hilbert_part().conjugate());
}

bool spin_is_selfadjoint(const SpinElement& x, double tol) {
  const double scale = std::max(coeff_scale(x), 1.0);
  double gap = std::abs(std::imag(x.unit_coeff()));
  for (Eigen::Index k = 0; k < x.hilbert_part().size(); ++k)
    gap = std::max(gap, std::abs(std::imag(x.hilbert_part()(k))));
  return gap <= tol * scale;
}

double spin_opnorm(const SpinElement& x) {
  const double q = std::real(spin_inner(x, x));
  const double c = std::abs(spin_inner(x, spin_conj(x)));
  const double disc = std::max(q * q - c * c, 0.0);
  return std::sqrt(q + std::sqrt(disc));
}

std::complex<double> spin_trace(const SpinElement& x) { return x.unit_coeff(); }

Eigen::Vector2d spin_modulus_spectrum(const SpinElement& x) {
  const SpinElement c = spin_mul(spin_involution(x), x);
  // x* o x must be m 1 + h with m real and h selfadjoint orthogonal to 1.
  if (!spin_is_selfadjoint(c, 1e-10))
    throw std::logic_error("spin_modulus_spectrum: x* o x is not of the form m1 + h");
  const double m = std::real(c.unit_coeff());
  const double rho = c.hilbert_part().size()
                         ? c.hilbert_part().real().matrix().norm()
                         : 0.0;
  double lo = m - rho;
  const double hi = m + rho;
  if (lo < 0.0) {
    if (lo < -1e-10 * m - 1e-300)
      throw std::domain_error("spin_modulus_spectrum: negative eigenvalue of x* o x");
    lo = 0.0;
  }
  return Eigen::Vector2d(lo, hi);
}

double spin_spectral_lp(const SpinElement& x, double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("spin_spectral_lp: requires p >= 1");
  const Eigen::Vector2d mu = spin_modulus_spectrum(x);
  return std::pow(0.5 * (std::pow(mu(0), 0.5 * p) + std::pow(mu(1), 0.5 * p)),
                  1.0 / p);
}

SpinModel jw_model(int d) {
  if (d < 1) throw std::invalid_argument("jw_model: d >= 1 required");
  const int sites = (d - 1 + 1) / 2;
  SpinModel m;
  m.d = d;
  m.ambient_n = 1 << sites;
  const Eigen::MatrixXcd id2 = pauli_sigma(0);
  for (int g = 0; g < d - 1; ++g) {
    const int site = g / 2;
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
    for (int s = 0; s < sites; ++s) {
      if (s < site)
        acc = kron(acc, pauli_sigma(3));
      else if (s == site)
        acc = kron(acc, pauli_sigma(g % 2 == 0 ? 1 : 2));
      else
        acc = kron(acc, id2);
    }
    m.generators.push_back(std::move(acc));
  }
  validate_model(m, "jw_model");
  return m;
}

SpinModel pauli_model(int d) {
  if (d != 3 && d != 4) throw std::invalid_argument("pauli_model: d must be 3 or 4");
  SpinModel m;
  m.d = d;
  m.ambient_n = 2;
  for (int k = 1; k < d; ++k) m.generators.push_back(pauli_sigma(k));
  validate_model(m, "pauli_model");
  return m;
}

SpinModel h2h_model() {
  SpinModel m;
  m.d = 6;
  m.ambient_n = 4;
  const Quaternion one(1, 0, 0, 0), qi(0, 1, 0, 0), qj(0, 0, 1, 0), qk(0, 0, 0, 1);
  const auto block2 = [](const Eigen::Matrix2cd& tl, const Eigen::Matrix2cd& tr,
                         const Eigen::Matrix2cd& bl, const Eigen::Matrix2cd& br) {
    Eigen::MatrixXcd out(4, 4);
    out.topLeftCorner(2, 2) = tl;
    out.topRightCorner(2, 2) = tr;
    out.bottomLeftCorner(2, 2) = bl;
    out.bottomRightCorner(2, 2) = br;
    return out;
  };
  const Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero();
  const Eigen::Matrix2cd e1 = quat_embed(one);
  m.generators.push_back(block2(e1, z, z, -e1));
  m.generators.push_back(block2(z, e1, e1, z));
  for (const Quaternion& q : {qi, qj, qk}) {
    const Eigen::Matrix2cd eq = quat_embed(q);
    m.generators.push_back(block2(z, eq, -eq, z));
  }
  validate_model(m, "h2h_model");
  return m;
}

CMatrix spin_embed(const SpinElement& x, const SpinModel& model) {
  if (x.dim() != model.d)
    throw std::invalid_argument("spin_embed: dimension mismatch");
  Eigen::MatrixXcd out =
      x.unit_coeff() * Eigen::MatrixXcd::Identity(model.ambient_n, model.ambient_n);
  for (int k = 0; k < model.d - 1; ++k)
    out += x.hilbert_part()(k) * model.generators[k];
  return CMatrix(std::move(out), TraceMode::Normalized);
}

}  // namespace jlp
