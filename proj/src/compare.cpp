#include "jlp/compare.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "jlp/rng.hpp"

namespace jlp {
namespace {

const std::complex<double> kI(0.0, 1.0);

int parse_int(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("algebra spec: expected an integer, got '" + s + "'");
  return std::stoi(s);
}

const SpinModel& spin_model(int d) {
  static std::unordered_map<int, SpinModel> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, jw_model(d)).first;
  return it->second;
}

const SpinModel& quaternionic_model() {
  static const SpinModel m = h2h_model();
  return m;
}

int spin_dim(const AlgebraId& id) {
  switch (id.kind) {
    case AlgebraId::Kind::Spin: return id.d;
    case AlgebraId::Kind::H2H: return 6;
    case AlgebraId::Kind::H2O: return 10;
    default: throw std::logic_error("spin_dim: not a spin-type algebra");
  }
}

bool is_spin_kind(const AlgebraId& id) {
  return id.kind == AlgebraId::Kind::Spin || id.kind == AlgebraId::Kind::H2H ||
         id.kind == AlgebraId::Kind::H2O;
}

CMatrix sym2_matrix(std::complex<double> alpha, std::complex<double> beta,
                    std::complex<double> gamma) {
  Eigen::MatrixXcd m = alpha * Eigen::Matrix2cd::Identity() +
                       beta * pauli_sigma(1) + gamma * pauli_sigma(2);
  return CMatrix(std::move(m), TraceMode::Normalized);
}

const CMatrix& as_matrix(const Element& x, const char* what) {
  if (const CMatrix* m = std::get_if<CMatrix>(&x)) return *m;
  throw std::invalid_argument(std::string(what) + ": element/algebra mismatch");
}

const SpinElement& as_spin(const Element& x, const char* what) {
  if (const SpinElement* s = std::get_if<SpinElement>(&x)) return *s;
  throw std::invalid_argument(std::string(what) + ": element/algebra mismatch");
}

const AlbertElement& as_albert(const Element& x, const char* what) {
  if (const AlbertElement* a = std::get_if<AlbertElement>(&x)) return *a;
  throw std::invalid_argument(std::string(what) + ": element/algebra mismatch");
}

// Everything needed to evaluate both norms at any p: the spectrum of the
// Jordan modulus square with its trace weight, and (when a model exists)
// the singular values of the embedded image with theirs.
struct NormProfile {
  Eigen::VectorXd modulus_sq;  // eigenvalues of x* o x, clamped at 0
  double spec_weight = 1;
  Eigen::VectorXd svals;  // singular values of the model image
  double interp_weight = 1;
};

double lp_from_modulus(const NormProfile& prof, double p) {
  double acc = 0.0;
  for (Eigen::Index k = 0; k < prof.modulus_sq.size(); ++k)
    acc += std::pow(prof.modulus_sq(k), 0.5 * p);
  return std::pow(prof.spec_weight * acc, 1.0 / p);
}

double lp_from_svals(const NormProfile& prof, double p) {
  double acc = 0.0;
  for (Eigen::Index k = 0; k < prof.svals.size(); ++k)
    acc += std::pow(prof.svals(k), p);
  return std::pow(prof.interp_weight * acc, 1.0 / p);
}

NormProfile norm_profile(const Element& x, const AlgebraId& id, bool want_interp) {
  NormProfile prof;
  switch (id.kind) {
    case AlgebraId::Kind::Matrix:
    case AlgebraId::Kind::Sym2: {
      const CMatrix& m = as_matrix(x, "norm_profile");
      prof.modulus_sq =
          clamp_positive_spectrum(eigh(jordan_mul(adjoint(m), m)).eigenvalues);
      prof.spec_weight = trace_weight(m.dim(), m.trace_mode());
      if (want_interp) {
        prof.svals = singular_values(m);
        prof.interp_weight = prof.spec_weight;
      }
      return prof;
    }
    case AlgebraId::Kind::Spin:
    case AlgebraId::Kind::H2H:
    case AlgebraId::Kind::H2O: {
      const SpinElement& s = as_spin(x, "norm_profile");
      prof.modulus_sq = spin_modulus_spectrum(s);
      prof.spec_weight = 0.5;
      if (want_interp) {
        const SpinModel& model = id.kind == AlgebraId::Kind::H2H
                                     ? quaternionic_model()
                                     : spin_model(spin_dim(id));
        const CMatrix image = spin_embed(s, model);
        prof.svals = singular_values(image);
        prof.interp_weight = 1.0 / double(model.ambient_n);
      }
      return prof;
    }
    case AlgebraId::Kind::Albert: {
      const AlbertElement& a = as_albert(x, "norm_profile");
      if (want_interp)
        throw std::invalid_argument(
            "interpolation_lp: the Albert algebra has no matrix model");
      if (alb_is_selfadjoint(a)) {
        const Eigen::Vector3d lam = alb_eigenvalues(a);
        prof.modulus_sq = lam.cwiseProduct(lam);
      } else {
        const AlbertElement c = alb_mul(alb_adjoint(a), a);
        Eigen::Vector3d mu = alb_eigenvalues(c);
        const double floor = -1e-9 * std::max(1.0, std::abs(mu(2)));
        for (int k = 0; k < 3; ++k) {
          if (mu(k) < floor)
            throw std::domain_error("norm_profile: negative eigenvalue of x* o x");
          mu(k) = std::max(mu(k), 0.0);
        }
        prof.modulus_sq = mu;
      }
      prof.spec_weight = 1.0 / 3.0;
      return prof;
    }
  }
  throw std::logic_error("norm_profile: unreachable");
}

void require_p(double p, const char* what) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument(std::string(what) + ": requires p >= 1");
}

// Index-chunked fan-out; results keyed by index, so the output does not
// depend on the thread count.
void parallel_for(std::uint64_t count, int threads,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  const int nt = std::max(1, std::min<int>(threads, int(std::min<std::uint64_t>(count, 64))));
  if (nt == 1) {
    body(0, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (count + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    const std::uint64_t lo = std::uint64_t(t) * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, count);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi);
  }
  for (auto& th : pool) th.join();
}

double xlog2x(double t) { return t > 0.0 ? t * std::log2(t) : 0.0; }

}  // namespace

AlgebraId parse_algebra(const std::string& spec) {
  AlgebraId id;
  if (spec == "s2") {
    id.kind = AlgebraId::Kind::Sym2;
    return id;
  }
  if (spec == "h2h") {
    id.kind = AlgebraId::Kind::H2H;
    return id;
  }
  if (spec == "h2o") {
    id.kind = AlgebraId::Kind::H2O;
    return id;
  }
  if (spec == "albert") {
    id.kind = AlgebraId::Kind::Albert;
    return id;
  }
  if (spec.rfind("m:", 0) == 0) {
    id.kind = AlgebraId::Kind::Matrix;
    std::string rest = spec.substr(2);
    const auto colon = rest.find(':');
    if (colon != std::string::npos) {
      if (rest.substr(colon + 1) != "tr")
        throw std::invalid_argument("algebra spec: expected ':tr' in '" + spec + "'");
      id.mode = TraceMode::Unnormalized;
      rest = rest.substr(0, colon);
    }
    id.n = parse_int(rest);
    if (id.n < 1 || id.n > 64)
      throw std::invalid_argument("algebra spec: matrix dimension must be in 1..64");
    return id;
  }
  if (spec.rfind("spin:", 0) == 0) {
    id.kind = AlgebraId::Kind::Spin;
    id.d = parse_int(spec.substr(5));
    // Matrix models live in M_{2^ceil((d-1)/2)}, capped at M_64.
    if (id.d < 1 || id.d > 13)
      throw std::invalid_argument("algebra spec: spin dimension must be in 1..13");
    return id;
  }
  throw std::invalid_argument("algebra spec: unrecognized '" + spec + "'");
}

std::string algebra_name(const AlgebraId& id) {
  switch (id.kind) {
    case AlgebraId::Kind::Matrix:
      return "m:" + std::to_string(id.n) +
             (id.mode == TraceMode::Unnormalized ? ":tr" : "");
    case AlgebraId::Kind::Sym2: return "s2";
    case AlgebraId::Kind::Spin: return "spin:" + std::to_string(id.d);
    case AlgebraId::Kind::H2H: return "h2h";
    case AlgebraId::Kind::H2O: return "h2o";
    case AlgebraId::Kind::Albert: return "albert";
  }
  return "?";
}

bool has_matrix_model(const AlgebraId& id) {
  return id.kind != AlgebraId::Kind::Albert;
}

Element sample_element(const AlgebraId& id, std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index);
  switch (id.kind) {
    case AlgebraId::Kind::Matrix: {
      Eigen::MatrixXcd m(id.n, id.n);
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          m(i, j) = rng.next_complex_gaussian();
      return CMatrix(std::move(m), id.mode);
    }
    case AlgebraId::Kind::Sym2: {
      const std::complex<double> alpha = rng.next_complex_gaussian();
      const std::complex<double> beta = rng.next_complex_gaussian();
      const std::complex<double> gamma = rng.next_complex_gaussian();
      return sym2_matrix(alpha, beta, gamma);
    }
    case AlgebraId::Kind::Spin:
    case AlgebraId::Kind::H2H:
    case AlgebraId::Kind::H2O: {
      const int d = spin_dim(id);
      SpinElement x(d);
      x.unit_coeff() = rng.next_complex_gaussian();
      for (int k = 0; k < d - 1; ++k)
        x.hilbert_part()(k) = rng.next_complex_gaussian();
      return x;
    }
    case AlgebraId::Kind::Albert: {
      const std::complex<double> a = rng.next_complex_gaussian();
      const std::complex<double> b = rng.next_complex_gaussian();
      const std::complex<double> c = rng.next_complex_gaussian();
      Bioctonion off[3];
      for (auto& o : off)
        for (int k = 0; k < 8; ++k) o[k] = rng.next_complex_gaussian();
      return AlbertElement(a, b, c, off[0], off[1], off[2]);
    }
  }
  throw std::logic_error("sample_element: unreachable");
}

std::vector<Element> sample(const AlgebraId& id, std::uint64_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample: count >= 1 required");
  std::vector<Element> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(sample_element(id, seed, i));
  return out;
}

Element operator+(const Element& x, const Element& y) {
  if (const CMatrix* a = std::get_if<CMatrix>(&x))
    return *a + as_matrix(y, "Element operator+");
  if (const SpinElement* a = std::get_if<SpinElement>(&x))
    return *a + as_spin(y, "Element operator+");
  return as_albert(x, "Element operator+") + as_albert(y, "Element operator+");
}

double spectral_lp(const Element& x, const AlgebraId& id, double p) {
  require_p(p, "spectral_lp");
  return lp_from_modulus(norm_profile(x, id, false), p);
}

double interpolation_lp(const Element& x, const AlgebraId& id, double p) {
  require_p(p, "interpolation_lp");
  return lp_from_svals(norm_profile(x, id, true), p);
}

double equivalence_bound(double p) {
  require_p(p, "equivalence_bound");
  return std::exp2(std::abs(1.0 / p - 0.5));
}

double bound_check(double spectral, double interpolation, double p) {
  if (spectral < 0.0 || interpolation < 0.0)
    throw std::invalid_argument("bound_check: norms must be nonnegative");
  const double bound = equivalence_bound(p);
  return std::min(bound * interpolation - spectral,
                  bound * spectral - interpolation);
}

std::optional<Element> witness_element(const AlgebraId& id) {
  switch (id.kind) {
    case AlgebraId::Kind::Matrix:
      if (id.n < 2) return std::nullopt;  // commutative, every element normal
      return Element(matrix_unit(id.n, 0, 1, id.mode));
    case AlgebraId::Kind::Sym2:
      return Element(sym2_matrix(0.0, 1.0, kI));
    case AlgebraId::Kind::Spin:
    case AlgebraId::Kind::H2H:
    case AlgebraId::Kind::H2O: {
      const int d = spin_dim(id);
      if (d < 3) return std::nullopt;  // spin(1), spin(2) are commutative
      return Element(spin_basis(d, 1) + kI * spin_basis(d, 2));
    }
    case AlgebraId::Kind::Albert:
      return std::nullopt;  // no interpolation norm to compare against
  }
  return std::nullopt;
}

std::vector<NormReport> ratio_report(const AlgebraId& id,
                                     const std::vector<double>& p_list,
                                     std::uint64_t count, std::uint64_t seed,
                                     int threads) {
  if (!has_matrix_model(id))
    throw std::invalid_argument("ratio_report: no interpolation norm for 'albert'");
  if (count < 1) throw std::invalid_argument("ratio_report: count >= 1 required");
  for (double p : p_list) require_p(p, "ratio_report");

  const std::string name = algebra_name(id);
  const std::size_t np = p_list.size();
  std::vector<NormReport> rows(count * np);
  parallel_for(count, threads, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Element x = sample_element(id, seed, i);
      const NormProfile prof = norm_profile(x, id, true);
      for (std::size_t j = 0; j < np; ++j) {
        const double p = p_list[j];
        NormReport& row = rows[i * np + j];
        row.algebra = name;
        row.p = p;
        row.index = (long long)(i);
        row.spectral = lp_from_modulus(prof, p);
        row.interpolation = lp_from_svals(prof, p);
        row.ratio = row.spectral / *row.interpolation;
        row.slack = bound_check(row.spectral, *row.interpolation, p);
      }
    }
  });

  if (std::optional<Element> w = witness_element(id)) {
    const NormProfile prof = norm_profile(*w, id, true);
    for (double p : p_list) {
      NormReport row;
      row.algebra = name;
      row.p = p;
      row.index = -1;
      row.spectral = lp_from_modulus(prof, p);
      row.interpolation = lp_from_svals(prof, p);
      row.ratio = row.spectral / *row.interpolation;
      row.slack = bound_check(row.spectral, *row.interpolation, p);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

TriangleScan triangle_scan(const AlgebraId& id, std::uint64_t count,
                           std::uint64_t seed, const std::vector<double>& p_list,
                           int threads) {
  if (count < 1) throw std::invalid_argument("triangle_scan: count >= 1 required");
  if (p_list.empty()) throw std::invalid_argument("triangle_scan: empty p list");
  for (double p : p_list) require_p(p, "triangle_scan");

  const std::size_t np = p_list.size();
  std::vector<std::vector<double>> slack(np,
                                         std::vector<double>(count, 0.0));
  parallel_for(count, threads, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Element x = sample_element(id, seed, 2 * i);
      const Element y = sample_element(id, seed, 2 * i + 1);
      const NormProfile px = norm_profile(x, id, false);
      const NormProfile py = norm_profile(y, id, false);
      const NormProfile pxy = norm_profile(x + y, id, false);
      for (std::size_t j = 0; j < np; ++j) {
        const double p = p_list[j];
        slack[j][i] = lp_from_modulus(px, p) + lp_from_modulus(py, p) -
                      lp_from_modulus(pxy, p);
      }
    }
  });

  TriangleScan out;
  out.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < np; ++j) {
    const double m = *std::min_element(slack[j].begin(), slack[j].end());
    out.per_p.emplace_back(p_list[j], m);
    out.min_slack = std::min(out.min_slack, m);
  }
  return out;
}

std::pair<double, double> duality_gap(const CMatrix& x) {
  const double l1 = spectral_lp_norm(x, 1.0);
  const Eigen::VectorXd s = singular_values(x);
  const double dual = trace_weight(x.dim(), x.trace_mode()) * s.sum();
  return {l1, dual};
}

double entropy(const Element& h, const AlgebraId& id) {
  Eigen::VectorXd lam;
  double weight = 1.0;
  switch (id.kind) {
    case AlgebraId::Kind::Matrix:
    case AlgebraId::Kind::Sym2: {
      const CMatrix& m = as_matrix(h, "entropy");
      if (!is_hermitian(m, 1e-12))
        throw std::domain_error("entropy: element is not selfadjoint");
      lam = eigh(m).eigenvalues;
      weight = trace_weight(m.dim(), m.trace_mode());
      break;
    }
    case AlgebraId::Kind::Spin:
    case AlgebraId::Kind::H2H:
    case AlgebraId::Kind::H2O: {
      const SpinElement& s = as_spin(h, "entropy");
      if (s.dim() != spin_dim(id))
        throw std::invalid_argument("entropy: dimension mismatch");
      if (!spin_is_selfadjoint(s))
        throw std::domain_error("entropy: element is not selfadjoint");
      const double l = std::real(s.unit_coeff());
      const double rho = s.hilbert_part().size()
                             ? s.hilbert_part().real().matrix().norm()
                             : 0.0;
      lam.resize(2);
      lam << l - rho, l + rho;
      weight = 0.5;
      break;
    }
    case AlgebraId::Kind::Albert: {
      const AlbertElement& a = as_albert(h, "entropy");
      if (!alb_is_selfadjoint(a))
        throw std::domain_error("entropy: element is not selfadjoint");
      lam = alb_eigenvalues(a);
      weight = 1.0 / 3.0;
      break;
    }
  }
  try {
    lam = clamp_positive_spectrum(lam);
  } catch (const std::domain_error&) {
    throw std::domain_error("entropy: element is not positive");
  }
  const double tau = weight * lam.sum();
  if (std::abs(tau - 1.0) > 1e-8)
    throw std::domain_error("entropy: trace of the density must be 1");
  double acc = 0.0;
  for (Eigen::Index k = 0; k < lam.size(); ++k) acc += xlog2x(lam(k));
  return -weight * acc;
}

}  // namespace jlp
