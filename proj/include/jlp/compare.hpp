#ifndef JLP_COMPARE_HPP
#define JLP_COMPARE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jlp/albert.hpp"
#include "jlp/matkit.hpp"
#include "jlp/spin.hpp"

namespace jlp {

// One algebra per experiment: matrix(n) with a trace convention, the
// symmetric 2x2 model, complex spin factors, the quaternionic and
// octonionic dimension-6/10 factors, and the exceptional H_3(O_C).
struct AlgebraId {
  enum class Kind { Matrix, Sym2, Spin, H2H, H2O, Albert };
  Kind kind = Kind::Matrix;
  int n = 2;                                  // Matrix only
  TraceMode mode = TraceMode::Normalized;     // Matrix only
  int d = 2;                                  // Spin only
};

// Grammar: m:<n>[:tr] | s2 | spin:<d> | h2h | h2o | albert.
// Throws std::invalid_argument on anything else.
AlgebraId parse_algebra(const std::string& spec);
std::string algebra_name(const AlgebraId& id);
bool has_matrix_model(const AlgebraId& id);

using Element = std::variant<CMatrix, SpinElement, AlbertElement>;

// Deterministic Gaussian sampling keyed by (seed, index); every free real
// or complex coefficient is drawn i.i.d. standard normal (a complex
// coefficient takes two independent normals).
Element sample_element(const AlgebraId& id, std::uint64_t seed, std::uint64_t index);
std::vector<Element> sample(const AlgebraId& id, std::uint64_t count, std::uint64_t seed);

Element operator+(const Element& x, const Element& y);

// Jordan-modulus L^p norm in the element's own algebra.
double spectral_lp(const Element& x, const AlgebraId& id, double p);

// Interpolation L^p norm, realized as the ambient Dixmier norm of a
// trace-preserving matrix model of the algebra (the identity embedding
// for matrix algebras). Throws std::invalid_argument for the Albert
// algebra, which has no such model.
double interpolation_lp(const Element& x, const AlgebraId& id, double p);

// Equivalence constant 2^{1/p - 1/2} for p <= 2, 2^{1/2 - 1/p} for p >= 2.
double equivalence_bound(double p);

// Slack of the two constant-scaled comparison inequalities:
// min(bound * interpolation - spectral, bound * spectral - interpolation).
// At p = 2 the bound collapses to 1 and the slack is -|spectral - interpolation|.
double bound_check(double spectral, double interpolation, double p);

// Deterministic extremal element (the off-diagonal matrix-unit pattern and
// its spin analogue e1 + i e2); absent where every element is normal
// (matrix(1) and spin(2), whose algebras are commutative).
std::optional<Element> witness_element(const AlgebraId& id);

// One sampled comparison row. index -1 marks the witness row.
struct NormReport {
  std::string algebra;
  double p = 1;
  long long index = 0;
  double spectral = 0;
  std::optional<double> interpolation;
  double ratio = 0;
  double slack = 0;
};

std::vector<NormReport> ratio_report(const AlgebraId& id,
                                     const std::vector<double>& p_list,
                                     std::uint64_t count, std::uint64_t seed,
                                     int threads = 1);

struct TriangleScan {
  double min_slack = 0;                          // over all pairs and all p
  std::vector<std::pair<double, double>> per_p;  // (p, min slack at p)
};

// Minimum of ||x|| + ||y|| - ||x + y|| for the spectral L^p quantity over
// sampled pairs; for the Albert algebra this is an experiment, not a
// certified inequality.
TriangleScan triangle_scan(const AlgebraId& id, std::uint64_t count,
                           std::uint64_t seed, const std::vector<double>& p_list,
                           int threads = 1);

// (spectral L^1 norm, norm of the induced functional tau(x o .)); the
// second equals tau(|x|) under the element's trace convention.
std::pair<double, double> duality_gap(const CMatrix& x);

// H_tau(h) = -tau(h log2 h) for a positive element with tau(h) = 1,
// evaluated through the algebra's eigendecomposition. Throws
// std::domain_error for non-positive or non-normalized input.
double entropy(const Element& h, const AlgebraId& id);

}  // namespace jlp

#endif  // JLP_COMPARE_HPP
