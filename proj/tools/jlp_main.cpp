#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "jlp/compare.hpp"
#include "jlp/report_io.hpp"
#include "jlp/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadArgs = 2;

struct RunConfig {
  std::string command;
  std::string algebra_spec = "m:2";
  std::string p_spec;
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  std::string out_path;
  std::string format = "csv";
  std::string svg_path;
  int threads = 1;
  std::string only;
};

std::vector<double> parse_p_list(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in --p list");
    std::size_t pos = 0;
    const double p = std::stod(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad --p entry '" + item + "'");
    if (!(p >= 1.0)) throw std::invalid_argument("--p entries must be >= 1");
    out.push_back(p);
  }
  if (out.empty()) throw std::invalid_argument("--p list is empty");
  return out;
}

// Writes through a file when --out is given, otherwise to stdout.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
    return kExitOk;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return kExitBadArgs;
  }
  fn(os);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<jlp::CheckResult> checks = jlp::run_verify_checks(cfg.only);
  if (checks.empty()) {
    std::cerr << "error: no checks match --only '" << cfg.only << "'\n";
    return kExitBadArgs;
  }
  std::size_t passed = 0;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const jlp::CheckResult& c = checks[k];
    const bool ok = c.pass(cfg.tolerance);
    passed += ok;
    std::printf("[%2zu/%zu] %s  %-38s residual %.3e  (tol %.3e)%s%s%s\n", k + 1,
                checks.size(), ok ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                cfg.tolerance * c.tol_scale, c.detail.empty() ? "" : "  -- ",
                c.detail.c_str(), "");
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("verify: %zu/%zu checks passed in %.2f s\n", passed, checks.size(), secs);
  return passed == checks.size() ? kExitOk : kExitViolation;
}

int cmd_sample(const RunConfig& cfg) {
  jlp::AlgebraId id;
  std::vector<double> p_list;
  try {
    id = jlp::parse_algebra(cfg.algebra_spec);
    p_list = parse_p_list(cfg.p_spec.empty() ? "1,1.5,2,3,4" : cfg.p_spec);
    if (!jlp::has_matrix_model(id))
      throw std::invalid_argument(
          "'albert' has no interpolation norm; use the albert-triangle command");
    if (cfg.count < 1) throw std::invalid_argument("--n must be >= 1");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }

  const std::vector<jlp::NormReport> rows =
      jlp::ratio_report(id, p_list, cfg.count, cfg.seed, cfg.threads);
  const jlp::ReportMeta meta{jlp::algebra_name(id), p_list, cfg.count, cfg.seed};

  const int rc = with_output(cfg.out_path, [&](std::ostream& os) {
    if (cfg.format == "json")
      jlp::write_report_json(os, meta, rows);
    else
      jlp::write_report_csv(os, meta, rows);
  });
  if (rc != kExitOk) return rc;

  if (!cfg.svg_path.empty()) {
    std::ofstream svg(cfg.svg_path, std::ios::binary);
    if (!svg) {
      std::cerr << "error: cannot open svg file '" << cfg.svg_path << "'\n";
      return kExitBadArgs;
    }
    jlp::write_ratio_svg(svg, meta, rows);
  }

  double min_slack = std::numeric_limits<double>::infinity();
  double max_ratio = 0;
  for (const jlp::NormReport& r : rows) {
    min_slack = std::min(min_slack, r.slack);
    max_ratio = std::max(max_ratio, r.ratio);
  }
  for (double p : p_list)
    std::cerr << "p=" << jlp::format_g17(p)
              << " bound=" << jlp::format_g17(jlp::equivalence_bound(p)) << "\n";
  std::cerr << "max_ratio=" << jlp::format_g17(max_ratio)
            << " min_slack=" << jlp::format_g17(min_slack) << "\n";
  return min_slack >= -cfg.tolerance ? kExitOk : kExitViolation;
}

int cmd_albert_triangle(const RunConfig& cfg) {
  std::vector<double> p_list;
  try {
    p_list = parse_p_list(cfg.p_spec.empty() ? "1,1.5,3" : cfg.p_spec);
    if (cfg.count < 1) throw std::invalid_argument("--n must be >= 1");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  const jlp::AlgebraId albert{jlp::AlgebraId::Kind::Albert, 0,
                              jlp::TraceMode::Normalized, 0};
  const jlp::TriangleScan scan =
      jlp::triangle_scan(albert, cfg.count, cfg.seed, p_list, cfg.threads);
  const int rc = with_output(cfg.out_path, [&](std::ostream& os) {
    for (const auto& [p, slack] : scan.per_p)
      os << "p=" << jlp::format_g17(p) << " min_slack=" << jlp::format_g17(slack)
         << "\n";
  });
  if (rc != kExitOk) return rc;
  if (scan.min_slack < -cfg.tolerance)
    std::cerr << "WARNING: triangle slack " << jlp::format_g17(scan.min_slack)
              << " below -tolerance; possible norm failure witness\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Nonassociative L^p norms on tracial Jordan algebras"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run the canonical checklist");
  verify->add_option("--tol", cfg.tolerance, "pass/fail tolerance (default 1e-10)");
  verify->add_option("--only", cfg.only, "run only checks whose name contains this");

  CLI::App* sample = app.add_subcommand(
      "sample", "Monte-Carlo spectral vs interpolation norm report");
  sample->add_option("--algebra", cfg.algebra_spec,
                     "m:<n>[:tr] | s2 | spin:<d> | h2h | h2o");
  sample->add_option("--p", cfg.p_spec, "comma list of exponents (default 1,1.5,2,3,4)");
  sample->add_option("--n", cfg.count, "sample count");
  sample->add_option("--seed", cfg.seed, "stream seed");
  sample->add_option("--tol", cfg.tolerance, "violation tolerance");
  sample->add_option("--out", cfg.out_path, "output path (default stdout)");
  sample->add_option("--format", cfg.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sample->add_option("--svg", cfg.svg_path, "also emit a ratio-vs-p chart");
  sample->add_option("--threads", cfg.threads, "sampling threads")
      ->check(CLI::PositiveNumber);

  CLI::App* albert = app.add_subcommand(
      "albert-triangle", "empirical triangle-inequality scan on H_3(O_C)");
  albert->add_option("--p", cfg.p_spec, "comma list of exponents (default 1,1.5,3)");
  albert->add_option("--n", cfg.count, "pair count");
  albert->add_option("--seed", cfg.seed, "stream seed");
  albert->add_option("--tol", cfg.tolerance, "warning tolerance");
  albert->add_option("--out", cfg.out_path, "output path (default stdout)");
  albert->add_option("--threads", cfg.threads, "scan threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg);
    if (sample->parsed()) return cmd_sample(cfg);
    return cmd_albert_triangle(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}
