#ifndef JLP_REPORT_IO_HPP
#define JLP_REPORT_IO_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "jlp/compare.hpp"

namespace jlp {

// Run description echoed into every report header; deliberately excludes
// the thread count so output bytes do not depend on it.
struct ReportMeta {
  std::string algebra;
  std::vector<double> p_list;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

// 17 significant digits, enough to round-trip an IEEE double.
std::string format_g17(double v);

void write_report_csv(std::ostream& os, const ReportMeta& meta,
                      const std::vector<NormReport>& rows);
void write_report_json(std::ostream& os, const ReportMeta& meta,
                       const std::vector<NormReport>& rows);

// Static chart: observed max/min ratio per p against the equivalence
// bound curves 2^{+-|1/p - 1/2|}.
void write_ratio_svg(std::ostream& os, const ReportMeta& meta,
                     const std::vector<NormReport>& rows);

}  // namespace jlp

#endif  // JLP_REPORT_IO_HPP
