#include "jlp/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace jlp {
namespace {

constexpr const char* kDistributionNote =
    "iid standard Gaussian per free real coefficient; complex = re + i im";

std::string join_p(const std::vector<double>& p_list, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < p_list.size(); ++k) {
    if (k) out += sep;
    out += format_g17(p_list[k]);
  }
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_report_csv(std::ostream& os, const ReportMeta& meta,
                      const std::vector<NormReport>& rows) {
  os << "# jlp norm-comparison report\n";
  os << "# algebra=" << meta.algebra << " p=" << join_p(meta.p_list, ";")
     << " n=" << meta.count << " seed=" << meta.seed << "\n";
  os << "# distribution=" << kDistributionNote << "\n";
  os << "# witness rows carry index=-1\n";
  os << "algebra,p,index,spectral,interpolation,ratio,slack\n";
  for (const NormReport& r : rows) {
    os << r.algebra << ',' << format_g17(r.p) << ',' << r.index << ','
       << format_g17(r.spectral) << ','
       << (r.interpolation ? format_g17(*r.interpolation) : std::string()) << ','
       << format_g17(r.ratio) << ',' << format_g17(r.slack) << '\n';
  }
}

void write_report_json(std::ostream& os, const ReportMeta& meta,
                       const std::vector<NormReport>& rows) {
  os << "{\n  \"meta\": {\"algebra\": \"" << json_escape(meta.algebra)
     << "\", \"p\": [" << join_p(meta.p_list, ", ") << "], \"n\": " << meta.count
     << ", \"seed\": " << meta.seed << ", \"distribution\": \""
     << kDistributionNote << "\"},\n  \"rows\": [\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const NormReport& r = rows[k];
    os << "    {\"algebra\": \"" << json_escape(r.algebra)
       << "\", \"p\": " << format_g17(r.p) << ", \"index\": " << r.index
       << ", \"spectral\": " << format_g17(r.spectral) << ", \"interpolation\": "
       << (r.interpolation ? format_g17(*r.interpolation) : std::string("null"))
       << ", \"ratio\": " << format_g17(r.ratio)
       << ", \"slack\": " << format_g17(r.slack) << '}'
       << (k + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "  ]\n}\n";
}

void write_ratio_svg(std::ostream& os, const ReportMeta& meta,
                     const std::vector<NormReport>& rows) {
  std::map<double, std::pair<double, double>> span;  // p -> (min, max) ratio
  for (const NormReport& r : rows) {
    auto it = span.find(r.p);
    if (it == span.end())
      span.emplace(r.p, std::make_pair(r.ratio, r.ratio));
    else {
      it->second.first = std::min(it->second.first, r.ratio);
      it->second.second = std::max(it->second.second, r.ratio);
    }
  }
  if (span.empty()) return;

  const double pmin = span.begin()->first;
  const double pmax = std::max(span.rbegin()->first, pmin + 1e-9);
  double ymin = 1e300, ymax = -1e300;
  for (const auto& [p, mm] : span) {
    ymin = std::min({ymin, mm.first, 1.0 / equivalence_bound(p)});
    ymax = std::max({ymax, mm.second, equivalence_bound(p)});
  }
  ymin = std::min(ymin, 1.0) - 0.03;
  ymax = std::max(ymax, 1.0) + 0.03;

  const double w = 640, h = 420, ml = 60, mr = 20, mt = 30, mb = 45;
  const auto sx = [&](double p) { return ml + (p - pmin) / (pmax - pmin) * (w - ml - mr); };
  const auto sy = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };
  const auto poly = [&](auto f, const char* color, const char* dash) {
    os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
       << (dash[0] ? std::string(" stroke-dasharray=\"") + dash + "\"" : "")
       << " points=\"";
    for (int k = 0; k <= 120; ++k) {
      const double p = pmin + (pmax - pmin) * k / 120.0;
      os << sx(p) << ',' << sy(f(p)) << ' ';
    }
    os << "\"/>\n";
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
     << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <text x=\"" << w / 2 << "\" y=\"18\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"13\">spectral / interpolation ratio vs p ("
     << meta.algebra << ", n=" << meta.count << ", seed=" << meta.seed << ")</text>\n";

  // axes
  os << "  <line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr
     << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
     << h - mb << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double p = pmin + (pmax - pmin) * k / 4.0;
    const double y = ymin + (ymax - ymin) * k / 4.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", p);
    os << "  <text x=\"" << sx(p) << "\" y=\"" << h - mb + 16
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << buf << "</text>\n";
    std::snprintf(buf, sizeof buf, "%.3g", y);
    os << "  <text x=\"" << ml - 6 << "\" y=\"" << sy(y) + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << buf
       << "</text>\n";
  }
  os << "  <text x=\"" << w / 2 << "\" y=\"" << h - 10
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">p</text>\n";

  poly([](double p) { return equivalence_bound(p); }, "#888888", "6,4");
  poly([](double p) { return 1.0 / equivalence_bound(p); }, "#888888", "6,4");

  const auto series = [&](bool use_max, const char* color) {
    os << "  <polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"2\" points=\"";
    for (const auto& [p, mm] : span) os << sx(p) << ',' << sy(use_max ? mm.second : mm.first) << ' ';
    os << "\"/>\n";
    for (const auto& [p, mm] : span)
      os << "  <circle cx=\"" << sx(p) << "\" cy=\"" << sy(use_max ? mm.second : mm.first)
         << "\" r=\"3\" fill=\"" << color << "\"/>\n";
  };
  series(true, "#c0392b");
  series(false, "#2471a3");

  os << "  <text x=\"" << w - mr - 4 << "\" y=\"" << mt + 14
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
        "fill=\"#c0392b\">max ratio</text>\n";
  os << "  <text x=\"" << w - mr - 4 << "\" y=\"" << mt + 28
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
        "fill=\"#2471a3\">min ratio</text>\n";
  os << "  <text x=\"" << w - mr - 4 << "\" y=\"" << mt + 42
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
        "fill=\"#888888\">bounds 2^(+-|1/p-1/2|)</text>\n";
  os << "</svg>\n";
}

}  // namespace jlp
