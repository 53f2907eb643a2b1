#include "regmap/report.hpp"

#include <sstream>

namespace regmap {

namespace {

const char* mode_name(ScanMode m) { return m == ScanMode::Full ? "full" : "eigen"; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void append_points(std::ostringstream& os, const std::vector<ProjPoint>& pts) {
  os << '[';
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ", ";
    os << quoted(format_point(pts[i]));
  }
  os << ']';
}

void map_fields(std::ostringstream& os, const AdmissibleMapInfo& m) {
  os << "\"family\": " << m.family << ", \"point\": " << quoted(format_point(m.point))
     << ", \"group_order\": " << m.map.group_order << ", \"type\": \"{" << m.map.x << ","
     << m.map.y << "}\", \"chi\": " << m.map.chi
     << ", \"orientable\": " << (m.map.orientable ? "true" : "false")
     << ", \"genus\": " << m.map.genus << ", \"normal_order\": " << m.normal_order
     << ", \"quotient_order\": " << m.quotient.group_order << ", \"quotient_type\": \"{"
     << m.quotient.x << "," << m.quotient.y << "}\", \"quotient_chi\": " << m.quotient.chi;
}

}  // namespace

std::string format_point(const ProjPoint& pt) {
  std::ostringstream os;
  os << '(' << pt.coords[0] << ',' << pt.coords[1] << ',' << pt.coords[2] << ')';
  return os.str();
}

std::string format_map_descriptor(const MapDescriptor& d) {
  std::ostringstream os;
  os << "order " << d.group_order << ", type {" << d.x << "," << d.y << "}, chi " << d.chi
     << ", " << (d.orientable ? "orientable" : "non-orientable") << ", genus " << d.genus;
  return os.str();
}

std::string format_classification(const Classification& c, ReportFormat fmt) {
  std::ostringstream os;
  if (fmt == ReportFormat::Structured) {
    os << "{\n  \"families\": [\n";
    for (size_t i = 0; i < c.reports.size(); ++i) {
      const AdmissibleReport& r = c.reports[i];
      os << "    {\"family\": " << r.family << ", \"p\": " << r.p << ", \"mode\": \""
         << mode_name(r.mode) << "\", \"target_order\": " << r.target_order
         << ",\n     \"matrix_matches_displayed_formula\": "
         << (r.matrix_matches_displayed_formula ? "true" : "false") << ",\n     \"note\": "
         << quoted(r.note) << ",\n     \"eigenspace\": ";
      append_points(os, r.eigenspace);
      os << ",\n     \"points\": [\n";
      for (size_t k = 0; k < r.scanned.size(); ++k) {
        const PointResult& pr = r.scanned[k];
        os << "       {\"point\": " << quoted(format_point(pr.point)) << ", \"order\": "
           << pr.order << ", \"admissible\": " << (pr.admissible ? "true" : "false")
           << ", \"capacity_exceeded\": " << (pr.capacity_exceeded ? "true" : "false") << '}'
           << (k + 1 < r.scanned.size() ? "," : "") << '\n';
      }
      os << "     ],\n     \"admissible\": ";
      append_points(os, r.admissible);
      os << '}' << (i + 1 < c.reports.size() ? "," : "") << '\n';
    }
    os << "  ],\n  \"maps\": [\n";
    for (size_t i = 0; i < c.maps.size(); ++i) {
      os << "    {";
      map_fields(os, c.maps[i]);
      os << '}' << (i + 1 < c.maps.size() ? "," : "") << '\n';
    }
    os << "  ]\n}\n";
    return os.str();
  }
  for (const AdmissibleReport& r : c.reports) {
    os << "family " << r.family << " (p = " << r.p << ", " << mode_name(r.mode)
       << " scan, target order " << r.target_order << ")\n";
    os << "  eigenspace of M_" << r.family << ": ";
    if (r.eigenspace.empty()) os << "empty";
    for (size_t i = 0; i < r.eigenspace.size(); ++i)
      os << (i ? " " : "") << format_point(r.eigenspace[i]);
    os << "\n  scanned " << r.scanned.size() << " points; admissible: ";
    if (r.admissible.empty()) os << "none";
    for (size_t i = 0; i < r.admissible.size(); ++i)
      os << (i ? " " : "") << format_point(r.admissible[i]);
    os << '\n';
    if (!r.note.empty()) os << "  note: " << r.note << '\n';
  }
  for (const AdmissibleMapInfo& m : c.maps) {
    os << "map " << m.family << format_point(m.point) << ": " << format_map_descriptor(m.map)
       << "\n  normal subgroup <<z>> of order " << m.normal_order
       << "; quotient map: " << format_map_descriptor(m.quotient) << '\n';
  }
  return os.str();
}

std::string format_table1(ReportFormat fmt) {
  std::ostringstream os;
  auto rows = table1();
  if (fmt == ReportFormat::Structured) {
    os << "{\n  \"table1\": [\n";
    for (size_t i = 0; i < rows.size(); ++i)
      os << "    {\"x\": " << rows[i].x << ", \"y\": " << rows[i].y << ", \"k\": " << rows[i].k
         << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
    os << "  ]\n}\n";
    return os.str();
  }
  os << "types {x,y} with integral k(x,y) = xy/(xy-2x-2y):\n";
  for (const auto& r : rows)
    os << "  {" << r.x << "," << r.y << "} -> " << r.k << '\n';
  return os.str();
}

std::string format_lemmas(int pmin, int pmax, ReportFormat fmt) {
  std::ostringstream os;
  auto primes = primes_in_range(pmin, pmax);
  auto pair_list = [&](const std::vector<MnPair>& v) {
    std::ostringstream ps;
    ps << '[';
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) ps << ", ";
      ps << "{" << v[i].m << "," << v[i].n << "}";
    }
    ps << ']';
    return ps.str();
  };
  if (fmt == ReportFormat::Structured) os << "{\n  \"lemmas\": [\n";
  for (size_t idx = 0; idx < primes.size(); ++idx) {
    auto p = primes[idx];
    bool non_integral = true;
    for (int j = 1; j <= 3; ++j) non_integral = non_integral && !lemma_int(p, j, 4 - j).any_integral;
    LemmaNoiResult noi = lemma_noi(p);
    SolvableExclusions ex = solvable_exclusions(p);
    if (fmt == ReportFormat::Structured) {
      os << "    {\"p\": " << p << ", \"four_fractions_non_integral\": "
         << (non_integral ? "true" : "false");
      for (int d = 1; d <= 2; ++d)
        for (int k = 1; k <= 2; ++k)
          os << ", \"solutions_d" << d << "_k" << k << "\": \""
             << pair_list(noi.solutions[static_cast<size_t>(d - 1)][static_cast<size_t>(k - 1)])
             << '"';
      os << ", \"odd_solutions\": \"" << pair_list(noi.odd_solutions) << '"'
         << ", \"solvable_excluded\": "
         << ((ex.mm_excluded && ex.mjk_excluded) ? "true" : "false") << '}'
         << (idx + 1 < primes.size() ? "," : "") << '\n';
    } else {
      os << "p = " << p << ": four fractions "
         << (non_integral ? "all non-integral" : "INTEGRAL VALUE FOUND");
      os << "; pmn-km-kn=dp^2 solutions:";
      bool any = false;
      for (int d = 1; d <= 2; ++d)
        for (int k = 1; k <= 2; ++k) {
          const auto& v = noi.solutions[static_cast<size_t>(d - 1)][static_cast<size_t>(k - 1)];
          if (v.empty()) continue;
          any = true;
          os << " (d=" << d << ",k=" << k << ")->" << pair_list(v);
        }
      if (!any) os << " none";
      os << "; odd pmn-m-n=p^3: " << (noi.odd_solutions.empty() ? "none" : pair_list(noi.odd_solutions));
      os << "; solvable families excluded: " << ((ex.mm_excluded && ex.mjk_excluded) ? "yes" : "NO")
         << '\n';
    }
  }
  if (fmt == ReportFormat::Structured) os << "  ]\n}\n";
  return os.str();
}

}  // namespace regmap
