// Command-line front end for the regular-map classification library.
//
// Exit codes:
//   0  success (and, with --verify, results match the expected data)
//   1  verification mismatch (classify --verify, census-check)
//   2  bad input: unknown flags, malformed points, unreadable/unparsable files
//   3  resource limit hit (coset enumeration exceeded --limit)
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "regmap/classify.hpp"
#include "regmap/coset_enum.hpp"
#include "regmap/families.hpp"
#include "regmap/numtheory.hpp"
#include "regmap/report.hpp"

namespace {

using namespace regmap;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapacity = 3;

std::int64_t default_limit() {
  if (const char* env = std::getenv("REGMAP_COSET_LIMIT")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw CLI::ValidationError("REGMAP_COSET_LIMIT must be a positive integer");
  }
  return kDefaultCosetLimit;
}

std::array<int, 3> parse_triple(const std::string& s) {
  std::array<int, 3> out{};
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> out[0] >> c1 >> out[1] >> c2 >> out[2]) || c1 != ',' || c2 != ',' ||
      !(is >> std::ws).eof())
    throw CLI::ValidationError("point must be three comma-separated integers, e.g. 1,3,4");
  return out;
}

ReportFormat parse_format(const std::string& s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "structured") return ReportFormat::Structured;
  throw CLI::ValidationError("--format must be 'text' or 'structured'");
}

std::string admissible_line(const AdmissibleReport& r) {
  std::ostringstream os;
  os << "family " << r.family << " admissible ";
  if (r.admissible.empty()) {
    os << "none order -";
    return os.str();
  }
  for (size_t i = 0; i < r.admissible.size(); ++i)
    os << (i ? " " : "") << format_point(r.admissible[i]);
  os << " order ";
  bool first = true;
  for (const PointResult& pr : r.scanned)
    if (pr.admissible) {
      if (!first) os << ',';
      os << pr.order;
      first = false;
    }
  return os.str();
}

/// Parses the expected-classification file into family -> canonical line.
std::map<int, std::string> load_expected(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read expected data file: " + path);
  std::map<int, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
    if (line.empty()) continue;
    int fam = 0;
    if (std::sscanf(line.c_str(), "family %d admissible", &fam) != 1)
      throw CLI::ValidationError("malformed expected line: " + line);
    out[fam] = line;
  }
  return out;
}

int run_order(const std::string& file, int family, const std::string& point_str,
              std::int64_t limit) {
  Presentation pres;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot read " << file << '\n';
      return kExitBadInput;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    pres = parse_presentation(buf.str());
  } else {
    FamilySpec spec = family_spec(family);
    pres = family_presentation(spec, parse_triple(point_str));
  }
  EnumOptions opts;
  opts.max_cosets = limit;
  CosetTable tab = enumerate(pres, opts);
  std::cout << "order " << tab.live_count() << '\n';
  return kExitOk;
}

int run_classify(std::vector<int> families, ScanMode mode, std::int64_t limit, int workers,
                 ReportFormat fmt, bool verify, const std::string& expected_path,
                 const std::string& out_path) {
  if (families.empty()) families = {1, 2, 3, 4, 5, 6, 7};
  auto t0 = std::chrono::steady_clock::now();
  Classification c;
  for (int i : families) {
    FamilySpec spec = family_spec(i);
    c.reports.push_back(scan_family(spec, mode, limit, workers));
    for (const ProjPoint& pt : c.reports.back().admissible)
      c.maps.push_back(map_info(spec, pt, limit));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string body = format_classification(c, fmt);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitBadInput;
    }
    out << body;
  }
  // Run metadata goes to stderr only: the body stays byte-stable across
  // machines and worker counts.
  std::cerr << "# classify: " << c.reports.size() << " families, " << c.maps.size()
            << " maps, workers=" << workers << ", " << secs << "s\n";
  if (!verify) return kExitOk;
  std::map<int, std::string> expected = load_expected(expected_path);
  bool ok = true;
  for (const AdmissibleReport& r : c.reports) {
    std::string got = admissible_line(r);
    auto it = expected.find(r.family);
    if (it == expected.end()) {
      std::cerr << "verify: no expected line for family " << r.family << '\n';
      ok = false;
    } else if (it->second != got) {
      std::cerr << "verify: family " << r.family << " mismatch\n  expected: " << it->second
                << "\n  got:      " << got << '\n';
      ok = false;
    }
  }
  std::cerr << (ok ? "verify: ok\n" : "verify: MISMATCH\n");
  return ok ? kExitOk : kExitMismatch;
}

int run_map_info(int family, const std::string& point_str, std::int64_t limit,
                 ReportFormat fmt) {
  FamilySpec spec = family_spec(family);
  std::array<int, 3> t = parse_triple(point_str);
  AdmissibleMapInfo info = map_info(spec, ProjPoint::make(spec.p, t[0], t[1], t[2]), limit);
  Classification c;
  c.maps.push_back(info);
  if (fmt == ReportFormat::Structured)
    std::cout << format_classification(c, fmt);
  else
    std::cout << "map " << info.family << format_point(info.point) << ": "
              << format_map_descriptor(info.map) << "\n  normal subgroup <<z>> of order "
              << info.normal_order << "; quotient map: " << format_map_descriptor(info.quotient)
              << '\n';
  return kExitOk;
}

int run_census_check(int family, const std::string& point_str, std::uint64_t expected_order,
                     std::int64_t limit) {
  FamilySpec spec = family_spec(family);
  std::array<int, 3> t = parse_triple(point_str);
  std::uint64_t order = point_group_order(spec, ProjPoint::make(spec.p, t[0], t[1], t[2]), limit);
  std::cout << "order " << order << " expected " << expected_order
            << (order == expected_order ? " match" : " MISMATCH") << '\n';
  return order == expected_order ? kExitOk : kExitMismatch;
}

int run_export(int family, const std::string& point_str, const std::string& out_path) {
  FamilySpec spec = family_spec(family);
  Presentation pres = family_presentation(spec, parse_triple(point_str));
  std::string text = render_presentation(pres);
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return kExitBadInput;
  }
  out << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular-map classification toolkit"};
  app.require_subcommand(1);

  std::string format_str = "text";
  std::string mode_str = "full";
  std::string point_str;
  std::string file_path;
  std::string out_path;
  std::string expected_path = REGMAP_EXPECTED_FILE;
  std::vector<int> families;
  int family = 0;
  int workers = 1;
  int pmin = 5, pmax = 97;
  std::int64_t limit = 0;
  std::uint64_t expected_order = 0;
  bool verify = false;

  auto* order_cmd = app.add_subcommand("order", "Group order by coset enumeration");
  order_cmd->add_option("--file", file_path, "presentation file to enumerate");
  order_cmd->add_option("--family", family, "family index 1..7")->check(CLI::Range(1, 7));
  order_cmd->add_option("--point", point_str, "exponent triple a,b,c");
  order_cmd->add_option("--limit", limit, "coset table capacity");

  auto* classify_cmd = app.add_subcommand("classify", "Scan families for admissible points");
  classify_cmd->add_option("--family", families, "family indices (default: all)")
      ->check(CLI::Range(1, 7));
  classify_cmd->add_option("--mode", mode_str, "full|eigen")
      ->check(CLI::IsMember({"full", "eigen"}));
  classify_cmd->add_option("--limit", limit, "coset table capacity");
  classify_cmd->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--format", format_str, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  classify_cmd->add_flag("--verify", verify, "compare against the expected data file");
  classify_cmd->add_option("--expected", expected_path, "expected data file for --verify");
  classify_cmd->add_option("--out", out_path, "write the report to a file");

  auto* table_cmd = app.add_subcommand("table1", "Types {x,y} with integral k(x,y)");
  table_cmd->add_option("--format", format_str, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* lemmas_cmd = app.add_subcommand("lemmas", "Arithmetic lemma survey over primes");
  lemmas_cmd->add_option("--pmin", pmin, "smallest prime")->check(CLI::PositiveNumber);
  lemmas_cmd->add_option("--pmax", pmax, "largest prime")->check(CLI::PositiveNumber);
  lemmas_cmd->add_option("--format", format_str, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* map_cmd = app.add_subcommand("map-info", "Invariants of the map at a family point");
  map_cmd->add_option("--family", family, "family index 1..7")
      ->required()
      ->check(CLI::Range(1, 7));
  map_cmd->add_option("--point", point_str, "point a,b,c")->required();
  map_cmd->add_option("--limit", limit, "coset table capacity");
  map_cmd->add_option("--format", format_str, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* census_cmd =
      app.add_subcommand("census-check", "Check one point's group order against a claim");
  census_cmd->add_option("--family", family, "family index 1..7")
      ->required()
      ->check(CLI::Range(1, 7));
  census_cmd->add_option("--point", point_str, "point a,b,c")->required();
  census_cmd->add_option("--expected-order", expected_order, "claimed group order")->required();
  census_cmd->add_option("--limit", limit, "coset table capacity");

  auto* export_cmd =
      app.add_subcommand("export-presentation", "Write a family presentation as text");
  export_cmd->add_option("--family", family, "family index 1..7")
      ->required()
      ->check(CLI::Range(1, 7));
  export_cmd->add_option("--point", point_str, "point a,b,c")->required();
  export_cmd->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
    if (limit == 0) limit = default_limit();
    if (order_cmd->parsed()) {
      if (file_path.empty() && (family == 0 || point_str.empty()))
        throw CLI::ValidationError("order needs --file or both --family and --point");
      return run_order(file_path, family, point_str, limit);
    }
    if (classify_cmd->parsed())
      return run_classify(families, mode_str == "full" ? ScanMode::Full : ScanMode::EigenFiltered,
                          limit, workers, parse_format(format_str), verify, expected_path,
                          out_path);
    if (table_cmd->parsed()) {
      std::cout << format_table1(parse_format(format_str));
      return kExitOk;
    }
    if (lemmas_cmd->parsed()) {
      std::cout << format_lemmas(pmin, pmax, parse_format(format_str));
      return kExitOk;
    }
    if (map_cmd->parsed()) return run_map_info(family, point_str, limit, parse_format(format_str));
    if (census_cmd->parsed()) return run_census_check(family, point_str, expected_order, limit);
    if (export_cmd->parsed()) return run_export(family, point_str, out_path);
    return kExitBadInput;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  } catch (const CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ParseError& e) {
    std::cerr << "error: presentation parse failed at line " << e.line << ", column " << e.col
              << ": " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}
