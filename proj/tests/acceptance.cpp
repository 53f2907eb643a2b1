// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each check recomputes its expected values from first
// principles where possible (order formulas, Euler characteristic) instead of
// trusting the classification code under test.
#include <array>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "regmap/algebraic_map.hpp"
#include "regmap/classify.hpp"
#include "regmap/coset_enum.hpp"
#include "regmap/families.hpp"
#include "regmap/numtheory.hpp"
#include "regmap/report.hpp"

using namespace regmap;

namespace {

int failures = 0;

double now_seconds() {
  static const auto start = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Timer {
  double t0 = now_seconds();
  double elapsed() const { return now_seconds() - t0; }
};

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
            << std::endl;
  if (!pass) ++failures;
}

std::string points_str(const std::vector<ProjPoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += format_point(p);
  return s.empty() ? "{}" : s;
}

/// chi from the flag count and type alone: V + F - E with V = |G|/(2y),
/// F = |G|/(2x), E = |G|/4.
std::int64_t chi_formula(std::uint64_t order, std::uint64_t x, std::uint64_t y) {
  return static_cast<std::int64_t>(order / (2 * y)) + static_cast<std::int64_t>(order / (2 * x)) -
         static_cast<std::int64_t>(order / 4);
}

void criterion1() {
  struct Row {
    ReducedName name;
    std::int64_t order;
    const char* label;
  };
  const Row rows[] = {{ReducedName::PGL25, 120, "PGL(2,5)"},
                      {ReducedName::PGL27_pre1, 336, "pre.1"},
                      {ReducedName::PGL27_pre2, 336, "pre.2"},
                      {ReducedName::PSL213, 1092, "PSL(2,13)"}};
  bool pass = true;
  std::ostringstream detail;
  detail << "reduced presentation orders:";
  for (const Row& r : rows) {
    Timer t;
    CosetTable tab = enumerate(reduced_presentation(r.name));
    double secs = t.elapsed();
    bool ok = tab.live_count() == r.order && secs < 1.0;
    pass = pass && ok;
    detail << ' ' << r.label << '=' << tab.live_count() << " (" << secs << "s)";
  }
  report(1, pass, detail.str());
}

void criterion2() {
  const std::vector<TypePair> expected = {
      {3, 7, 21}, {3, 8, 12}, {3, 9, 9}, {3, 12, 6}, {3, 15, 5},
      {3, 24, 4}, {4, 5, 10}, {4, 6, 6}, {4, 8, 4},  {4, 12, 3},
      {5, 5, 5},  {5, 20, 2}, {6, 6, 3}, {6, 12, 2}, {8, 8, 2}};
  std::vector<TypePair> got = table1();
  bool pass = got == expected;
  report(2, pass,
         "type table has " + std::to_string(got.size()) + " rows, exact match: " +
             (pass ? "yes" : "no"));
}

std::vector<AdmissibleReport> g_full_reports;  // reused by criterion 4

void criterion3() {
  struct Expected {
    int family;
    std::vector<ProjPoint> admissible;
  };
  const std::vector<Expected> expected = {
      {1, {ProjPoint::make(5, 1, 3, 4)}}, {2, {}}, {3, {}},
      {4, {ProjPoint::make(7, 1, 1, 4)}}, {5, {}}, {6, {ProjPoint::make(7, 1, 1, 3)}},
      {7, {ProjPoint::make(13, 1, 7, 6)}}};
  bool pass = true;
  std::ostringstream detail;
  detail << "full scans:";
  double t16 = 0, t7 = 0;
  for (const Expected& e : expected) {
    FamilySpec spec = family_spec(e.family);
    Timer t;
    AdmissibleReport r = scan_family(spec, ScanMode::Full);
    double secs = t.elapsed();
    (e.family == 7 ? t7 : t16) += secs;
    g_full_reports.push_back(r);
    bool ok = r.admissible == e.admissible;
    if (ok && !e.admissible.empty()) {
      // The order oracle 4xy p^4 / (xy - 2x - 2y), recomputed here.
      std::uint64_t p4 = 1;
      for (int k = 0; k < 4; ++k) p4 *= static_cast<std::uint64_t>(spec.p);
      std::uint64_t oracle = 4ULL * spec.x * spec.y * p4 /
                             (static_cast<std::uint64_t>(spec.x) * spec.y - 2 * spec.x - 2 * spec.y);
      for (const PointResult& pr : r.scanned)
        if (pr.admissible) ok = ok && pr.order == oracle && pr.order == admissible_order(spec);
    }
    pass = pass && ok;
    detail << " f" << e.family << "=" << points_str(r.admissible);
  }
  bool budget = t16 < 300.0 && t7 < 1800.0;
  pass = pass && budget;
  detail << "; families 1-6 " << t16 << "s (<300), family 7 " << t7 << "s (<1800)";
  Timer te;
  for (int i = 1; i <= 7; ++i) {
    AdmissibleReport r = scan_family(family_spec(i), ScanMode::EigenFiltered);
    pass = pass && r.admissible == expected[static_cast<size_t>(i - 1)].admissible;
  }
  double eigen_secs = te.elapsed();
  pass = pass && eigen_secs < 120.0;
  detail << "; eigen mode " << eigen_secs << "s (<120), same sets";
  report(3, pass, detail.str());
}

void criterion4() {
  bool pass = !g_full_reports.empty();
  std::ostringstream detail;
  for (const AdmissibleReport& r : g_full_reports) {
    for (const ProjPoint& a : r.admissible) {
      bool in_eig = false;
      for (const ProjPoint& v : r.eigenspace) in_eig = in_eig || v == a;
      pass = pass && in_eig;
    }
    if (r.family <= 2) {
      // The displayed eigenvector formula disagrees with the printed relator
      // for these families; the report must say so.
      pass = pass && !r.matrix_matches_displayed_formula &&
             r.note.find("displayed formula") != std::string::npos;
    }
    if (r.family == 1)
      pass = pass && r.note.find("negatives of the published") != std::string::npos;
  }
  detail << "every admissible point lies in the 1-eigenspace of its M_i; the family-1/2 "
            "relator-vs-formula disagreement and the family-1 module sign correction are "
            "both surfaced in the report notes";
  report(4, pass, detail.str());
}

void criterion5() {
  struct Expected {
    int family;
    std::array<int, 3> point;
    std::int64_t chi;
    std::uint64_t n_order, q_order;
    std::uint64_t qx, qy;
  };
  const std::vector<Expected> expected = {
      {1, {1, 3, 4}, -625, 125, 120, 4, 6},
      {4, {1, 1, 4}, -2401, 343, 336, 3, 8},
      {6, {1, 1, 3}, -2401, 343, 336, 3, 8},
      {7, {1, 7, 6}, -28561, 2197, 1092, 3, 7}};
  bool pass = true;
  std::ostringstream detail;
  detail << "maps:";
  for (const Expected& e : expected) {
    FamilySpec spec = family_spec(e.family);
    Timer t;
    AdmissibleMapInfo info =
        map_info(spec, ProjPoint::make(spec.p, e.point[0], e.point[1], e.point[2]));
    bool ok = info.map.chi == e.chi &&
              info.map.chi == chi_formula(info.map.group_order, info.map.x, info.map.y) &&
              !info.map.orientable && info.normal_order == e.n_order &&
              info.map.x == static_cast<std::uint64_t>(spec.x) &&
              info.map.y == static_cast<std::uint64_t>(spec.y) &&
              info.quotient.group_order == e.q_order && info.quotient.x == e.qx &&
              info.quotient.y == e.qy;
    pass = pass && ok;
    detail << " f" << e.family << "(chi=" << info.map.chi << ",|N|=" << info.normal_order
           << ",Q=" << info.quotient.group_order << ",{" << info.quotient.x << ","
           << info.quotient.y << "}," << t.elapsed() << "s)";
  }
  detail << "; all non-orientable, chi matches V+F-E recomputed from |G| and the type";
  report(5, pass, detail.str());
}

void criterion6() {
  FamilySpec spec = family_spec(1);
  AlgebraicMap base = family_map(spec, {1, 3, 4});
  bool pass = true;
  std::ostringstream detail;
  detail << "scalar multiples of (1,3,4):";
  for (int j = 2; j <= 4; ++j) {
    AlgebraicMap m = family_map(spec, {j % 5, 3 * j % 5, 4 * j % 5});
    bool iso = maps_equal_up_to_iso(base, m) || maps_equal_up_to_iso(base, dual(m));
    pass = pass && iso && group_order(m.group) == 15000;
    detail << " j=" << j << (iso ? " iso" : " NOT-iso");
  }
  report(6, pass, detail.str() + " (up to duality, order 15000)");
}

void criterion7() {
  Timer t;
  bool pass = true;
  std::ostringstream detail;
  auto primes = primes_in_range(5, 97);
  for (auto p : primes)
    for (int j = 1; j <= 3; ++j) pass = pass && !lemma_int(p, j, 4 - j).any_integral;
  // Diophantine solution sets as actually computed. The published lemma lists
  // only the p = 5 and p = 7 cases; p = 11 also has the genuine solution
  // (d,k) = (2,2), {m,n} = {3,8} (11*24 - 6 - 16 = 242 = 2*11^2), a
  // counterexample to the published "only if" that the suite asserts rather
  // than hides. p in {5, 7, 13} is unaffected.
  for (auto p : primes) {
    LemmaNoiResult noi = lemma_noi(p);
    auto sol = [&](int d, int k) {
      return noi.solutions[static_cast<size_t>(d - 1)][static_cast<size_t>(k - 1)];
    };
    using V = std::vector<MnPair>;
    V e11, e12, e21, e22;
    if (p == 5) { e11 = {{2, 3}}; e12 = {{1, 9}}; }
    if (p == 7) e22 = {{1, 20}};
    if (p == 11) e22 = {{3, 8}};
    pass = pass && sol(1, 1) == e11 && sol(1, 2) == e12 && sol(2, 1) == e21 &&
           sol(2, 2) == e22 && noi.odd_solutions.empty();
  }
  for (auto p : primes) {
    SolvableExclusions ex = solvable_exclusions(p);
    pass = pass && ex.mm_excluded && ex.mjk_excluded && ex.odd_coprime_pairs.empty();
  }
  double secs = t.elapsed();
  pass = pass && secs < 5.0;
  detail << "lemma suites over primes 5..97 in " << secs
         << "s (<5); non-integrality and exclusions hold everywhere; Diophantine sets match "
            "computed truth, including the extra p=11 solution {3,8} (d=2,k=2) absent from "
            "the source's case list";
  report(7, pass, detail.str());
}

void criterion8() {
  bool pass = true;
  std::ostringstream detail;
  detail << "solvable maps:";
  for (auto [j, k] : std::vector<std::pair<int, int>>{{3, 5}, {3, 7}, {5, 7}}) {
    MapDescriptor d = describe(build_Mjk(j, k));
    bool ok = d.chi == j + k - j * k && d.group_order == 4ULL * j * k;
    pass = pass && ok;
    detail << " M(" << j << ',' << k << ")chi=" << d.chi;
  }
  for (int m : {9, 15, 21}) {
    MapDescriptor d = describe(build_Mm(m));
    bool ok = d.chi == 4 - m && d.group_order == 8ULL * m;
    pass = pass && ok;
    detail << " M(" << m << ")chi=" << d.chi;
  }
  // Dual invariance on randomized small maps: chi and orientability are
  // dual-invariant, the type swaps.
  std::mt19937 rng(20240817);
  const int odd[] = {3, 5, 7, 9, 11, 13, 15};
  int checked = 0;
  auto gcd = [](int a, int b) { while (b) { int t = a % b; a = b; b = t; } return a; };
  while (checked < 100) {
    AlgebraicMap m;
    if (rng() % 2 == 0) {
      int j = odd[rng() % 7], k = odd[rng() % 7];
      if (j >= k || gcd(j, k) != 1) continue;
      m = build_Mjk(j, k);
    } else {
      m = build_Mm(static_cast<int>(3 + 6 * (1 + rng() % 5)));
    }
    MapDescriptor d1 = describe(m), d2 = describe(dual(m));
    pass = pass && d1.chi == d2.chi && d1.orientable == d2.orientable && d1.x == d2.y &&
           d1.y == d2.x && d1.group_order == d2.group_order;
    ++checked;
  }
  detail << "; 100 randomized dual/chi-invariance checks";
  report(8, pass, detail.str());
}

void criterion9() {
  auto run = [&](int workers) {
    Classification c;
    for (int i : {1, 2}) {
      FamilySpec spec = family_spec(i);
      c.reports.push_back(scan_family(spec, ScanMode::Full, kDefaultCosetLimit, workers));
      for (const ProjPoint& pt : c.reports.back().admissible)
        c.maps.push_back(map_info(spec, pt));
    }
    return format_classification(c, ReportFormat::Structured);
  };
  std::string r1 = run(1);
  std::string r3 = run(3);
  bool pass = r1 == r3 && !r1.empty();
  report(9, pass,
         "structured classify reports with 1 and 3 workers are byte-identical (" +
             std::to_string(r1.size()) + " bytes)");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (failures == 0 ? "ACCEPTANCE: all 9 criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
