#include "regmap/classify.hpp"

#include <algorithm>
#include <chrono>
#include <utility>
#include <vector>

#include "regmap/coset_enum.hpp"
#include "regmap/perm_group.hpp"

namespace regmap {

namespace {

const Word kW = Word::generator(0);
const Word kS = Word::generator(1);
const Word kZ = Word::generator(2);

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int mod(int v, int p) { return ((v % p) + p) % p; }

/// The base element of the displayed eigenvector formula M_i = Y_i X_i^-2
/// (i <= 4), (Y_i X_i^-2)^2 X_i^-2 (i = 5,6), (Y_i X_i^-2)^4 Y_i X_i^3
/// (i = 7); in word form s w^-2 and so on. For i >= 3 this coincides with
/// the printed relator base; for i = 1,2 it does not.
Word displayed_formula_base(int i) {
  Word sw2 = word_concat(kS, word_pow(kW, -2));
  if (i <= 4) return sw2;
  if (i <= 6) return word_concat(word_pow(sw2, 2), word_pow(kW, -2));
  return word_concat(word_concat(word_pow(sw2, 4), kS), word_pow(kW, 3));
}

PointResult scan_one(const FamilySpec& spec, const ProjPoint& point, std::uint64_t target,
                     std::int64_t max_cosets) {
  PointResult r;
  r.point = point;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.order = point_group_order(spec, point, max_cosets);
    r.admissible = r.order == target;
  } catch (const CapacityExceeded&) {
    r.capacity_exceeded = true;
  }
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace

Mat3 build_Xi(const FamilySpec& spec) {
  // w_action rows are images of basis elements; the column-convention matrix
  // is their transpose.
  Mat3 x;
  x.p = spec.p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      x.at(i, j) = mod(spec.w_action[static_cast<size_t>(j)][static_cast<size_t>(i)], spec.p);
  return x;
}

Mat3 build_Yi(const FamilySpec& spec) {
  Mat3 y;
  y.p = spec.p;
  if (spec.has_s_action) {
    // Conjugation by s sends B_j = z^{s^{2j}} to z^{s^{2j+1}}, whose
    // exponents over B are the s_action rows.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        y.at(i, j) = mod(spec.s_action[static_cast<size_t>(j)][static_cast<size_t>(i)], spec.p);
  } else {
    // Basis (z, z^s, z^{s^-1}) with s^3 = 1: conjugation by s is the 3-cycle
    // B0 -> B1 -> B2 -> B0.
    y.at(1, 0) = y.at(2, 1) = y.at(0, 2) = 1;
  }
  return y;
}

Mat3 action_matrix(const FamilySpec& spec, const Word& word) {
  Mat3 x = build_Xi(spec);
  Mat3 y = build_Yi(spec);
  Mat3 xinv = mat_inverse(x);  // throws on a singular transcription
  Mat3 yinv = mat_inverse(y);
  Mat3 m = Mat3::identity(spec.p);
  // Column convention composes right-to-left: acting by the word u1 u2 ... uk
  // on a column vector is A(uk) ... A(u1).
  for (auto [gen, sign] : letters(word)) {
    if (gen == 2) continue;  // z is central in the abelian N
    const Mat3& a = gen == 0 ? (sign > 0 ? x : xinv) : (sign > 0 ? y : yinv);
    m = mat_mul(a, m);
  }
  return m;
}

Mat3 build_Mi(const FamilySpec& spec) { return action_matrix(spec, spec.param_base); }

std::uint64_t point_group_order(const FamilySpec& spec, const ProjPoint& point,
                                std::int64_t max_cosets) {
  EnumOptions opts;
  opts.max_cosets = max_cosets;
  Presentation pres = family_presentation(spec, point);
  pres.subgroup_generators = {kZ};
  CosetTable tab = enumerate(pres, opts);
  const int zcol = 4;  // column of generator z
  for (std::int64_t c = 0; c < tab.live_count(); ++c)
    if (tab.entry(c, zcol) != c)
      // z moves a coset, so z != 1; with z^p = 1 and p prime, |<z>| = p and
      // |G| = |<z>| * [G : <z>].
      return static_cast<std::uint64_t>(spec.p) * static_cast<std::uint64_t>(tab.live_count());
  // z fixes every coset of <z>, i.e. lies in every conjugate of <z>, so <z>
  // is normal and equals <<z>>. Then |G| <= p * |Q| is small and a direct
  // regular enumeration is cheap.
  pres.subgroup_generators.clear();
  return static_cast<std::uint64_t>(enumerate(pres, opts).live_count());
}

std::vector<PointResult> scan_points_serial(const FamilySpec& spec,
                                            const std::vector<ProjPoint>& points,
                                            std::int64_t max_cosets) {
  std::uint64_t target = admissible_order(spec);
  std::vector<PointResult> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(scan_one(spec, pt, target, max_cosets));
  return out;
}

std::vector<PointResult> scan_points_parallel(const FamilySpec& spec,
                                              const std::vector<ProjPoint>& points,
                                              std::int64_t max_cosets, int workers) {
#ifdef _OPENMP
  if (workers > 1) {
    std::uint64_t target = admissible_order(spec);
    std::vector<PointResult> out(points.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(points.size()); ++k)
      out[static_cast<size_t>(k)] = scan_one(spec, points[static_cast<size_t>(k)], target, max_cosets);
    return out;
  }
#else
  (void)workers;
#endif
  return scan_points_serial(spec, points, max_cosets);
}

AdmissibleReport scan_family(const FamilySpec& spec, ScanMode mode, std::int64_t max_cosets,
                             int workers) {
  auto t0 = std::chrono::steady_clock::now();
  AdmissibleReport rep;
  rep.family = spec.index;
  rep.p = spec.p;
  rep.mode = mode;
  rep.target_order = admissible_order(spec);
  Mat3 mi = build_Mi(spec);
  rep.eigenspace = eigenspace_one(mi);
  rep.matrix_matches_displayed_formula = action_matrix(spec, displayed_formula_base(spec.index)) == mi;
  if (!rep.matrix_matches_displayed_formula)
    rep.note =
        "eigenvector matrix taken from the printed relator base s^-1*w; the displayed "
        "formula Y*X^-2 is the action of s*w^-2 and disagrees with it";
  if (spec.module_sign_corrected) {
    if (!rep.note.empty()) rep.note += "; ";
    rep.note +=
        "conjugation matrices are the negatives of the published ones: the published "
        "module gives the same orders but its group splits over <<z>> and carries no map";
  }
  const std::vector<ProjPoint>& points =
      mode == ScanMode::Full ? enumerate_pg2(spec.p) : rep.eigenspace;
  rep.scanned = scan_points_parallel(spec, points, max_cosets, workers);
  for (const auto& r : rep.scanned)
    if (r.admissible) rep.admissible.push_back(r.point);
  rep.seconds = seconds_since(t0);
  return rep;
}

namespace {

/// Word-based arithmetic in a regular permutation group: elements are
/// identified with their image of point 0 and applied through the columns of
/// a breadth-first spanning tree, so no permutation beyond the generators is
/// ever materialized during the search.
class RegularWalker {
 public:
  explicit RegularWalker(const PermGroup& g) : degree_(g.degree) {
    for (const auto& x : g.generators) {
      colperm_.push_back(x);
      colperm_.push_back(x.inverse());
    }
    parent_.assign(static_cast<size_t>(degree_), -1);
    via_.assign(static_cast<size_t>(degree_), -1);
    std::vector<std::int32_t> bfs{0};
    std::vector<char> seen(static_cast<size_t>(degree_), 0);
    seen[0] = 1;
    for (size_t i = 0; i < bfs.size(); ++i)
      for (size_t col = 0; col < colperm_.size(); ++col) {
        std::int32_t q = colperm_[col][bfs[i]];
        if (!seen[static_cast<size_t>(q)]) {
          seen[static_cast<size_t>(q)] = 1;
          parent_[static_cast<size_t>(q)] = bfs[i];
          via_[static_cast<size_t>(q)] = static_cast<std::int32_t>(col);
          bfs.push_back(q);
        }
      }
  }

  std::vector<std::int32_t> path_of(std::int64_t c) const {
    std::vector<std::int32_t> cols;
    while (c != 0) {
      cols.push_back(via_[static_cast<size_t>(c)]);
      c = parent_[static_cast<size_t>(c)];
    }
    std::reverse(cols.begin(), cols.end());
    return cols;
  }

  /// p * element(c) for the element whose image of 0 is the path's endpoint.
  std::int64_t apply_path(std::int64_t p, const std::vector<std::int32_t>& cols) const {
    for (auto col : cols) p = colperm_[static_cast<size_t>(col)][p];
    return p;
  }

  std::uint64_t element_order_at(std::int64_t c) const {
    if (c == 0) return 1;
    auto cols = path_of(c);
    std::uint64_t k = 0;
    for (std::int64_t q = c; q != 0; q = apply_path(q, cols)) ++k;
    return k + 1;  // +1: the loop stops at the identity power
  }

  Perm materialize(std::int64_t c) const {
    auto cols = path_of(c);
    Perm out;
    out.img.resize(static_cast<size_t>(degree_));
    for (std::int64_t p = 0; p < degree_; ++p)
      out.img[static_cast<size_t>(p)] = static_cast<std::int32_t>(apply_path(p, cols));
    return out;
  }

 private:
  std::int64_t degree_;
  std::vector<Perm> colperm_;
  std::vector<std::int32_t> parent_, via_;
};

/// The family map on the regular group g: lift of the quotient map on G/N.
/// The flag involutions project onto those of the quotient map, so they are
/// searched inside the corresponding cosets of N.
AlgebraicMap lift_family_map(const PermGroup& g, const PermGroup& n, const BlockQuotient& bq) {
  // A regular map on the quotient: the reduced-presentation pair (R, S)
  // satisfies (RS)^2 = 1 while a map pair satisfies (rt * (rl)^-1)^2 = 1, so
  // the lift is attempted with the second generator inverted, both ways
  // round, with the uninverted pairs as a fallback.
  const Perm& a = bq.quotient.generators[0];
  const Perm& b = bq.quotient.generators[1];
  AlgebraicMap qmap = [&] {
    for (const auto& [R, S] : {std::pair(a, b), std::pair(b, a)}) {
      auto lifts = all_lifts(bq.quotient, R, S.inverse(), 1);
      if (!lifts.empty()) return std::move(lifts.front());
      lifts = all_lifts(bq.quotient, R, S, 1);
      if (!lifts.empty()) return std::move(lifts.front());
    }
    throw MapError("no regular map on the quotient by <<z>>");
  }();
  const std::uint64_t x = (qmap.r * qmap.t).order();
  const std::uint64_t y = (qmap.r * qmap.l).order();

  RegularWalker wk(g);
  // Candidate flag involutions: the points of the N-coset (block) of each
  // quotient involution that square to the identity.
  auto involutions_in_block = [&](std::int32_t blk) {
    std::vector<std::pair<std::int64_t, std::vector<std::int32_t>>> out;
    for (std::int64_t p = 0; p < g.degree; ++p) {
      if (bq.block[static_cast<size_t>(p)] != blk) continue;
      auto cols = wk.path_of(p);
      if (wk.apply_path(p, cols) == 0) out.emplace_back(p, std::move(cols));
    }
    return out;
  };
  auto cand_r = involutions_in_block(qmap.r[0]);
  auto cand_t = involutions_in_block(qmap.t[0]);
  auto cand_l = involutions_in_block(qmap.l[0]);

  for (const auto& [tp, tcols] : cand_t)
    for (const auto& [lp, lcols] : cand_l) {
      if (tp == lp) continue;
      if (wk.apply_path(tp, lcols) != wk.apply_path(lp, tcols)) continue;  // tl != lt
      for (const auto& [rp, rcols] : cand_r) {
        if (wk.element_order_at(wk.apply_path(rp, tcols)) != x) continue;  // |rt|
        if (wk.element_order_at(wk.apply_path(rp, lcols)) != y) continue;  // |rl|
        try {
          return build_map(g, wk.materialize(rp), wk.materialize(tp), wk.materialize(lp));
        } catch (const MapError&) {
          // Generation can still fail for this combination; keep searching.
        }
      }
    }
  throw MapError("no lift of the quotient map exists over this point");
}

}  // namespace

AlgebraicMap family_map(const FamilySpec& spec, const std::array<int, 3>& exps,
                        std::int64_t max_cosets) {
  EnumOptions opts;
  opts.max_cosets = max_cosets;
  PermGroup g;
  {
    CosetTable tab = enumerate(family_presentation(spec, exps), opts);
    g = permutation_rep(tab);
  }
  PermGroup n = normal_closure(g, {kZ});
  BlockQuotient bq = block_quotient(g, n);
  return lift_family_map(g, n, bq);
}

AdmissibleMapInfo map_info(const FamilySpec& spec, const ProjPoint& point,
                           std::int64_t max_cosets) {
  AdmissibleMapInfo info;
  info.family = spec.index;
  info.point = point;
  if (point.p != spec.p) throw std::invalid_argument("point modulus does not match the family prime");
  AlgebraicMap m = family_map(spec, point.coords, max_cosets);
  PermGroup n = normal_closure(m.group, {kZ});
  info.normal_order = group_order(n);
  // Report both maps in the canonical orientation x <= y; the lift is free
  // to land on the dual pairing.
  info.map = describe(m);
  if (info.map.x > info.map.y) info.map = describe(dual(m));
  AlgebraicMap qm = quotient_map(m, n);
  info.quotient = describe(qm);
  if (info.quotient.x > info.quotient.y) info.quotient = describe(dual(qm));
  return info;
}

Classification classify_all(ScanMode mode, std::int64_t max_cosets, int workers) {
  Classification out;
  for (int i = 1; i <= 7; ++i) {
    FamilySpec spec = family_spec(i);
    out.reports.push_back(scan_family(spec, mode, max_cosets, workers));
    for (const auto& pt : out.reports.back().admissible)
      out.maps.push_back(map_info(spec, pt, max_cosets));
  }
  return out;
}

}  // namespace regmap
