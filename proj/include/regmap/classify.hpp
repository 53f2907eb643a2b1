#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regmap/algebraic_map.hpp"
#include "regmap/families.hpp"
#include "regmap/fpmod.hpp"

namespace regmap {

/// Column-convention matrices of the conjugation action on N over the basis
/// B: X_i for w, Y_i for s, and M_i for the base element of the parameterized
/// relator. A point v is a candidate admissible point only if M_i v = v.
Mat3 build_Xi(const FamilySpec& spec);
Mat3 build_Yi(const FamilySpec& spec);
Mat3 build_Mi(const FamilySpec& spec);

/// Column-convention action matrix of an arbitrary word over w, s (letters of
/// z act trivially on the abelian N and are skipped).
Mat3 action_matrix(const FamilySpec& spec, const Word& word);

enum class ScanMode { Full, EigenFiltered };

struct PointResult {
  ProjPoint point;
  std::uint64_t order = 0;
  bool admissible = false;
  bool capacity_exceeded = false;
  double seconds = 0.0;
};

struct AdmissibleReport {
  int family = 0;
  int p = 0;
  ScanMode mode = ScanMode::Full;
  std::uint64_t target_order = 0;
  std::vector<ProjPoint> eigenspace;  ///< 1-eigenspace of M_i, always computed
  std::vector<PointResult> scanned;   ///< sorted by normalized point
  std::vector<ProjPoint> admissible;  ///< points whose order hits the target
  /// For families 1 and 2 the displayed eigenvector matrix Y_i X_i^-2 is the
  /// action of s w^-2, which is not the base s^-1 w of the printed relator;
  /// M_i here follows the relator and this flag records the disagreement.
  bool matrix_matches_displayed_formula = true;
  std::string note;
  double seconds = 0.0;
};

inline constexpr std::int64_t kDefaultCosetLimit = std::int64_t{1} << 26;

/// Exact order of G_i(a,b,c). Enumerates the cosets of <z> first: when z
/// moves some coset it has order p and |G| = p * index; otherwise <z> is
/// normal, so |G| <= p * |Q_i| and a cheap second enumeration over the
/// trivial subgroup settles the order.
std::uint64_t point_group_order(const FamilySpec& spec, const ProjPoint& point,
                                std::int64_t max_cosets = kDefaultCosetLimit);

/// Scans the projective plane (or just the 1-eigenspace of M_i) and decides
/// admissibility of every point by its exact group order.
AdmissibleReport scan_family(const FamilySpec& spec, ScanMode mode,
                             std::int64_t max_cosets = kDefaultCosetLimit, int workers = 1);

/// Serial reference kernel for the per-point order scan and the parallel
/// kernel that must agree with it; results are indexed like `points`.
std::vector<PointResult> scan_points_serial(const FamilySpec& spec,
                                            const std::vector<ProjPoint>& points,
                                            std::int64_t max_cosets);
std::vector<PointResult> scan_points_parallel(const FamilySpec& spec,
                                              const std::vector<ProjPoint>& points,
                                              std::int64_t max_cosets, int workers);

struct AdmissibleMapInfo {
  int family = 0;
  ProjPoint point;
  MapDescriptor map;
  std::uint64_t normal_order = 0;  ///< order of N = <<z>>
  MapDescriptor quotient;          ///< descriptor of the map over G/N
};

struct Classification {
  std::vector<AdmissibleReport> reports;    // families 1..7 in order
  std::vector<AdmissibleMapInfo> maps;      // one per admissible point
};

/// Full classification: scan every family, then lift each admissible point
/// to its algebraic map and compute the invariants of the report.
Classification classify_all(ScanMode mode, std::int64_t max_cosets = kDefaultCosetLimit,
                            int workers = 1);

/// Lift one family point to its map and compute descriptor, |<<z>>| and the
/// quotient map descriptor. Throws MapError when no lift exists.
AdmissibleMapInfo map_info(const FamilySpec& spec, const ProjPoint& point,
                           std::int64_t max_cosets = kDefaultCosetLimit);

/// The algebraic map over G_i at a raw exponent triple (not projectively
/// normalized: scalar multiples present the same group and must yield
/// isomorphic maps, a tested claim). Throws MapError when no lift exists.
AlgebraicMap family_map(const FamilySpec& spec, const std::array<int, 3>& exps,
                        std::int64_t max_cosets = kDefaultCosetLimit);

}  // namespace regmap
