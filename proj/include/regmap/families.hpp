#pragma once

#include <array>
#include <string>

#include "regmap/algebraic_map.hpp"
#include "regmap/fpmod.hpp"
#include "regmap/presentation.hpp"

namespace regmap {

/// The four reduced presentations (two generators R, S) whose enumerations
/// give 120, 336, 336 and 1092.
enum class ReducedName { PGL25, PGL27_pre1, PGL27_pre2, PSL213 };

Presentation reduced_presentation(ReducedName name);

/// One of the seven parameterized three-generator families G_i(a,b,c) over
/// generators w, s, z. The normal subgroup N = <<z>> is abelian of exponent
/// p with basis B = (z, z^{s^2}, z^{s^4}) for i = 1,2 and (z, z^s, z^{s^-1})
/// for i >= 3; the action rows below give image exponent triples over B.
struct FamilySpec {
  int index = 0;  // 1..7
  int p = 0;
  int x = 0, y = 0;  // map type {x, y} of the admissible maps
  int w_order = 0, s_order = 0;
  /// w_action[j] = exponents of the image of B[j] under conjugation by w.
  std::array<std::array<int, 3>, 3> w_action{};
  /// For i = 1,2 only: images of z^s, z^{s^3}, z^{s^5} over B.
  bool has_s_action = false;
  std::array<std::array<int, 3>, 3> s_action{};
  /// The parameterized relator reads param_base^param_power = B0^a B1^b B2^c;
  /// param_lhs is the expanded left-hand side. The base element is kept
  /// separately because its action matrix on N is the eigenvector filter M_i.
  Word param_base;
  int param_power = 1;
  Word param_lhs;
  /// True when the alternate family-1 relator (w s^-2)^4 is in use instead
  /// of the printed (s^-1 w)^3 (the two candidate readings of the source).
  bool alt_param_relator = false;
  /// True when w_action / s_action have been replaced by their negatives
  /// (the sign-twisted sibling module; see family_spec for why family 1
  /// ships corrected).
  bool module_sign_corrected = false;
};

/// Working family data. For family 1 the conjugation matrices are the
/// negatives of the published ones: both readings give |G(1,3,4)| = 15000
/// with the same admissible set, but only the negated module admits a flag
/// triple (r,t,l) generating the whole group, i.e. carries the claimed map.
/// The published matrices describe the sign-twisted sibling module, whose
/// split extension has no such triple; displayed_family_spec preserves them
/// so tests can document the discrepancy. alt_param_relator selects the
/// family-1 relator variant and is rejected for other indices.
FamilySpec family_spec(int i, bool alt_param_relator = false);

/// Family data exactly as published, without the family-1 sign correction.
FamilySpec displayed_family_spec(int i, bool alt_param_relator = false);

/// Full presentation of G_i(a,b,c) for a point of PG(2, p_i).
Presentation family_presentation(const FamilySpec& spec, const ProjPoint& point);

/// Same, for a raw exponent triple that is not projectively normalized;
/// scalar multiples of a triple give isomorphic groups (a tested claim, not
/// an assumption).
Presentation family_presentation(const FamilySpec& spec, const std::array<int, 3>& exps);

/// Expected order of G_i at an admissible point: 4xyp^4/(xy - 2x - 2y).
std::uint64_t admissible_order(const FamilySpec& spec);

/// The solvable map M(j,k) over D_2j x D_2k, type {2j,2k}, chi = j + k - jk.
/// Requires j, k odd and coprime with j < k.
AlgebraicMap build_Mjk(int j, int k);

/// The solvable map M(m) over D_4 x| D_2m of type {4,m}, chi = 4 - m.
/// Requires m == 3 (mod 6).
AlgebraicMap build_Mm(int m);

}  // namespace regmap
