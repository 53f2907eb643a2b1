#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "regmap/perm_group.hpp"

namespace regmap {

/// A regular map in algebraic form: a group acting regularly on its flags
/// plus the flag-involution triple. r, t, l are involutions, t commutes
/// with l, t != l, and the three generate the group.
struct AlgebraicMap {
  PermGroup group;
  Perm r, t, l;
};

/// Computed invariants of a map. x = |rt| (face size), y = |rl| (vertex
/// degree); chi is exact from V + F - E.
struct MapDescriptor {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::int64_t chi = 0;
  bool orientable = false;
  std::int64_t genus = 0;
  std::uint64_t group_order = 0;
  friend bool operator==(const MapDescriptor&, const MapDescriptor&) = default;
};

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validates the flag-triple axioms and returns the map; throws MapError
/// naming the violated axiom otherwise.
AlgebraicMap build_map(PermGroup group, Perm r, Perm t, Perm l);

MapDescriptor describe(const AlgebraicMap& m);

/// The map with t and l exchanged. Same Euler characteristic.
AlgebraicMap dual(const AlgebraicMap& m);

/// The regular action of G/N on the blocks formed by N's orbits (the left
/// cosets of N), for a regular G and normal N. block[p] is the block index
/// of point p; blocks are numbered by their smallest point, so the identity
/// coset is block 0 and a quotient element corresponds to the block holding
/// its image of 0.
struct BlockQuotient {
  std::vector<std::int32_t> block;
  PermGroup quotient;
};
BlockQuotient block_quotient(const PermGroup& g, const PermGroup& n);

/// The induced map on G/N, realized through block_quotient. Throws MapError
/// if N is not normal or if the quotient triple degenerates (an involution
/// dies or t and l merge).
AlgebraicMap quotient_map(const AlgebraicMap& m, const PermGroup& n);

/// Searches for involutions r with (rR)^2 = (rS)^2 = 1 so that t = rR,
/// l = rS yields a valid map. G must act regularly (the candidates are
/// enumerated in lexicographic order of their permutation images). Returns
/// up to max_lifts valid maps; empty when no lift exists.
std::vector<AlgebraicMap> all_lifts(const PermGroup& g, const Perm& R, const Perm& S,
                                    std::size_t max_lifts);

/// First lift in the deterministic order; throws MapError when none exists.
AlgebraicMap lift_to_map(const PermGroup& g, const Perm& R, const Perm& S);

/// True iff a group isomorphism carries (r1,t1,l1) to (r2,t2,l2), decided by
/// extending the generator assignment over the Cayley graph. Guarded to
/// group orders <= 20000.
bool maps_equal_up_to_iso(const AlgebraicMap& m1, const AlgebraicMap& m2);

}  // namespace regmap
