#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regmap/coset_enum.hpp"
#include "regmap/perm.hpp"
#include "regmap/word.hpp"

namespace regmap {

/// A permutation group given by generators. Immutable after construction
/// except for the write-once order cache.
struct PermGroup {
  std::int64_t degree = 0;
  std::vector<Perm> generators;
  /// Point stabilizers known to be trivial (regular representations and
  /// their subgroups). Makes the order an orbit count instead of a
  /// stabilizer-chain computation.
  bool semiregular = false;
  mutable std::optional<std::uint64_t> cached_order;
};

/// Exact group order. Uses the cache, the semiregular orbit shortcut, or a
/// deterministic stabilizer chain (smallest moved point base). Degrees above
/// 100000 require one of the first two; callers at that scale carry the order
/// in from the coset table.
std::uint64_t group_order(const PermGroup& g);

Perm evaluate_word(const PermGroup& g, const Word& w);
std::uint64_t element_order(const PermGroup& g, const Word& w);

/// Smallest normal subgroup of g containing the seed elements.
PermGroup normal_closure(const PermGroup& g, const std::vector<Word>& seeds);
PermGroup normal_closure_of(const PermGroup& g, std::vector<Perm> seeds);

/// |G| / |H|; throws if |H| does not divide |G|.
std::uint64_t subgroup_index(const PermGroup& g, const PermGroup& h);

/// Membership test (semiregular shortcut or stabilizer-chain sift).
bool is_member(const PermGroup& g, const Perm& x);

std::vector<std::int32_t> orbit_of(const std::vector<Perm>& gens, std::int32_t point);

/// The regular representation carried by a complete trivial-subgroup coset
/// table: one permutation per presentation generator.
PermGroup permutation_rep(const CosetTable& table);

}  // namespace regmap
