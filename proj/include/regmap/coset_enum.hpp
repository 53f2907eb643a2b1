#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "regmap/presentation.hpp"

namespace regmap {

struct EnumOptions {
  std::int64_t max_cosets = std::int64_t{1} << 24;
  /// Dead cosets are compacted away once dead/live exceeds this ratio.
  double compaction_ratio = 1.0;
};

class CapacityExceeded : public std::runtime_error {
 public:
  explicit CapacityExceeded(std::int64_t limit)
      : std::runtime_error("coset enumeration exceeded capacity of " + std::to_string(limit) +
                           " cosets"),
        limit(limit) {}
  std::int64_t limit;
};

struct EnumStats {
  std::int64_t cosets_defined = 0;
  std::int64_t max_live = 0;
  int compactions = 0;
};

/// A complete, standardized coset table. Cosets are numbered 0..live_count-1
/// in breadth-first order from coset 0 (the subgroup coset); column 2g is the
/// action of generator g, column 2g+1 of its inverse.
class CosetTable {
 public:
  int ngens() const { return ngens_; }
  int ncols() const { return 2 * ngens_; }
  std::int64_t live_count() const { return live_; }
  bool complete() const { return complete_; }
  /// True when the enumeration ran over the trivial subgroup, so the table is
  /// the regular representation and live_count() is the group order.
  bool regular() const { return regular_; }
  const EnumStats& stats() const { return stats_; }

  std::int32_t entry(std::int64_t coset, int col) const {
    return table_[static_cast<size_t>(coset) * ncols() + col];
  }

  /// Traces a word from a coset; the table is complete so this never fails.
  std::int64_t apply(std::int64_t coset, const Word& w) const;
  std::int64_t apply_cols(std::int64_t coset, std::span<const std::int32_t> cols) const;

  /// Columns of the breadth-first tree path from coset 0 to c.
  std::vector<std::int32_t> path_from_origin(std::int64_t c) const;

  /// Text dump: one row per live coset, `coset g1 g1' g2 g2' ...`, 1-based.
  std::string dump() const;

 private:
  friend CosetTable enumerate(const Presentation&, const EnumOptions&);
  int ngens_ = 0;
  std::int64_t live_ = 0;
  bool complete_ = false;
  bool regular_ = false;
  EnumStats stats_;
  std::vector<std::int32_t> table_;        // live_ rows x ncols
  std::vector<std::int32_t> bfs_parent_;   // tree edge into each coset (coset 0: -1)
  std::vector<std::int32_t> bfs_col_;
};

/// Todd-Coxeter enumeration (HLT relator scanning with coincidence handling
/// and dead-coset compaction) of the cosets of <subgroup_generators> in the
/// presented group. Throws CapacityExceeded if the table cannot close within
/// the limit.
CosetTable enumerate(const Presentation& pres, const EnumOptions& opts = {});

}  // namespace regmap
