#include "regmap/coset_enum.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace regmap {

std::int64_t CosetTable::apply(std::int64_t coset, const Word& w) const {
  std::int64_t c = coset;
  for (const auto& s : w.syllables()) {
    int col = s.exp > 0 ? 2 * s.gen : 2 * s.gen + 1;
    int n = s.exp > 0 ? s.exp : -s.exp;
    for (int i = 0; i < n; ++i) c = entry(c, col);
  }
  return c;
}

std::int64_t CosetTable::apply_cols(std::int64_t coset, std::span<const std::int32_t> cols) const {
  std::int64_t c = coset;
  for (auto col : cols) c = entry(c, col);
  return c;
}

std::vector<std::int32_t> CosetTable::path_from_origin(std::int64_t c) const {
  std::vector<std::int32_t> cols;
  while (c != 0) {
    cols.push_back(bfs_col_[static_cast<size_t>(c)]);
    c = bfs_parent_[static_cast<size_t>(c)];
  }
  std::reverse(cols.begin(), cols.end());
  return cols;
}

std::string CosetTable::dump() const {
  std::ostringstream out;
  for (std::int64_t c = 0; c < live_; ++c) {
    out << (c + 1);
    for (int col = 0; col < ncols(); ++col) out << ' ' << (entry(c, col) + 1);
    out << '\n';
  }
  return out.str();
}

namespace {

constexpr std::int32_t kUndef = -1;

inline int inv_col(int col) { return col ^ 1; }

struct TableParts {
  int ngens = 0;
  std::int64_t live = 0;
  EnumStats stats;
  std::vector<std::int32_t> table;
  std::vector<std::int32_t> bfs_parent;
  std::vector<std::int32_t> bfs_col;
};

class Enumerator {
 public:
  Enumerator(const Presentation& pres, const EnumOptions& opts)
      : ngens_(pres.ngens()), ncols_(2 * pres.ngens()), opts_(opts) {
    auto to_cols = [](const Word& w) {
      std::vector<std::int32_t> cols;
      for (auto [g, sign] : letters(w)) cols.push_back(sign > 0 ? 2 * g : 2 * g + 1);
      return cols;
    };
    for (const auto& r : pres.relators) relators_.push_back(to_cols(r));
    // Short relators (the power relations) first; stable, so deterministic.
    std::stable_sort(relators_.begin(), relators_.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& s : pres.subgroup_generators) subgens_.push_back(to_cols(s));
    size_t longest = 0;
    for (const auto& r : relators_) longest = std::max(longest, r.size());
    for (const auto& s : subgens_) longest = std::max(longest, s.size());
    margin_ = static_cast<std::int64_t>(longest) + ncols_ + 1;

    tab_.assign(static_cast<size_t>(ncols_), kUndef);
    p_.assign(1, 0);
    stats_.cosets_defined = 1;
  }

  TableParts run() {
    for (const auto& w : subgens_) scan_and_fill(0, w);
    std::int64_t c = 0;
    while (c < nrows()) {
      if (nrows() + margin_ >= opts_.max_cosets) {
        // Lookahead (HLT style): a scan-only pass over the whole table finds
        // coincidences that free space before giving up on capacity.
        lookahead(&c);
        if (nrows() + margin_ >= opts_.max_cosets) throw CapacityExceeded(opts_.max_cosets);
      }
      if (alive(c)) {
        for (const auto& rel : relators_) {
          scan_and_fill(c, rel);
          if (!alive(c)) break;
        }
        if (alive(c)) {
          for (int col = 0; col < ncols_; ++col)
            if (tab(c, col) == kUndef) define(c, col);
        }
      }
      ++c;
      if (dead_ > opts_.compaction_ratio * (nrows() - dead_)) compact(&c);
    }
    // Confirm every relator closes from every live coset; coincidences found
    // here shrink the table and force another pass.
    for (bool clean = false; !clean;) {
      clean = true;
      for (std::int64_t d = 0; d < nrows(); ++d) {
        if (nrows() + margin_ >= opts_.max_cosets) {
          lookahead(&d);
          if (nrows() + margin_ >= opts_.max_cosets) throw CapacityExceeded(opts_.max_cosets);
        }
        if (!alive(d)) continue;
        for (int col = 0; col < ncols_; ++col)
          if (tab(d, col) == kUndef) define(d, col);
        for (const auto& rel : relators_) {
          if (!alive(d)) break;
          std::int64_t f = d;
          size_t i = 0;
          while (i < rel.size() && tab(f, rel[i]) != kUndef) f = tab(f, rel[i]), ++i;
          if (i < rel.size() || f != d) {
            clean = false;
            if (i == rel.size())
              coincidence(f, d);
            else
              scan_and_fill(d, rel);
          }
        }
        if (!alive(d)) clean = false;
      }
    }
    return finish();
  }

 private:
  std::int64_t nrows() const { return static_cast<std::int64_t>(p_.size()); }
  bool alive(std::int64_t c) const { return p_[static_cast<size_t>(c)] == c; }
  std::int32_t& tab(std::int64_t c, int col) { return tab_[static_cast<size_t>(c) * ncols_ + col]; }

  std::int64_t rep(std::int64_t c) {
    std::int64_t r = c;
    while (p_[static_cast<size_t>(r)] != r) r = p_[static_cast<size_t>(r)];
    while (p_[static_cast<size_t>(c)] != r) {
      auto next = p_[static_cast<size_t>(c)];
      p_[static_cast<size_t>(c)] = static_cast<std::int32_t>(r);
      c = next;
    }
    return r;
  }

  std::int64_t define(std::int64_t c, int col) {
    // Compaction happens only between rows (it renumbers cosets and would
    // invalidate the indices held by an in-flight scan).
    if (nrows() >= opts_.max_cosets) throw CapacityExceeded(opts_.max_cosets);
    std::int64_t n = nrows();
    p_.push_back(static_cast<std::int32_t>(n));
    tab_.resize(tab_.size() + static_cast<size_t>(ncols_), kUndef);
    tab(c, col) = static_cast<std::int32_t>(n);
    tab(n, inv_col(col)) = static_cast<std::int32_t>(c);
    ++stats_.cosets_defined;
    stats_.max_live = std::max(stats_.max_live, nrows() - dead_);
    return n;
  }

  void merge(std::int64_t a, std::int64_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[static_cast<size_t>(b)] = static_cast<std::int32_t>(a);
    ++dead_;
    queue_.push_back(static_cast<std::int32_t>(b));
  }

  void coincidence(std::int64_t a, std::int64_t b) {
    merge(a, b);
    size_t head = 0;
    while (head < queue_.size()) {
      std::int64_t y = queue_[head++];
      for (int col = 0; col < ncols_; ++col) {
        std::int64_t d = tab(y, col);
        if (d == kUndef) continue;
        tab(d, inv_col(col)) = kUndef;
        std::int64_t mu = rep(y);
        std::int64_t nu = rep(d);
        if (tab(mu, col) != kUndef)
          merge(nu, tab(mu, col));
        else if (tab(nu, inv_col(col)) != kUndef)
          merge(mu, tab(nu, inv_col(col)));
        else {
          tab(mu, col) = static_cast<std::int32_t>(nu);
          tab(nu, inv_col(col)) = static_cast<std::int32_t>(mu);
        }
      }
    }
    queue_.clear();
  }

  // Scans w at c applying deductions and coincidences but defining nothing;
  // used by lookahead passes.
  void scan_no_fill(std::int64_t c, const std::vector<std::int32_t>& w) {
    if (w.empty()) return;
    std::int64_t f = c, b = c;
    std::int64_t i = 0, j = static_cast<std::int64_t>(w.size()) - 1;
    while (i <= j && tab(f, w[static_cast<size_t>(i)]) != kUndef)
      f = tab(f, w[static_cast<size_t>(i)]), ++i;
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && tab(b, inv_col(w[static_cast<size_t>(j)])) != kUndef)
      b = tab(b, inv_col(w[static_cast<size_t>(j)])), --j;
    if (j < i) {
      coincidence(f, b);
    } else if (j == i) {
      tab(f, w[static_cast<size_t>(i)]) = static_cast<std::int32_t>(b);
      tab(b, inv_col(w[static_cast<size_t>(i)])) = static_cast<std::int32_t>(f);
    }
  }

  void lookahead(std::int64_t* cursor) {
    for (std::int64_t c = 0; c < nrows(); ++c) {
      if (!alive(c)) continue;
      for (const auto& rel : relators_) {
        scan_no_fill(c, rel);
        if (!alive(c)) break;
      }
    }
    compact(cursor);
  }

  void scan_and_fill(std::int64_t c, const std::vector<std::int32_t>& w) {
    if (w.empty()) return;
    std::int64_t f = c, b = c;
    std::int64_t i = 0, j = static_cast<std::int64_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && tab(f, w[static_cast<size_t>(i)]) != kUndef)
        f = tab(f, w[static_cast<size_t>(i)]), ++i;
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab(b, inv_col(w[static_cast<size_t>(j)])) != kUndef)
        b = tab(b, inv_col(w[static_cast<size_t>(j)])), --j;
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {  // deduction closes the scan
        tab(f, w[static_cast<size_t>(i)]) = static_cast<std::int32_t>(b);
        tab(b, inv_col(w[static_cast<size_t>(i)])) = static_cast<std::int32_t>(f);
        return;
      }
      define(f, w[static_cast<size_t>(i)]);
    }
  }

  /// Renumbers live cosets contiguously, preserving order. `cursor` is an
  /// index into the old numbering and is remapped.
  void compact(std::int64_t* cursor) {
    if (dead_ == 0) return;
    std::vector<std::int32_t> remap(p_.size(), kUndef);
    std::int64_t next = 0;
    std::int64_t new_cursor = 0;
    for (std::int64_t c = 0; c < nrows(); ++c) {
      if (c == *cursor) new_cursor = next;
      if (alive(c)) remap[static_cast<size_t>(c)] = static_cast<std::int32_t>(next++);
    }
    if (*cursor >= nrows()) new_cursor = next;
    for (std::int64_t c = 0; c < nrows(); ++c) {
      if (!alive(c)) continue;
      std::int64_t nc = remap[static_cast<size_t>(c)];
      for (int col = 0; col < ncols_; ++col) {
        std::int64_t d = tab(c, col);
        tab_[static_cast<size_t>(nc) * ncols_ + col] =
            d == kUndef ? kUndef : remap[static_cast<size_t>(rep(d))];
      }
    }
    tab_.resize(static_cast<size_t>(next) * ncols_);
    p_.resize(static_cast<size_t>(next));
    for (std::int64_t c = 0; c < next; ++c) p_[static_cast<size_t>(c)] = static_cast<std::int32_t>(c);
    dead_ = 0;
    *cursor = new_cursor;
    ++stats_.compactions;
  }

  TableParts finish() {
    std::int64_t sentinel = nrows();
    compact(&sentinel);
    std::int64_t n = nrows();
    // Standardize: breadth-first renumbering from coset 0, columns in order.
    std::vector<std::int32_t> order(static_cast<size_t>(n), kUndef);  // old -> new
    std::vector<std::int32_t> bfs(static_cast<size_t>(n));            // new -> old
    std::vector<std::int32_t> parent(static_cast<size_t>(n), kUndef);
    std::vector<std::int32_t> via(static_cast<size_t>(n), kUndef);
    order[0] = 0;
    bfs[0] = 0;
    std::int64_t filled = 1;
    for (std::int64_t i = 0; i < filled; ++i) {
      std::int64_t c = bfs[static_cast<size_t>(i)];
      for (int col = 0; col < ncols_; ++col) {
        std::int64_t d = tab(c, col);
        if (d != kUndef && order[static_cast<size_t>(d)] == kUndef) {
          order[static_cast<size_t>(d)] = static_cast<std::int32_t>(filled);
          bfs[static_cast<size_t>(filled)] = static_cast<std::int32_t>(d);
          parent[static_cast<size_t>(filled)] = static_cast<std::int32_t>(i);
          via[static_cast<size_t>(filled)] = static_cast<std::int32_t>(col);
          ++filled;
        }
      }
    }
    assert(filled == n && "coset table must be connected");

    TableParts out;
    out.ngens = ngens_;
    out.live = n;
    out.stats = stats_;
    out.table.resize(static_cast<size_t>(n) * ncols_);
    for (std::int64_t nc = 0; nc < n; ++nc) {
      std::int64_t c = bfs[static_cast<size_t>(nc)];
      for (int col = 0; col < ncols_; ++col)
        out.table[static_cast<size_t>(nc) * ncols_ + col] = order[static_cast<size_t>(tab(c, col))];
    }
    out.bfs_parent = std::move(parent);
    out.bfs_col = std::move(via);
    return out;
  }

  int ngens_;
  int ncols_;
  EnumOptions opts_;
  std::vector<std::vector<std::int32_t>> relators_;
  std::vector<std::vector<std::int32_t>> subgens_;
  std::vector<std::int32_t> tab_;
  std::vector<std::int32_t> p_;
  std::vector<std::int32_t> queue_;
  std::int64_t dead_ = 0;
  std::int64_t margin_ = 0;
  EnumStats stats_;
};

}  // namespace

CosetTable enumerate(const Presentation& pres, const EnumOptions& opts) {
  if (opts.max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
  Enumerator e(pres, opts);
  TableParts parts = e.run();
  CosetTable out;
  out.ngens_ = parts.ngens;
  out.live_ = parts.live;
  out.complete_ = true;
  out.regular_ = pres.subgroup_generators.empty();
  out.stats_ = parts.stats;
  out.table_ = std::move(parts.table);
  out.bfs_parent_ = std::move(parts.bfs_parent);
  out.bfs_col_ = std::move(parts.bfs_col);
  return out;
}

}  // namespace regmap
