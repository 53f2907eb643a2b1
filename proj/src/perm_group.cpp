#include "regmap/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace regmap {

namespace {

constexpr std::int64_t kChainDegreeLimit = 100000;

/// Deterministic stabilizer chain (Schreier-Sims, smallest-moved-point base).
class StabChain {
 public:
  explicit StabChain(const PermGroup& g) : degree_(g.degree) {
    for (const auto& x : g.generators)
      if (!x.is_identity()) add_generator(0, x);
    complete();
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& lv : levels_) n *= static_cast<std::uint64_t>(lv.orbit.size());
    return n;
  }

  bool contains(const Perm& x) const {
    Perm g = x;
    for (const auto& lv : levels_) {
      std::int32_t p = g[lv.base];
      if (lv.pos[static_cast<size_t>(p)] < 0) return false;
      g = g * lv.reps[static_cast<size_t>(lv.pos[static_cast<size_t>(p)])].inverse();
    }
    return g.is_identity();
  }

 private:
  struct Level {
    std::int32_t base;
    /// Strong generators assigned at this level. The generating set for the
    /// stabilizer H_i is the union of gens over levels i..end (S_{i+1} is a
    /// subset of S_i), so orbits must be built over that cumulative union.
    std::vector<Perm> gens;
    std::vector<std::int32_t> orbit;  // discovery order; orbit[0] == base
    std::vector<Perm> reps;           // reps[i] maps base to orbit[i]
    std::vector<std::int32_t> pos;    // point -> orbit index or -1
  };

  // Applies f to each generator of S_i (levels i..end).
  template <typename F>
  void for_each_gen(size_t i, F&& f) const {
    for (size_t j = i; j < levels_.size(); ++j)
      for (const auto& x : levels_[j].gens) f(x);
  }

  void add_generator(size_t i, const Perm& g) {
    if (i == levels_.size()) {
      Level lv;
      lv.base = static_cast<std::int32_t>(g.smallest_moved_point());
      levels_.push_back(std::move(lv));
    }
    levels_[i].gens.push_back(g);
    // The new generator belongs to S_j for every j <= i.
    for (size_t j = 0; j <= i; ++j) rebuild_orbit(j);
  }

  void rebuild_orbit(size_t i) {
    Level& lv = levels_[i];
    lv.orbit.assign(1, lv.base);
    lv.reps.assign(1, Perm::identity(degree_));
    lv.pos.assign(static_cast<size_t>(degree_), -1);
    lv.pos[static_cast<size_t>(lv.base)] = 0;
    for (size_t k = 0; k < lv.orbit.size(); ++k) {
      for_each_gen(i, [&](const Perm& x) {
        std::int32_t q = x[lv.orbit[k]];
        if (lv.pos[static_cast<size_t>(q)] < 0) {
          lv.pos[static_cast<size_t>(q)] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.reps.push_back(lv.reps[k] * x);
        }
      });
    }
  }

  // Strips g through levels from..end; returns the level at which the
  // remainder should be inserted, or nothing if g sifts to the identity.
  std::optional<std::pair<size_t, Perm>> strip(Perm g, size_t from) const {
    for (size_t j = from; j < levels_.size(); ++j) {
      const Level& lv = levels_[j];
      std::int32_t p = g[lv.base];
      if (lv.pos[static_cast<size_t>(p)] < 0) return std::make_pair(j, std::move(g));
      g = g * lv.reps[static_cast<size_t>(lv.pos[static_cast<size_t>(p)])].inverse();
    }
    if (g.is_identity()) return std::nullopt;
    return std::make_pair(levels_.size(), std::move(g));
  }

  // First Schreier generator of level i that fails to sift through the levels
  // below it (Sims' criterion), stripped to its insertion point.
  std::optional<std::pair<size_t, Perm>> find_violation(size_t i) const {
    const Level& lv = levels_[i];
    std::optional<std::pair<size_t, Perm>> found;
    for (size_t k = 0; !found && k < lv.orbit.size(); ++k) {
      for_each_gen(i, [&](const Perm& x) {
        if (found) return;
        Perm to = lv.reps[k] * x;
        std::int32_t q = to[lv.base];
        Perm schreier = to * lv.reps[static_cast<size_t>(lv.pos[static_cast<size_t>(q)])].inverse();
        if (schreier.is_identity()) return;
        found = strip(std::move(schreier), i + 1);
      });
    }
    return found;
  }

  void complete() {
    auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      if (auto v = find_violation(static_cast<size_t>(i))) {
        add_generator(v->first, std::move(v->second));
        i = static_cast<std::ptrdiff_t>(v->first);
      } else {
        --i;
      }
    }
  }

  std::int64_t degree_;
  std::vector<Level> levels_;
};

std::uint64_t semiregular_order(const PermGroup& g) {
  if (g.generators.empty()) return 1;
  return orbit_of(g.generators, 0).size();
}

}  // namespace

std::vector<std::int32_t> orbit_of(const std::vector<Perm>& gens, std::int32_t point) {
  std::vector<std::int32_t> orbit{point};
  if (gens.empty()) return orbit;
  std::vector<bool> seen(static_cast<size_t>(gens.front().degree()), false);
  seen[static_cast<size_t>(point)] = true;
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& x : gens) {
      std::int32_t q = x[orbit[i]];
      if (!seen[static_cast<size_t>(q)]) {
        seen[static_cast<size_t>(q)] = true;
        orbit.push_back(q);
      }
    }
  }
  return orbit;
}

std::uint64_t group_order(const PermGroup& g) {
  if (g.cached_order) return *g.cached_order;
  std::uint64_t n;
  if (g.semiregular) {
    n = semiregular_order(g);
  } else {
    if (g.degree > kChainDegreeLimit)
      throw std::runtime_error(
          "group_order: degree too large for a stabilizer chain; order must come from the coset "
          "table");
    n = StabChain(g).order();
  }
  g.cached_order = n;
  return n;
}

Perm evaluate_word(const PermGroup& g, const Word& w) {
  if (w.max_generator() >= static_cast<int>(g.generators.size()))
    throw std::out_of_range("word references a generator the group does not have");
  Perm r = Perm::identity(g.degree);
  for (const auto& s : w.syllables()) {
    const Perm& x = g.generators[static_cast<size_t>(s.gen)];
    Perm base = s.exp > 0 ? x : x.inverse();
    for (int i = 0; i < std::abs(s.exp); ++i) r = r * base;
  }
  return r;
}

std::uint64_t element_order(const PermGroup& g, const Word& w) {
  return evaluate_word(g, w).order();
}

bool is_member(const PermGroup& g, const Perm& x) {
  if (g.semiregular) {
    // Elements of a semiregular group are determined by the image of any
    // point they move; within the ambient group the image of 0 suffices.
    auto orbit = orbit_of(g.generators, 0);
    return std::find(orbit.begin(), orbit.end(), x[0]) != orbit.end();
  }
  if (g.degree > kChainDegreeLimit)
    throw std::runtime_error("is_member: degree too large for a stabilizer chain");
  return StabChain(g).contains(x);
}

PermGroup normal_closure_of(const PermGroup& g, std::vector<Perm> seeds) {
  std::vector<Perm> closure;
  for (auto& s : seeds)
    if (!s.is_identity()) closure.push_back(std::move(s));

  std::vector<Perm> gen_invs;
  gen_invs.reserve(g.generators.size());
  for (const auto& x : g.generators) gen_invs.push_back(x.inverse());

  auto member = [&](const Perm& x) {
    PermGroup h{g.degree, closure, g.semiregular, std::nullopt};
    return is_member(h, x);
  };

  for (size_t i = 0; i < closure.size(); ++i) {
    for (size_t j = 0; j < g.generators.size(); ++j) {
      Perm c = gen_invs[j] * closure[i] * g.generators[j];
      if (!member(c)) closure.push_back(std::move(c));
    }
  }

  PermGroup h{g.degree, std::move(closure), g.semiregular, std::nullopt};
  group_order(h);
  return h;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Word>& seeds) {
  std::vector<Perm> perms;
  perms.reserve(seeds.size());
  for (const auto& w : seeds) perms.push_back(evaluate_word(g, w));
  return normal_closure_of(g, std::move(perms));
}

std::uint64_t subgroup_index(const PermGroup& g, const PermGroup& h) {
  std::uint64_t og = group_order(g);
  std::uint64_t oh = group_order(h);
  if (oh == 0 || og % oh != 0)
    throw std::runtime_error("subgroup_index: subgroup order does not divide group order");
  return og / oh;
}

PermGroup permutation_rep(const CosetTable& table) {
  if (!table.complete()) throw std::runtime_error("permutation_rep: incomplete coset table");
  PermGroup g;
  g.degree = table.live_count();
  for (int gen = 0; gen < table.ngens(); ++gen) {
    Perm p;
    p.img.resize(static_cast<size_t>(g.degree));
    for (std::int64_t c = 0; c < g.degree; ++c)
      p.img[static_cast<size_t>(c)] = table.entry(c, 2 * gen);
    g.generators.push_back(std::move(p));
  }
  if (table.regular()) {
    g.semiregular = true;
    g.cached_order = static_cast<std::uint64_t>(table.live_count());
  }
  return g;
}

}  // namespace regmap
