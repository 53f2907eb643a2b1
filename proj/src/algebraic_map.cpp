#include "regmap/algebraic_map.hpp"

#include <algorithm>
#include <string>

namespace regmap {

namespace {

// Maps here carry their group as a regular permutation action: the degree is
// the group order and point 0 plays the identity, so elements are identified
// with their image of 0.
void require_regular(const PermGroup& g, const char* what) {
  if (group_order(g) != static_cast<std::uint64_t>(g.degree))
    throw MapError(std::string(what) + " requires a regular group action");
}

void check_involution(const Perm& x, const char* name) {
  if (x.is_identity()) throw MapError(std::string(name) + " is trivial");
  if (!(x * x).is_identity()) throw MapError(std::string(name) + " is not an involution");
}

std::int64_t exact_div(std::int64_t n, std::int64_t d, const char* what) {
  if (d == 0 || n % d != 0) throw MapError(std::string("group order not divisible by ") + what);
  return n / d;
}

}  // namespace

AlgebraicMap build_map(PermGroup group, Perm r, Perm t, Perm l) {
  require_regular(group, "build_map");
  check_involution(r, "r");
  check_involution(t, "t");
  check_involution(l, "l");
  if (t == l) throw MapError("t equals l");
  if (t * l != l * t) throw MapError("t and l do not commute");
  auto orbit = orbit_of({r, t, l}, 0);
  if (orbit.size() != static_cast<size_t>(group.degree))
    throw MapError("r, t, l do not generate the group");
  return AlgebraicMap{std::move(group), std::move(r), std::move(t), std::move(l)};
}

MapDescriptor describe(const AlgebraicMap& m) {
  MapDescriptor d;
  d.x = (m.r * m.t).order();
  d.y = (m.r * m.l).order();
  d.group_order = group_order(m.group);
  auto n = static_cast<std::int64_t>(d.group_order);
  // chi = V + F - E with V = |G|/2y, F = |G|/2x, E = |G|/4; all exact
  // because <r,t> is dihedral of order 2x, <r,l> of order 2y and <t,l> is a
  // Klein four-group.
  std::int64_t faces = exact_div(n, 2 * static_cast<std::int64_t>(d.x), "2x");
  std::int64_t verts = exact_div(n, 2 * static_cast<std::int64_t>(d.y), "2y");
  std::int64_t edges = exact_div(n, 4, "4");
  d.chi = verts + faces - edges;
  // Orientable iff the even-word subgroup <tr, rl> has index 2.
  auto even_orbit = orbit_of({m.t * m.r, m.r * m.l, (m.t * m.r).inverse(), (m.r * m.l).inverse()}, 0);
  std::uint64_t index = d.group_order / even_orbit.size();
  d.orientable = index == 2;
  d.genus = d.orientable ? (2 - d.chi) / 2 : 2 - d.chi;
  return d;
}

AlgebraicMap dual(const AlgebraicMap& m) { return AlgebraicMap{m.group, m.r, m.l, m.t}; }

BlockQuotient block_quotient(const PermGroup& g, const PermGroup& n) {
  const auto degree = g.degree;
  require_regular(g, "block_quotient");
  if (n.degree != degree) throw MapError("subgroup degree mismatch");

  // Membership oracle: an element lies in N iff its image of 0 does.
  std::vector<char> in_n(static_cast<size_t>(degree), 0);
  for (auto q : orbit_of(n.generators, 0)) in_n[static_cast<size_t>(q)] = 1;

  for (const auto& x : g.generators) {
    Perm xinv = x.inverse();
    for (const auto& s : n.generators)
      if (!in_n[static_cast<size_t>((xinv * s * x)[0])]) throw MapError("subgroup is not normal");
  }

  // Blocks are the N-orbits (cosets of N); right multiplication descends to
  // the regular action of G/N on them.
  BlockQuotient out;
  out.block.assign(static_cast<size_t>(degree), -1);
  std::int32_t nblocks = 0;
  for (std::int64_t p = 0; p < degree; ++p) {
    if (out.block[static_cast<size_t>(p)] >= 0) continue;
    for (auto q : orbit_of(n.generators, static_cast<std::int32_t>(p)))
      out.block[static_cast<size_t>(q)] = nblocks;
    ++nblocks;
  }

  out.quotient.degree = nblocks;
  for (const auto& x : g.generators) {
    Perm q;
    q.img.assign(static_cast<size_t>(nblocks), -1);
    for (std::int64_t p = 0; p < degree; ++p)
      q.img[static_cast<size_t>(out.block[static_cast<size_t>(p)])] = out.block[static_cast<size_t>(x[p])];
    out.quotient.generators.push_back(std::move(q));
  }
  out.quotient.semiregular = true;
  out.quotient.cached_order = static_cast<std::uint64_t>(nblocks);
  return out;
}

AlgebraicMap quotient_map(const AlgebraicMap& m, const PermGroup& n) {
  BlockQuotient bq = block_quotient(m.group, n);
  const auto degree = m.group.degree;
  const std::int32_t nblocks = static_cast<std::int32_t>(bq.quotient.degree);
  auto project = [&](const Perm& x) {
    Perm q;
    q.img.assign(static_cast<size_t>(nblocks), -1);
    for (std::int64_t p = 0; p < degree; ++p)
      q.img[static_cast<size_t>(bq.block[static_cast<size_t>(p)])] = bq.block[static_cast<size_t>(x[p])];
    return q;
  };

  PermGroup qg = bq.quotient;
  Perm qr = project(m.r), qt = project(m.t), ql = project(m.l);
  if (qr.is_identity() || qt.is_identity() || ql.is_identity() || qt == ql)
    throw MapError("degenerate quotient: triple collapses in G/N");
  return build_map(std::move(qg), std::move(qr), std::move(qt), std::move(ql));
}

std::vector<AlgebraicMap> all_lifts(const PermGroup& g, const Perm& R, const Perm& S,
                                    std::size_t max_lifts) {
  require_regular(g, "lift_to_map");
  const auto n = g.degree;
  if (g.generators.empty()) return {};

  // Breadth-first tree over the generators gives every element a short word;
  // candidate involutions are tested through their word action instead of
  // materializing each permutation.
  std::vector<Perm> colperm;
  for (const auto& x : g.generators) {
    colperm.push_back(x);
    colperm.push_back(x.inverse());
  }
  std::vector<std::int32_t> parent(static_cast<size_t>(n), -1), via(static_cast<size_t>(n), -1);
  std::vector<std::int32_t> bfs{0};
  std::vector<char> seen(static_cast<size_t>(n), 0);
  seen[0] = 1;
  for (size_t i = 0; i < bfs.size(); ++i)
    for (size_t col = 0; col < colperm.size(); ++col) {
      std::int32_t q = colperm[col][bfs[i]];
      if (!seen[static_cast<size_t>(q)]) {
        seen[static_cast<size_t>(q)] = 1;
        parent[static_cast<size_t>(q)] = bfs[i];
        via[static_cast<size_t>(q)] = static_cast<std::int32_t>(col);
        bfs.push_back(q);
      }
    }

  std::vector<std::int32_t> cols;
  auto load_path = [&](std::int64_t c) {
    cols.clear();
    while (c != 0) {
      cols.push_back(via[static_cast<size_t>(c)]);
      c = parent[static_cast<size_t>(c)];
    }
    std::reverse(cols.begin(), cols.end());
  };
  auto apply_elem = [&](std::int64_t p) {
    for (auto col : cols) p = colperm[static_cast<size_t>(col)][p];
    return p;
  };

  std::vector<AlgebraicMap> out;
  // Candidates in lexicographic order of permutation images: a candidate r
  // sends 0 to c, so that order is just ascending c.
  for (std::int64_t c = 1; c < n && out.size() < max_lifts; ++c) {
    load_path(c);
    if (apply_elem(c) != 0) continue;  // r^2 != 1
    std::int64_t ct = R[c], cl = S[c];
    if (ct == 0 || cl == 0 || ct == cl) continue;          // t or l trivial, or t = l
    if (R[apply_elem(ct)] != 0) continue;                  // (rR)^2 != 1
    if (S[apply_elem(cl)] != 0) continue;                  // (rS)^2 != 1
    if (S[apply_elem(ct)] != R[apply_elem(cl)]) continue;  // tl != lt
    Perm r;
    r.img.resize(static_cast<size_t>(n));
    for (std::int64_t p = 0; p < n; ++p) r.img[static_cast<size_t>(p)] = static_cast<std::int32_t>(apply_elem(p));
    try {
      out.push_back(build_map(g, r, r * R, r * S));
    } catch (const MapError&) {
      // The involution conditions hold but the triple fails some other map
      // axiom (typically generation); not a lift.
    }
  }
  return out;
}

AlgebraicMap lift_to_map(const PermGroup& g, const Perm& R, const Perm& S) {
  auto lifts = all_lifts(g, R, S, 1);
  if (lifts.empty()) throw MapError("no lift exists for this (R, S) pair");
  return std::move(lifts.front());
}

bool maps_equal_up_to_iso(const AlgebraicMap& m1, const AlgebraicMap& m2) {
  std::uint64_t n = group_order(m1.group);
  if (n != group_order(m2.group)) return false;
  if (n > 20000) throw MapError("maps_equal_up_to_iso: group order exceeds the 20000 guard");

  // Try to extend r1->r2, t1->t2, l1->l2 to an isomorphism by walking the
  // Cayley graph: phi(x * gen1) := phi(x) * gen2, with phi(identity) =
  // identity. The triple generates, so the walk covers the group; any
  // conflict or collision refutes the isomorphism.
  const Perm* g1[3] = {&m1.r, &m1.t, &m1.l};
  const Perm* g2[3] = {&m2.r, &m2.t, &m2.l};
  std::vector<std::int32_t> phi(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<std::int32_t> queue{0};
  for (size_t i = 0; i < queue.size(); ++i) {
    std::int32_t x = queue[i];
    for (int k = 0; k < 3; ++k) {
      std::int32_t a = (*g1[k])[x];
      std::int32_t b = (*g2[k])[phi[static_cast<size_t>(x)]];
      std::int32_t& image = phi[static_cast<size_t>(a)];
      if (image < 0) {
        if (used[static_cast<size_t>(b)]) return false;
        image = b;
        used[static_cast<size_t>(b)] = 1;
        queue.push_back(a);
      } else if (image != b) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace regmap
