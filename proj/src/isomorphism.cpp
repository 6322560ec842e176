#include "tribranch/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <tuple>

namespace tribranch {

namespace {

constexpr double kMaxOrderings = 5.0e6;

// Neighbour of one cuff: a boundary leg (label >= 1) or the pants across a curve.
struct Cuff {
  int leg = 0;
  int other = -1;
};

std::vector<std::vector<Cuff>> cuffs_of(const PantsDecomposition& pd) {
  std::vector<std::vector<Cuff>> out(static_cast<std::size_t>(pd.num_pants));
  for (std::size_t i = 0; i < pd.legs.size(); ++i)
    out.at(pd.legs[i].vertex).push_back({static_cast<int>(i) + 1, -1});
  for (const auto& c : pd.curves) {
    out.at(c.ends[0].vertex).push_back({0, c.ends[1].vertex});
    out.at(c.ends[1].vertex).push_back({0, c.ends[0].vertex});
  }
  return out;
}

using Invariant = std::tuple<std::vector<int>, int, int>;

Invariant vertex_invariant(const std::vector<Cuff>& cuffs, int v) {
  std::vector<int> legs;
  int loops = 0;
  int others = 0;
  for (const auto& c : cuffs) {
    if (c.leg > 0) {
      legs.push_back(c.leg);
    } else if (c.other == v) {
      ++loops;
    } else {
      ++others;
    }
  }
  std::sort(legs.begin(), legs.end());
  return {legs, loops, others};
}

std::vector<Invariant> invariants_of(const PantsDecomposition& pd) {
  const auto cuffs = cuffs_of(pd);
  std::vector<Invariant> out;
  for (int v = 0; v < pd.num_pants; ++v) out.push_back(vertex_invariant(cuffs[v], v));
  return out;
}

// Visits every ordering of the vertices that lists cells in invariant order
// and permutes freely inside each cell. The visitor returns false to stop.
void for_each_ordering(std::vector<std::vector<int>> cells,
                       const std::function<bool(const std::vector<int>&)>& visit) {
  double total = 1;
  for (const auto& cell : cells)
    for (std::size_t i = 2; i <= cell.size(); ++i) total *= static_cast<double>(i);
  if (total > kMaxOrderings)
    throw TopologyError("decomposition too large for exhaustive canonical form");

  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
  std::vector<int> order;
  std::function<bool(std::size_t)> rec = [&](std::size_t ci) -> bool {
    if (ci == cells.size()) return visit(order);
    auto& cell = cells[ci];
    std::sort(cell.begin(), cell.end());
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      const bool go_on = rec(ci + 1);
      order.resize(order.size() - cell.size());
      if (!go_on) return false;
    } while (std::next_permutation(cell.begin(), cell.end()));
    return true;
  };
  rec(0);
}

std::vector<std::vector<int>> cells_by_invariant(const std::vector<Invariant>& inv) {
  std::map<Invariant, std::vector<int>> groups;
  for (int v = 0; v < static_cast<int>(inv.size()); ++v) groups[inv[v]].push_back(v);
  std::vector<std::vector<int>> cells;
  for (auto& [key, members] : groups) cells.push_back(std::move(members));
  return cells;
}

// Matches curves of `from` to curves of `to` once the vertex map is known:
// parallel curves between the same pair of pants pair up in id order.
std::optional<std::map<CurveId, CurveId>> match_curves(const PantsDecomposition& from,
                                                       const PantsDecomposition& to,
                                                       const std::vector<int>& vmap) {
  using Key = std::pair<int, int>;
  auto key = [](int a, int b) { return Key{std::min(a, b), std::max(a, b)}; };
  std::map<Key, std::vector<CurveId>> src, dst;
  for (const auto& c : from.curves)
    src[key(vmap[c.ends[0].vertex], vmap[c.ends[1].vertex])].push_back(c.id);
  for (const auto& c : to.curves) dst[key(c.ends[0].vertex, c.ends[1].vertex)].push_back(c.id);
  if (src.size() != dst.size()) return std::nullopt;
  std::map<CurveId, CurveId> out;
  for (auto& [k, ids] : src) {
    auto it = dst.find(k);
    if (it == dst.end() || it->second.size() != ids.size()) return std::nullopt;
    std::sort(ids.begin(), ids.end());
    std::sort(it->second.begin(), it->second.end());
    for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = it->second[i];
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const PantsDecomposition& pd) {
  const auto cuffs = cuffs_of(pd);
  const auto inv = invariants_of(pd);
  const int V = pd.num_pants;

  CanonicalForm best;
  std::vector<int> pos(static_cast<std::size_t>(V));
  std::vector<int> key;
  key.reserve(static_cast<std::size_t>(3 * V));
  for_each_ordering(cells_by_invariant(inv), [&](const std::vector<int>& order) {
    for (int i = 0; i < V; ++i) pos[order[i]] = i;
    key.clear();
    for (int i = 0; i < V; ++i) {
      std::vector<int> tokens;
      for (const auto& c : cuffs[order[i]]) tokens.push_back(c.leg > 0 ? -c.leg : pos[c.other]);
      std::sort(tokens.begin(), tokens.end());
      key.insert(key.end(), tokens.begin(), tokens.end());
    }
    if (best.order.empty() || key < best.key) {
      best.key = key;
      best.order = order;
    }
    return true;
  });
  return best;
}

std::optional<GraphIso> find_isomorphism(const PantsDecomposition& from,
                                         const PantsDecomposition& to) {
  if (from.num_pants != to.num_pants || from.curves.size() != to.curves.size() ||
      from.legs.size() != to.legs.size())
    return std::nullopt;
  const auto a = canonical_form(from);
  const auto b = canonical_form(to);
  if (a.key != b.key) return std::nullopt;

  GraphIso iso;
  iso.vertex_map.assign(static_cast<std::size_t>(from.num_pants), -1);
  for (std::size_t i = 0; i < a.order.size(); ++i) iso.vertex_map[a.order[i]] = b.order[i];
  auto curves = match_curves(from, to, iso.vertex_map);
  if (!curves) return std::nullopt;
  iso.curve_map = std::move(*curves);
  return iso;
}

std::optional<GraphIso> isomorphism_with_curve_map(const PantsDecomposition& from,
                                                   const PantsDecomposition& to,
                                                   const std::map<CurveId, CurveId>& curve_map) {
  if (from.num_pants != to.num_pants || from.legs.size() != to.legs.size() ||
      from.curves.size() != to.curves.size())
    return std::nullopt;
  const auto inv_from = invariants_of(from);
  const auto inv_to = invariants_of(to);

  const int V = from.num_pants;
  std::vector<int> vmap(static_cast<std::size_t>(V), -1);
  std::vector<bool> used(static_cast<std::size_t>(V), false);

  // Resolve the image of every curve up front.
  std::vector<std::pair<const CurveEdge*, const CurveEdge*>> pairs;
  for (const auto& c : from.curves) {
    const auto it = curve_map.find(c.id);
    if (it == curve_map.end()) return std::nullopt;
    const auto* img = to.find(it->second);
    if (img == nullptr) return std::nullopt;
    pairs.emplace_back(&c, img);
  }

  // Checks every constraint whose source vertices are all assigned.
  auto consistent_so_far = [&]() {
    for (std::size_t i = 0; i < from.legs.size(); ++i) {
      const int x = vmap[from.legs[i].vertex];
      if (x >= 0 && x != to.legs[i].vertex) return false;
    }
    for (const auto& [src, img] : pairs) {
      const int x = vmap[src->ends[0].vertex];
      const int y = vmap[src->ends[1].vertex];
      if (x < 0 || y < 0) continue;
      const int p = img->ends[0].vertex;
      const int q = img->ends[1].vertex;
      if (!((x == p && y == q) || (x == q && y == p))) return false;
    }
    return true;
  };

  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == V) return true;
    for (int w = 0; w < V; ++w) {
      if (used[w] || inv_from[v] != inv_to[w]) continue;
      vmap[v] = w;
      used[w] = true;
      if (consistent_so_far() && rec(v + 1)) return true;
      used[w] = false;
    }
    vmap[v] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return GraphIso{vmap, curve_map};
}

}  // namespace tribranch
