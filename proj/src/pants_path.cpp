#include "tribranch/pants_path.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tribranch/openbook.hpp"

namespace tribranch {

namespace {

std::string id_str(CurveId id) { return std::to_string(id.value); }

bool connected(const PantsDecomposition& pd) {
  if (pd.num_pants == 0) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(pd.num_pants));
  for (const auto& c : pd.curves) {
    adj[c.ends[0].vertex].push_back(c.ends[1].vertex);
    adj[c.ends[1].vertex].push_back(c.ends[0].vertex);
  }
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == pd.num_pants;
}

// Groups of support-cuff indices (0..3) for each re-pairing.
std::vector<std::vector<int>> repairing_groups(int pairing) {
  switch (pairing) {
    case 0: return {{0, 1}, {2, 3}};
    case 1: return {{0, 2}, {1, 3}};
    case 2: return {{0, 3}, {1, 2}};
    default: break;
  }
  const int alone = pairing - 3;
  std::vector<int> rest;
  for (int i = 0; i < 4; ++i)
    if (i != alone) rest.push_back(i);
  return {rest, {alone}};
}

std::vector<int> leg_profile(const PantsDecomposition& pd, const CurveEdge& c) {
  std::vector<int> labels;
  for (std::size_t i = 0; i < pd.legs.size(); ++i) {
    const int v = pd.legs[i].vertex;
    if (v == c.ends[0].vertex || v == c.ends[1].vertex) labels.push_back(static_cast<int>(i) + 1);
  }
  return labels;
}

}  // namespace

std::string to_string(MoveKind kind) { return kind == MoveKind::A ? "A" : "S"; }

MoveKind support_kind(const PantsDecomposition& pd, CurveId id) {
  const auto* c = pd.find(id);
  if (c == nullptr) throw TopologyError("unknown curve id " + id_str(id));
  const auto part = cut_partition(pd, {id});
  const auto comps = cut_components({}, pd, {id});
  const SurfaceSig support = comps.at(part[c->ends[0].vertex]);
  if (support == SurfaceSig{0, 4}) return MoveKind::A;
  if (support == SurfaceSig{1, 1}) return MoveKind::S;
  throw TopologyError("curve " + id_str(id) + " has an unexpected support");
}

PantsDecomposition apply_move(const PantsDecomposition& pd, const PantsMove& mv) {
  const auto* old = pd.find(mv.removed);
  if (old == nullptr) throw TopologyError("unknown curve id " + id_str(mv.removed));
  if (pd.contains(mv.added) && mv.added != mv.removed)
    throw TopologyError("added curve id " + id_str(mv.added) + " is not fresh");
  if (mv.added == mv.removed)
    throw TopologyError("added curve id " + id_str(mv.added) + " is not fresh");
  if (support_kind(pd, mv.removed) != mv.kind)
    throw TopologyError("kind mismatch: curve " + id_str(mv.removed) + " does not support an " +
                        to_string(mv.kind) + "-move");

  PantsDecomposition out = pd;
  if (mv.kind == MoveKind::S) {
    for (auto& c : out.curves)
      if (c.id == mv.removed) c.id = mv.added;
    return out;
  }

  if (mv.pairing < 0 || mv.pairing >= kNumRepairings)
    throw TopologyError("re-pairing index " + std::to_string(mv.pairing) + " out of range");

  const int u = std::min(old->ends[0].vertex, old->ends[1].vertex);
  const int v = std::max(old->ends[0].vertex, old->ends[1].vertex);
  auto free_cuffs = [&](int vertex) {
    std::vector<Slot> s;
    for (int k = 0; k < 3; ++k) {
      const Slot slot{vertex, k};
      if (slot != old->ends[0] && slot != old->ends[1]) s.push_back(slot);
    }
    return s;
  };
  std::vector<Slot> cuffs = free_cuffs(u);
  const auto vc = free_cuffs(v);
  cuffs.insert(cuffs.end(), vc.begin(), vc.end());

  const auto groups = repairing_groups(mv.pairing);
  std::map<Slot, Slot> moved;
  for (std::size_t i = 0; i < groups[0].size(); ++i)
    moved[cuffs[groups[0][i]]] = Slot{u, static_cast<int>(i)};
  for (std::size_t i = 0; i < groups[1].size(); ++i)
    moved[cuffs[groups[1][i]]] = Slot{v, static_cast<int>(i)};

  CurveEdge fresh{mv.added, {}};
  if (groups[0].size() == 2) {
    fresh.ends = {Slot{u, 2}, Slot{v, 2}};
  } else {
    fresh.ends = {Slot{v, 1}, Slot{v, 2}};
  }

  auto remap = [&](Slot& s) {
    const auto it = moved.find(s);
    if (it != moved.end()) s = it->second;
  };
  std::vector<CurveEdge> curves;
  for (auto c : pd.curves) {
    if (c.id == mv.removed) continue;
    remap(c.ends[0]);
    remap(c.ends[1]);
    curves.push_back(c);
  }
  curves.push_back(fresh);
  std::sort(curves.begin(), curves.end(),
            [](const CurveEdge& a, const CurveEdge& b) { return a.id < b.id; });
  out.curves = std::move(curves);
  for (auto& leg : out.legs) remap(leg);

  if (!connected(out)) throw TopologyError("re-pairing disconnects the graph");
  if (support_kind(out, mv.added) != MoveKind::A)
    throw TopologyError("kind mismatch: re-pairing changes the support of the move");
  return out;
}

Multicurve common_curves(const PantsDecomposition& c_k, const PantsDecomposition& c_next) {
  const auto a = c_k.curve_set();
  const auto b = c_next.curve_set();
  Multicurve common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(common, common.end()));
  const std::size_t only_a = a.size() - common.size();
  const std::size_t only_b = b.size() - common.size();
  if (only_a != only_b || only_a > 1) throw TopologyError("not an elementary move");
  return common;
}

std::vector<PantsDecomposition> path_levels(const PantsPath& path) {
  std::vector<PantsDecomposition> levels{path.start};
  levels.reserve(path.moves.size() + 1);
  for (std::size_t k = 0; k < path.moves.size(); ++k) {
    try {
      levels.push_back(apply_move(levels.back(), path.moves[k]));
    } catch (const TopologyError& e) {
      throw TopologyError("step " + std::to_string(k) + ": " + e.what());
    }
  }
  return levels;
}

std::optional<GraphIso> closure_isomorphism(const PantsDecomposition& last,
                                            const PantsDecomposition& target,
                                            const std::map<CurveId, CurveId>& closure) {
  return isomorphism_with_curve_map(last, target, closure);
}

ValidationReport validate_path(SurfaceSig sig, const PantsPath& path, const MonodromyH1& monodromy,
                               const PantsDecomposition* target) {
  ValidationReport report;
  const int k = 2 * sig.genus + std::max(sig.n_boundary - 1, 0);
  if (monodromy.matrix.rows() != k || monodromy.matrix.cols() != k)
    report.add("path", "monodromy dimension does not match the page");

  const auto start_report = validate_pants(sig, path.start);
  for (const auto& v : start_report.violations) report.add("path", "C_0: " + v.message);
  if (!start_report.ok()) return report;

  PantsDecomposition current = path.start;
  for (std::size_t step = 0; step < path.moves.size(); ++step) {
    const auto& mv = path.moves[step];
    const std::string where = "step " + std::to_string(step) + ": ";
    if (!current.contains(mv.removed)) {
      report.add("path", where + "removed curve " + id_str(mv.removed) + " absent from C_" +
                             std::to_string(step));
      return report;
    }
    PantsDecomposition next;
    try {
      next = apply_move(current, mv);
    } catch (const TopologyError& e) {
      report.add("path", where + e.what());
      return report;
    }
    const auto r = validate_pants(sig, next);
    for (const auto& v : r.violations) report.add("path", where + v.message);
    if (!r.ok()) return report;
    try {
      const auto d = common_curves(current, next);
      if (d.size() + 1 != current.curves.size())
        report.add("path", where + "consecutive decompositions differ in more than one curve");
    } catch (const TopologyError& e) {
      report.add("path", where + e.what());
    }
    current = std::move(next);
  }

  const PantsDecomposition& goal = target != nullptr ? *target : path.start;
  std::set<CurveId> keys, values;
  for (const auto& [from, to] : path.closure) {
    keys.insert(from);
    values.insert(to);
  }
  if (keys != current.curve_set() || values != goal.curve_set() ||
      values.size() != path.closure.size()) {
    report.add("path", "closure not a bijection between the curves of C_n and the target");
    return report;
  }
  for (const auto& c : current.curves) {
    const auto* img = goal.find(path.closure.at(c.id));
    if (leg_profile(current, c) != leg_profile(goal, *img)) {
      report.add("path", "closure not leg-preserving: curve " + id_str(c.id) + " -> " +
                             id_str(img->id));
      return report;
    }
  }
  if (!closure_isomorphism(current, goal, path.closure))
    report.add("path", "closure is not a graph isomorphism");
  return report;
}

std::optional<SearchResult> search_path(SurfaceSig sig, const PantsDecomposition& from,
                                        const PantsDecomposition& target, int budget) {
  if (budget <= 0) throw TopologyError("search budget must be positive");
  if (!validate_pants(sig, from).ok() || !validate_pants(sig, target).ok())
    throw TopologyError("search endpoints must be valid decompositions of the same surface");

  struct Node {
    PantsDecomposition pd;
    int parent = -1;
    PantsMove move;
    std::int64_t next_id = 0;
  };

  const auto goal_key = canonical_form(target).key;
  std::vector<Node> nodes;
  std::set<std::vector<int>> seen;
  std::deque<int> queue;

  auto finish = [&](int idx, int expanded) {
    SearchResult result;
    for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) result.moves.push_back(nodes[i].move);
    std::reverse(result.moves.begin(), result.moves.end());
    result.end = nodes[idx].pd;
    result.closure = find_isomorphism(result.end, target).value().curve_map;
    result.expanded = expanded;
    return result;
  };

  nodes.push_back({from, -1, {}, from.max_curve_id() + 1});
  const auto start_key = canonical_form(from).key;
  seen.insert(start_key);
  if (start_key == goal_key) return finish(0, 0);
  queue.push_back(0);

  int expanded = 0;
  while (!queue.empty() && expanded < budget) {
    const int idx = queue.front();
    queue.pop_front();
    ++expanded;

    std::vector<CurveId> ids;
    for (const auto& c : nodes[idx].pd.curves) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    for (const CurveId id : ids) {
      // S-moves never leave the isomorphism class, so only A-moves expand.
      if (nodes[idx].pd.is_self_loop(id)) continue;
      for (int pairing = 0; pairing < kNumLegalRepairings; ++pairing) {
        const PantsMove mv{id, CurveId{nodes[idx].next_id}, MoveKind::A, pairing};
        PantsDecomposition next = apply_move(nodes[idx].pd, mv);
        auto key = canonical_form(next).key;
        if (!seen.insert(key).second) continue;
        nodes.push_back({std::move(next), idx, mv, nodes[idx].next_id + 1});
        const int child = static_cast<int>(nodes.size()) - 1;
        if (key == goal_key) return finish(child, expanded);
        queue.push_back(child);
      }
    }
  }
  return std::nullopt;
}

}  // namespace tribranch
