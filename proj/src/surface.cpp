#include "tribranch/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace tribranch {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool slot_in_range(const Slot& s, int num_pants) {
  return s.vertex >= 0 && s.vertex < num_pants && s.cuff >= 0 && s.cuff < 3;
}

std::string slot_str(const Slot& s) {
  std::ostringstream os;
  os << "(" << s.vertex << "," << s.cuff + 1 << ")";
  return os.str();
}

}  // namespace

int euler_char(SurfaceSig sig) { return 2 - 2 * sig.genus - sig.n_boundary; }

const CurveEdge* PantsDecomposition::find(CurveId id) const {
  for (const auto& c : curves)
    if (c.id == id) return &c;
  return nullptr;
}

Multicurve PantsDecomposition::curve_set() const {
  Multicurve out;
  for (const auto& c : curves) out.insert(c.id);
  return out;
}

bool PantsDecomposition::is_self_loop(CurveId id) const {
  const auto* c = find(id);
  return c != nullptr && c->ends[0].vertex == c->ends[1].vertex;
}

std::int64_t PantsDecomposition::max_curve_id() const {
  std::int64_t m = 0;
  for (const auto& c : curves) m = std::max(m, c.id.value);
  return m;
}

ValidationReport validate_pants(SurfaceSig sig, const PantsDecomposition& pd) {
  ValidationReport report;
  if (sig.genus < 0 || sig.n_boundary < 0) {
    report.add("pants", "negative genus or boundary count");
    return report;
  }
  if (euler_char(sig) >= 0) {
    report.add("pants", "no pants decomposition exists for a surface with chi >= 0");
    return report;
  }

  const int V = pd.num_pants;
  const int E = static_cast<int>(pd.curves.size());
  const int L = static_cast<int>(pd.legs.size());

  if (V != -euler_char(sig)) {
    report.add("pants", "pants count mismatch: have " + std::to_string(V) + ", need " +
                            std::to_string(-euler_char(sig)));
  }
  const int expected_edges = 3 * sig.genus + sig.n_boundary - 3;
  if (E != expected_edges) {
    report.add("pants", "curve count mismatch: have " + std::to_string(E) + ", need " +
                            std::to_string(expected_edges));
  }
  if (L != sig.n_boundary) {
    report.add("pants", "leg count mismatch: have " + std::to_string(L) + ", need " +
                            std::to_string(sig.n_boundary));
  }
  if (3 * V != 2 * E + L) {
    report.add("pants", "counting identity 3V = 2E + L fails");
  }

  std::set<CurveId> ids;
  for (const auto& c : pd.curves) {
    if (!ids.insert(c.id).second)
      report.add("pants", "duplicate curve id " + std::to_string(c.id.value));
  }

  // Slot occupancy.
  std::map<Slot, int> occupancy;
  bool slots_ok = true;
  auto occupy = [&](const Slot& s, const std::string& what) {
    if (!slot_in_range(s, V)) {
      report.add("pants", what + " uses out-of-range slot " + slot_str(s));
      slots_ok = false;
      return;
    }
    ++occupancy[s];
  };
  for (const auto& c : pd.curves) {
    occupy(c.ends[0], "curve " + std::to_string(c.id.value));
    occupy(c.ends[1], "curve " + std::to_string(c.id.value));
  }
  for (std::size_t i = 0; i < pd.legs.size(); ++i)
    occupy(pd.legs[i], "leg " + std::to_string(i + 1));
  if (slots_ok) {
    for (int v = 0; v < V; ++v) {
      for (int k = 0; k < 3; ++k) {
        const Slot s{v, k};
        const auto it = occupancy.find(s);
        const int n = it == occupancy.end() ? 0 : it->second;
        if (n != 1) {
          report.add("pants", "slot " + slot_str(s) + " used " + std::to_string(n) +
                                  " times (must be exactly once)");
        }
      }
    }
  }
  if (!slots_ok || V <= 0) return report;

  DisjointSets ds(V);
  for (const auto& c : pd.curves) ds.unite(c.ends[0].vertex, c.ends[1].vertex);
  int components = 0;
  for (int v = 0; v < V; ++v)
    if (ds.find(v) == v) ++components;
  if (components != 1) {
    report.add("pants", "graph is disconnected (" + std::to_string(components) + " components)");
  } else if (E - V + 1 != sig.genus) {
    report.add("pants", "cycle rank " + std::to_string(E - V + 1) + " differs from genus " +
                            std::to_string(sig.genus));
  }
  return report;
}

std::vector<int> cut_partition(const PantsDecomposition& pd, const Multicurve& removed) {
  for (const auto& id : removed) {
    if (!pd.contains(id))
      throw TopologyError("unknown curve id " + std::to_string(id.value));
  }
  DisjointSets ds(pd.num_pants);
  for (const auto& c : pd.curves)
    if (removed.count(c.id)) ds.unite(c.ends[0].vertex, c.ends[1].vertex);
  // Roots are the smallest member, so numbering roots in order of appearance
  // orders components by smallest pants index.
  std::vector<int> label(static_cast<std::size_t>(pd.num_pants), -1);
  std::vector<int> out(static_cast<std::size_t>(pd.num_pants));
  int next = 0;
  for (int v = 0; v < pd.num_pants; ++v) {
    const int r = ds.find(v);
    if (label[r] < 0) label[r] = next++;
    out[v] = label[r];
  }
  return out;
}

std::vector<SurfaceSig> cut_components(SurfaceSig /*sig*/, const PantsDecomposition& pd,
                                       const Multicurve& removed) {
  const auto part = cut_partition(pd, removed);
  const int n = part.empty() ? 0 : *std::max_element(part.begin(), part.end()) + 1;
  std::vector<int> verts(n, 0), edges(n, 0);
  for (int v = 0; v < pd.num_pants; ++v) ++verts[part[v]];
  for (const auto& c : pd.curves)
    if (removed.count(c.id)) ++edges[part[c.ends[0].vertex]];

  std::vector<SurfaceSig> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    // A connected union of V pants glued along E internal curves has chi = -V,
    // 3V - 2E free cuffs and cycle rank E - V + 1 handles.
    out.push_back({edges[i] - verts[i] + 1, 3 * verts[i] - 2 * edges[i]});
  }
  return out;
}

PantsDecomposition standard_decomposition(SurfaceSig sig) {
  if (sig.genus < 0 || sig.n_boundary < 0 || euler_char(sig) >= 0)
    throw TopologyError("no pants decomposition exists for a surface with chi >= 0");

  const int g = sig.genus;
  const int b = sig.n_boundary;
  PantsDecomposition pd;
  pd.legs.resize(b);
  std::int64_t next_id = 1;
  auto add_curve = [&](Slot a, Slot c) { pd.curves.push_back({CurveId{next_id++}, {a, c}}); };

  if (g + b == 2) {
    if (g == 2) {
      pd.num_pants = 2;
      add_curve({0, 0}, {0, 1});
      add_curve({1, 0}, {1, 1});
      add_curve({0, 2}, {1, 2});
    } else {  // (1, 1)
      pd.num_pants = 1;
      add_curve({0, 0}, {0, 1});
      pd.legs[0] = {0, 2};
    }
    return pd;
  }

  const int path_len = g + b - 2;
  pd.num_pants = path_len + g;

  std::vector<Slot> leaf_slots;
  if (path_len == 1) {
    leaf_slots = {{0, 0}, {0, 1}, {0, 2}};
  } else {
    leaf_slots = {{0, 0}, {0, 1}};
    for (int i = 1; i + 1 < path_len; ++i) leaf_slots.push_back({i, 1});
    leaf_slots.push_back({path_len - 1, 1});
    leaf_slots.push_back({path_len - 1, 2});
  }
  for (int i = 0; i + 1 < path_len; ++i) add_curve({i, 2}, {i + 1, 0});

  for (int h = 0; h < g; ++h) {
    const int v = path_len + h;
    add_curve({v, 0}, {v, 1});
    add_curve({v, 2}, leaf_slots[h]);
  }
  for (int l = 0; l < b; ++l) pd.legs[l] = leaf_slots[g + l];
  return pd;
}

}  // namespace tribranch
