#include "tribranch/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace tribranch {

std::string to_string(BranchType t) {
  switch (t) {
    case BranchType::HorizontalAnnulus: return "HorizontalAnnulus";
    case BranchType::PushoffAnnulus: return "PushoffAnnulus";
    case BranchType::PantsPiece: return "PantsPiece";
    case BranchType::MergedPiece: return "MergedPiece";
    case BranchType::TorusAnnulus: return "TorusAnnulus";
    case BranchType::NaivePage: return "NaivePage";
  }
  return "?";
}

std::string to_string(CircleType t) {
  switch (t) {
    case CircleType::Curve: return "Curve";
    case CircleType::Pushoff: return "Pushoff";
    case CircleType::Spine: return "Spine";
  }
  return "?";
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::Naive: return "naive";
    case Construction::Outer: return "outer";
    case Construction::Handbuilt: return "handbuilt";
  }
  return "?";
}

int pi1_rank_bound(const Block& block) {
  if (block.type == BlockType::SolidTorus) return 1;
  const auto& s = block.base;
  return 2 * s.genus + std::max(s.n_boundary - 1, 0);
}

int TribranchedComplex::count(BranchType t) const {
  return static_cast<int>(std::count_if(branches.begin(), branches.end(),
                                        [t](const Branch& b) { return b.type == t; }));
}

bool TribranchedComplex::connected() const {
  const int n = static_cast<int>(branches.size());
  if (n == 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : circles) {
    for (std::size_t i = 1; i < c.germs.size(); ++i) {
      const int a = c.germs[0].branch;
      const int b = c.germs[i].branch;
      if (a < 0 || a >= n || b < 0 || b >= n) continue;
      parent[find(a)] = find(b);
    }
  }
  const int root = find(0);
  for (int i = 1; i < n; ++i)
    if (find(i) != root) return false;
  return true;
}

TribranchedComplex construct_naive(const OpenBookSpec& spec) {
  if (euler_char(spec.page) > 0) throw TopologyError("χ(F) ≤ 0 required for the naive construction");

  TribranchedComplex tc;
  tc.construction = Construction::Naive;
  tc.page = spec.page;
  tc.levels = 3;
  for (int i = 0; i < 3; ++i) {
    tc.branches.push_back({BranchType::NaivePage, spec.page, i, {}, 0});
    Block block{BlockType::Product, spec.page, 0, i, 0};
    block.pi1_rank_bound = pi1_rank_bound(block);
    tc.blocks.push_back(block);
  }
  // The branching set is the spine; every page meets each binding circle.
  for (int label = 1; label <= spec.page.n_boundary; ++label) {
    BranchingCircle c{CircleType::Spine, 0, CurveId{}, label, {}};
    for (int i = 0; i < 3; ++i) c.germs.push_back({i, label - 1});
    tc.circles.push_back(std::move(c));
  }
  for (int i = 0; i < 3; ++i) {
    tc.incidences.push_back({i, 0, (i + 2) % 3});
    tc.incidences.push_back({i, 1, i});
  }
  return tc;
}

namespace {

using CircleKey = std::tuple<CircleType, int, std::int64_t, int>;

CircleKey curve_circle(int level, CurveId id) { return {CircleType::Curve, level, id.value, 0}; }
CircleKey pushoff_circle(int level, CurveId id) { return {CircleType::Pushoff, level, id.value, 0}; }
CircleKey spine_circle(int level, int label) { return {CircleType::Spine, level, 0, label}; }

Multicurve difference(const Multicurve& a, const Multicurve& b) {
  Multicurve out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

class OuterBuilder {
 public:
  explicit OuterBuilder(const OpenBookSpec& spec) : spec_(spec) {}

  TribranchedComplex build() {
    prepare_levels();
    tc_.construction = Construction::Outer;
    tc_.page = spec_.page;
    tc_.levels = n_;
    tc_.degenerate_convention_used = degenerate_;
    make_blocks();
    make_circles();
    for (int k = 0; k < n_; ++k) make_page(k);
    for (int k = 0; k < n_; ++k) make_horizontal(k);
    for (int k = 0; k < n_; ++k) make_torus_annuli(k);
    return std::move(tc_);
  }

 private:
  void prepare_levels() {
    const auto& path = *spec_.pants_data;
    levels_ = path_levels(path);
    if (path.moves.empty()) {
      if (!spec_.degenerate_path_convention)
        throw TopologyError("empty pants path requires the degenerate-path convention");
      degenerate_ = true;
      levels_.push_back(levels_.front());
      down_.push_back(levels_.front().curve_set());
    } else {
      for (std::size_t k = 0; k + 1 < levels_.size(); ++k)
        down_.push_back(common_curves(levels_[k], levels_[k + 1]));
    }
    n_ = static_cast<int>(down_.size());
    closure_ = path.closure;

    const auto iso = closure_isomorphism(levels_.back(), levels_.front(), closure_);
    if (!iso) throw TopologyError("closure is not a graph isomorphism");
    closure_inverse_.assign(iso->vertex_map.size(), -1);
    for (std::size_t v = 0; v < iso->vertex_map.size(); ++v)
      closure_inverse_[iso->vertex_map[v]] = static_cast<int>(v);

    for (int k = 0; k < n_; ++k) {
      if (k > 0) {
        up_.push_back(down_[k - 1]);
      } else {
        Multicurve moved;
        for (const auto& id : down_[n_ - 1]) moved.insert(closure_.at(id));
        up_.push_back(moved);
      }
    }
  }

  // Block of slab k containing pants `v` of C_k.
  int slab_block(int k, int v) const { return slab_offset_[k] + slab_part_[k][v]; }

  // Block just below page k containing pants `v` of C_k.
  int lower_block(int k, int v) const {
    if (k > 0) return slab_block(k - 1, v);
    return slab_block(n_ - 1, closure_inverse_[v]);
  }

  void make_blocks() {
    for (int k = 0; k < n_; ++k) {
      const auto& pd = levels_[k];
      const auto uncut = difference(pd.curve_set(), down_[k]);
      slab_part_.push_back(cut_partition(pd, uncut));
      slab_offset_.push_back(static_cast<int>(tc_.blocks.size()));
      for (const auto& sig : cut_components(spec_.page, pd, uncut)) {
        Block block{BlockType::Product, sig, 0, k, 0};
        block.pi1_rank_bound = pi1_rank_bound(block);
        tc_.blocks.push_back(block);
      }
    }
    solid_torus_offset_ = static_cast<int>(tc_.blocks.size());
    for (int label = 1; label <= spec_.page.n_boundary; ++label) {
      Block block{BlockType::SolidTorus, {}, label, -1, 0};
      block.pi1_rank_bound = pi1_rank_bound(block);
      tc_.blocks.push_back(block);
    }
  }

  void make_circles() {
    auto add = [&](CircleKey key) {
      circle_index_[key] = static_cast<int>(tc_.circles.size());
      BranchingCircle c;
      c.type = std::get<0>(key);
      c.level = std::get<1>(key);
      c.curve = CurveId{std::get<2>(key)};
      c.boundary_label = std::get<3>(key);
      tc_.circles.push_back(std::move(c));
    };
    for (int k = 0; k < n_; ++k) {
      for (const auto& id : down_[k]) add(curve_circle(k, id));
      for (const auto& id : up_[k]) add(pushoff_circle(k, id));
      for (int label = 1; label <= spec_.page.n_boundary; ++label) add(spine_circle(k, label));
    }
  }

  int add_branch(Branch b, const std::vector<CircleKey>& slots) {
    b.sig.n_boundary = static_cast<int>(slots.size());
    const int idx = static_cast<int>(tc_.branches.size());
    tc_.branches.push_back(std::move(b));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto it = circle_index_.find(slots[s]);
      if (it == circle_index_.end()) throw std::logic_error("outer construction: dangling circle");
      tc_.circles[it->second].germs.push_back({idx, static_cast<int>(s)});
    }
    return idx;
  }

  void make_page(int k) {
    const auto& pd = levels_[k];
    const auto& down = down_[k];
    const auto& up = up_[k];
    Multicurve cut = down;
    cut.insert(up.begin(), up.end());
    const auto uncut = difference(pd.curve_set(), cut);
    const auto part = cut_partition(pd, uncut);
    const auto sigs = cut_components(spec_.page, pd, uncut);

    // Boundary circle of each occupied cuff slot that bounds a page piece.
    std::map<Slot, CircleKey> slot_circle;
    for (std::size_t i = 0; i < pd.legs.size(); ++i)
      slot_circle[pd.legs[i]] = spine_circle(k, static_cast<int>(i) + 1);
    for (const auto& c : pd.curves) {
      if (uncut.count(c.id)) continue;
      const bool in_down = down.count(c.id) > 0;
      const bool in_up = up.count(c.id) > 0;
      // The push-off sits on the side of ends[1].
      if (in_down && in_up) {
        slot_circle[c.ends[0]] = curve_circle(k, c.id);
        slot_circle[c.ends[1]] = pushoff_circle(k, c.id);
      } else {
        const auto key = in_down ? curve_circle(k, c.id) : pushoff_circle(k, c.id);
        slot_circle[c.ends[0]] = key;
        slot_circle[c.ends[1]] = key;
      }
    }

    for (std::size_t comp = 0; comp < sigs.size(); ++comp) {
      Branch b;
      b.sig = sigs[comp];
      b.type = b.sig == SurfaceSig{0, 3} ? BranchType::PantsPiece : BranchType::MergedPiece;
      b.level = k;
      int any_vertex = -1;
      std::vector<CircleKey> slots;
      for (int v = 0; v < pd.num_pants; ++v) {
        if (part[v] != static_cast<int>(comp)) continue;
        if (any_vertex < 0) any_vertex = v;
        for (int cuff = 0; cuff < 3; ++cuff) {
          const auto it = slot_circle.find(Slot{v, cuff});
          if (it != slot_circle.end()) slots.push_back(it->second);
        }
      }
      for (const auto& c : pd.curves)
        if (uncut.count(c.id) && part[c.ends[0].vertex] == static_cast<int>(comp)) b.curves.push_back(c.id);
      const int idx = add_branch(b, slots);
      tc_.incidences.push_back({idx, 0, lower_block(k, any_vertex)});
      tc_.incidences.push_back({idx, 1, slab_block(k, any_vertex)});
    }

    for (const auto& c : pd.curves) {
      if (!(down.count(c.id) && up.count(c.id))) continue;
      Branch b{BranchType::PushoffAnnulus, {0, 2}, k, {c.id}, 0};
      const int idx = add_branch(b, {curve_circle(k, c.id), pushoff_circle(k, c.id)});
      tc_.incidences.push_back({idx, 0, lower_block(k, c.ends[0].vertex)});
      tc_.incidences.push_back({idx, 1, slab_block(k, c.ends[1].vertex)});
    }
  }

  void make_horizontal(int k) {
    const auto& pd = levels_[k];
    for (const auto& id : down_[k]) {
      const auto* c = pd.find(id);
      const CircleKey top = k + 1 < n_ ? pushoff_circle(k + 1, id) : pushoff_circle(0, closure_.at(id));
      Branch b{BranchType::HorizontalAnnulus, {0, 2}, k, {id}, 0};
      const int idx = add_branch(b, {curve_circle(k, id), top});
      tc_.incidences.push_back({idx, 0, slab_block(k, c->ends[0].vertex)});
      tc_.incidences.push_back({idx, 1, slab_block(k, c->ends[1].vertex)});
    }
  }

  void make_torus_annuli(int k) {
    const auto& pd = levels_[k];
    for (int label = 1; label <= spec_.page.n_boundary; ++label) {
      Branch b{BranchType::TorusAnnulus, {0, 2}, k, {}, label};
      const int idx = add_branch(b, {spine_circle(k, label), spine_circle((k + 1) % n_, label)});
      tc_.incidences.push_back({idx, 0, solid_torus_offset_ + label - 1});
      tc_.incidences.push_back({idx, 1, slab_block(k, pd.legs[label - 1].vertex)});
    }
  }

  const OpenBookSpec& spec_;
  TribranchedComplex tc_;
  std::vector<PantsDecomposition> levels_;
  std::vector<Multicurve> down_;  // D_k, curves of C_k carrying H_{k, gamma}
  std::vector<Multicurve> up_;    // curves of C_k whose push-off receives H_{k-1, gamma}
  std::map<CurveId, CurveId> closure_;
  std::vector<int> closure_inverse_;  // pants of C_0 -> pants of C_n
  std::vector<std::vector<int>> slab_part_;
  std::vector<int> slab_offset_;
  int solid_torus_offset_ = 0;
  std::map<CircleKey, int> circle_index_;
  int n_ = 0;
  bool degenerate_ = false;
};

}  // namespace

TribranchedComplex construct_outer(const OpenBookSpec& spec) {
  if (euler_char(spec.page) >= 0) throw TopologyError("χ(F) < 0 required for the outer construction");
  if (!spec.pants_data) throw TopologyError("pants data required for outer construction");
  const auto report = validate_path(spec.page, *spec.pants_data, spec.monodromy);
  if (!report.ok()) throw TopologyError("invalid pants data: " + report.violations.front().message);
  return OuterBuilder(spec).build();
}

}  // namespace tribranch
