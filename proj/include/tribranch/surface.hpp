#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "tribranch/errors.hpp"

namespace tribranch {

/// Compact oriented connected surface up to homeomorphism.
struct SurfaceSig {
  int genus = 0;
  int n_boundary = 0;

  auto operator<=>(const SurfaceSig&) const = default;
};

int euler_char(SurfaceSig sig);

struct CurveId {
  std::int64_t value = 0;

  auto operator<=>(const CurveId&) const = default;
};

using Multicurve = std::set<CurveId>;

/// A cuff slot of one pair of pants. `cuff` is 0-based (0..2).
struct Slot {
  int vertex = 0;
  int cuff = 0;

  auto operator<=>(const Slot&) const = default;
};

/// A curve of the decomposition, glued between two cuff slots. Both ends may
/// sit on the same vertex (a self-loop, i.e. a one-holed torus inside F).
struct CurveEdge {
  CurveId id;
  std::array<Slot, 2> ends;
};

/// Pants decomposition stored as a decorated trivalent graph.
///
/// Vertices are pants `0..num_pants-1`, each with three cuff slots. Every
/// slot carries exactly one curve end or one boundary leg. `legs[i]` is the
/// slot glued to boundary component `i + 1`.
struct PantsDecomposition {
  int num_pants = 0;
  std::vector<CurveEdge> curves;
  std::vector<Slot> legs;

  const CurveEdge* find(CurveId id) const;
  bool contains(CurveId id) const { return find(id) != nullptr; }
  Multicurve curve_set() const;
  bool is_self_loop(CurveId id) const;
  /// Largest curve id in use, or 0 when there are no curves.
  std::int64_t max_curve_id() const;
};

ValidationReport validate_pants(SurfaceSig sig, const PantsDecomposition& pd);

/// Homeomorphism types of the components of F cut along every curve of `pd`
/// except those in `removed`. Components are ordered by smallest pants index.
std::vector<SurfaceSig> cut_components(SurfaceSig sig, const PantsDecomposition& pd,
                                       const Multicurve& removed);

/// Partition of the pants into the components used by `cut_components`:
/// `result[v]` is the component index of pants `v`.
std::vector<int> cut_partition(const PantsDecomposition& pd, const Multicurve& removed);

/// Caterpillar decomposition: g one-holed tori and b legs hung off a path of
/// pants. Curve ids are 1..E. Throws when chi(F) >= 0.
PantsDecomposition standard_decomposition(SurfaceSig sig);

}  // namespace tribranch
