#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tribranch/surface.hpp"

namespace tribranch {

/// Isomorphism of decorated pants graphs that respects boundary leg labels.
struct GraphIso {
  std::vector<int> vertex_map;           // pants of the source -> pants of the target
  std::map<CurveId, CurveId> curve_map;  // curves of the source -> curves of the target
};

/// Canonical key of the decorated graph: the lexicographically smallest
/// serialization over all vertex orderings compatible with a vertex
/// invariant. Curve ids and slot order do not enter the key.
struct CanonicalForm {
  std::vector<int> key;
  std::vector<int> order;  // order[i] = original pants placed at position i
};

CanonicalForm canonical_form(const PantsDecomposition& pd);

std::optional<GraphIso> find_isomorphism(const PantsDecomposition& from,
                                         const PantsDecomposition& to);

/// Looks for a vertex bijection that carries every curve `c` of `from` onto
/// `curve_map[c]` of `to` and every leg onto the leg with the same label.
std::optional<GraphIso> isomorphism_with_curve_map(const PantsDecomposition& from,
                                                   const PantsDecomposition& to,
                                                   const std::map<CurveId, CurveId>& curve_map);

}  // namespace tribranch
