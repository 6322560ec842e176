#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tribranch/isomorphism.hpp"
#include "tribranch/surface.hpp"

namespace tribranch {

struct MonodromyH1;

enum class MoveKind {
  A,  // support is a four-holed sphere
  S,  // support is a one-holed torus
};

std::string to_string(MoveKind kind);

/// Number of re-pairings `apply_move` understands for an A-move. Indices
/// 0..2 split the four support cuffs 2+2 (0 keeps the current split);
/// indices 3..6 are the degenerate 3+1 splits that leave cuff `pairing - 3`
/// alone with both ends of the new curve.
inline constexpr int kNumRepairings = 7;
inline constexpr int kNumLegalRepairings = 3;

struct PantsMove {
  CurveId removed;
  CurveId added;
  MoveKind kind = MoveKind::A;
  int pairing = 0;  // ignored for S-moves
};

/// A path (C_0, ..., C_n) of pants decompositions together with a relabeling
/// of the curves of C_n onto the curves of the decomposition it should close
/// up on (the image of C_0 under the monodromy).
struct PantsPath {
  PantsDecomposition start;
  std::vector<PantsMove> moves;
  std::map<CurveId, CurveId> closure;
};

/// Support type (A or S) of a curve: the component of F cut along every
/// other curve is a four-holed sphere or a one-holed torus.
MoveKind support_kind(const PantsDecomposition& pd, CurveId id);

PantsDecomposition apply_move(const PantsDecomposition& pd, const PantsMove& mv);

/// D = C_k intersect C_{k+1}. The two decompositions must differ in at most
/// one curve each (identical decompositions give back every curve).
Multicurve common_curves(const PantsDecomposition& c_k, const PantsDecomposition& c_next);

/// Decompositions C_0..C_n obtained by applying the moves in order. Throws
/// TopologyError at the first illegal move.
std::vector<PantsDecomposition> path_levels(const PantsPath& path);

/// Checks every path invariant, reporting failures with their step index.
/// `target` is the decomposition the closure maps onto; it defaults to
/// `path.start` (the monodromy is only known on homology, so its image of
/// C_0 is represented by C_0 with the same curve names).
ValidationReport validate_path(SurfaceSig sig, const PantsPath& path, const MonodromyH1& monodromy,
                               const PantsDecomposition* target = nullptr);

/// Vertex isomorphism C_n -> target induced by the closure; nullopt when the
/// closure is not a leg-preserving graph isomorphism.
std::optional<GraphIso> closure_isomorphism(const PantsDecomposition& last,
                                            const PantsDecomposition& target,
                                            const std::map<CurveId, CurveId>& closure);

struct SearchResult {
  std::vector<PantsMove> moves;
  PantsDecomposition end;
  std::map<CurveId, CurveId> closure;  // curves of `end` -> curves of the target
  int expanded = 0;
};

/// Breadth-first search over isomorphism classes of decorated pants graphs.
/// Nodes are expanded in BFS order and, within a node, moves are tried by
/// (removed curve id, re-pairing index). At most `budget` nodes are expanded.
std::optional<SearchResult> search_path(SurfaceSig sig, const PantsDecomposition& from,
                                        const PantsDecomposition& target, int budget);

}  // namespace tribranch
