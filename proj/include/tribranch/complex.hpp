#pragma once

#include <array>
#include <string>
#include <vector>

#include "tribranch/openbook.hpp"
#include "tribranch/surface.hpp"

namespace tribranch {

enum class BranchType {
  HorizontalAnnulus,  // a component of some H_{k,gamma}
  PushoffAnnulus,     // {k/n} x annulus between gamma and its push-off
  PantsPiece,         // {k/n} x thrice-punctured sphere
  MergedPiece,        // {k/n} x (four-holed sphere or one-holed torus)
  TorusAnnulus,       // annulus on a boundary torus between two levels
  NaivePage,          // {k/3} x int F in the naive construction
};

std::string to_string(BranchType t);

struct Branch {
  BranchType type = BranchType::PantsPiece;
  SurfaceSig sig;                // compactification S^c
  int level = -1;                // page level k, or the slab for H / torus annuli
  std::vector<CurveId> curves;   // curves the branch is attached to
  int boundary_label = 0;        // TorusAnnulus only
};

enum class CircleType { Curve, Pushoff, Spine };

std::string to_string(CircleType t);

/// One local sheet at a branching circle: a boundary circle of a branch.
struct Germ {
  int branch = 0;
  int slot = 0;  // index of the boundary circle of S^c, 0..n_boundary-1

  friend bool operator==(const Germ&, const Germ&) = default;
};

struct BranchingCircle {
  CircleType type = CircleType::Curve;
  int level = 0;
  CurveId curve;           // Curve / Pushoff
  int boundary_label = 0;  // Spine
  std::vector<Germ> germs;
};

enum class BlockType { Product, SolidTorus };

struct Block {
  BlockType type = BlockType::Product;
  SurfaceSig base;         // Product: N^c = [0,1] x base
  int boundary_label = 0;  // SolidTorus
  int level = -1;          // slab index for product blocks
  int pi1_rank_bound = 0;
};

/// Free rank of pi_1 of a product block over `base`, or 1 for a solid torus.
int pi1_rank_bound(const Block& block);

/// Which block lies on side `side` (0 or 1) of a branch.
struct Incidence {
  int branch = 0;
  int side = 0;
  int block = 0;
};

enum class Construction { Naive, Outer, Handbuilt };

std::string to_string(Construction c);

struct TribranchedComplex {
  Construction construction = Construction::Handbuilt;
  SurfaceSig page;
  int levels = 0;  // number of page levels (n)
  bool degenerate_convention_used = false;
  std::vector<Branch> branches;
  std::vector<BranchingCircle> circles;
  std::vector<Block> blocks;
  std::vector<Incidence> incidences;

  int count(BranchType t) const;
  /// Branches joined through shared branching circles form one piece.
  bool connected() const;
};

TribranchedComplex construct_naive(const OpenBookSpec& spec);

/// Sigma_O together with the boundary tori. Requires chi(page) < 0 and a
/// valid pants path; an empty path uses a single level with D_0 = every
/// curve when the degenerate-path convention is on.
TribranchedComplex construct_outer(const OpenBookSpec& spec);

ValidationReport check_local_models(const TribranchedComplex& tc);

enum class ConditionStatus { Pass, StructuralPass, Fail, NotCertified };

std::string to_string(ConditionStatus s);

struct ConditionEntry {
  int number = 0;
  std::string statement;
  ConditionStatus status = ConditionStatus::NotCertified;
  std::string witness;
};

enum class EssentialVerdict { Essential, NotEssential, NotCertified };

std::string to_string(EssentialVerdict v);

struct EssentialityReport {
  std::array<ConditionEntry, 4> conditions;
  EssentialVerdict verdict = EssentialVerdict::NotCertified;
};

EssentialityReport check_essential(const TribranchedComplex& tc, const RankCertificate& cert);

struct EulerAudit {
  long long chi_from_branches = 0;
  long long chi_from_inventory = 0;
  std::vector<long long> page_chi_by_level;
  ValidationReport report;
};

/// Euler characteristic bookkeeping computed along two independent routes.
EulerAudit euler_audit(const TribranchedComplex& tc);

}  // namespace tribranch
