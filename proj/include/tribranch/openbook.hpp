#pragma once

#include <optional>
#include <string>

#include "tribranch/intalg.hpp"
#include "tribranch/pants_path.hpp"
#include "tribranch/surface.hpp"

namespace tribranch {

/// Action of the monodromy on H_1 of the page.
///
/// Basis order: a_1, b_1, ..., a_g, b_g, c_1, ..., c_{b-1}, where c_i is the
/// class of boundary component i (the last boundary class is omitted). Column
/// j of `matrix` is the image of basis vector j.
///
/// `arc_variation` has one column per boundary component i = 1..b-1: the
/// class phi(delta_i) - delta_i of a proper arc delta_i running from boundary
/// component b to component i. An empty matrix means every variation is zero.
struct MonodromyH1 {
  IntMatrix matrix;
  IntMatrix arc_variation;

  static MonodromyH1 identity(SurfaceSig page);
};

/// Rank of H_1 of the page: 2g + b - 1 (for b >= 1).
int h1_rank(SurfaceSig page);

/// Algebraic intersection form in the standard basis; boundary classes are
/// in its radical.
IntMatrix intersection_form(SurfaceSig page);

struct OpenBookSpec {
  std::string name;
  SurfaceSig page;
  MonodromyH1 monodromy;
  std::optional<PantsPath> pants_data;
  bool degenerate_path_convention = true;
};

ValidationReport validate_monodromy(SurfaceSig page, const MonodromyH1& m);

/// Presentation matrix of H_1 of the closed manifold: the columns
/// (phi_* - I) x over the closed basis, followed by the arc variations.
IntMatrix h1_presentation(const OpenBookSpec& spec);

AbelianGroup h1_open_book(const OpenBookSpec& spec);

enum class RankVerdict { Certified, Uncertified };

std::string to_string(RankVerdict v);

struct RankCertificate {
  AbelianGroup h1;
  int lower_bound = 0;
  RankVerdict verdict = RankVerdict::Uncertified;
  std::string statement;
};

RankCertificate rank_certificate(const OpenBookSpec& spec);

struct StabilizationResult {
  OpenBookSpec spec;
  /// Image of the old basis in the new one (new rank x old rank).
  IntMatrix change_of_basis;
  bool path_extended = false;
};

/// Positive stabilization plumbing a Hopf band at boundary component `site`:
/// the page gains a 1-handle with both feet on that component, so
/// (g, b) -> (g, b + 1). The new boundary component gets label b + 1.
///
/// The pants path is dropped unless `extend_path` is set, in which case the
/// caller asserts that the stabilizing curve misses every path curve and each
/// decomposition gains one pants around legs `site` and b + 1.
StabilizationResult stabilize(const OpenBookSpec& spec, int site, bool extend_path = false);

}  // namespace tribranch
