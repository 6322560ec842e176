#include <algorithm>
#include <map>

#include "tribranch/complex.hpp"

namespace tribranch {

std::string to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Pass: return "Pass";
    case ConditionStatus::StructuralPass: return "StructuralPass";
    case ConditionStatus::Fail: return "Fail";
    case ConditionStatus::NotCertified: return "NotCertified";
  }
  return "?";
}

std::string to_string(EssentialVerdict v) {
  switch (v) {
    case EssentialVerdict::Essential: return "Essential";
    case EssentialVerdict::NotEssential: return "NotEssential";
    case EssentialVerdict::NotCertified: return "NotCertified";
  }
  return "?";
}

ValidationReport check_local_models(const TribranchedComplex& tc) {
  ValidationReport report;
  const int nb = static_cast<int>(tc.branches.size());

  for (int i = 0; i < nb; ++i) {
    const auto& s = tc.branches[i].sig;
    if (s.genus < 0 || s.n_boundary < 0)
      report.add("local", "branch " + std::to_string(i) + " has an invalid signature");
  }

  std::map<std::pair<int, int>, int> slot_use;
  for (std::size_t ci = 0; ci < tc.circles.size(); ++ci) {
    const auto& c = tc.circles[ci];
    if (c.germs.size() != 3) {
      report.add("local", "circle " + std::to_string(ci) + " has " + std::to_string(c.germs.size()) +
                              " germs (the triple-line model needs 3)");
    }
    for (const auto& g : c.germs) {
      if (g.branch < 0 || g.branch >= nb || g.slot < 0 ||
          g.slot >= tc.branches[g.branch].sig.n_boundary) {
        report.add("local", "circle " + std::to_string(ci) + " references a missing branch boundary");
        continue;
      }
      ++slot_use[{g.branch, g.slot}];
    }
  }
  for (int i = 0; i < nb; ++i) {
    for (int s = 0; s < tc.branches[i].sig.n_boundary; ++s) {
      const auto it = slot_use.find({i, s});
      const int n = it == slot_use.end() ? 0 : it->second;
      if (n != 1) {
        report.add("local", "boundary circle " + std::to_string(s) + " of branch " + std::to_string(i) +
                                " appears in " + std::to_string(n) + " germs (need exactly 1)");
      }
    }
  }

  std::map<std::pair<int, int>, int> side_use;
  for (const auto& inc : tc.incidences) {
    if (inc.branch < 0 || inc.branch >= nb || inc.side < 0 || inc.side > 1 || inc.block < 0 ||
        inc.block >= static_cast<int>(tc.blocks.size())) {
      report.add("local", "incidence references a missing branch, side or block");
      continue;
    }
    ++side_use[{inc.branch, inc.side}];
  }
  for (int i = 0; i < nb; ++i) {
    for (int side = 0; side < 2; ++side) {
      const auto it = side_use.find({i, side});
      const int n = it == side_use.end() ? 0 : it->second;
      if (n != 1) {
        report.add("local", "side " + std::to_string(side) + " of branch " + std::to_string(i) +
                                " is assigned to " + std::to_string(n) + " blocks (need exactly 1)");
      }
    }
  }
  return report;
}

namespace {

bool page_derived(BranchType t) {
  return t == BranchType::PantsPiece || t == BranchType::MergedPiece || t == BranchType::NaivePage;
}

// Branch/block pairs whose inclusion the constructions certify to be
// pi_1-injective. Returns an empty string when whitelisted.
std::string injectivity_gap(const Branch& br, const Block& bl) {
  const bool product = bl.type == BlockType::Product;
  const bool hyperbolic_base = product && euler_char(bl.base) < 0;
  switch (br.type) {
    case BranchType::NaivePage:
      if (product && bl.base == br.sig) return {};
      return "page branch not glued to a product over the same page";
    case BranchType::PantsPiece:
    case BranchType::MergedPiece:
      if (hyperbolic_base && euler_char(br.sig) < 0) return {};
      return "page piece not glued to a product block over a hyperbolic subsurface";
    case BranchType::PushoffAnnulus:
    case BranchType::HorizontalAnnulus:
      if (hyperbolic_base) return {};
      return "annulus not glued to a product block over a hyperbolic subsurface";
    case BranchType::TorusAnnulus:
      if (bl.type == BlockType::SolidTorus || hyperbolic_base) return {};
      return "torus annulus not glued to a solid torus or hyperbolic product block";
  }
  return "unknown branch type";
}

}  // namespace

EssentialityReport check_essential(const TribranchedComplex& tc, const RankCertificate& cert) {
  const auto local = check_local_models(tc);
  if (!local.ok()) throw TopologyError("local models are not clean: " + local.violations.front().message);

  EssentialityReport rep;
  auto& c1 = rep.conditions[0];
  auto& c2 = rep.conditions[1];
  auto& c3 = rep.conditions[2];
  auto& c4 = rep.conditions[3];
  c1.number = 1;
  c1.statement = "(1) no branch is a disc";
  c2.number = 2;
  c2.statement = "(2) no component is contained in a ball";
  c3.number = 3;
  c3.statement = "(3) pi_1(S) -> pi_1(N^c) is injective for every branch S in the closure of a block N";
  c4.number = 4;
  c4.statement = "(4) no block induces a surjection onto pi_1(M)";

  // (1)
  c1.status = ConditionStatus::Pass;
  c1.witness = "all " + std::to_string(tc.branches.size()) + " branches have chi <= 0";
  for (std::size_t i = 0; i < tc.branches.size(); ++i) {
    if (tc.branches[i].sig == SurfaceSig{0, 1}) {
      c1.status = ConditionStatus::Fail;
      c1.witness = "branch " + std::to_string(i) + " is a disc";
      break;
    }
  }

  // (2)
  const bool connected = tc.connected();
  const auto hyperbolic = std::find_if(tc.branches.begin(), tc.branches.end(), [](const Branch& b) {
    return page_derived(b.type) && euler_char(b.sig) < 0;
  });
  if (connected && hyperbolic != tc.branches.end()) {
    c2.status = ConditionStatus::StructuralPass;
    c2.witness = "complex is connected and contains page-derived branch " +
                 std::to_string(hyperbolic - tc.branches.begin()) +
                 " with chi < 0 (structural reading of the condition)";
  } else {
    c2.status = ConditionStatus::NotCertified;
    c2.witness = connected ? "no page-derived branch with chi < 0" : "complex is disconnected";
  }

  // (3)
  c3.status = ConditionStatus::StructuralPass;
  c3.witness = "all " + std::to_string(tc.incidences.size()) +
               " branch/block incidences match construction-certified patterns";
  for (const auto& inc : tc.incidences) {
    const auto gap = injectivity_gap(tc.branches[inc.branch], tc.blocks[inc.block]);
    if (!gap.empty()) {
      c3.status = ConditionStatus::NotCertified;
      c3.witness = "branch " + std::to_string(inc.branch) + " / block " + std::to_string(inc.block) +
                   ": " + gap;
      break;
    }
  }

  // (4)
  int worst = -1;
  int worst_bound = 0;
  for (std::size_t i = 0; i < tc.blocks.size(); ++i) {
    if (tc.blocks[i].pi1_rank_bound > worst_bound) {
      worst_bound = tc.blocks[i].pi1_rank_bound;
      worst = static_cast<int>(i);
    }
  }
  const auto whole_page = std::find_if(tc.blocks.begin(), tc.blocks.end(), [&](const Block& b) {
    return b.type == BlockType::Product && b.base == tc.page && tc.page.n_boundary >= 1;
  });
  if (whole_page != tc.blocks.end()) {
    c4.status = ConditionStatus::Fail;
    c4.witness = "block " + std::to_string(whole_page - tc.blocks.begin()) +
                 " is a product over the whole page, and pi_1 of a page surjects onto pi_1 of its open book";
  } else if (worst_bound > 3) {
    c4.status = ConditionStatus::NotCertified;
    c4.witness = "block " + std::to_string(worst) + " has pi_1 rank bound " + std::to_string(worst_bound) + " > 3";
  } else if (cert.verdict != RankVerdict::Certified) {
    c4.status = ConditionStatus::NotCertified;
    c4.witness = "every block has pi_1 rank bound <= 3, but the H_1 lower bound is " +
                 std::to_string(cert.lower_bound) + " < 4: " + cert.statement;
  } else {
    c4.status = ConditionStatus::Pass;
    c4.witness = "every block has pi_1 rank bound <= " + std::to_string(worst_bound) +
                 " < 4 <= " + std::to_string(cert.lower_bound) + " <= rank pi_1(M)";
  }

  bool any_fail = false;
  bool all_pass = true;
  for (const auto& c : rep.conditions) {
    if (c.status == ConditionStatus::Fail) any_fail = true;
    if (c.status != ConditionStatus::Pass && c.status != ConditionStatus::StructuralPass) all_pass = false;
  }
  rep.verdict = all_pass ? EssentialVerdict::Essential
                         : (any_fail ? EssentialVerdict::NotEssential : EssentialVerdict::NotCertified);
  return rep;
}

EulerAudit euler_audit(const TribranchedComplex& tc) {
  EulerAudit audit;
  const long long page_chi = euler_char(tc.page);

  // Route 1: glue compactified branches along circles (circles have chi 0).
  for (const auto& b : tc.branches) audit.chi_from_branches += euler_char(b.sig);

  // Route 2: the construction's inventory. Each level contributes one full
  // page; every annulus contributes 0.
  switch (tc.construction) {
    case Construction::Naive:
    case Construction::Outer:
      audit.chi_from_inventory = static_cast<long long>(tc.levels) * page_chi;
      break;
    case Construction::Handbuilt:
      audit.chi_from_inventory = audit.chi_from_branches;
      break;
  }
  if (audit.chi_from_branches != audit.chi_from_inventory) {
    audit.report.add("euler", "chi(Sigma) from branches " + std::to_string(audit.chi_from_branches) +
                                  " differs from inventory " + std::to_string(audit.chi_from_inventory));
  }

  if (tc.construction == Construction::Handbuilt) return audit;

  audit.page_chi_by_level.assign(static_cast<std::size_t>(tc.levels), 0);
  for (std::size_t i = 0; i < tc.branches.size(); ++i) {
    const auto& b = tc.branches[i];
    const long long chi = euler_char(b.sig);
    switch (b.type) {
      case BranchType::NaivePage:
        if (chi != page_chi)
          audit.report.add("euler", "naive branch " + std::to_string(i) + " has chi != chi(F)");
        [[fallthrough]];
      case BranchType::PantsPiece:
      case BranchType::MergedPiece:
      case BranchType::PushoffAnnulus:
        if (b.level >= 0 && b.level < tc.levels) audit.page_chi_by_level[b.level] += chi;
        break;
      default:
        break;
    }
    const bool annulus = b.type == BranchType::PushoffAnnulus || b.type == BranchType::HorizontalAnnulus ||
                         b.type == BranchType::TorusAnnulus;
    if (annulus && chi != 0)
      audit.report.add("euler", "annulus branch " + std::to_string(i) + " has chi != 0");
  }
  for (std::size_t k = 0; k < audit.page_chi_by_level.size(); ++k) {
    if (audit.page_chi_by_level[k] != page_chi) {
      audit.report.add("euler", "page pieces at level " + std::to_string(k) + " sum to chi " +
                                    std::to_string(audit.page_chi_by_level[k]) + " instead of " +
                                    std::to_string(page_chi));
    }
  }
  return audit;
}

}  // namespace tribranch
