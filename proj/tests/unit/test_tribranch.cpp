#include <doctest.h>

#include <map>

#include "support/generators.hpp"
#include "tribranch/complex.hpp"

using namespace tribranch;

namespace {

OpenBookSpec identity_spec(SurfaceSig page, bool with_path) {
  OpenBookSpec s;
  s.page = page;
  s.monodromy = MonodromyH1::identity(page);
  if (with_path) {
    PantsPath p;
    p.start = standard_decomposition(page);
    for (const auto& c : p.start.curves) p.closure[c.id] = c.id;
    s.pants_data = p;
  }
  return s;
}

std::map<BranchType, int> branch_counts(const TribranchedComplex& tc) {
  std::map<BranchType, int> out;
  for (const auto& b : tc.branches) ++out[b.type];
  return out;
}

// Three discs meeting along one circle, separated by three balls.
TribranchedComplex three_discs() {
  TribranchedComplex tc;
  tc.construction = Construction::Handbuilt;
  tc.page = {0, 1};
  for (int i = 0; i < 3; ++i) tc.branches.push_back({BranchType::NaivePage, {0, 1}, i, {}, 0});
  tc.circles.push_back({CircleType::Spine, 0, CurveId{}, 1, {{0, 0}, {1, 0}, {2, 0}}});
  for (int i = 0; i < 3; ++i) {
    tc.blocks.push_back({BlockType::Product, {0, 1}, 0, i, 0});
    tc.incidences.push_back({i, 1, i});
    tc.incidences.push_back({(i + 1) % 3, 0, i});
  }
  return tc;
}

}  // namespace

TEST_CASE("naive construction") {
  SUBCASE("one-holed torus") {
    const auto tc = construct_naive(identity_spec({1, 1}, false));
    CHECK(tc.branches.size() == 3);
    CHECK(tc.blocks.size() == 3);
    CHECK(tc.circles.size() == 1);
    for (const auto& b : tc.branches) CHECK(euler_char(b.sig) == -1);
    CHECK(check_local_models(tc).ok());
    const auto audit = euler_audit(tc);
    CHECK(audit.report.ok());
    CHECK(audit.chi_from_branches == -3);
  }
  SUBCASE("pair of pants") {
    const auto tc = construct_naive(identity_spec({0, 3}, false));
    CHECK(tc.branches.size() == 3);
    CHECK(tc.blocks.size() == 3);
    CHECK(tc.circles.size() == 3);
    CHECK(check_local_models(tc).ok());
  }
  SUBCASE("annulus is allowed, disc is not") {
    CHECK_NOTHROW(construct_naive(identity_spec({0, 2}, false)));
    CHECK_THROWS_WITH_AS(construct_naive(identity_spec({0, 1}, false)), doctest::Contains("≤ 0 required"),
                         TopologyError);
  }
  SUBCASE("essentiality") {
    const auto tc = construct_naive(identity_spec({1, 1}, false));
    const auto rep = check_essential(tc, rank_certificate(identity_spec({1, 1}, false)));
    CHECK(rep.conditions[0].status == ConditionStatus::Pass);
    CHECK(rep.conditions[2].status == ConditionStatus::StructuralPass);
    CHECK(rep.conditions[3].status == ConditionStatus::Fail);
    CHECK(rep.verdict == EssentialVerdict::NotEssential);
  }
}

TEST_CASE("outer construction on the four-holed sphere") {
  const auto tc = construct_outer(identity_spec({0, 4}, true));
  CHECK(tc.degenerate_convention_used);
  CHECK(tc.levels == 1);
  const auto counts = branch_counts(tc);
  CHECK(tc.branches.size() == 8);
  CHECK(counts.at(BranchType::HorizontalAnnulus) == 1);
  CHECK(counts.at(BranchType::PushoffAnnulus) == 1);
  CHECK(counts.at(BranchType::PantsPiece) == 2);
  CHECK(counts.at(BranchType::TorusAnnulus) == 4);

  CHECK(tc.circles.size() == 6);
  std::map<CircleType, int> circles;
  for (const auto& c : tc.circles) {
    ++circles[c.type];
    CHECK(c.germs.size() == 3);
  }
  CHECK(circles[CircleType::Curve] == 1);
  CHECK(circles[CircleType::Pushoff] == 1);
  CHECK(circles[CircleType::Spine] == 4);

  CHECK(tc.blocks.size() == 6);
  int products = 0;
  for (const auto& b : tc.blocks) {
    if (b.type == BlockType::Product) {
      ++products;
      CHECK(b.base == SurfaceSig{0, 3});
    }
  }
  CHECK(products == 2);
  CHECK(tc.connected());
  CHECK(check_local_models(tc).ok());
  CHECK(euler_audit(tc).report.ok());
}

TEST_CASE("outer construction preconditions") {
  CHECK_THROWS_WITH_AS(construct_outer(identity_spec({1, 1}, false)),
                       doctest::Contains("pants data required for outer construction"), TopologyError);
  CHECK_THROWS_AS(construct_outer(identity_spec({0, 2}, false)), TopologyError);
  auto strict = identity_spec({0, 5}, true);
  strict.degenerate_path_convention = false;
  CHECK_THROWS_AS(construct_outer(strict), TopologyError);
  auto broken = identity_spec({0, 5}, true);
  broken.pants_data->closure.clear();
  CHECK_THROWS_AS(construct_outer(broken), TopologyError);
}

TEST_CASE("S-move path on the one-holed torus") {
  auto s = identity_spec({1, 1}, true);
  s.pants_data->moves = {{CurveId{1}, CurveId{2}, MoveKind::S, 0}, {CurveId{2}, CurveId{3}, MoveKind::S, 0}};
  s.pants_data->closure = {{CurveId{3}, CurveId{1}}};
  const auto tc = construct_outer(s);
  CHECK(tc.levels == 2);
  CHECK_FALSE(tc.degenerate_convention_used);

  // Oracle: the support of a self-loop is the surface cut along nothing else.
  const auto support = cut_components({1, 1}, s.pants_data->start, {CurveId{1}});
  REQUIRE(support.size() == 1);
  int merged = 0;
  for (const auto& b : tc.branches) {
    if (b.type != BranchType::MergedPiece) continue;
    ++merged;
    CHECK(b.sig == support[0]);
  }
  CHECK(merged == 2);
  CHECK(check_local_models(tc).ok());
  CHECK(euler_audit(tc).report.ok());
}

TEST_CASE("essentiality of outer complexes") {
  SUBCASE("five-holed sphere") {
    const auto spec = identity_spec({0, 5}, true);
    const auto rep = check_essential(construct_outer(spec), rank_certificate(spec));
    CHECK(rep.conditions[0].status == ConditionStatus::Pass);
    CHECK(rep.conditions[1].status == ConditionStatus::StructuralPass);
    CHECK(rep.conditions[2].status == ConditionStatus::StructuralPass);
    CHECK(rep.conditions[3].status == ConditionStatus::Pass);
    CHECK(rep.verdict == EssentialVerdict::Essential);
  }
  SUBCASE("one-holed torus") {
    const auto spec = identity_spec({1, 1}, true);
    const auto rep = check_essential(construct_outer(spec), rank_certificate(spec));
    CHECK(rep.conditions[3].status == ConditionStatus::NotCertified);
    for (const auto& c : rep.conditions) CHECK(c.status != ConditionStatus::Fail);
    CHECK(rep.verdict == EssentialVerdict::NotCertified);
  }
}

TEST_CASE("hand-built complexes") {
  SUBCASE("three discs") {
    const auto tc = three_discs();
    REQUIRE(check_local_models(tc).ok());
    CHECK(tc.connected());
    const auto rep = check_essential(tc, rank_certificate(identity_spec({0, 1}, false)));
    CHECK(rep.conditions[0].status == ConditionStatus::Fail);
    CHECK(rep.verdict == EssentialVerdict::NotEssential);
    CHECK(euler_audit(tc).chi_from_branches == 3);
  }
  SUBCASE("circle with two germs") {
    auto tc = three_discs();
    tc.circles[0].germs.pop_back();
    const auto r = check_local_models(tc);
    CHECK(r.mentions("2 germs"));
    CHECK_THROWS_AS(check_essential(tc, RankCertificate{}), TopologyError);
  }
  SUBCASE("branch side in two blocks") {
    auto tc = three_discs();
    tc.incidences.push_back({0, 1, 2});
    CHECK(check_local_models(tc).mentions("assigned to 2 blocks"));
  }
  SUBCASE("dangling references") {
    auto tc = three_discs();
    tc.circles[0].germs[0].branch = 9;
    CHECK_FALSE(check_local_models(tc).ok());
  }
}

TEST_CASE("random outer complexes pass every structural audit") {
  testing::Rng rng(testing::seed() + 21);
  for (int trial = 0; trial < 15; ++trial) {
    const auto page = testing::random_page(rng, 2, 4, -1);
    const auto spec = testing::random_spec(rng, page, true, testing::uniform(rng, 0, 3));
    CAPTURE(page.genus);
    CAPTURE(page.n_boundary);
    const auto tc = construct_outer(spec);
    CHECK(check_local_models(tc).ok());
    CHECK(tc.connected());
    const auto audit = euler_audit(tc);
    CHECK(audit.report.ok());
    CHECK(audit.chi_from_branches == static_cast<long long>(tc.levels) * euler_char(page));
    for (const auto& c : tc.circles) CHECK(c.germs.size() == 3);
  }
}
