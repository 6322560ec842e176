#include <doctest.h>

#include "support/generators.hpp"
#include "support/snf_oracle.hpp"
#include "tribranch/intalg.hpp"

using namespace tribranch;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

IntMatrix random_matrix(testing::Rng& rng, int rows, int cols, int bound) {
  IntMatrix a(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a(r, c) = testing::uniform(rng, -bound, bound);
  return a;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).invariant_factors == ints({1, 1}));
  CHECK(smith_normal_form(IntMatrix(2, 2)).invariant_factors == ints({0, 0}));
  const IntMatrix a{{2, 4}, {6, 8}};
  const auto s = smith_normal_form(a);
  CHECK(s.invariant_factors == ints({2, 4}));
  CHECK(testing::invariant_factors_by_minors(a) == ints({2, 4}));
  CHECK(s.U * a * s.V == s.S);
}

TEST_CASE("smith normal form of empty and degenerate shapes") {
  CHECK(smith_normal_form(IntMatrix(0, 0)).invariant_factors.empty());
  const auto wide = smith_normal_form(IntMatrix(2, 0));
  CHECK(wide.U.rows() == 2);
  CHECK(cokernel(IntMatrix(2, 0)) == AbelianGroup{2, {}});
  CHECK(cokernel(IntMatrix(0, 3)) == AbelianGroup{});
  CHECK(smith_normal_form(IntMatrix{{0, 0, 6}}).invariant_factors == ints({6}));
  CHECK(smith_normal_form(IntMatrix{{-4}}).invariant_factors == ints({4}));
}

TEST_CASE("smith normal form matches the determinantal-divisor oracle") {
  testing::Rng rng(testing::seed() + 5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_matrix(rng, testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 5), 9);
    const auto s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.S);
    CHECK(testing::is_diagonal(s.S));
    CHECK(testing::unimodular(s.U));
    CHECK(testing::unimodular(s.V));
    CHECK(testing::divisibility_chain(s.invariant_factors));
    CHECK(s.invariant_factors == testing::invariant_factors_by_minors(a));
  }
}

TEST_CASE("cokernel is invariant under unimodular changes of basis") {
  testing::Rng rng(testing::seed() + 6);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::uniform(rng, 1, 4);
    const auto a = random_matrix(rng, n, testing::uniform(rng, 1, 4), 6);
    // Elementary operations compose to unimodular P.
    IntMatrix p = IntMatrix::identity(n);
    for (int k = 0; k < 6 && n > 1; ++k) {
      const int i = testing::uniform(rng, 0, n - 1);
      int j = testing::uniform(rng, 0, n - 2);
      if (j >= i) ++j;
      p.add_row_multiple(i, j, testing::uniform(rng, -3, 3));
      if (testing::uniform(rng, 0, 1)) p.swap_rows(i, j);
    }
    CHECK(cokernel(p * a) == cokernel(a));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  testing::Rng rng(testing::seed() + 7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = testing::uniform(rng, 1, 5);
    const auto a = random_matrix(rng, n, n, 9);
    CHECK(determinant(a) == testing::leibniz_det(a));
  }
}

TEST_CASE("big entries survive") {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = BigInt("123456789012345678901234567890");
  a(1, 1) = BigInt("987654321098765432109876543210");
  const auto g = cokernel(a);
  CHECK(g.free_rank == 0);
  REQUIRE(g.torsion.size() == 2);
  CHECK(g.torsion[0] * g.torsion[1] == a(0, 0) * a(1, 1));
  CHECK(a(1, 1) % g.torsion[0] == 0);
}

TEST_CASE("cokernel and minimal generators") {
  CHECK(cokernel(IntMatrix(3, 3)) == AbelianGroup{3, {}});
  CHECK(cokernel(IntMatrix::identity(3)) == AbelianGroup{});
  CHECK(cokernel(IntMatrix{{0, 1}, {0, 0}}) == AbelianGroup{1, {}});
  CHECK(min_generators(AbelianGroup{4, {}}) == 4);
  CHECK(min_generators(AbelianGroup{3, ints({2})}) == 4);
  CHECK(min_generators(AbelianGroup{}) == 0);
  CHECK(to_string(AbelianGroup{}) == "0");
  CHECK(to_string(AbelianGroup{1, {}}) == "Z");
  CHECK(to_string(AbelianGroup{3, ints({2, 4})}) == "Z^3 + Z/2 + Z/4");
  CHECK(to_string(cokernel(IntMatrix{{2, 0}, {0, 3}})) == "Z/6");
}
