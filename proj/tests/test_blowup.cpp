#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmckit/blowup.hpp"

using namespace fmckit;

namespace {

// Independent count: one exceptional divisor per blown-up center of
// codimension >= 2.  On a curve base the |S| = 2 diagonals are divisors.
long long picard_by_centers(int rho, int dim, int n) {
  long long total = static_cast<long long>(n) * rho;
  for (const auto& round : symmetric_schedule(n).rounds)
    for (const auto& c : round) {
      int codim = n * dim - c.dimension(dim);
      if (codim >= 2) ++total;
    }
  return total;
}

}  // namespace

TEST_CASE("symmetric schedule") {
  auto s3 = symmetric_schedule(3);
  REQUIRE(s3.rounds.size() == 2);
  REQUIRE(s3.rounds[0].size() == 1);
  CHECK(s3.rounds[0][0].subset == IndexSubset(3, {1, 2, 3}));
  REQUIRE(s3.rounds[1].size() == 3);
  CHECK(s3.rounds[1][0].subset == IndexSubset(3, {1, 2}));
  CHECK(s3.rounds[1][1].subset == IndexSubset(3, {1, 3}));
  CHECK(s3.rounds[1][2].subset == IndexSubset(3, {2, 3}));
  CHECK(symmetric_schedule(1).center_count() == 0);
  CHECK(symmetric_schedule(4).center_count() == 11);
  for (int n = 2; n <= 8; ++n) {
    auto s = symmetric_schedule(n);
    for (std::size_t i = 0; i < s.rounds.size(); ++i)
      for (const auto& c : s.rounds[i]) CHECK(static_cast<int>(c.subset.size()) == n - static_cast<int>(i));
  }
}

TEST_CASE("recursive schedule") {
  auto r2 = recursive_schedule(2);
  REQUIRE(r2.center_count() == 1);
  CHECK(r2.stage_rounds[0][0].diagonal == IndexSubset(2, {1, 2}));
  CHECK(r2.stage_rounds[0][0].family == CenterFamily::ExceptionalFull);
  CHECK(recursive_schedule(3).center_count() == 4);
  CHECK(recursive_schedule(5).center_count() - recursive_schedule(4).center_count() == 15);

  auto r4 = recursive_schedule(4);
  // stage 4 starts with the full exceptional divisor, ends with the sections
  std::vector<StageCenter> stage4;
  for (const auto& round : r4.stage_rounds)
    for (const auto& c : round)
      if (c.stage == 4) stage4.push_back(c);
  REQUIRE(stage4.size() == 7);
  CHECK(stage4.front().label() == "E~{1,2,3}");
  CHECK(stage4[1].family == CenterFamily::ExceptionalStrict);
  CHECK(stage4.back().label() == "X~[3]_3");
  CHECK(stage4.back().diagonal == IndexSubset(4, {3, 4}));

  // The recursive centers cover each diagonal exactly once.
  for (int n = 2; n <= 9; ++n) {
    std::vector<IndexSubset> seen;
    for (const auto& round : recursive_schedule(n).stage_rounds)
      for (const auto& c : round) {
        std::vector<int> m = c.diagonal.members();
        seen.push_back(IndexSubset(n, m));
      }
    std::sort(seen.begin(), seen.end());
    CHECK(seen == subsets(n, 2, n));
  }
}

TEST_CASE("schedule lengths agree with closed form") {
  for (int n = 1; n <= 12; ++n) {
    BigInt expected = pow2(static_cast<unsigned>(n)) - n - 1;
    CHECK(BigInt(symmetric_schedule(n).center_count()) == expected);
    CHECK(BigInt(recursive_schedule(n).center_count()) == expected);
  }
}

TEST_CASE("picard numbers") {
  CHECK(picard_number(1, 1, 3) == 4);
  CHECK(picard_number(1, 1, 2) == 2);
  CHECK(picard_number(1, 2, 2) == 3);
  for (int rho = 1; rho <= 3; ++rho)
    for (int dim = 1; dim <= 3; ++dim)
      for (int n = 1; n <= 10; ++n) CHECK(picard_number(rho, dim, n) == picard_by_centers(rho, dim, n));
  for (int rho = 1; rho <= 5; ++rho) CHECK(picard_number(rho, 1, 2) == 2 * rho);
  CHECK_THROWS(picard_number(0, 1, 1));
}

TEST_CASE("canonical discrepancies") {
  auto c1 = canonical_discrepancies(1, 4);
  REQUIRE(c1.size() == 3);
  CHECK(c1[0].size == 2);
  CHECK(c1[0].coefficient == 0);
  CHECK(c1[0].divisorial);
  CHECK(c1[1].coefficient == 1);
  CHECK_FALSE(c1[1].divisorial);
  CHECK(c1[2].count == 1);
  CHECK(canonical_discrepancies(2, 2)[0].coefficient == 1);
  for (int dim = 1; dim <= 4; ++dim)
    for (int n = 2; n <= 8; ++n)
      for (const auto& d : canonical_discrepancies(dim, n)) {
        CHECK(d.coefficient >= 0);
        CHECK((d.coefficient == 0) == ((d.size - 1) * dim == 1));
        CHECK(d.count == binomial(static_cast<unsigned>(n), static_cast<unsigned>(d.size)));
      }
}
