#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmckit/aut_groups.hpp"

#include <cstdlib>
#include <set>

using namespace fmckit;

namespace {

std::string structure(const SpaceDescriptor& s) {
  auto r = aut_structure(s);
  REQUIRE(std::holds_alternative<GroupExpr>(r.value));
  return std::get<GroupExpr>(r.value).str();
}

std::string connected(const SpaceDescriptor& s) {
  auto r = aut_connected(s);
  REQUIRE(std::holds_alternative<GroupExpr>(r.value));
  return std::get<GroupExpr>(r.value).str();
}

ProductOfCurves product(std::initializer_list<const char*> ids) {
  ProductOfCurves p;
  for (const char* id : ids) p.factors.push_back({2, id, std::nullopt});
  return p;
}

// Oracle: acts on the diagonal Delta_S factorwise, the j-th factor seeing the
// coincidence set sigma_j(S); Delta_S maps to a diagonal iff all factors agree.
bool oracle_preserves(int n, const std::vector<Permutation>& tuple) {
  if (n < 2) return true;
  for (const auto& S : subsets(n, 2, n)) {
    std::set<std::set<int>> images;
    for (const auto& p : tuple) {
      std::set<int> img;
      for (int i : S.members()) img.insert(p(i));
      images.insert(img);
    }
    if (images.size() != 1) return false;
  }
  return true;
}

long long oracle_count(int n, int r) {
  auto perms = all_permutations(n);
  long long count = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  while (true) {
    std::vector<Permutation> t;
    for (auto i : idx) t.push_back(perms[i]);
    if (oracle_preserves(n, t)) ++count;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == perms.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("canonical strings") {
  CHECK(GroupExpr::direct({GroupExpr::sym(5), GroupExpr::pgl(2)}).str() == "S5 x PGL2");
  CHECK(GroupExpr::power(GroupExpr::aut_curve("A"), 2).str() == "Aut(A)^2");
  CHECK(GroupExpr::power(GroupExpr::direct({GroupExpr::sym(2), GroupExpr::pgl(2)}), 3).str() == "(S2 x PGL2)^3");
  CHECK(GroupExpr::aut_curve("C", std::nullopt, true).str() == "Aut0(C)");
  CHECK(GroupExpr::trivial().str() == "1");
  CHECK(GroupExpr::direct({}).str() == "1");
  CHECK_THROWS(GroupExpr::sym(0));
  CHECK_THROWS(GroupExpr::power(GroupExpr::sym(2), 0));
}

TEST_CASE("structure rows") {
  CHECK(structure(FMSpace{ProjLine{}, 5}) == "S5 x PGL2");
  CHECK(structure(FMSpace{ProjLine{}, 2}) == "S2 |x (PGL2 x PGL2)");
  CHECK(structure(FMSpace{CurveBase{3, "C", std::nullopt}, 4}) == "S4 x Aut(C)");
  CHECK(structure(FMSpace{CurveBase{2, "C", std::nullopt}, 2}) == "S2 |x (Aut(C) x Aut(C))");
  CHECK(structure(FMSpace{product({"A", "B", "A"}), 3}) == "S3 x ((S2 |x Aut(A)^2) x Aut(B))");
  CHECK(structure(FMSpace{product({"A", "B", "A"}), 2}) == "S2^3 |x ((S2 |x Aut(A)^2) x Aut(B))");
  CHECK(structure(FMSpace{product({"A"}), 2}) == "S2 |x (Aut(A) x Aut(A))");
  CHECK(structure(BareSpace{product({"C", "C", "C"})}) == "S3 |x Aut(C)^3");
  CHECK(structure(Kontsevich{2, 2, 0}) == "PGL3");
  CHECK(structure(ModuliCurves{4, 3}) == "S3");
  CHECK(structure(FMSpace{NefCanonical{"X", 3}, 4}) == "Aut_Delta(X^4)");
  CHECK(structure(Kontsevich{1, 1, 5}) == structure(FMSpace{ProjLine{}, 5}));
  CHECK(structure(FMSpace{CurveBase{0, "C", std::nullopt}, 4}) == "S4 x PGL2");

  auto gt = aut_structure(FMSpace{GeneralType{"X", 2}, 3});
  REQUIRE(std::holds_alternative<Conjectural>(gt.value));
  CHECK(std::get<Conjectural>(gt.value).expr.str() == "S3 x Aut(X)");
  CHECK(std::holds_alternative<Unsupported>(aut_structure(FMSpace{GeneralType{"X", 2}, 2}).value));
  CHECK(std::holds_alternative<Unsupported>(aut_structure(ModuliCurves{2, 3}).value));
  CHECK_THROWS(aut_structure(FMSpace{ProjLine{}, 0}));
  ProductOfCurves bad;
  bad.factors = {{2, "A", BigInt(2)}, {2, "A", BigInt(3)}};
  CHECK_THROWS(aut_structure(BareSpace{bad}));
}

TEST_CASE("genus one is unsupported") {
  CHECK(std::holds_alternative<Unsupported>(aut_structure(FMSpace{CurveBase{1, "E", std::nullopt}, 3}).value));
  CHECK(std::holds_alternative<Unsupported>(aut_connected(FMSpace{CurveBase{1, "E", std::nullopt}, 2}).value));
  ProductOfCurves p = product({"A"});
  p.factors.push_back({1, "E", std::nullopt});
  CHECK(std::holds_alternative<Unsupported>(aut_structure(FMSpace{p, 3}).value));
  CHECK_FALSE(std::get<Unsupported>(aut_structure(FMSpace{p, 3}).value).citation.empty());
}

TEST_CASE("identity components") {
  CHECK(connected(Kontsevich{3, 1, 4}) == "PGL2 x PGL4");
  CHECK(connected(Kontsevich{3, 1, 2}) == "PGL2 x PGL2 x PGL4");
  CHECK(connected(Kontsevich{3, 3, 5}) == "PGL4");
  CHECK(std::holds_alternative<Unsupported>(aut_connected(Kontsevich{3, 3, 4}).value));
  CHECK(connected(FMSpace{CurveBase{2, "C", std::nullopt}, 2}) == "Aut0(C) x Aut0(C)");
  CHECK(connected(FMSpace{CurveBase{2, "C", std::nullopt}, 3}) == "Aut0(C)");
  CHECK(connected(FMSpace{NefCanonical{"X", 2}, 2}) == "Aut0(X)");
  CHECK(connected(ModuliCurves{3, 2}) == "1");
  for (int n = 1; n <= 8; ++n) {
    if (n == 2) continue;
    auto full = std::get<GroupExpr>(aut_structure(FMSpace{ProjLine{}, n}).value);
    CHECK(connected_part(full) == std::get<GroupExpr>(aut_connected(FMSpace{ProjLine{}, n}).value));
  }
  auto two = std::get<GroupExpr>(aut_structure(FMSpace{ProjLine{}, 2}).value);
  CHECK(connected_part(two).str() == connected(FMSpace{ProjLine{}, 2}));
}

TEST_CASE("orders") {
  CHECK(std::get<BigInt>(group_order(GroupExpr::direct({GroupExpr::sym(3), GroupExpr::aut_curve("A", BigInt(2))}))) ==
        12);
  CHECK(std::get<BigInt>(group_order(
            GroupExpr::semidirect(GroupExpr::power(GroupExpr::aut_curve("A", BigInt(3)), 2), GroupExpr::sym(2)))) ==
        18);
  CHECK(std::holds_alternative<Infinite>(group_order(GroupExpr::direct({GroupExpr::sym(5), GroupExpr::pgl(2)}))));
  auto u = group_order(GroupExpr::direct({GroupExpr::sym(3), GroupExpr::aut_curve("A")}));
  REQUIRE(std::holds_alternative<UnknownOrder>(u));
  CHECK(std::get<UnknownOrder>(u).missing == std::vector<std::string>{"Aut(A)"});
  CHECK(std::holds_alternative<Infinite>(
      group_order(GroupExpr::direct({GroupExpr::aut_curve("A"), GroupExpr::pgl(2)}))));

  ProductOfCurves p;
  p.factors = {{2, "A", BigInt(2)}, {2, "B", BigInt(3)}, {2, "A", BigInt(2)}};
  auto g = std::get<GroupExpr>(aut_structure(FMSpace{p, 3}).value);
  CHECK(std::get<BigInt>(group_order(g)) == BigInt(6) * 2 * 4 * 3);
}

TEST_CASE("relabelling classes of equal multiplicity keeps the shape") {
  ProductOfCurves p, q;
  p.factors = {{2, "A", BigInt(2)}, {2, "B", BigInt(6)}, {2, "C", BigInt(2)}, {2, "C", BigInt(2)}};
  q.factors = {{2, "B", BigInt(2)}, {2, "A", BigInt(6)}, {2, "C", BigInt(2)}, {2, "C", BigInt(2)}};
  for (int n : {1, 2, 3, 5}) {
    auto a = std::get<GroupExpr>(aut_structure(FMSpace{p, n}).value);
    auto b = std::get<GroupExpr>(aut_structure(FMSpace{q, n}).value);
    CHECK(a.shape() == b.shape());
    CHECK(group_order(a) == group_order(b));
  }
}

TEST_CASE("diagonal stabilizer") {
  CHECK(diagonal_stabilizer(3, 2).tuples.size() == 6);
  CHECK(diagonal_stabilizer(3, 2).verdict == StabilizerVerdict::DiagonalSym);
  CHECK(diagonal_stabilizer(4, 2).tuples.size() == 24);
  for (int r = 1; r <= 3; ++r) {
    auto rep = diagonal_stabilizer(2, r);
    CHECK(rep.tuples.size() == (std::size_t{1} << r));
    CHECK(rep.verdict == StabilizerVerdict::FullSym2Power);
  }
  CHECK(diagonal_stabilizer(1, 3).tuples.size() == 1);
  CHECK(diagonal_stabilizer(1, 3).verdict == StabilizerVerdict::Trivial);
  CHECK_THROWS(diagonal_stabilizer(6, 3));
  CHECK_THROWS(diagonal_stabilizer(0, 1));

  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      if (n == 4 && r == 3) continue;
      auto rep = diagonal_stabilizer(n, r);
      CHECK(static_cast<long long>(rep.tuples.size()) == oracle_count(n, r));
      for (const auto& t : rep.tuples) CHECK(oracle_preserves(n, t));
    }
}

TEST_CASE("stabilizer output does not depend on thread count") {
  auto serial = [] {
    setenv("FMCKIT_THREADS", "1", 1);
    auto r = diagonal_stabilizer(4, 3);
    unsetenv("FMCKIT_THREADS");
    return r;
  }();
  setenv("FMCKIT_THREADS", "4", 1);
  auto threaded = diagonal_stabilizer(4, 3);
  unsetenv("FMCKIT_THREADS");
  CHECK(serial.tuples == threaded.tuples);
  CHECK(serial.tuples.size() == 24);
}
