#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmckit/fibrations.hpp"

#include <set>

using namespace fmckit;

TEST_CASE("modular pencil counts") {
  CHECK(modular_pencils(3).size() == 3);
  CHECK(modular_pencils(4).size() == 5);
  CHECK(modular_pencils(5).size() == 10);
  for (int n = 1; n <= 9; ++n)
    CHECK(BigInt(modular_pencils(n).size()) == n + binomial(static_cast<unsigned>(n), 4));
}

TEST_CASE("signatures") {
  auto s = pencil_signature(Ev{2}, 3);
  CHECK_FALSE(s.forget_class);
  CHECK(s.a == std::vector<BigInt>{0, 1, 0});
  auto f = pencil_signature(ForgetToM04{IndexSubset(6, {1, 2, 3, 4})}, 6);
  CHECK(f.forget_class == IndexSubset(6, {1, 2, 3, 4}));
  CHECK(f.a == std::vector<BigInt>(6, 0));
  for (int n = 2; n <= 7; ++n) {
    ForgetfulDescriptor pi{n, IndexSubset(n, {1}).complement()};
    CHECK(pencil_signature(pi) == pencil_signature(Ev{1}, n));
  }
  CHECK_THROWS(pencil_signature(Ev{4}, 3));
  CHECK_THROWS(pencil_signature(ForgetToM04{IndexSubset(4, {1, 2, 3})}, 4));
  CHECK_THROWS(pencil_signature(ForgetfulDescriptor{5, IndexSubset(5, {1, 2})}));
}

TEST_CASE("classification inverts signatures") {
  auto e = std::get<EvClass>(classify_pencil({std::nullopt, {0, 0, 2}}));
  CHECK(e.i == 3);
  CHECK(e.multiplicity == 2);
  CHECK(std::get<NonModular>(classify_pencil({IndexSubset(4, {1, 2, 3, 4}), {1, 0, 0, 0}})).reason ==
        "mixed-parts");
  CHECK(std::get<NonModular>(classify_pencil({std::nullopt, {0, 0}})).reason == "zero");
  CHECK(std::get<NonModular>(classify_pencil({std::nullopt, {1, 1}})).reason == "multiple-evaluations");
  CHECK(std::get<NonModular>(classify_pencil({std::nullopt, {0, -1}})).reason == "negative-coefficient");
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : modular_pencils(n)) {
      auto c = classify_pencil(pencil_signature(p, n));
      if (auto* ev = std::get_if<Ev>(&p)) {
        REQUIRE(std::holds_alternative<EvClass>(c));
        CHECK(std::get<EvClass>(c).i == ev->i);
        CHECK(std::get<EvClass>(c).multiplicity == 1);
      } else {
        REQUIRE(std::holds_alternative<ForgetToM04>(c));
        CHECK(std::get<ForgetToM04>(c) == std::get<ForgetToM04>(p));
      }
    }
}

TEST_CASE("diagonal preimage profile examples") {
  auto r = diagonal_preimage_profile(5, {Ev{1}, Ev{2}, Ev{3}});
  CHECK(r.admissible);
  std::vector<std::string> names;
  for (const auto& c : r.components) {
    names.push_back(c.name);
    CHECK(c.codimension == 1);
  }
  CHECK(names == std::vector<std::string>{"D{1,2,3}", "D{1,2,3,4}", "D{1,2,3,5}", "D{1,2,3,4,5}"});

  auto l1 = diagonal_preimage_profile(6, {ForgetToM04{IndexSubset(6, {1, 2, 3, 4})}, Ev{1}, Ev{2}});
  CHECK_FALSE(l1.admissible);
  REQUIRE(l1.witness);
  CHECK(l1.witness->name == "L1");
  CHECK(l1.witness->codimension == 2);

  auto l3 = diagonal_preimage_profile(8, {ForgetToM04{IndexSubset(8, {1, 2, 3, 4})},
                                          ForgetToM04{IndexSubset(8, {1, 2, 3, 5})},
                                          ForgetToM04{IndexSubset(8, {5, 6, 7, 8})}});
  REQUIRE(l3.witness);
  CHECK(l3.witness->name == "L3");
  CHECK(l3.witness->codimension == 2);
  CHECK_THROWS(diagonal_preimage_profile(5, {Ev{1}, Ev{1}, Ev{2}}));
}

TEST_CASE("exhaustive descriptor triples") {
  for (int n = 4; n <= 6; ++n) {
    auto pencils = modular_pencils(n);
    for (std::size_t a = 0; a < pencils.size(); ++a)
      for (std::size_t b = a + 1; b < pencils.size(); ++b)
        for (std::size_t c = b + 1; c < pencils.size(); ++c) {
          auto r = diagonal_preimage_profile(n, {pencils[a], pencils[b], pencils[c]});
          int evs = std::holds_alternative<Ev>(pencils[a]) + std::holds_alternative<Ev>(pencils[b]) +
                    std::holds_alternative<Ev>(pencils[c]);
          CHECK(r.admissible == (evs == 3));
          if (evs == 3) {
            // oracle: bitmask enumeration of supersets of {a,b,c}
            std::uint64_t need = 0;
            for (auto idx : {a, b, c}) need |= std::uint64_t{1} << (std::get<Ev>(pencils[idx]).i - 1);
            std::set<std::string> expected;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
              if ((m & need) == need) expected.insert("D" + IndexSubset::from_mask(n, m).str());
            std::set<std::string> got;
            for (const auto& s : r.components) got.insert(s.name);
            CHECK(got == expected);
            CHECK(r.components.size() == (std::size_t{1} << (n - 3)));
          } else {
            REQUIRE(r.witness);
            CHECK(r.witness->codimension == 2);
            CHECK(r.witness->name == std::string("L") + std::to_string(3 - evs));
          }
        }
  }
  for (int n = 4; n <= 10; ++n)
    CHECK(diagonal_preimage_profile(n, {Ev{1}, Ev{2}, Ev{3}}).components.size() == (std::size_t{1} << (n - 3)));
}

TEST_CASE("fiber intersections and forgetful factorization") {
  auto f = fiber_intersection_dim(6, 3, IndexSubset(6, {1, 2, 3, 4}), IndexSubset(6, {1, 2, 3, 5}));
  CHECK(f.dimension == 3);
  CHECK(f.criterion);
  CHECK(fiber_intersection_dim(6, 3, IndexSubset(6, {1, 2, 3, 4}), IndexSubset(6, {1, 2, 3, 4})).dimension == 4);
  CHECK(fiber_intersection_dim(7, 5, IndexSubset(7, {1, 2, 3}), IndexSubset(7, {4, 5, 6})).dimension == 0);

  auto ok = std::get<ForgetfulDescriptor>(factor_forgetful(5, 4, IndexSubset(5, {1, 2}), IndexSubset(5, {1, 3})));
  CHECK(ok.forgotten == IndexSubset(5, {1}));
  CHECK(ok.target() == 4);
  CHECK(std::holds_alternative<Obstructed>(factor_forgetful(5, 4, IndexSubset(5, {1, 2}), IndexSubset(5, {3, 4}))));
  auto ok2 = std::get<ForgetfulDescriptor>(
      factor_forgetful(6, 3, IndexSubset(6, {1, 2, 3, 4}), IndexSubset(6, {1, 2, 3, 5})));
  CHECK(ok2.forgotten == IndexSubset(6, {1, 2, 3}));
  CHECK_THROWS(factor_forgetful(5, 4, IndexSubset(5, {1, 2}), IndexSubset(5, {1, 2})));
  CHECK_THROWS(factor_forgetful(5, 2, IndexSubset(5, {1, 2, 3, 4}), IndexSubset(5, {1, 2, 3, 5})));
  CHECK_THROWS(factor_forgetful(5, 4, IndexSubset(5, {1}), IndexSubset(5, {1, 3})));

  for (int n = 3; n <= 7; ++n)
    for (int r = 3; r <= n; ++r) {
      auto all = subsets(n, n - r + 1, n - r + 1);
      for (const auto& I : all)
        for (const auto& J : all) {
          if (I == J) continue;
          auto res = factor_forgetful(n, r, I, J);
          auto dim = fiber_intersection_dim(n, r, I, J);
          CHECK(std::holds_alternative<ForgetfulDescriptor>(res) == dim.criterion);
          CHECK(std::holds_alternative<ForgetfulDescriptor>(res) ==
                (static_cast<int>(I.intersect(J).size()) == n - r));
        }
    }
}

TEST_CASE("product factorization reports") {
  auto r = factor_product(5, {PencilDescriptor{Ev{1}}, PencilDescriptor{Ev{2}}});
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].evaluation == 1);
  CHECK(r.factors[1].evaluation == 2);
  CHECK(r.forgetful_only);

  auto p = factor_product(6, {ForgetfulDescriptor{6, IndexSubset(6, {4, 5, 6})}});
  CHECK(p.factors[0].target == 3);
  CHECK(p.factors[0].forgotten == IndexSubset(6, {4, 5, 6}));

  auto mixed = factor_product(6, {PencilDescriptor{Ev{1}}, PencilDescriptor{ForgetToM04{IndexSubset(6, {1, 2, 3, 4})}}});
  CHECK(mixed.factors[1].kind == FactorKind::RhoForget);
  CHECK(mixed.factors[1].forgotten == IndexSubset(6, {5, 6}));
  CHECK_FALSE(mixed.forgetful_only);

  for (int n = 4; n <= 7; ++n)
    for (const auto& F : subsets(n, 1, n - 3)) {
      auto rep = factor_product(n, {ForgetfulDescriptor{n, F}});
      CHECK(rep.forgetful_only);
    }
}

TEST_CASE("curve products") {
  auto d = std::get<CurveProductDescriptor>(factor_curve_product(2, 3, 2, {1, 3}));
  CHECK(d.chosen == std::vector<int>{1, 3});
  CHECK(d.through_blowup);
  CHECK(std::get<NotDominant>(factor_curve_product(2, 3, 2, {1, 1})).repeated == std::vector<int>{1});
  CHECK(std::holds_alternative<Unsupported>(factor_curve_product(1, 2, 1, {1})));
  CHECK_FALSE(std::get<CurveProductDescriptor>(factor_curve_product(0, 3, 1, {2})).through_blowup);
  CHECK_THROWS(factor_curve_product(2, 3, 2, {1}));
  CHECK_THROWS(factor_curve_product(2, 3, 1, {4}));
}
