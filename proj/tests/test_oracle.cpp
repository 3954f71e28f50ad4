#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chev/oracle.hpp"
#include "chev/permchar.hpp"

using namespace chev;

TEST_CASE("parabolic subalgebra") {
  for (const char* label : {"A2", "B3", "G2"}) {
    auto rs = RootSystem::build(label);
    auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
    AdjointRepresentation ad(sc, Field::make(3));
    for (int mask = 0; mask < (1 << rs.rank()); ++mask) {
      std::vector<int> J;
      for (int a = 0; a < rs.rank(); ++a)
        if (mask >> a & 1) J.push_back(a);
      ParabolicSubalgebra pj(ad, J);
      CHECK(pj.dim() == rs.rank() + rs.num_positive() + static_cast<int>(rs.positive_subsystem(J).size()));
      // closed under the bracket
      for (int a : pj.basis())
        for (int b : pj.basis()) {
          std::vector<Fq> v(ad.dim(), Fq{0});
          for (const auto& t : bracket(*sc, a, b)) v[t.index] = ad.field()->from_int(t.coeff);
          REQUIRE(pj.space().contains(v));
        }
    }
  }
}

TEST_CASE("membership examples") {
  auto rs = RootSystem::build("A2");
  auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
  auto f = Field::make(2);
  AdjointRepresentation ad(sc, f);
  ParabolicSubalgebra b(ad, std::vector<int>{});
  CHECK(parabolic_membership(Matrix::identity(f, ad.dim()), b));
  for (RootIndex r = 0; r < rs.num_positive(); ++r) CHECK(parabolic_membership(ad.x(r, Fq{1}), b));
  CHECK_FALSE(parabolic_membership(ad.n(0), b));
  ParabolicSubalgebra p1(ad, std::vector<int>{0});
  CHECK(parabolic_membership(ad.n(0), p1));
  CHECK_FALSE(parabolic_membership(ad.n(1), p1));
}

TEST_CASE("matrix conjugation matches normal-form conjugation inside U") {
  std::mt19937 gen(53);
  for (const char* label : {"A2", "B2", "G2", "A3", "B3"}) {
    auto rs = RootSystem::build(label);
    auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
    auto f = Field::make(3);
    AdjointRepresentation ad(sc, f);
    const ScalarRing ring{f};
    const RootOrder order = RootOrder::canonical(rs);
    for (int trial = 0; trial < 20; ++trial) {
      UnipotentWord<Fq> xw, vw;
      for (int k = 0; k < 4; ++k) {
        xw.push_back({static_cast<RootIndex>(gen() % rs.num_positive()), Fq{static_cast<std::uint32_t>(gen() % 3)}});
        vw.push_back({static_cast<RootIndex>(gen() % rs.num_positive()), Fq{static_cast<std::uint32_t>(gen() % 3)}});
      }
      auto x = normal_form(*sc, ring, xw, order);
      auto v = normal_form(*sc, ring, vw, order);
      auto c = nf_multiply(*sc, ring, nf_multiply(*sc, ring, x, v, order), nf_inverse(*sc, ring, x, order), order);
      const Matrix xm = word_matrix(ad, xw);
      REQUIRE(word_matrix(ad, nf_to_word(c, order, ring)) == xm * word_matrix(ad, vw) * xm.inverse());
    }
  }
}

TEST_CASE("cross-engine examples") {
  auto rs = RootSystem::build("A2");
  auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
  auto f = Field::make(2);
  AdjointRepresentation ad(sc, f);
  CHECK(perm_char_value_matrix(ad, std::vector<int>{}, {}) == 21);
  UnipotentWord<Fq> v{{2, Fq{1}}};
  CHECK(perm_char_value_matrix(ad, std::vector<int>{}, v) == perm_char_value(*sc, f, std::vector<int>{}, v).value);

  auto b2 = RootSystem::build("B2");
  auto scb = StructureConstants::compute(b2, ExtraspecialSigns::all_plus(b2));
  AdjointRepresentation adb(scb, f);
  // Bourbaki B2: alpha1 long
  for (RootIndex r = 0; r < b2.num_positive(); ++r) {
    UnipotentWord<Fq> w{{r, Fq{1}}};
    CHECK(perm_char_value_matrix(adb, std::vector<int>{0}, w) ==
          perm_char_value(*scb, f, std::vector<int>{0}, w).value);
  }
}

TEST_CASE("feasibility guard") {
  auto rs = RootSystem::build("B3");
  auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
  AdjointRepresentation ad(sc, Field::make(5));
  CHECK_THROWS_AS(perm_char_value_matrix(ad, std::vector<int>{}, {}), FeasibilityError);
  CHECK_THROWS_AS(perm_char_value_matrix(ad, std::vector<int>{}, {}, 1000), FeasibilityError);
}
