#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "chev/cosets.hpp"

using namespace chev;

namespace {

std::vector<int> all_simple(const RootSystem& rs) {
  std::vector<int> J(rs.rank());
  std::iota(J.begin(), J.end(), 0);
  return J;
}

}  // namespace

TEST_CASE("families for J = Delta and J = empty") {
  auto rs = RootSystem::build("A2");
  int n = 0;
  coset_families(rs, all_simple(rs), [&](const CosetFamily& f) {
    ++n;
    CHECK(f.w == WeylElement::identity(rs));
    CHECK(f.num_indeterminates() == 0);
  });
  CHECK(n == 1);

  n = 0;
  BigInt cosets = 0;
  coset_families(rs, {}, [&](const CosetFamily& f) {
    ++n;
    cosets += BigInt(1) << f.num_indeterminates();
  });
  CHECK(n == 6);
  CHECK(cosets == 21);
  CHECK(parabolic_index(rs, std::vector<int>{}, 2) == 21);
  CHECK(parabolic_index(rs, all_simple(rs), 2) == 1);
}

TEST_CASE("A2 with J = {r1}") {
  auto rs = RootSystem::build("A2");
  std::vector<int> lengths;
  coset_families(rs, std::vector<int>{0}, [&](const CosetFamily& f) { lengths.push_back(f.w.length()); });
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<int>{0, 1, 2});
  for (std::uint64_t q : {2, 3, 4, 5}) CHECK(parabolic_index(rs, std::vector<int>{0}, q) == 1 + q + q * q);
}

TEST_CASE("family root order splits positive images from inversions") {
  for (const char* label : {"B3", "G2", "A4"}) {
    auto rs = RootSystem::build(label);
    coset_families(rs, std::vector<int>{0}, [&](const CosetFamily& f) {
      REQUIRE(f.num_indeterminates() == f.w.length());
      for (int p = 0; p < f.order.size(); ++p) REQUIRE(rs.is_positive(f.w.act(f.order.at(p))) == (p < f.l));
      for (int p = 1; p < f.l; ++p) REQUIRE(f.order.at(p - 1) < f.order.at(p));
      for (int p = f.l + 1; p < f.order.size(); ++p) REQUIRE(f.order.at(p - 1) < f.order.at(p));
      auto inv = f.w.inversions(rs);
      REQUIRE(std::vector<RootIndex>(f.inversion_roots().begin(), f.inversion_roots().end()) == inv);
    });
  }
}

TEST_CASE("closed-form index equals the enumerated Poincare sum") {
  for (const char* label : {"A3", "B3", "C3", "G2", "F4", "D4", "B4"}) {
    CAPTURE(label);
    auto rs = RootSystem::build(label);
    for (int mask = 0; mask < (1 << rs.rank()); ++mask) {
      std::vector<int> J;
      for (int a = 0; a < rs.rank(); ++a)
        if (mask >> a & 1) J.push_back(a);
      std::vector<BigInt> by_length(rs.num_positive() + 1);
      enumerate_J_reduced(rs, J, [&](const WeylElement& w) { by_length[w.length()] += 1; });
      for (std::uint64_t q : {2, 3, 7}) {
        BigInt sum = 0, qk = 1;
        for (const auto& c : by_length) {
          sum += c * qk;
          qk *= q;
        }
        REQUIRE(parabolic_index(rs, J, q) == sum);
      }
    }
  }
}

TEST_CASE("Weyl group orders from the Poincare polynomial") {
  for (const char* label : {"A4", "B5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    auto rs = RootSystem::build(label);
    auto p = poincare_polynomial(rs, all_simple(rs));
    BigInt sum = std::accumulate(p.begin(), p.end(), BigInt(0));
    CHECK(sum == rs.weyl_order());
    CHECK(p.size() == static_cast<std::size_t>(rs.num_positive() + 1));
  }
}

TEST_CASE("E8 with J of type D4") {
  auto rs = RootSystem::build("E8");
  auto J = parse_J(rs, "d4-standard");
  CHECK(J == std::vector<int>{1, 2, 3, 4});
  auto d4 = poincare_polynomial(rs, J);
  CHECK(std::accumulate(d4.begin(), d4.end(), BigInt(0)) == 192);
  CHECK(parabolic_index(rs, J, 1) == 3628800);
}

TEST_CASE("J text") {
  auto rs = RootSystem::build("B3");
  CHECK(parse_J(rs, "").empty());
  CHECK(parse_J(rs, "3, 1") == std::vector<int>{0, 2});
  for (const char* bad : {"0", "4", "1,,2", "a", "1,", "d4-standard"}) CHECK_THROWS_AS(parse_J(rs, bad), std::invalid_argument);
}
