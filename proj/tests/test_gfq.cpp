#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chev/gfq.hpp"

using namespace chev;

TEST_CASE("small field facts") {
  auto f2 = Field::make(2);
  CHECK(f2->add(Fq{1}, Fq{1}) == Fq{0});

  auto f4 = Field::make(2, 2);
  CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1});
  const Fq t{2};
  CHECK(f4->mul(t, t) == Fq{3});

  auto f5 = Field::make(5);
  CHECK(f5->inv(Fq{3}) == Fq{2});
  CHECK_THROWS_AS(f5->inv(Fq{0}), DivisionByZero);
}

TEST_CASE("field axioms and Frobenius identity") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    CAPTURE(q);
    auto f = Field::of_order(q);
    REQUIRE(f->q() == q);
    auto els = f->elements();
    REQUIRE(els.size() == q);
    REQUIRE(std::set<Fq>(els.begin(), els.end()).size() == q);
    for (Fq a : els) {
      REQUIRE(f->pow(a, q) == a);
      REQUIRE(f->add(a, f->neg(a)) == Fq{0});
      if (a.v != 0) REQUIRE(f->mul(a, f->inv(a)) == Fq{1});
      for (Fq b : els) {
        REQUIRE(f->add(a, b) == f->add(b, a));
        REQUIRE(f->mul(a, b) == f->mul(b, a));
        for (Fq c : {Fq{1}, f->generator(), els.back()})
          REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    auto f = Field::of_order(q);
    std::uint32_t max_order = 0;
    for (Fq a : f->elements()) {
      if (a.v == 0) continue;
      const auto ord = f->order(a);
      REQUIRE((q - 1) % ord == 0);
      max_order = std::max(max_order, ord);
    }
    CHECK(max_order == q - 1);
    CHECK(f->order(f->generator()) == q - 1);
  }
}

TEST_CASE("packed element text") {
  auto f9 = Field::make(3, 2);
  for (Fq a : f9->elements()) CHECK(f9->parse(f9->to_string(a)) == a);
  CHECK(f9->digits(Fq{7}) == std::vector<std::uint32_t>{1, 2});
  CHECK_THROWS_AS(f9->parse("9"), std::invalid_argument);
  CHECK_THROWS_AS(f9->parse("x"), std::invalid_argument);
  CHECK(f9->from_int(-1) == Fq{2});
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field::make(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::with_modulus(2, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(1u << 17), std::invalid_argument);
  CHECK(is_irreducible(2, {1, 1}));
  CHECK_FALSE(is_irreducible(2, {1, 0}));
}

TEST_CASE("custom modulus") {
  auto a = Field::with_modulus(2, {1, 1, 0});
  auto b = Field::with_modulus(2, {1, 0, 1});
  CHECK_FALSE(*a == *b);
  for (Fq x : a->elements()) CHECK(a->pow(x, 8) == x);
  for (Fq x : b->elements()) CHECK(b->pow(x, 8) == x);
}
