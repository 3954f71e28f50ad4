#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chev/oracle.hpp"
#include "chev/permchar.hpp"

using namespace chev;

namespace {

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) s.push_back(a);
    out.push_back(s);
  }
  return out;
}

PolynomialSystem random_system(const FieldPtr& f, std::mt19937& gen, int nvars, int neqs) {
  PolynomialSystem sys{f, {}, {}};
  for (int v = 1; v <= nvars; ++v) sys.variables.push_back(v);
  std::uniform_int_distribution<int> var(1, nvars), nterms(1, 4), deg(0, 3);
  std::uniform_int_distribution<std::uint32_t> coef(1, f->q() - 1);
  for (int e = 0; e < neqs; ++e) {
    std::vector<Term> terms;
    const int shape = gen() % 3;
    if (shape == 0) terms.push_back({Monomial::variable(var(gen)), Fq{coef(gen)}});
    for (int t = nterms(gen); t > 0; --t) {
      Monomial m;
      for (int d = deg(gen); d > 0; --d) m = Monomial::product(m, Monomial::variable(var(gen)), 0);
      terms.push_back({m, Fq{coef(gen)}});
    }
    sys.equations.push_back(Polynomial::from_terms(f, std::move(terms)));
  }
  return sys;
}

UnipotentWord<Fq> random_word(const RootSystem& rs, const Field& f, std::mt19937& gen, int len) {
  UnipotentWord<Fq> w;
  for (int k = 0; k < len; ++k)
    w.push_back({static_cast<RootIndex>(gen() % rs.num_positive()), Fq{static_cast<std::uint32_t>(gen() % f.q())}});
  return w;
}

}  // namespace

TEST_CASE("support sets") {
  auto rs = RootSystem::build("A2");
  auto s1 = support_sets(rs, {{1, Fq{1}}});
  CHECK(s1.psi == std::vector<RootIndex>{1});
  CHECK(s1.psi_prime == std::vector<RootIndex>{1});
  auto s2 = support_sets(rs, {{0, Fq{1}}, {2, Fq{1}}});
  CHECK(s2.psi == std::vector<RootIndex>{0});
  CHECK(s2.psi_prime == std::vector<RootIndex>{0, 2});
  auto s3 = support_sets(rs, {{0, Fq{1}}, {1, Fq{1}}, {0, Fq{1}}});
  CHECK(s3.psi == std::vector<RootIndex>{1});
  auto s4 = support_sets(rs, {{0, Fq{0}}});
  CHECK(s4.psi_prime.empty());
}

TEST_CASE("pruning") {
  auto rs = RootSystem::build("B3");
  auto v = SupportSets{{4}, {4}};
  CHECK_FALSE(prune(rs, WeylElement::identity(rs), v));
  enumerate_J_reduced(rs, {}, [&](const WeylElement& w) { CHECK(prune(rs, w, v) == !rs.is_positive(w.act(4))); });
}

TEST_CASE("count_solutions conventions") {
  auto f = Field::make(5);
  auto p = [&](const char* s) { return Polynomial::parse(f, s); };
  CHECK(count_solutions({f, {1, 2}, {p("y1 + 4*y2")}}) == 5);
  auto f2 = Field::make(2);
  CHECK(count_solutions({f2, {1, 2, 3}, {}}) == 8);
  CHECK(count_solutions({f2, {1}, {Polynomial::parse(f2, "1")}}) == 0);
  auto f4 = Field::make(2, 2);
  PolynomialSystem s{f4, {1}, {Polynomial::parse(f4, "y1^2 + y1")}};
  CHECK(count_solutions(s) == 2);
  CHECK(count_solutions(s, {CountStrategy::kBruteForce}) == 2);
  CHECK_THROWS_AS(count_solutions({f2, {1}, {Polynomial::parse(f2, "y2")}}), std::invalid_argument);
}

TEST_CASE("heuristic count equals brute force on random systems") {
  std::mt19937 gen(41);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    auto f = Field::of_order(q);
    for (int trial = 0; trial < 60; ++trial) {
      int nvars = 1 + static_cast<int>(gen() % 6);
      while (std::pow(q, nvars) > 1 << 14) --nvars;
      auto sys = random_system(f, gen, nvars, 1 + static_cast<int>(gen() % 5));
      const BigInt bf = count_solutions(sys, {CountStrategy::kBruteForce});
      REQUIRE(count_solutions(sys) == bf);
      REQUIRE(count_solutions(sys, {CountStrategy::kHeuristic, 1}) == bf);
    }
  }
}

TEST_CASE("build_system examples") {
  auto rs = RootSystem::build("A2");
  auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
  auto f = Field::make(2);
  auto s1 = make_coset_family(rs, WeylElement::from_word(rs, std::vector<int>{0}));
  auto sys = build_system(*sc, f, s1, {{0, Fq{1}}});
  REQUIRE(sys.equations.size() == 1);
  CHECK(sys.equations[0] == Polynomial::parse(f, "1"));
  CHECK(count_solutions(sys) == 0);

  auto id = make_coset_family(rs, WeylElement::identity(rs));
  CHECK(build_system(*sc, f, id, {{0, Fq{1}}}).equations.empty());

  auto longest = make_coset_family(rs, parse_weyl_word(rs, "s1*s2*s1"));
  auto trivial = build_system(*sc, f, longest, {});
  CHECK(trivial.variables.size() == 3);
  for (const auto& e : trivial.equations) CHECK(e.is_zero());
  CHECK(count_solutions(trivial) == 8);
}

TEST_CASE("identity value equals the parabolic index") {
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3", "F4"}) {
    auto rs = RootSystem::build(label);
    auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
    for (std::uint32_t q : {2u, 3u, 4u}) {
      auto f = Field::of_order(q);
      for (const auto& J : subsets(rs.rank())) {
        auto report = perm_char_value(*sc, f, J, {}, {{}, 1});
        REQUIRE(report.value == parabolic_index(rs, J, q));
        REQUIRE(report.families * 1 == report.unpruned);
      }
    }
  }
  auto rs = RootSystem::build("A2");
  auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
  CHECK(perm_char_value(*sc, Field::make(2), std::vector<int>{}, {}).value == 21);
}

TEST_CASE("pruned families have no solutions") {
  std::mt19937 gen(43);
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    auto rs = RootSystem::build(label);
    auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
    for (std::uint32_t q : {2u, 3u}) {
      auto f = Field::make(q);
      const RootOrder canonical = RootOrder::canonical(rs);
      for (int trial = 0; trial < 8; ++trial) {
        auto v = nf_to_word(normal_form(*sc, ScalarRing{f}, random_word(rs, *f, gen, 3), canonical), canonical,
                            ScalarRing{f});
        auto support = support_sets(rs, v);
        coset_families(rs, {}, [&](const CosetFamily& fam) {
          if (!prune(rs, fam.w, support)) return;
          REQUIRE(count_solutions(build_system(*sc, f, fam, v), {CountStrategy::kBruteForce}) == 0);
        });
      }
    }
  }
}

TEST_CASE("values agree with the matrix oracle and are class functions") {
  std::mt19937 gen(47);
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(label);
    auto rs = RootSystem::build(label);
    ExtraspecialSigns signs = ExtraspecialSigns::all_plus(rs);
    for (RootIndex r = rs.rank(); r < rs.num_positive(); ++r) signs.set(r, gen() % 2 ? 1 : -1);
    auto sc = StructureConstants::compute(rs, signs);
    const RootOrder canonical = RootOrder::canonical(rs);
    for (std::uint32_t q : {2u, 3u}) {
      if (rs.rank() == 3 && q == 3) continue;
      auto f = Field::make(q);
      const ScalarRing ring{f};
      AdjointRepresentation ad(sc, f);
      for (const auto& J : subsets(rs.rank())) {
        for (int trial = 0; trial < 3; ++trial) {
          auto v = random_word(rs, *f, gen, 1 + trial);
          const BigInt value = perm_char_value(*sc, f, J, v, {{}, 1}).value;
          REQUIRE(value == perm_char_value_matrix(ad, J, v));
          // conjugate by a random u in U(q)
          auto u = normal_form(*sc, ring, random_word(rs, *f, gen, 4), canonical);
          auto vn = normal_form(*sc, ring, v, canonical);
          auto conj = nf_multiply(*sc, ring, nf_multiply(*sc, ring, u, vn, canonical),
                                  nf_inverse(*sc, ring, u, canonical), canonical);
          REQUIRE(perm_char_value(*sc, f, J, nf_to_word(conj, canonical, ring), {{}, 1}).value == value);
        }
      }
    }
  }
}

TEST_CASE("threaded evaluation matches the sequential one") {
  auto rs = RootSystem::build("F4");
  auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
  auto f = Field::make(2);
  UnipotentWord<Fq> v{{0, Fq{1}}, {2, Fq{1}}, {5, Fq{1}}};
  PermCharOptions seq{{}, 1, true};
  PermCharOptions par{{}, 4, true};
  for (auto J : {std::vector<int>{}, std::vector<int>{1, 2}}) {
    auto a = perm_char_value(*sc, f, J, v, seq);
    auto b = perm_char_value(*sc, f, J, v, par);
    CHECK(a.value == b.value);
    CHECK(a.families == b.families);
    CHECK(a.unpruned == b.unpruned);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].word == b.records[i].word);
      CHECK(a.records[i].count == b.records[i].count);
    }
  }
}

TEST_CASE("regular unipotent element lies in a unique Borel subgroup") {
  for (const char* label : {"B3", "F4", "D4"}) {
    auto rs = RootSystem::build(label);
    auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
    auto f = Field::make(2);
    UnipotentWord<Fq> v;
    for (int a = 0; a < rs.rank(); ++a) v.push_back({a, Fq{1}});
    for (const auto& J : subsets(rs.rank())) CHECK(perm_char_value(*sc, f, J, v, {{}, 1}).value == 1);
  }
}
