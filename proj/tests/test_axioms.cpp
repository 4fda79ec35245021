#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "znfree/axioms.hpp"

using namespace znfree;

namespace {

void require_clean(const AxiomReport& r) {
  INFO(r.summary());
  for (size_t i = 0; i < std::min<size_t>(r.violations.size(), 5); ++i) INFO(r.violations[i]);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("every short free word satisfies the axioms", "[axioms]") {
  auto r = check_axioms_exhaustive(fixtures::rank1("ab"), 4, 3);
  require_clean(r);
  CHECK(r.checked.at("L4") == 161 * 161);
  CHECK(r.checked.at("L3") == 53 * 53 * 53);
}

TEST_CASE("exhaustive enumeration refuses towers above the base level", "[axioms]") {
  CHECK_THROWS_AS(check_axioms_exhaustive(fixtures::t1(), 2, 2), DomainError);
}

TEST_CASE("sampled axioms hold on the standard towers", "[axioms]") {
  SampleSpec spec;
  spec.count = 300;
  spec.seed = 11;
  require_clean(check_axioms(fixtures::t1(), spec));
  require_clean(check_axioms(fixtures::t_ab(), spec));
  require_clean(check_axioms(fixtures::t2(), spec));
  require_clean(check_axioms(free_abelian(3), spec));
  require_clean(check_axioms(surface_orientable(2), spec));
  require_clean(check_axioms(surface_nonorientable(3), spec));
}

TEST_CASE("commutation lemmas hold on structured instances", "[axioms]") {
  SampleSpec spec;
  spec.count = 200;
  spec.seed = 5;
  for (auto t : {fixtures::t1(), fixtures::t_ab(), surface_orientable(2), free_abelian(3)}) {
    auto r = commutation_suite(t, spec);
    require_clean(r);
    CHECK(r.checked.at("le:LS") > 0);
    CHECK(r.checked.at("le:cycl") > 0);
  }
}

TEST_CASE("a tower with a length-changing relation is caught", "[axioms]") {
  // z^-1 a z = b^2 breaks length preservation; the harness must notice.
  auto bad = parse_tower(R"({"alphabet":["a","b"],"levels":[[{"name":"z","source":["a"],"target":["b^2"]}]]})");
  SampleSpec spec;
  spec.count = 200;
  auto r = check_axioms(bad, spec);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(validate_tower(bad).empty());
}

TEST_CASE("sampling is reproducible from the seed", "[axioms]") {
  auto t = fixtures::t1();
  SampleSpec spec;
  spec.seed = 99;
  std::mt19937_64 a(spec.seed), b(spec.seed);
  for (int i = 0; i < 50; ++i) CHECK(sample_element(t, spec, a) == sample_element(t, spec, b));
}

TEST_CASE("sampled elements respect the stable-letter budget", "[axioms]") {
  auto t = fixtures::t1();
  SampleSpec spec;
  spec.radius = 2;
  spec.word_cap = 30;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) CHECK(lambda_of(t, sample_element(t, spec, rng)) <= 2);
}

TEST_CASE("free-group Gromov products match the common-prefix oracle", "[axioms]") {
  auto t = fixtures::rank1("ab");
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    std::string u = oracle::random_reduced(rng, "ab", 12), v = oracle::random_reduced(rng, "ab", 12);
    if (i % 2) v = oracle::mul(u.substr(0, u.size() / 2), v);
    auto c = gromov_product(t, fixtures::el(t, oracle::to_expr(u)), fixtures::el(t, oracle::to_expr(v)));
    CHECK(c == LambdaVec({static_cast<int64_t>(oracle::common_prefix(u, v).size())}));
  }
}
