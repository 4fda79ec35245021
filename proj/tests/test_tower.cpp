#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "znfree/hnn.hpp"

using namespace znfree;
using fixtures::el;

TEST_CASE("conjugation by the stable letter follows the relation", "[tower]") {
  auto t = fixtures::t1();
  CHECK(el(t, "z^-1*a*z") == el(t, "b"));
  CHECK(el(t, "z*b*z^-1") == el(t, "a"));
  CHECK(multiply(t, el(t, "z^-1*a"), el(t, "z")) == el(t, "b"));
  CHECK(el(t, "a^3*z") == el(t, "z*b^3"));
  CHECK(el(t, "z^-1*a^5*z*b^-5").is_identity());
}

TEST_CASE("lengths of connecting elements and mixed words", "[tower]") {
  auto t = fixtures::t1();
  CHECK(length(t, el(t, "z")) == LambdaVec({0, 1}));
  CHECK(length(t, el(t, "z^-1")) == LambdaVec({0, 1}));
  CHECK(length(t, el(t, "a*z")) == LambdaVec({1, 1}));
  CHECK(length(t, el(t, "a^3*z")) == LambdaVec({3, 1}));
  CHECK(length(t, el(t, "a*z*a^-1")) == LambdaVec({2, 1}));
  CHECK(length(t, el(t, "z*b^-3")) == LambdaVec({-3, 1}));
  CHECK(length(t, el(t, "a^-1*z")) == LambdaVec({-1, 1}));
  CHECK(length(t, el(t, "z*z")) == LambdaVec({0, 2}));
  CHECK(lambda_of(t, el(t, "z*a*z")) == 2);
  CHECK(lambda_of(t, el(t, "a*b")) == 0);
  CHECK(height(el(t, "a*b")) == 1);
  CHECK(height(el(t, "z")) == 2);
  CHECK(height(identity()) == 0);
}

TEST_CASE("common initial segments", "[tower]") {
  auto t = fixtures::t1();
  CHECK(com(t, el(t, "z*a"), el(t, "z*b")) == el(t, "z"));
  CHECK(gromov(t, el(t, "z*a"), el(t, "z*b")) == LambdaVec({0, 1}));
  CHECK(com(t, el(t, "a*z"), el(t, "a*b")) == el(t, "a"));
  CHECK(com(t, el(t, "z"), el(t, "a^2")) == el(t, "a^2"));
  CHECK(com(t, el(t, "z"), el(t, "a^-1")) == identity());
}

TEST_CASE("prefixes inside a connecting element", "[tower]") {
  auto t = fixtures::t1();
  auto z = el(t, "z");
  CHECK(prefix(t, z, LambdaVec({3, 0})) == el(t, "a^3"));
  CHECK(prefix(t, z, LambdaVec({-2, 1})) == el(t, "z*b^-2"));
  CHECK(prefix(t, z, LambdaVec({0, 1})) == z);
  CHECK_THROWS_AS(prefix(t, z, LambdaVec({1, 1})), DomainError);
  CHECK_THROWS_AS(prefix(t, el(t, "a*b"), LambdaVec({3, 0})), DomainError);
}

TEST_CASE("cyclic decomposition and roots", "[tower]") {
  auto t = fixtures::t1();
  auto g = el(t, "a*z^-1*a^-1");
  auto s = cyclic_decompose(t, g);
  CHECK(s.conj == el(t, "a^-1"));
  CHECK(s.core == el(t, "z^-1"));
  CHECK(is_cyclically_reduced(t, el(t, "a^-1*z*a")));
  CHECK_FALSE(is_cyclically_reduced(t, g));
  int64_t k = 0;
  CHECK(root(t, el(t, "(z*a)^3"), &k) == el(t, "z*a"));
  CHECK(k == 3);
  CHECK(root(t, el(t, "a^6"), &k) == el(t, "a"));
  CHECK(k == 6);
  CHECK_FALSE(is_proper_power(t, el(t, "z*a*z")));
}

TEST_CASE("periodic stripping", "[tower]") {
  auto t = fixtures::t1();
  auto [rest, n] = strip_periodic(t, el(t, "a^3*b"), el(t, "a"));
  CHECK(rest == el(t, "b"));
  CHECK(n == 3);
  auto [rest2, n2] = strip_periodic(t, el(t, "b*a^-2"), el(t, "a"), false);
  CHECK(rest2 == el(t, "b"));
  CHECK(n2 == -2);
  // the tail of z is b-periodic without end
  CHECK_THROWS_AS(strip_periodic(t, el(t, "z*b^-2"), el(t, "b"), false), StabilizationError);
}

TEST_CASE("abelian subgroups", "[tower]") {
  auto t = fixtures::t_ab();
  auto ex = abelian_membership(t, el(t, "a^2*z^3"), {el(t, "a"), el(t, "z")});
  REQUIRE(ex);
  CHECK(*ex == std::vector<int64_t>{2, 3});
  CHECK_FALSE(abelian_membership(t, el(t, "a*z*a"), {el(t, "z")}));
  CHECK(commutes(t, el(t, "a"), el(t, "z")));
  auto t1 = fixtures::t1();
  CHECK(apply_phi(t1, 0, el(t1, "a^4")) == el(t1, "b^4"));
  CHECK(apply_phi(t1, 0, el(t1, "b^-2"), true) == el(t1, "a^-2"));
  CHECK_THROWS_AS(apply_phi(t1, 0, el(t1, "b")), DomainError);
}

TEST_CASE("centralisers", "[tower]") {
  auto tab = fixtures::t_ab();
  CHECK(centralizer(tab, el(tab, "a")).generators == std::vector<Element>{el(tab, "a"), el(tab, "z")});
  CHECK(centralizer(tab, el(tab, "z")).generators == std::vector<Element>{el(tab, "a"), el(tab, "z")});
  auto t1 = fixtures::t1();
  CHECK(centralizer(t1, el(t1, "a^3")).generators == std::vector<Element>{el(t1, "a")});
  auto z3 = free_abelian(3);
  CHECK(centralizer(z3, el(z3, "a")).generators.size() == 3);
  auto c = centralizer(t1, el(t1, "b*z*a*b^-1"));
  for (const auto& g : c.generators) CHECK(commutes(t1, g, el(t1, "b*z*a*b^-1")));
}

TEST_CASE("conjugacy search", "[tower]") {
  auto t = fixtures::t1();
  auto x = find_conjugator(t, el(t, "a"), el(t, "b"));
  REQUIRE(x);
  CHECK(conjugate_by(t, el(t, "a"), *x) == el(t, "b"));
  CHECK_FALSE(are_conjugate(t, el(t, "a"), el(t, "b^-1")));
  auto g = el(t, "z*a*z*b^2");
  auto h = conjugate_by(t, g, el(t, "a*z^-1*b"));
  auto y = find_conjugator(t, g, h);
  REQUIRE(y);
  CHECK(conjugate_by(t, g, *y) == h);
}

TEST_CASE("normal forms agree with a Britton oracle on T1", "[tower][property]") {
  auto t = fixtures::t1();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400; ++i) {
    std::string w = oracle::random_reduced(rng, "abz", 10);
    std::string expr;
    for (char c : w) expr += std::string(expr.empty() ? "" : "*") + oracle::to_expr(std::string(1, c));
    Element g = el(t, expr.empty() ? "1" : expr);
    CHECK(static_cast<int>(g.block_count()) == oracle::t1_stable_count(w));
    CHECK(length(t, g)[1] == oracle::t1_stable_count(w));
  }
}

TEST_CASE("group laws on sampled elements", "[tower][property]") {
  for (auto t : {fixtures::t1(), fixtures::t_ab(), free_abelian(3), surface_orientable(2), fixtures::t2()}) {
    std::vector<Element> gens;
    for (size_t i = 0; i < t.alphabet().size(); ++i) gens.push_back(base_generator(static_cast<int>(i)));
    for (size_t i = 0; i < t.letters().size(); ++i) gens.push_back(stable_generator(t, static_cast<int>(i)));
    std::mt19937_64 rng(17);
    auto sample = [&] {
      Element g;
      int n = std::uniform_int_distribution<int>(0, 6)(rng);
      for (int k = 0; k < n; ++k) {
        const Element& x = gens[std::uniform_int_distribution<size_t>(0, gens.size() - 1)(rng)];
        g = multiply(t, g, rng() % 2 ? x : invert(t, x));
      }
      return g;
    };
    for (int i = 0; i < 60; ++i) {
      Element f = sample(), g = sample(), h = sample();
      CHECK(multiply(t, multiply(t, f, g), h) == multiply(t, f, multiply(t, g, h)));
      CHECK(multiply(t, f, invert(t, f)).is_identity());
      CHECK(invert(t, invert(t, f)) == f);
      CHECK(parse_element(t, render(t, f)) == f);
    }
  }
}
