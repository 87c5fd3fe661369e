#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gcl/algebra.hpp"
#include "gcl/checks.hpp"
#include "gcl/errors.hpp"

using namespace gcl;

namespace {

Form blade_form(const Signature& sig, std::initializer_list<int> idx) {
  return Form::monomial(sig, Blade::from_indices(std::vector<int>(idx)), 1);
}

}  // namespace

TEST_CASE("signature basics") {
  Signature sig(2, 1);
  CHECK(sig.n() == 3);
  CHECK(sig.metric(1) == 1);
  CHECK(sig.metric(2) == 1);
  CHECK(sig.metric(3) == -1);
  CHECK(sig.mod8() == 1);
  CHECK(Signature(0, 3).mod8() == 5);
  CHECK_THROWS_AS(Signature(0, 0), usage_error);
  CHECK_THROWS_AS(Signature(-1, 2), usage_error);
  CHECK_THROWS_AS(Signature(9, 8), usage_error);
  CHECK_THROWS_AS(sig.metric(4), usage_error);
}

TEST_CASE("blade canonical order and rendering") {
  Blade unit;
  CHECK(unit.grade() == 0);
  CHECK(unit.str(3) == "1");

  Blade e12 = Blade::from_indices(std::vector<int>{1, 2});
  Blade e13 = Blade::from_indices(std::vector<int>{1, 3});
  Blade e23 = Blade::from_indices(std::vector<int>{2, 3});
  Blade e14 = Blade::from_indices(std::vector<int>{1, 4});
  CHECK(e12 < e13);
  CHECK(e13 < e23);
  CHECK(e14 < e23);  // lexicographic, not bitmask-numeric
  CHECK(unit < e12);
  CHECK(e12.str(4) == "e12");
  CHECK(e12.str(10) == "e{1,2}");
  CHECK(parse_blade("e12") == e12);
  CHECK(parse_blade("e{1,2}") == e12);
  CHECK(parse_blade("1") == unit);
  CHECK_THROWS_AS(parse_blade("e21"), usage_error);
  CHECK_THROWS_AS(parse_blade("e"), usage_error);
  CHECK_THROWS_AS(Blade::from_indices(std::vector<int>{2, 2}), usage_error);
  CHECK_THROWS_AS(Blade::from_indices(std::vector<int>{0}), usage_error);
}

TEST_CASE("form term bookkeeping stays canonical") {
  Signature sig(2, 0);
  Form f(sig);
  Blade e1 = Blade::from_indices(std::vector<int>{1});
  f.add_term(e1, Rational(1, 2));
  f.add_term(e1, Rational(1, 2));
  CHECK(f.coeff(e1) == 1);
  f.add_term(e1, -1);
  CHECK(f.is_zero());

  Form g = Form::scalar(sig, 3) + blade_form(sig, {1, 2});
  CHECK(g.str() == "+3*1 +1*e12");
  CHECK_THROWS_AS(g += Form::unit(Signature(3, 0)), usage_error);
  CHECK((Rational(0) * g).is_zero());
  CHECK(g.grades() == std::vector<int>{0, 2});
  CHECK_FALSE(g.homogeneous());
  int grade = -1;
  CHECK(blade_form(sig, {1, 2}).homogeneous(&grade));
  CHECK(grade == 2);
  CHECK_THROWS_AS(Form::monomial(Signature(1, 0), Blade::from_indices(std::vector<int>{2}), 1),
                  usage_error);
}

TEST_CASE("wedge on blades") {
  Signature sig(3, 0);
  Form e1 = blade_form(sig, {1});
  Form e2 = blade_form(sig, {2});

  CHECK(wedge(e1, e2) == blade_form(sig, {1, 2}));
  CHECK(wedge(e1, e1).is_zero());
  CHECK(wedge(e2, e1) == -blade_form(sig, {1, 2}));
  CHECK_THROWS_AS(wedge(e1, Form::unit(Signature(2, 0))), usage_error);
}

TEST_CASE("wedge is associative and graded-anticommutative") {
  for (int n = 1; n <= 6; ++n) {
    Signature sig(n, 0);
    for (std::uint32_t am = 0; am < (1u << n); ++am) {
      for (std::uint32_t bm = 0; bm < (1u << n); ++bm) {
        Form a = Form::monomial(sig, Blade::from_mask(am), 1);
        Form b = Form::monomial(sig, Blade::from_mask(bm), 1);
        int ga = Blade::from_mask(am).grade();
        int gb = Blade::from_mask(bm).grade();
        Rational sign((ga * gb) % 2 != 0 ? -1 : 1);
        REQUIRE(wedge(a, b) == sign * wedge(b, a));
      }
    }
  }

  std::mt19937_64 rng(31337);
  Signature sig(2, 2);
  for (int k = 0; k < 300; ++k) {
    Form a = random_form(sig, rng);
    Form b = random_form(sig, rng);
    Form c = random_form(sig, rng);
    REQUIRE(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("contraction on blades") {
  Signature sig(3, 0);
  Form e12 = blade_form(sig, {1, 2});
  CHECK(contract(1, e12) == blade_form(sig, {2}));
  CHECK(contract(2, e12) == -blade_form(sig, {1}));
  CHECK(contract(3, e12).is_zero());
  CHECK(contract(1, Form::unit(sig)).is_zero());
  CHECK_THROWS_AS(contract(0, e12), usage_error);
  CHECK_THROWS_AS(contract(4, e12), usage_error);

  // Grade drops by exactly one on every surviving term.
  std::mt19937_64 rng(99);
  for (int k = 0; k < 50; ++k) {
    Form f = random_homogeneous(sig, rng, 2);
    Form c = contract(2, f);
    int grade = -1;
    CHECK(c.homogeneous(&grade));
    if (!c.is_zero()) CHECK(grade == 1);
  }
}

TEST_CASE("graded Leibniz rule for contraction") {
  std::mt19937_64 rng(4242);
  for (Signature sig : {Signature(3, 0), Signature(2, 2), Signature(1, 4)}) {
    for (int k = 0; k < 100; ++k) {
      Form a = random_form(sig, rng);
      Form b = random_form(sig, rng);
      for (int i = 1; i <= sig.n(); ++i) {
        REQUIRE(contract(i, wedge(a, b)) ==
                wedge(contract(i, a), b) + wedge(involution(a), contract(i, b)));
      }
    }
  }
}

TEST_CASE("grade projection") {
  Signature sig(3, 0);
  Form f = blade_form(sig, {1}) + Rational(3) * blade_form(sig, {1, 2});
  CHECK(grade_part(1, f) == blade_form(sig, {1}));
  CHECK(grade_part(2, f) == Rational(3) * blade_form(sig, {1, 2}));
  CHECK(grade_part(0, Form::unit(sig)) == Form::unit(sig));
  CHECK(grade_part(3, f).is_zero());
  CHECK_THROWS_AS(grade_part(-1, f), usage_error);
  CHECK_THROWS_AS(grade_part(4, f), usage_error);

  Form sum(sig);
  for (int k = 0; k <= sig.n(); ++k) sum += grade_part(k, f);
  CHECK(sum == f);
}

TEST_CASE("canonical form round-trips through its own terms") {
  std::mt19937_64 rng(2468);
  for (Signature sig : {Signature(3, 0), Signature(2, 2), Signature(12, 0)}) {
    for (int k = 0; k < 50; ++k) {
      Form f = random_form(sig, rng, 6);
      Form rebuilt(sig);
      for (const auto& [b, c] : f.terms()) rebuilt.add_term(b, c);
      REQUIRE(rebuilt == f);
      for (const auto& [b, c] : f.terms()) REQUIRE(c != 0);
    }
  }
}

TEST_CASE("involution eigenspaces are the even and odd parts") {
  std::mt19937_64 rng(1357);
  Signature sig(3, 2);
  for (int k = 0; k < 50; ++k) {
    Form f = random_form(sig, rng);
    Form even(sig), odd(sig);
    for (int g = 0; g <= sig.n(); ++g)
      (g % 2 == 0 ? even : odd) += grade_part(g, f);
    REQUIRE(even + odd == f);
    REQUIRE(involution(even) == even);
    REQUIRE(involution(odd) == -odd);
  }
}

TEST_CASE("involution and reversion") {
  Signature sig(3, 0);
  CHECK(involution(blade_form(sig, {1})) == -blade_form(sig, {1}));
  CHECK(involution(blade_form(sig, {1, 2})) == blade_form(sig, {1, 2}));
  CHECK(involution(Form::unit(sig) + blade_form(sig, {1, 2, 3})) ==
        Form::unit(sig) - blade_form(sig, {1, 2, 3}));

  CHECK(reversion(blade_form(sig, {1, 2})) == -blade_form(sig, {1, 2}));
  CHECK(reversion(blade_form(sig, {1})) == blade_form(sig, {1}));
  Signature sig4(4, 0);
  CHECK(reversion(blade_form(sig4, {1, 2, 3, 4})) == blade_form(sig4, {1, 2, 3, 4}));

  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    Form f = random_form(sig, rng);
    CHECK(involution(involution(f)) == f);
    CHECK(reversion(reversion(f)) == f);
  }
}

TEST_CASE("involutions are (anti-)automorphisms for wedge") {
  for (int n = 1; n <= 5; ++n) {
    Signature sig(n, 0);
    for (std::uint32_t am = 0; am < (1u << n); ++am) {
      for (std::uint32_t bm = 0; bm < (1u << n); ++bm) {
        Form a = Form::monomial(sig, Blade::from_mask(am), 1);
        Form b = Form::monomial(sig, Blade::from_mask(bm), 1);
        REQUIRE(involution(wedge(a, b)) == wedge(involution(a), involution(b)));
        REQUIRE(reversion(wedge(a, b)) == wedge(reversion(b), reversion(a)));
      }
    }
  }
}

TEST_CASE("rational parsing and rendering") {
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("17") == 17);
  CHECK_THROWS_AS(parse_rational("3/"), usage_error);
  CHECK_THROWS_AS(parse_rational("a"), usage_error);
  CHECK_THROWS_AS(parse_rational("1/0"), usage_error);
  CHECK(factorial(5) == 120);
  CHECK(factorial(0) == 1);
}
