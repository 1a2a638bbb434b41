#include <doctest.h>

#include <functional>
#include <random>

#include "x0lab/modmaps/modmaps.hpp"

using namespace x0lab;
using namespace x0lab::modmaps;

namespace {

SymbolicPolynomial P(const char* s) { return SymbolicPolynomial::parse(s); }

Rational Q(long n, long d = 1) { return make_rational(n, d); }

Rational pw(const Rational& x, int n) {
  Rational out = 1;
  for (int k = 0; k < n; ++k) out *= x;
  return out;
}

}  // namespace

TEST_CASE("table of maps against direct formulas") {
  const std::map<std::string, std::function<Rational(const Rational&)>> direct{
      {"pi1_j", [](const Rational& t) -> Rational { return pw(t * t + 250 * t + 3125, 3) / pw(t, 5); }},
      {"pi5_j", [](const Rational& t) -> Rational { return pw(t * t + 10 * t + 5, 3) / t; }},
      {"w5_t", [](const Rational& t) -> Rational { return 125 / t; }},
      {"pi1_t", [](const Rational& u) -> Rational { return pw(u, 5) / (pw(u, 4) + 5 * pw(u, 3) + 15 * u * u + 25 * u + 25); }},
      {"pi5_t", [](const Rational& u) -> Rational { return u * (pw(u, 4) + 5 * pw(u, 3) + 15 * u * u + 25 * u + 25); }},
      {"w25_u", [](const Rational& u) -> Rational { return 5 / u; }},
  };
  CHECK(builtin_maps().size() == 6);
  for (const auto& m : builtin_maps()) {
    CAPTURE(m.name());
    for (const Rational& at : {Q(3, 7), Q(-11, 2)}) CHECK(m.evaluate(at) == direct.at(m.name())(at));
  }
}

TEST_CASE("map degrees and transcriptions") {
  auto degs = [](const std::string& n) {
    const auto& m = builtin_map(n);
    return std::make_pair(m.numerator_poly().degree(), m.denominator_poly().degree());
  };
  CHECK(degs("pi1_j") == std::make_pair(6, 5));
  CHECK(degs("pi5_j") == std::make_pair(6, 1));
  CHECK(degs("pi1_t") == std::make_pair(5, 4));
  CHECK(degs("pi5_t") == std::make_pair(5, 0));
  CHECK(builtin_map("pi5_t").numerator() == P("u^5 + 5*u^4 + 15*u^3 + 25*u^2 + 25*u"));
  CHECK(builtin_map("pi1_j").numerator() == P("(t^2 + 250*t + 3125)^3"));
  CHECK(builtin_map("w5_t").numerator() == P("125"));
  CHECK_THROWS_AS(builtin_map("pi7_j"), MathError);
}

TEST_CASE("rational map invariants") {
  CHECK_THROWS_AS(RationalMap("bad", "t", "t", P("t^2 - 1"), P("t - 1")), MathError);
  CHECK_THROWS_AS(RationalMap("bad", "t", "t", P("1"), P("0")), MathError);
  CHECK_THROWS_AS(builtin_map("w5_t").evaluate(Q(0)), MathError);
}

TEST_CASE("Atkin-Lehner maps are involutions") {
  CHECK(compose(builtin_map("w5_t"), builtin_map("w5_t")).is_identity());
  CHECK(compose(builtin_map("w25_u"), builtin_map("w25_u")).is_identity());
  CHECK_FALSE(builtin_map("w5_t").is_identity());
  CHECK_THROWS_AS(compose(builtin_map("w25_u"), builtin_map("w5_t")), MathError);
}

TEST_CASE("composition agrees with pointwise evaluation") {
  const auto c = compose(builtin_map("pi1_j"), builtin_map("pi5_t"));
  CHECK(c.source() == "u");
  CHECK(c.target() == "j");
  for (const Rational& u : {Q(1), Q(2, 3), Q(-5, 4)})
    CHECK(c.evaluate(u) == builtin_map("pi1_j").evaluate(builtin_map("pi5_t").evaluate(u)));
  const auto wt = compose(builtin_map("pi1_j"), builtin_map("w5_t"));
  for (const Rational& t : {Q(1), Q(7, 3)}) CHECK(wt.evaluate(t) == builtin_map("pi5_j").evaluate(t));
}

TEST_CASE("images of circles") {
  const auto a = image_valuation(builtin_map("pi5_t"), ValRegion::circle("u", Q(3, 10)));
  CHECK(a.unique);
  CHECK(a.lower_bound == ExtValuation(Q(3, 2)));
  CHECK(a.numerator_witnesses == std::vector<Monomial>{Monomial("u", 5)});
  CHECK(a.conclusion == "circle→circle exact");

  const auto b = image_valuation(builtin_map("pi1_j"), ValRegion::circle("t", Q(3, 2)));
  CHECK(b.unique);
  CHECK(b.lower_bound == ExtValuation(Q(3, 2)));

  const auto c = image_valuation(builtin_map("pi1_j"), ValRegion::circle("t", Q(5, 2)));
  CHECK_FALSE(c.unique);
  CHECK(c.lower_bound == ExtValuation(Q(5, 2)));
  CHECK(c.conclusion == "bound only (tie)");

  CHECK_THROWS_AS(image_valuation(builtin_map("pi1_j"), ValRegion::circle("u", Q(1))), MathError);
}

TEST_CASE("exact circle images are stable inside the generic cell") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-9, 9);
  struct Case {
    const char* map;
    const char* coord;
    Rational lambda;
  };
  for (const Case& k : {Case{"pi5_t", "u", Q(3, 10)}, Case{"pi1_j", "t", Q(3, 2)}}) {
    const auto& m = builtin_map(k.map);
    const auto base = image_valuation(m, ValRegion::circle(k.coord, k.lambda));
    REQUIRE(base.unique);
    // the dominant term is x^e with e = deg num witness - deg den witness
    const int e = base.numerator_witnesses.front().exponent(k.coord) -
                  base.denominator_witnesses.front().exponent(k.coord);
    for (int trial = 0; trial < 3; ++trial) {
      const Rational lam = k.lambda + make_rational(d(rng), 1000);
      const auto moved = image_valuation(m, ValRegion::circle(k.coord, lam));
      CHECK(moved.unique);
      CHECK(moved.lower_bound == ExtValuation(base.lower_bound.value() + e * (lam - k.lambda)));
    }
  }
}

TEST_CASE("image valuation checked at explicit 5-adic points") {
  // u = 125k with 5 not dividing k lies on v(u) = 3
  const auto& m = builtin_map("pi5_t");
  for (long k : {1L, 2L, 3L, 7L}) {
    const Rational u = 125 * Q(k);
    const auto cert = image_valuation(m, ValRegion::circle("u", Q(3)));
    CHECK(cert.unique);
    CHECK(val_rat(m.evaluate(u), 5) == cert.lower_bound);
  }
}

TEST_CASE("disks and annuli give bounds for polynomial maps") {
  const auto d = image_valuation(builtin_map("pi5_t"), ValRegion::disk("u", Q(1, 2)));
  CHECK(d.lower_bound == ExtValuation(Q(5, 2)));
  const auto a = image_valuation(builtin_map("pi5_t"), ValRegion::annulus("u", Q(1, 10), Q(3, 10)));
  CHECK(a.lower_bound == ExtValuation(Q(1, 2)));
  CHECK_THROWS_AS(image_valuation(builtin_map("pi1_j"), ValRegion::disk("t", Q(5, 2))), MathError);
  CHECK_THROWS_AS(ValRegion::annulus("u", Q(1), Q(1)), MathError);
}

TEST_CASE("fixed circles of the involutions") {
  CHECK(al_fixed_circle(builtin_map("w5_t")) == Q(3, 2));
  CHECK(al_fixed_circle(builtin_map("w25_u")) == Q(1, 2));
  CHECK(al_fixed_circle(RationalMap("one", "t", "t", P("1"), P("t"))) == Q(0));
  CHECK_THROWS_AS(al_fixed_circle(builtin_map("pi5_j")), MathError);
  // the fixed circle is the one with 3 - lambda = lambda
  const auto img = image_valuation(builtin_map("w5_t"), ValRegion::circle("t", Q(3, 2)));
  CHECK(img.lower_bound == ExtValuation(Q(3, 2)));
}

TEST_CASE("ramification image") {
  const auto r = ramification_image_polynomial();
  CHECK(r.radical == ZPoly({Integer(-125), Integer(0), Integer(1)}));
  CHECK(r.eliminant == ZPoly({Integer(-125), Integer(0), Integer(1)}).pow(5));
  CHECK(r.radical_divides_target);
  CHECK(r.pass);
  CHECK(r.eliminant.degree() <= 20);
  CHECK(r.eliminant.degree() % 2 == 0);
  CHECK(r.conjugate_eliminant.degree() <= 20);
  CHECK(r.conjugate_eliminant.degree() % 2 == 0);
  // the conjugate route also sees the images of -y
  CHECK(divmod(to_q(r.conjugate_eliminant), to_q(r.eliminant)).second.is_zero());
  CHECK_FALSE(r.conjugate_divides_target);
}

TEST_CASE("a root of t^2 = 125 has valuation 3/2") {
  SymbolTable t(5);
  t.add("tau", Q(3, 2), 2, P("125"));
  CHECK(min_valuation(P("tau"), t).value == ExtValuation(Q(3, 2)));
}

TEST_CASE("CM disk identities") {
  const auto c = cm_disk_identities();
  CHECK(c.identity_holds);
  CHECK(c.valuation == ExtValuation(Q(17, 5)));
  CHECK(c.boundary == ExtValuation(3));
  CHECK(c.pass);
}

TEST_CASE("component chains over the too-supersingular disk") {
  const auto chains = e_component_chains();
  REQUIRE(chains.size() == 2);
  for (const auto& ch : chains) {
    CAPTURE(ch.component);
    CHECK(ch.pass);
  }
  CHECK(chains[1].steps[0].image.unique);
  CHECK(chains[1].steps[0].image.lower_bound == ExtValuation(Q(1, 2)));
  CHECK(chains[1].steps[1].image.lower_bound == ExtValuation(Q(5, 2)));
  CHECK(chains[0].steps[1].image.lower_bound == ExtValuation(Q(5, 2)));
}
