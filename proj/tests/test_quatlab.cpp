#include <doctest.h>

#include <random>
#include <set>

#include "x0lab/quatlab/quatlab.hpp"

using namespace x0lab;
using namespace x0lab::quatlab;

namespace {

long md(long v, long p) { return ((v % p) + p) % p; }

// Closed form of (A + C)(A' + C') with A = a + b i and C = c e_j + d e_k.
AbarElement oracle_mul(const AbarElement& x, const AbarElement& y, long p, long al) {
  return {md(x.a * y.a + al * x.b * y.b, p), md(x.a * y.b + x.b * y.a, p),
          md(x.a * y.c + al * x.b * y.d + x.c * y.a - al * x.d * y.b, p),
          md(x.a * y.d + x.b * y.c + x.d * y.a - x.c * y.b, p)};
}

long inv_mod(long v, long p) {
  for (long k = 1; k < p; ++k)
    if (md(v * k, p) == 1) return k;
  return 0;
}

// u C u^-1 for u = a + b i, by expanding with the oracle product.
AbarElement oracle_conj(long a, long b, long c, long d, long p, long al) {
  const long n = md(a * a - al * b * b, p), ni = inv_mod(n, p);
  const AbarElement u{a, b, 0, 0}, ui{md(a * ni, p), md(-b * ni, p), 0, 0};
  return oracle_mul(oracle_mul(u, {0, 0, c, d}, p, al), ui, p, al);
}

}  // namespace

TEST_CASE("structure constants") {
  const Abar A({7, 3});
  const AbarElement i = A.basis(1), ej = A.basis(2), ek = A.basis(3);
  CHECK(A.mul(i, ej) == ek);
  CHECK(A.mul(ej, i) == A.neg(ek));
  CHECK(A.mul(ej, ek) == AbarElement{});
  CHECK(A.mul(ek, ej) == AbarElement{});
  CHECK(A.mul(ej, ej) == AbarElement{});
  CHECK(A.mul(i, ek) == A.element(0, 0, 3, 0));
  CHECK(A.mul(ek, i) == A.element(0, 0, -3, 0));
  CHECK(A.mul(i, i) == A.element(3, 0, 0, 0));
  CHECK(A.associative());
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(Abar({7, 2}), MathError);  // 2 = 3^2 mod 7
  CHECK_THROWS_AS(Abar({9, 2}), MathError);
  CHECK_THROWS_AS(Abar({5, 4}), MathError);
  CHECK(default_params(5).alpha == 2);
  CHECK(default_params(7).alpha == 3);
  CHECK(default_params(17).alpha == 3);
}

TEST_CASE("product matches closed form") {
  std::mt19937 rng(11);
  for (long p : {5L, 7L, 13L}) {
    const Abar A(default_params(p));
    std::uniform_int_distribution<long> dist(0, p - 1);
    for (int n = 0; n < 400; ++n) {
      const AbarElement x{dist(rng), dist(rng), dist(rng), dist(rng)};
      const AbarElement y{dist(rng), dist(rng), dist(rng), dist(rng)};
      const AbarElement z{dist(rng), dist(rng), dist(rng), dist(rng)};
      CHECK(A.mul(x, y) == oracle_mul(x, y, p, A.params().alpha));
      CHECK(A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)));
      if (A.is_unit(x)) CHECK(A.mul(x, A.inverse(x)) == A.basis(0));
    }
  }
}

TEST_CASE("nilradical is a two-sided ideal") {
  for (long p : {5L, 7L, 13L}) CHECK(nilradical_is_ideal(Abar(default_params(p))));
}

TEST_CASE("orbit analysis") {
  const OrbitReport r7 = orbit_analysis({7, 3});
  CHECK(r7.pass);
  CHECK(r7.orbits.size() == 6);
  for (const auto& o : r7.orbits) CHECK(o.size == 8);
  CHECK(r7.orbits.front().representative == AbarElement{0, 0, 0, 1});

  const OrbitReport r5 = orbit_analysis({5, 2});
  CHECK(r5.orbits.size() == 4);
  long total = 0;
  for (const auto& o : r5.orbits) {
    CHECK(o.size == 6);
    total += o.size;
  }
  CHECK(total == 24);

  for (long p : {13L, 17L}) {
    const OrbitReport r = orbit_analysis(default_params(p));
    CHECK(r.pass);
    CHECK(static_cast<long>(r.orbits.size()) == p - 1);
  }
}

TEST_CASE("orbits by brute force") {
  for (long p : {5L, 7L, 13L}) {
    const long al = default_params(p).alpha;
    const Abar A({p, al});
    std::map<long, long> invariant_count;
    for (long c = 0; c < p; ++c)
      for (long d = 0; d < p; ++d) {
        if (c == 0 && d == 0) continue;
        ++invariant_count[md(c * c - al * d * d, p)];
        std::set<std::pair<long, long>> orbit;
        for (long a = 0; a < p; ++a)
          for (long b = 0; b < p; ++b) {
            if (md(a * a - al * b * b, p) == 0) continue;
            const AbarElement y = oracle_conj(a, b, c, d, p, al);
            CHECK(y.a == 0);
            CHECK(y.b == 0);
            CHECK(md(y.c * y.c - al * y.d * y.d, p) == md(c * c - al * d * d, p));
            CHECK(y == A.conjugate({a, b, 0, 0}, {0, 0, c, d}));
            orbit.insert({y.c, y.d});
          }
        CHECK(static_cast<long>(orbit.size()) == p + 1);
      }
    CHECK(static_cast<long>(invariant_count.size()) == p - 1);
    for (const auto& [v, n] : invariant_count) {
      CHECK(v != 0);
      CHECK(n == p + 1);
    }
  }
}

TEST_CASE("quaternion norm is multiplicative") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  auto r = [&]() -> Rational { return make_rational(num(rng), den(rng)); };
  for (int n = 0; n < 100; ++n) {
    const QuatElement x{r(), r(), r(), r()}, y{r(), r(), r(), r()};
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(x.norm() == x.a * x.a + x.b * x.b + 7 * x.c * x.c + 7 * x.d * x.d);
  }
  const QuatElement i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(i * i == QuatElement{-1, 0, 0, 0});
  CHECK(j * j == QuatElement{-7, 0, 0, 0});
  CHECK(i * j == k);
  CHECK(j * i == QuatElement{0, 0, 0, -1});
}

TEST_CASE("uniformizer image search") {
  const UniformizerSearch s = uniformizer_image_search();
  CHECK(s.a_forced_zero);
  CHECK(s.b_divisible);
  CHECK(s.reduced_condition == SymbolicPolynomial::parse("c^2 + d^2 + 3"));
  REQUIRE(s.solutions.size() == 8);
  const Abar A({7, 6});
  std::set<AbarElement> got(s.solutions.begin(), s.solutions.end());
  CHECK(got.count(A.element(0, 0, 2, 0)));
  CHECK(got.count(A.element(0, 0, 3, 3)));
  CHECK(!got.count(A.element(0, 0, 1, 1)));
  // brute force over (c, d) mod 7
  long n = 0;
  for (long c = 0; c < 7; ++c)
    for (long d = 0; d < 7; ++d)
      if ((c * c + d * d) % 7 == 4) {
        ++n;
        CHECK(got.count({0, 0, c, d}));
      }
  CHECK(n == 8);
  // integer solutions of b^2 + 7c^2 + 7d^2 = 28
  for (long b = -6; b <= 6; ++b)
    for (long c = -3; c <= 3; ++c)
      for (long d = -3; d <= 3; ++d)
        if (b * b + 7 * c * c + 7 * d * d == 28) CHECK(b == 0);
}

TEST_CASE("aut refinement") {
  const AutRefinement r = aut_refinement();
  CHECK(r.matches_expected);
  CHECK(r.parts.size() == 4);
  for (const auto& part : r.parts) CHECK(part.size() == 2);
  const Abar A({7, 6});
  const AbarElement i = A.basis(1);
  CHECK(A.conjugate(i, A.element(0, 0, 2, 0)) == A.element(0, 0, -2, 0));
  CHECK(A.conjugate(i, A.element(0, 0, 3, 3)) == A.element(0, 0, -3, -3));
  CHECK(A.str(A.element(0, 0, 3, -3)) == "3e_j - 3e_k");
}

TEST_CASE("class count") {
  CHECK(class_count(7, 4) == std::pair<long, long>{4, 8});
  CHECK(class_count(5, 6) == std::pair<long, long>{2, 4});
  CHECK(class_count(13, 2) == std::pair<long, long>{14, 28});
  CHECK_THROWS_AS(class_count(7, 6), MathError);
  CHECK_THROWS_AS(class_count(7, 8), MathError);
}
