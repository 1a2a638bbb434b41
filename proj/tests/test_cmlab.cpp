#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "x0lab/cmlab/cmlab.hpp"
#include "x0lab/exactmath/newton.hpp"

using namespace x0lab;
using namespace x0lab::cmlab;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

ZPoly Z(std::vector<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(v);
}

// Every (a, b, c) with |b| <= a <= c and b^2 - 4ac = D, scanning c directly.
long brute_class_number(long D) {
  long count = 0;
  for (long a = 1; a <= -D; ++a)
    for (long c = a; 4 * a * c <= -D + a * a; ++c)
      for (long b = -a; b <= a; ++b) {
        if (b * b - 4 * a * c != D) continue;
        if ((b < 0) && (-b == a || a == c)) continue;
        if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
        ++count;
      }
  return count;
}

// v_p(a + b sqrt(p)) in Q_p(sqrt p) when the two terms have distinct valuations.
Rational val_ramified(const Integer& a, const Integer& b, unsigned long p) {
  const ExtValuation va = val_int(a, p);
  const ExtValuation vb = val_int(b, p);
  const ExtValuation vb2 = vb.is_finite() ? ExtValuation(vb.value() + Q(1, 2)) : vb;
  REQUIRE(va != vb2);
  return min(va, vb2).value();
}

}  // namespace

TEST_CASE("reduced forms") {
  CHECK(reduced_forms(-4) == std::vector<QuadForm>{{1, 0, 1}});
  CHECK(reduced_forms(-20) == std::vector<QuadForm>{{1, 0, 5}, {2, 2, 3}});
  CHECK(reduced_forms(-3) == std::vector<QuadForm>{{1, 1, 1}});
  CHECK(reduced_forms(-80).size() == 4);
  CHECK_THROWS_AS(reduced_forms(-5), MathError);
  CHECK_THROWS_AS(reduced_forms(8), MathError);
}

TEST_CASE("reduced forms satisfy the reduction conditions and match a brute-force count") {
  for (long D = -3; D >= -400; --D) {
    if (D % 4 != 0 && D % 4 != -3) continue;
    const auto forms = reduced_forms(D);
    CAPTURE(D);
    for (const auto& f : forms) {
      CHECK(f.discriminant() == D);
      CHECK(f.is_reduced());
    }
    CHECK(static_cast<long>(forms.size()) == brute_class_number(D));
  }
}

TEST_CASE("class numbers of the table orders") {
  const std::map<long, std::size_t> h{{-20, 2},  {-80, 4},  {-180, 4}, {-120, 4}, {-55, 4},  {-280, 4},
                                      {-40, 2},  {-160, 4}, {-15, 2},  {-60, 2},  {-35, 2},  {-260, 8},
                                      {-28, 1},  {-84, 4},  {-52, 2},  {-104, 6}};
  for (const auto& [D, n] : h) {
    CAPTURE(D);
    CHECK(reduced_forms(D).size() == n);
  }
}

TEST_CASE("j at classical points") {
  const mpfr_prec_t bits = 256;
  const BigComplex i(BigFloat(bits), BigFloat(1L, bits));
  const BigComplex ji = j_tau(i, bits);
  CHECK(abs(ji.re - BigFloat(1728L, bits)).to_double() < 1e-50);
  CHECK(abs(ji.im).to_double() < 1e-50);

  const BigComplex rho(BigFloat(Q(1, 2), bits), sqrt(BigFloat(3L, bits)) / BigFloat(2L, bits));
  CHECK(abs(j_tau(rho, bits)).to_double() < 1e-50);

  const BigComplex s5(BigFloat(bits), sqrt(BigFloat(5L, bits)));
  const BigComplex j5 = j_tau(s5, bits);
  CHECK(j5.re > BigFloat(1264538L, bits));
  CHECK(j5.re < BigFloat(1264539L, bits));
  // 632000 + 282880 sqrt5
  const BigFloat exact = BigFloat(632000L, bits) + BigFloat(282880L, bits) * sqrt(BigFloat(5L, bits));
  CHECK(abs(j5.re - exact).to_double() < 1e-40);

  CHECK_THROWS_AS(j_tau(BigComplex(BigFloat(1L, bits), BigFloat(-1L, bits)), bits), MathError);
  CHECK_THROWS_AS(j_tau(i, 64), MathError);
}

TEST_CASE("q-series truncation") {
  const mpfr_prec_t bits = 256;
  const BigFloat q = exp(-(BigFloat::pi(bits).mul_ui(2)));  // |q| at tau = i
  const long n = series_terms(q, bits);
  // |q|^n < 2^-(bits + 64)
  CHECK(static_cast<double>(n) * 2 * 3.14159265358979 / std::log(2.0) > bits + 64);
  CHECK_THROWS_AS(series_terms(BigFloat(1L, bits), bits), MathError);
}

TEST_CASE("class polynomials") {
  CHECK(class_polynomial(-4).poly == Z({-1728, 1}));
  CHECK(class_polynomial(-3).poly == Z({0, 1}));
  CHECK(class_polynomial(-28).poly == Z({-16581375, 1}));
  CHECK(class_polynomial(-20).poly == Z({-681472000, -1264000, 1}));
  CHECK(class_polynomial(-40).poly == Z({9103145472000, -425692800, 1}));
  CHECK(class_polynomial(-15).poly == Z({-121287375, 191025, 1}));
  CHECK(class_polynomial(-35).poly == Z({-134217728000, 117964800, 1}));
  const auto h60 = class_polynomial(-60).poly;
  CHECK(h60[0] == Integer("153173312762625"));
  CHECK(h60[1] == Integer("-37018076625"));
  const auto h52 = class_polynomial(-52).poly;
  CHECK(h52[0] == Integer("-567663552000000"));
  CHECK(h52[1] == Integer("-6896880000"));
}

TEST_CASE("class polynomial of -20 against the exact conjugates") {
  // j = 632000 +- 282880 sqrt5: sum and norm
  const Integer a = 632000, b = 282880;
  const ZPoly h = class_polynomial(-20).poly;
  CHECK(h[1] == -2 * a);
  CHECK(h[0] == a * a - 5 * b * b);
}

TEST_CASE("class polynomial precision invariants") {
  for (long D : {-20L, -80L, -260L, -104L}) {
    CAPTURE(D);
    const auto h = class_polynomial(D);
    CHECK(h.poly.degree() == static_cast<int>(h.forms.size()));
    CHECK(h.poly.leading() == 1);
    CHECK(h.max_rounding_error < 1e-6);
    CHECK(h.log2_max_residual < -static_cast<double>(h.precision_used) / 2);
    CHECK(h.precision_used >= 256);
  }
}

TEST_CASE("roots of H(-20) lie on the circle v(j) = 3/2") {
  const NewtonPolygon np(coefficient_valuations(class_polynomial(-20).poly, 5));
  CHECK(np.root_valuations() == std::vector<std::pair<Rational, long>>{{Q(3, 2), 2}});
}

TEST_CASE("congruence specs and case selection") {
  CHECK(congruence_spec(5, -20).sign == -1);
  CHECK(congruence_spec(5, -40).sign == 1);
  CHECK(congruence_spec(5, -15).sign == 1);
  CHECK(congruence_spec(5, -55).sign == -1);
  CHECK(congruence_spec(7, -28).sign == -1);
  CHECK(congruence_spec(7, -84).sign == 1);
  CHECK(congruence_spec(13, -52).sign == -1);
  CHECK(congruence_spec(13, -104).sign == 1);
  CHECK(congruence_spec(13, -52).m == Integer(13L * 13 * 13 * 13 * 13 * 13 * 13));
  CHECK(congruence_spec(7, -28).m == Integer(2401));
  CHECK_THROWS_AS(congruence_spec(5, -100), MathError);
  CHECK_THROWS_AS(congruence_spec(5, -24), MathError);
  CHECK_THROWS_AS(congruence_spec(11, -44), MathError);
  CHECK(congruence_spec(5, -20).str() == "v_5(j^2 - 125) > 3");
}

TEST_CASE("congruence check for -20 against arithmetic in Q(sqrt5)") {
  const auto r = congruence_check(class_polynomial(-20).poly, congruence_spec(5, -20));
  CHECK(r.pass);
  CHECK(r.min_root_valuation == ExtValuation(Q(9, 2)));
  CHECK(r.g.degree() == 2);
  // j^2 - 125 = (a^2 + 5 b^2 - 125) + 2ab sqrt5
  const Integer a = 632000, b = 282880;
  CHECK(val_ramified(a * a + 5 * b * b - 125, 2 * a * b, 5) == Q(9, 2));
}

TEST_CASE("congruence check for -28 against integer arithmetic") {
  const auto r = congruence_check(class_polynomial(-28).poly, congruence_spec(7, -28));
  CHECK(r.pass);
  const Integer j0 = 16581375 - 1728;
  const Integer direct = j0 * j0 * j0 * j0 - 2401;
  CHECK(r.min_root_valuation == val_int(direct, 7));
  CHECK(r.min_root_valuation == ExtValuation(5));
}

TEST_CASE("congruence checks over all table discriminants and the extra primes") {
  const std::map<long, Rational> expected{
      {-20, Q(9, 2)},  {-80, Q(7, 2)}, {-180, Q(7, 2)}, {-120, Q(7, 2)}, {-55, Q(7, 2)},  {-280, Q(7, 2)},
      {-40, Q(7, 2)},  {-160, Q(7, 2)}, {-15, Q(7, 2)}, {-60, Q(9, 2)},  {-35, Q(7, 2)},  {-260, Q(7, 2)}};
  for (const auto& [D, v] : expected) {
    CAPTURE(D);
    const auto r = congruence_check(class_polynomial(D).poly, congruence_spec(5, D));
    CHECK(r.pass);
    CHECK(r.min_root_valuation == ExtValuation(v));
    long total = 0;
    for (const auto& [val, n] : r.root_valuations) total += n;
    CHECK(total == r.g.degree());
  }
  CHECK(congruence_check(class_polynomial(-84).poly, congruence_spec(7, -84)).min_root_valuation ==
        ExtValuation(Q(9, 2)));
  CHECK(congruence_check(class_polynomial(-52).poly, congruence_spec(13, -52)).min_root_valuation ==
        ExtValuation(Q(15, 2)));
  CHECK(congruence_check(class_polynomial(-104).poly, congruence_spec(13, -104)).min_root_valuation ==
        ExtValuation(Q(15, 2)));
}

TEST_CASE("the wrong case fails the bound") {
  CongruenceSpec s = congruence_spec(5, -20);
  s.sign = 1;
  const auto r = congruence_check(class_polynomial(-20).poly, s);
  CHECK_FALSE(r.pass);
  CHECK(r.min_root_valuation == ExtValuation(3));
  CHECK_THROWS_AS(congruence_check(Z({1, 2}), s), MathError);
}

TEST_CASE("table rows") {
  const auto& rows = table_rows();
  REQUIRE(rows.size() == 12);
  CHECK(rows.back().taus.size() == 8);
  for (const auto& row : rows) {
    CAPTURE(row.order);
    const auto c = table_crosscheck(row);
    CHECK(c.length_matches);
    CHECK(c.polynomial_matches);
    CHECK(c.pass);
    CHECK(congruence_spec(5, row.discriminant).sign == (row.congruence_case == 1 ? -1 : 1));
  }
}

TEST_CASE("a perturbed row is rejected") {
  TableRow row = table_rows().front();
  row.taus[1] = {Q(0), Q(1, 2), 5};
  const auto c = table_crosscheck(row);
  CHECK(c.length_matches);
  CHECK_FALSE(c.polynomial_matches);
  row.taus.pop_back();
  CHECK_FALSE(table_crosscheck(row).length_matches);
}

TEST_CASE("class polynomial cache") {
  const auto dir = std::filesystem::temp_directory_path() / "x0lab_cache_test";
  std::filesystem::remove_all(dir);
  ClassPolyCache cache(dir);
  CHECK_FALSE(cache.lookup(-20).has_value());
  ClassPolynomial h = class_polynomial(-20);
  cache.store(h);
  ClassPolynomial stale = h;
  stale.precision_used = 1;
  cache.store(stale);
  cache.store(class_polynomial(-15));
  const auto hit = cache.lookup(-20);
  REQUIRE(hit.has_value());
  CHECK(hit->poly == h.poly);
  CHECK(hit->precision_used == 1);
  CHECK(hit->from_cache);
  std::ifstream in(cache.file());
  std::string first;
  std::getline(in, first);
  CHECK(first == "-20 2 " + std::to_string(h.precision_used) + " -681472000 -1264000 1");
  long files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.is_regular_file();
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
}
