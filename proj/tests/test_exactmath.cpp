#include <doctest.h>

#include <random>

#include "x0lab/exactmath/field.hpp"
#include "x0lab/exactmath/newton.hpp"
#include "x0lab/exactmath/resultant.hpp"
#include "x0lab/exactmath/symbols.hpp"

using namespace x0lab;

namespace {

SymbolicPolynomial P(const char* s) { return SymbolicPolynomial::parse(s); }

Rational Q(long n, long d = 1) { return make_rational(n, d); }

SymbolTable r_table() {
  SymbolTable t(5);
  t.add("r", Q(2, 5), 5, P("25 - 25*r"));
  return t;
}

QPoly r_minpoly() { return QPoly({Q(-25), Q(25), Q(0), Q(0), Q(0), Q(1)}); }

// Cofactor expansion, the slow definition of the determinant.
Integer det_cofactor(const Matrix<Integer>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<Integer> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Integer term = m[0][c] * det_cofactor(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

ZPoly random_zpoly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Integer> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
  if (c.back() == 0) c.back() = 1;
  return ZPoly(c);
}

}  // namespace

TEST_CASE("val_rat examples") {
  CHECK(val_rat(Q(50), 5) == ExtValuation(2));
  CHECK(val_rat(Q(1, 25), 5) == ExtValuation(-2));
  CHECK(val_rat(Q(0), 5).is_infinite());
  CHECK(val_rat(Q(-3, 7), 5) == ExtValuation(0));
  CHECK_THROWS_AS(val_rat(Q(10), 4), MathError);
  CHECK_THROWS_AS(val_rat(Q(10), 1), MathError);
}

TEST_CASE("val_rat is a valuation on random rationals") {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
  for (int k = 0; k < 1000; ++k) {
    const Rational a = make_rational(num(rng), den(rng));
    const Rational b = make_rational(num(rng), den(rng));
    CHECK(val_rat(a * b, 5) == val_rat(a, 5) + val_rat(b, 5));
    CHECK(val_rat(a + b, 5) >= min(val_rat(a, 5), val_rat(b, 5)));
  }
}

TEST_CASE("ExtValuation order and absorption") {
  const ExtValuation inf;
  CHECK(inf.is_infinite());
  CHECK(ExtValuation(100) < inf);
  CHECK((inf + ExtValuation(3)).is_infinite());
  CHECK((ExtValuation(Q(1, 2)) + ExtValuation(Q(1, 3))) == ExtValuation(Q(5, 6)));
  CHECK(min(inf, ExtValuation(-4)) == ExtValuation(-4));
  CHECK(inf.str() == "inf");
  CHECK_THROWS_AS(inf.value(), MathError);
}

TEST_CASE("rational parsing and residues") {
  CHECK(parse_rational("-6/4") == Q(-3, 2));
  CHECK(parse_rational(" 17 ") == Q(17));
  CHECK_THROWS_AS(parse_rational("1/0"), MathError);
  CHECK_THROWS_AS(parse_rational("abc"), MathError);
  CHECK_THROWS_AS(parse_rational(""), MathError);
  CHECK(residue_mod(Q(1, 3), 5) == 2);
  CHECK(residue_mod(Q(-1), 7) == 6);
  CHECK_THROWS_AS(residue_mod(Q(1, 5), 5), MathError);
  CHECK(unit_part(Q(-250, 3), 5) == Q(-2, 3));
}

TEST_CASE("monomial order is compatible with multiplication") {
  const Monomial x("x"), y("y"), x2 = Monomial("x", 2);
  CHECK(x > y);
  CHECK(x2 > x * y);
  CHECK(x * y > x);
  CHECK((x * y) * Monomial("z") > x * Monomial("z"));
  CHECK((x * x.inverse()).is_one());
  CHECK(Monomial::from_factors({{"y", 2}, {"x", 1}, {"y", -2}}) == x);
}

TEST_CASE("parser") {
  CHECK(P("(x+1)^2") == P("x^2 + 2*x + 1"));
  CHECK(P("x/5 - 1/2") == SymbolicPolynomial(Q(1, 5), Monomial("x")) - SymbolicPolynomial(Q(1, 2)));
  CHECK(P("s^-2 * s^3") == P("s"));
  CHECK(P("-x^2") == -P("x^2"));
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("x +"), MathError);
  CHECK_THROWS_AS(P("1/(x+1)"), MathError);
  CHECK_THROWS_AS(P("(x+1)^-1"), MathError);
  CHECK_THROWS_AS(P("x $ y"), MathError);
  CHECK(P("3*x^2*y - 5").str() == "3*x^2*y - 5");
}

TEST_CASE("polynomial basics") {
  const auto f = P("x^3*y + 2*x*y^2 - 7");
  CHECK(f.degree_in("x") == 3);
  CHECK(f.degree_in("y") == 2);
  CHECK(f.derivative("x") == P("3*x^2*y + 2*y^2"));
  CHECK(f.evaluate({{"x", Q(2)}, {"y", Q(-1)}}) == Q(-8 + 4 - 7));
  CHECK_THROWS_AS(f.evaluate({{"x", Q(2)}}), MathError);
  CHECK(f.specialize({{"y", Q(1)}}) == P("x^3 + 2*x - 7"));
  const auto parts = f.collect("y");
  CHECK(parts.at(2) == P("2*x"));
  CHECK(parts.at(0) == P("-7"));
}

TEST_CASE("multivariate division") {
  const auto lhs = P("(2*x*u - y)^2 - (y^2 - 20*x)");
  const auto [q, r] = divide(lhs, P("x*u^2 - y*u + 5"));
  CHECK(q == P("4*x"));
  CHECK(r.is_zero());
  const auto [q2, r2] = divide(P("x^2 + 1"), P("x + 1"));
  CHECK(q2 * P("x + 1") + r2 == P("x^2 + 1"));
  CHECK(r2 == P("2"));
}

TEST_CASE("normal_form examples") {
  const auto t = r_table();
  CHECK(normal_form(P("r^6"), t) == P("25*r - 25*r^2"));
  CHECK(normal_form(P("r^5 + 25*r - 25"), t).is_zero());
  SymbolTable s(5);
  s.add("sqrt15", Q(1, 2), 2, P("15"));
  CHECK(normal_form(P("sqrt15^2"), s) == P("15"));
  CHECK(normal_form(P("sqrt15^-1"), s) == P("sqrt15/15"));
  CHECK(normal_form(P("r^-1 * r"), t) == P("1"));
  CHECK(normal_form(P("r^-1"), t) == P("r^4/25 + 1"));
}

TEST_CASE("normal_form chains and inverses") {
  SymbolTable t(5);
  t.add("alpha", Q(1, 2), 2, P("5"));
  t.add("beta", Q(3, 4), 2, P("5*alpha"));
  CHECK(normal_form(P("beta^-2"), t) == P("alpha/25"));
  CHECK(normal_form(P("beta^4"), t) == P("125"));
  CHECK(normal_form(P("alpha^5/(15*beta^2)"), t) == P("1/3"));
}

TEST_CASE("normal_form is order independent") {
  SymbolTable t(5);
  t.add("r", Q(2, 5), 5, P("25 - 25*r"));
  t.add("w", Q(1, 2), 2, P("5"));
  const auto f = P("(r^3*w + r^2 - w)^4");
  const auto a = normal_form(f, t);
  const auto b = normal_form(f * P("r^5") - f * P("25 - 25*r") + f, t);
  SymbolTable t2(5);
  t2.add("w", Q(1, 2), 2, P("5"));
  t2.add("r", Q(2, 5), 5, P("25 - 25*r"));
  CHECK(a == normal_form(f, t2));
  CHECK(a == b);
  CHECK(a.degree_in("r") < 5);
  CHECK(a.degree_in("w") < 2);
}

TEST_CASE("symbol table rejects conflicting or inconsistent rules") {
  SymbolTable t(5);
  t.add("r", Q(2, 5), 5, P("25 - 25*r"));
  CHECK_NOTHROW(t.add("r", Q(2, 5), 5, P("25 - 25*r")));
  CHECK_THROWS_AS(t.add("r", Q(2, 5), 5, P("25 + 25*r")), MathError);
  CHECK_THROWS_AS(t.add("r", Q(1, 5)), MathError);
  CHECK_THROWS_AS(t.add("q", Q(1, 3), 2, P("5")), MathError);
  CHECK_FALSE(t.contains("q"));
  CHECK_THROWS_AS(t.add("z", Q(0), 2, P("z^3 + 1")), MathError);
}

TEST_CASE("substitute examples") {
  const auto t = r_table();
  CHECK(substitute(P("x^2"), "x", P("x0 + r"), t) == P("x0^2 + 2*r*x0 + r^2"));
  CHECK(substitute(P("y"), "y", P("beta*y1")) == P("beta*y1"));
  CHECK(substitute(P("x^5"), "x", P("y^2/20")) * Q(3200000) == P("y^10"));
  CHECK(substitute(P("x^-2"), "x", P("5*s")) == P("s^-2/25"));
  CHECK_THROWS_AS(substitute(P("x^-1"), "x", P("s + 1")), MathError);
  CHECK(substitute_all(P("x*y"), {{"x", P("y")}, {"y", P("x")}}) == P("x*y"));
}

TEST_CASE("min_valuation examples") {
  const auto f = P("x0^5 + 25*x0 - 15*y^2");
  const auto mv = min_valuation(f, {{"x0", Q(1, 2)}, {"y", Q(3, 4)}}, 5);
  CHECK(mv.value == ExtValuation(Q(5, 2)));
  CHECK(mv.witnesses.size() == 3);
  CHECK_FALSE(mv.unique);

  const auto mv2 = min_valuation(P("5 + u"), {{"u", Q(0)}}, 5);
  CHECK(mv2.value == ExtValuation(0));
  CHECK(mv2.unique);
  CHECK(mv2.witnesses.front() == Monomial("u"));

  const auto mv3 = min_valuation(P("u^5 + 5*u^4 + 15*u^3 + 25*u^2 + 25*u"), {{"u", Q(3, 10)}}, 5);
  CHECK(mv3.value == ExtValuation(Q(3, 2)));
  CHECK(mv3.unique);
  CHECK(mv3.witnesses.front() == Monomial("u", 5));

  CHECK_THROWS_AS(min_valuation(P("u + v"), {{"u", Q(0)}}, 5), MathError);
  CHECK(min_valuation(SymbolicPolynomial(), {}, 5).value.is_infinite());
}

TEST_CASE("newton_polygon examples") {
  const ExtValuation inf;
  // p_ram coefficient valuations, index 0..10
  const NewtonPolygon a({7, 7, 6, 6, 5, 5, 4, 4, 3, inf, 0});
  REQUIRE(a.segments().size() == 1);
  CHECK(a.segments()[0].slope == Q(-7, 10));
  CHECK(a.root_valuations() == std::vector<std::pair<Rational, long>>{{Q(7, 10), 10}});

  const NewtonPolygon b({2, 2, inf, inf, inf, 0});
  CHECK(b.root_valuations() == std::vector<std::pair<Rational, long>>{{Q(2, 5), 5}});

  const NewtonPolygon c({1, inf, 0});
  CHECK(c.root_valuations() == std::vector<std::pair<Rational, long>>{{Q(1, 2), 2}});

  CHECK_THROWS_AS(NewtonPolygon({inf, 3, inf}), MathError);
}

TEST_CASE("newton_polygon on a product with known roots") {
  const QPoly f = QPoly({Q(-5), Q(1)}) * QPoly({Q(-1, 5), Q(1)}) * QPoly({Q(-1), Q(1)});
  const NewtonPolygon np(coefficient_valuations(f, 5));
  CHECK(np.root_valuations() ==
        std::vector<std::pair<Rational, long>>{{Q(-1), 1}, {Q(0), 1}, {Q(1), 1}});
  for (std::size_t k = 1; k < np.segments().size(); ++k)
    CHECK(np.segments()[k - 1].slope < np.segments()[k].slope);
  long total = 0;
  for (const auto& s : np.segments()) total += s.length;
  CHECK(total == np.width());
}

TEST_CASE("newton_polygon invariants on random polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 6), u(1, 4), skip(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ExtValuation> vals;
    for (int i = 0; i < 9; ++i) vals.push_back(skip(rng) == 0 ? ExtValuation() : ExtValuation(e(rng)));
    vals.front() = ExtValuation(e(rng));
    vals.back() = ExtValuation(e(rng));
    const NewtonPolygon np(vals);
    long total = 0;
    for (std::size_t k = 0; k < np.segments().size(); ++k) {
      total += np.segments()[k].length;
      if (k > 0) CHECK(np.segments()[k - 1].slope < np.segments()[k].slope);
    }
    CHECK(total == 8);
    for (const auto& [i, v] : np.points()) {
      if (v.is_infinite()) continue;
      for (std::size_t k = 0; k + 1 < np.vertices().size(); ++k) {
        const auto& [a, va] = np.vertices()[k];
        const auto& [b, vb] = np.vertices()[k + 1];
        if (a <= i && i <= b) CHECK(v.value() >= va + (vb - va) * make_rational(i - a, b - a));
      }
    }
  }
}

TEST_CASE("parametric_polygon trivial cases") {
  const std::vector<Envelope> two_ends{Envelope({Q(0), Q(0)}), Envelope(), Envelope({Q(1), Q(0)})};
  const auto pp = parametric_polygon(two_ends, Q(0), Q(1));
  CHECK(pp.breakpoints.empty());
  REQUIRE(pp.cells.size() == 1);
  CHECK(pp.cells[0].root_valuations() == std::vector<std::pair<ParamValuation, long>>{{{Q(-1, 2), Q(0)}, 2}});

  const std::vector<Envelope> linear{Envelope({Q(0), Q(1)}), Envelope({Q(0), Q(0)})};
  const auto pl = parametric_polygon(linear, Q(0), Q(1));
  CHECK(pl.breakpoints.empty());
  CHECK(pl.cells[0].root_valuations() == std::vector<std::pair<ParamValuation, long>>{{{Q(0), Q(1)}, 1}});

  CHECK_THROWS_AS(parametric_polygon(linear, Q(1), Q(1)), MathError);
  CHECK_THROWS_AS(parametric_polygon(linear, Q(1), Q(0)), MathError);
}

TEST_CASE("parametric_polygon agrees with newton_polygon on every cell") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(0, 6), s(-3, 3), pieces(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Envelope> pv;
    for (int i = 0; i < 6; ++i) {
      Envelope e;
      const int np = (i == 0 || i == 5) ? 1 + pieces(rng) % 2 : pieces(rng);
      for (int k = 0; k < np; ++k) e.add({Q(c(rng)), Q(s(rng))});
      pv.push_back(e);
    }
    const auto pp = parametric_polygon(pv, Q(0), Q(2));
    for (const auto& cell : pp.cells) {
      for (int k = 1; k <= 5; ++k) {
        const Rational lam = cell.lo + (cell.hi - cell.lo) * make_rational(k, 6);
        const NewtonPolygon direct = specialize(pv, lam);
        std::vector<std::pair<Rational, long>> want, got;
        for (const auto& sg : direct.segments()) want.emplace_back(sg.slope, sg.length);
        for (const auto& sg : cell.segments) got.emplace_back(sg.slope.at(lam), sg.to - sg.from);
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("determinant_bareiss matches cofactor expansion") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      Matrix<Integer> m(n, std::vector<Integer>(n));
      for (auto& row : m)
        for (auto& x : row) x = d(rng) % (trial % 3 == 0 ? 2 : 21);
      CHECK(determinant_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(ZPoly({Integer(-1), Integer(0), Integer(1)}), ZPoly({Integer(-2), Integer(1)})) == 3);
  // Res(x - a, x - b) = a - b, with a, b in Z[t] as a = t, b = t^2
  const UPoly<ZPoly> xa({ZPoly({Integer(0), Integer(-1)}), ZPoly(Integer(1))});
  const UPoly<ZPoly> xb({ZPoly({Integer(0), Integer(0), Integer(-1)}), ZPoly(Integer(1))});
  CHECK(resultant(xa, xb) == ZPoly({Integer(0), Integer(1), Integer(-1)}));
  CHECK_THROWS_AS(resultant(ZPoly(Integer(3)), ZPoly(Integer(2))), MathError);
  CHECK(resultant(ZPoly(Integer(3)), ZPoly({Integer(1), Integer(0), Integer(1)})) == 9);
  CHECK(resultant(ZPoly(), ZPoly({Integer(1), Integer(1)})) == 0);
}

TEST_CASE("resultant multiplicativity and symmetry") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> deg(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const ZPoly f = random_zpoly(rng, deg(rng));
    const ZPoly g = random_zpoly(rng, deg(rng));
    const ZPoly h = random_zpoly(rng, deg(rng));
    CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
    const int sign = (f.degree() * h.degree()) % 2 == 0 ? 1 : -1;
    CHECK(resultant(f, h) == sign * resultant(h, f));
  }
}

TEST_CASE("resultant_in_parameter matches polynomial-entry elimination") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ZPoly> fc, gc;
    for (int i = 0; i < 3; ++i) fc.push_back(random_zpoly(rng, 2));
    for (int i = 0; i < 4; ++i) gc.push_back(random_zpoly(rng, 1));
    const UPoly<ZPoly> f(fc), g(gc);
    CHECK(resultant_in_parameter(f, g) == resultant_polynomial_entries(f, g));
  }
  // Res_y(y^2 - 20x, y - 3) = 9 - 20x
  const UPoly<QPoly> f({QPoly({Q(0), Q(-20)}), QPoly(), QPoly(Q(1))});
  const UPoly<QPoly> g({QPoly(Q(-3)), QPoly(Q(1))});
  CHECK(resultant_in_parameter(f, g) == QPoly({Q(9), Q(-20)}));
  const UPoly<QPoly> fh({QPoly({Q(0), Q(1, 2)}), QPoly(Q(1, 3))});
  CHECK(resultant_in_parameter(fh, g) == QPoly({Q(-1), Q(-1, 2)}));
  CHECK_THROWS_AS(resultant_in_parameter(f, g, 0), MathError);
}

TEST_CASE("interpolation and polynomial utilities") {
  const QPoly p({Q(3), Q(-1, 2), Q(0), Q(7)});
  std::vector<Rational> xs, ys;
  for (int k = -2; k < 2; ++k) {
    xs.emplace_back(k);
    ys.push_back(p.evaluate(Rational(k)));
  }
  CHECK(interpolate(xs, ys) == p);
  CHECK_THROWS_AS(interpolate({Q(1), Q(1)}, {Q(0), Q(1)}), MathError);
  const QPoly sq = QPoly({Q(-1), Q(1)}).pow(2) * QPoly({Q(2), Q(1)});
  CHECK_FALSE(is_squarefree(sq));
  CHECK(squarefree_part(sq) == QPoly({Q(-1), Q(1)}) * QPoly({Q(2), Q(1)}));
  CHECK(primitive_part(QPoly({Q(1, 2), Q(-3, 4)})) == ZPoly({Integer(-2), Integer(3)}));
  CHECK_THROWS_AS(exact_quotient(ZPoly({Integer(1), Integer(1)}), ZPoly({Integer(0), Integer(2)})), MathError);
  const auto shifted = taylor_shift(ZPoly({Integer(0), Integer(0), Integer(1)}));
  CHECK(shifted[0] == ZPoly({Integer(0), Integer(0), Integer(1)}));
  CHECK(shifted[1] == ZPoly({Integer(0), Integer(2)}));
  CHECK(shifted[2] == ZPoly(Integer(1)));
}

TEST_CASE("field_valuation examples") {
  const QPoly m = r_minpoly();
  CHECK(field_valuation(P("r"), m, 5) == ExtValuation(Q(2, 5)));
  CHECK(field_valuation(P("5"), m, 5) == ExtValuation(1));
  const auto t = r_table();
  const auto a = normal_form(P("3125 - 125*r^5"), t);
  CHECK(a == P("3125*r"));
  CHECK(field_valuation(a, m, 5) == ExtValuation(Q(27, 5)));
  CHECK(field_valuation(P("r^5 + 25*r - 25"), m, 5).is_infinite());
  CHECK_THROWS_AS(field_valuation(P("r"), QPoly({Q(-5), Q(0), Q(1), Q(0)}) * QPoly({Q(1), Q(1)}), 5), MathError);
  CHECK_THROWS_AS(field_valuation(P("r"), QPoly({Q(-25), Q(0), Q(1)}), 5), MathError);
  CHECK_THROWS_AS(field_valuation(P("r"), QPoly({Q(-5), Q(2)}), 5), MathError);
}

TEST_CASE("unique generic minimum equals the field valuation") {
  const auto t = r_table();
  const QPoly m = r_minpoly();
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coef(-30, 30), deg(1, 4), rp(0, 4), fp(0, 2);
  int checked = 0;
  for (int trial = 0; trial < 500 && checked < 10; ++trial) {
    SymbolicPolynomial f;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) f.add_term(Monomial("u", i), Rational(coef(rng)));
    const int j = rp(rng), k = fp(rng);
    const Rational vu = Rational(k) + make_rational(2 * j, 5);
    const auto mv = min_valuation(f, {{"u", vu}}, 5);
    if (!mv.unique) continue;
    Rational scale = 1;
    for (int i = 0; i < k; ++i) scale *= 5;
    const SymbolicPolynomial u_val = normal_form(P("r").pow(static_cast<unsigned>(j)) * scale, t);
    const auto ev = normal_form(substitute(f, "u", u_val), t);
    CHECK(field_valuation(ev, m, 5) == mv.value);
    ++checked;
  }
  CHECK(checked == 10);
}
