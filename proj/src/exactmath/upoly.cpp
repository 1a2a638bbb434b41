#include "x0lab/exactmath/upoly.hpp"

namespace x0lab {

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational c = r[k + db] / lb;
    q[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) r[k + i] -= c * b[i];
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly make_monic(const QPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading());
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

bool is_squarefree(const QPoly& a) {
  if (a.is_zero()) return false;
  return gcd(a, a.derivative()).degree() == 0;
}

QPoly squarefree_part(const QPoly& a) {
  if (a.is_zero()) throw MathError("squarefree part of zero");
  const QPoly g = gcd(a, a.derivative());
  return make_monic(divmod(a, g).first);
}

QPoly to_q(const ZPoly& a) {
  std::vector<Rational> c;
  for (const auto& x : a.coeffs()) c.emplace_back(x);
  return QPoly(std::move(c));
}

ZPoly primitive_part(const QPoly& a) {
  if (a.is_zero()) return ZPoly();
  Integer den = 1;
  for (const auto& x : a.coeffs()) den = lcm(den, x.get_den());
  std::vector<Integer> c;
  Integer content = 0;
  for (const auto& x : a.coeffs()) {
    Integer v = x.get_num() * (den / x.get_den());
    content = gcd(content, v);
    c.push_back(v);
  }
  for (auto& v : c) v /= content;
  if (c.back() < 0)
    for (auto& v : c) v = -v;
  return ZPoly(std::move(c));
}

ZPoly to_z(const QPoly& a) {
  std::vector<Integer> c;
  for (const auto& x : a.coeffs()) {
    if (x.get_den() != 1) throw MathError("non-integral coefficient " + to_string(x));
    c.push_back(x.get_num());
  }
  return ZPoly(std::move(c));
}

ZPoly exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.is_zero()) return ZPoly();
  const int db = b.degree();
  if (a.degree() < db) throw MathError("inexact polynomial division");
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db) + 1, Integer(0));
  const Integer& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    if (!mpz_divisible_p(r[k + db].get_mpz_t(), lb.get_mpz_t())) throw MathError("inexact polynomial division");
    const Integer c = r[k + db] / lb;
    q[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) r[k + i] -= c * b[i];
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) throw MathError("inexact polynomial division");
  return ZPoly(std::move(q));
}

QPoly to_qpoly(const SymbolicPolynomial& f, const std::string& var) {
  std::vector<Rational> c;
  for (const auto& [m, v] : f.terms()) {
    const int e = m.exponent(var);
    if (e < 0 || m.without(var) != Monomial()) throw MathError("polynomial is not univariate in " + var);
    if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e) + 1, Rational(0));
    c[e] += v;
  }
  return QPoly(std::move(c));
}

SymbolicPolynomial from_qpoly(const QPoly& f, const std::string& var) {
  SymbolicPolynomial s;
  for (int i = 0; i <= f.degree(); ++i) s.add_term(Monomial(var, i), f[i]);
  return s;
}

UPoly<SymbolicPolynomial> to_poly_over(const SymbolicPolynomial& f, const std::string& var) {
  std::vector<SymbolicPolynomial> c;
  for (const auto& [k, part] : f.collect(var)) {
    if (k < 0) throw MathError("negative power of " + var);
    if (static_cast<int>(c.size()) <= k) c.resize(static_cast<std::size_t>(k) + 1);
    c[k] = part;
  }
  return UPoly<SymbolicPolynomial>(std::move(c));
}

UPoly<QPoly> to_bivariate(const SymbolicPolynomial& f, const std::string& outer, const std::string& inner) {
  std::vector<QPoly> c;
  for (const auto& [k, part] : f.collect(outer)) {
    if (k < 0) throw MathError("negative power of " + outer);
    if (static_cast<int>(c.size()) <= k) c.resize(static_cast<std::size_t>(k) + 1);
    c[k] = to_qpoly(part, inner);
  }
  return UPoly<QPoly>(std::move(c));
}

UPoly<ZPoly> taylor_shift(const ZPoly& f) {
  const UPoly<ZPoly> y_plus_z({ZPoly({Integer(0), Integer(1)}), ZPoly(Integer(1))});
  UPoly<ZPoly> acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * y_plus_z + UPoly<ZPoly>(ZPoly(f[i]));
  return acc;
}

}  // namespace x0lab
