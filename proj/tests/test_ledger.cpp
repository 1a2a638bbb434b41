#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "x0lab/ledger/ledger.hpp"

using namespace x0lab;
using namespace x0lab::ledger;

namespace {

long md(long v, long n) { return ((v % n) + n) % n; }

// Riemann-Hurwitz on the right action of S, ST and T on P^1(Z/N).
long genus_by_cosets(long N) {
  std::vector<long> units;
  for (long u = 1; u <= N; ++u)
    if (std::gcd(u, N) == 1) units.push_back(u % N);
  auto canon = [&](long c, long d) {
    std::pair<long, long> best{N, N};
    for (long u : units) best = std::min(best, {u * c % N, u * d % N});
    return best;
  };
  std::set<std::pair<long, long>> points;
  for (long c = 0; c < N; ++c)
    for (long d = 0; d < N; ++d)
      if (std::gcd(std::gcd(c, d), N) == 1) points.insert(canon(c, d));
  std::map<std::pair<long, long>, std::pair<long, long>> t_map;
  long nu2 = 0, nu3 = 0;
  for (const auto& [c, d] : points) {
    if (canon(d, md(-c, N)) == std::pair{c, d}) ++nu2;
    if (canon(d, md(d - c, N)) == std::pair{c, d}) ++nu3;
    t_map[{c, d}] = canon(c, (c + d) % N);
  }
  std::set<std::pair<long, long>> seen;
  long cusps = 0;
  for (const auto& x : points) {
    if (seen.count(x)) continue;
    ++cusps;
    for (auto y = x; !seen.count(y); y = t_map.at(y)) seen.insert(y);
  }
  const long mu = static_cast<long>(points.size());
  const Rational g = 1 + Rational(mu) / 12 - Rational(nu2) / 4 - Rational(nu3) / 3 - Rational(cusps) / 2;
  return g.get_num().get_si();
}

long pow_mod(long b, long e, long p) {
  long r = 1;
  b = md(b, p);
  for (; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Hasse invariant sum_i C(m, i)^2 lambda^i mod p, m = (p - 1) / 2.
std::vector<long> hasse(long p) {
  const long m = (p - 1) / 2;
  std::vector<long> h(m + 1);
  long binom = 1;
  for (long i = 0; i <= m; ++i) {
    h[i] = binom * binom % p;
    binom = binom * md(m - i, p) % p * pow_mod(i + 1, p - 2, p) % p;
  }
  return h;
}

long eval(const std::vector<long>& f, long x, long p) {
  long r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = md(r * x + *it, p);
  return r;
}

// remainder of f modulo lambda^2 - lambda + 1
bool divisible_by_cyclotomic(std::vector<long> f, long p) {
  for (long k = static_cast<long>(f.size()) - 1; k >= 2; --k) {
    const long c = f[k];
    f[k] = 0;
    f[k - 1] = md(f[k - 1] + c, p);
    f[k - 2] = md(f[k - 2] - c, p);
  }
  return md(f[0], p) == 0 && md(f.size() > 1 ? f[1] : 0, p) == 0;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("genus of X_0(N)") {
  CHECK(genus_x0(1) == 0);
  CHECK(genus_x0(11) == 1);
  CHECK(genus_x0(25) == 0);
  CHECK(genus_x0(37) == 2);
  CHECK(genus_x0(125) == 8);
  CHECK(genus_x0(343) == 26);
  CHECK(genus_x0(2197) == 184);
  CHECK(genus_x0(4913) == 417);
  CHECK_THROWS_AS(genus_x0(0), MathError);
}

TEST_CASE("genus agrees with coset enumeration") {
  for (long N = 1; N <= 120; ++N) CHECK(genus_x0(N) == genus_by_cosets(N));
  for (long N : {125L, 243L, 343L}) CHECK(genus_x0(N) == genus_by_cosets(N));
}

TEST_CASE("supersingular survey") {
  const auto s7 = ss_survey(7);
  CHECK(s7.total() == 1);
  CHECK(s7.entries == std::vector<std::pair<long, long>>{{4, 1}});
  const auto s5 = ss_survey(5);
  CHECK(s5.entries == std::vector<std::pair<long, long>>{{6, 1}});
  const auto s17 = ss_survey(17);
  CHECK(s17.entries == std::vector<std::pair<long, long>>{{6, 1}, {2, 1}});
  CHECK(s17.mass == make_rational(16, 24));
  CHECK_THROWS_AS(ss_survey(3), MathError);
  CHECK_THROWS_AS(ss_survey(15), MathError);
}

TEST_CASE("survey agrees with the Hasse invariant") {
  for (long p = 5; p < 100; ++p) {
    if (!is_prime(p)) continue;
    const auto h = hasse(p);
    const long ss1728 = eval(h, p - 1, p) == 0 ? 1 : 0;
    const long ss0 = divisible_by_cyclotomic(h, p) ? 1 : 0;
    const long generic = ((p - 1) / 2 - 2 * ss0 - 3 * ss1728);
    REQUIRE(generic % 6 == 0);
    const auto s = ss_survey(p);
    CHECK(s.total() == generic / 6 + ss0 + ss1728);
    std::map<long, long> by_aut(s.entries.begin(), s.entries.end());
    CHECK(by_aut.count(6) == (p % 3 == 2 ? 1u : 0u));
    CHECK(by_aut.count(4) == (p % 4 == 3 ? 1u : 0u));
    CHECK(by_aut[6] == ss0);
    CHECK(by_aut[4] == ss1728);
    CHECK(by_aut[2] == generic / 6);
    CHECK(s.mass == make_rational(p - 1, 24));
    for (const auto& [aut, count] : s.entries) CHECK((p + 1) % (aut / 2) == 0);
  }
}

TEST_CASE("supersingular residues") {
  CHECK(supersingular_residues(5) == std::vector<long>{0});
  CHECK(supersingular_residues(7) == std::vector<long>{6});
  CHECK(supersingular_residues(13) == std::vector<long>{5});
  CHECK(supersingular_residues(17) == std::vector<long>{0, 8});
  for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    const auto res = supersingular_residues(p);
    const std::set<long> rs(res.begin(), res.end());
    const auto h = hasse(p);
    for (long lam = 2; lam < p; ++lam) {
      if (eval(h, lam, p) != 0) continue;
      const long num = 256 * pow_mod(md(lam * lam - lam + 1, p), 3, p) % p;
      const long den = md(lam * lam % p * md(lam - 1, p) % p * md(lam - 1, p), p);
      CHECK(rs.count(num * pow_mod(den, p - 2, p) % p));
    }
    CHECK(static_cast<long>(res.size()) <= ss_survey(p).total());
  }
}

TEST_CASE("component budget") {
  const auto b5 = component_budget(5);
  REQUIRE(b5.per_ss.size() == 1);
  CHECK(b5.per_ss[0].cm_count == 4);
  CHECK(b5.per_ss[0].cm_genus == 2);
  CHECK(b5.total_known == 8);
  CHECK(b5.curve_genus == 8);
  CHECK(b5.exact);
  CHECK(component_budget(7).total_known == 24);
  CHECK(component_budget(7).curve_genus == 26);
  CHECK(component_budget(13).total_known == 168);
  CHECK(component_budget(13).curve_genus == 184);
  CHECK(component_budget(17).total_known == 384);
  CHECK(component_budget(17).curve_genus == 417);
  CHECK(component_budget(7, 1).total_known == 26);
  CHECK_THROWS_AS(component_budget(7, 2), VerificationError);
  CHECK_THROWS_AS(component_budget(5, 1), VerificationError);
  CHECK_THROWS_AS(component_budget(13, 0, std::vector<long>{10, 10}), VerificationError);
}

TEST_CASE("graph genus") {
  const auto star = parse_graph(
      "# stable graph\n"
      "vertex c 0\nvertex a 2\nvertex b 2\nvertex d 2\nvertex e 2\n"
      "edge c a\nedge c b\nedge c d\nedge c e\n");
  CHECK(graph_genus(star) == 8);
  CHECK(graph_genus(parse_graph("vertex x 5\n")) == 5);
  CHECK(graph_genus(parse_graph("vertex a 0\nvertex b 0\nvertex c 0\nedge a b\nedge b c\nedge c a\n")) == 1);
  CHECK_THROWS_AS(graph_genus(parse_graph("vertex a 0\nvertex b 0\n")), MathError);
  CHECK_THROWS_AS(parse_graph("vertex a\n"), MathError);
  CHECK_THROWS_AS(parse_graph("vertex a 0\nvertex a 1\n"), MathError);
  CHECK_THROWS_AS(parse_graph("loop a\n"), MathError);
  CHECK_THROWS_AS(graph_genus(parse_graph("vertex a 0\nedge a z\n")), MathError);
  CHECK_THROWS_AS(graph_genus(GraphSpec{}), MathError);
}
