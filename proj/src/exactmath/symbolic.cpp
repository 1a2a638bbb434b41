#include "x0lab/exactmath/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace x0lab {

Monomial::Monomial(const std::string& name, int exponent) {
  if (exponent != 0) factors_.emplace_back(name, exponent);
}

Monomial Monomial::from_factors(std::vector<std::pair<std::string, int>> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (auto& [name, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == name)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(name, e);
  }
  std::erase_if(m.factors_, [](const auto& f) { return f.second == 0; });
  return m;
}

int Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : factors_)
    if (n == name) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::is_polynomial() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.second > 0; });
}

Monomial Monomial::without(std::string_view name) const {
  Monomial m;
  for (const auto& f : factors_)
    if (f.first != name) m.factors_.push_back(f);
  return m;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (const auto& [n, e] : other.factors_)
    if (exponent(n) < e) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  std::vector<std::pair<std::string, int>> out;
  out.reserve(factors_.size() + other.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < other.factors_.size()) {
    if (j == other.factors_.size() || (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
      out.push_back(factors_[i++]);
    } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
      out.push_back(other.factors_[j++]);
    } else {
      const int e = factors_[i].second + other.factors_[j].second;
      if (e != 0) out.emplace_back(factors_[i].first, e);
      ++i;
      ++j;
    }
  }
  factors_ = std::move(out);
  return *this;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& f : m.factors_) f.second = -f.second;
  return m;
}

Monomial Monomial::pow(int n) const {
  if (n == 0) return Monomial();
  Monomial m = *this;
  for (auto& f : m.factors_) f.second *= n;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    int ea = 0, eb = 0;
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      ea = fa[i++].second;
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      eb = fb[j++].second;
    } else {
      ea = fa[i++].second;
      eb = fb[j++].second;
    }
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [n, e] : factors_) {
    if (!out.empty()) out += "*";
    out += n;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

SymbolicPolynomial::SymbolicPolynomial(const Rational& c) { add_term(Monomial(), c); }

SymbolicPolynomial::SymbolicPolynomial(long c) : SymbolicPolynomial(Rational(c)) {}

SymbolicPolynomial::SymbolicPolynomial(const Rational& c, const Monomial& m) { add_term(m, c); }

SymbolicPolynomial SymbolicPolynomial::symbol(const std::string& name) {
  return SymbolicPolynomial(Rational(1), Monomial(name));
}

bool SymbolicPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational SymbolicPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> SymbolicPolynomial::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.insert(f.first);
  return vars;
}

int SymbolicPolynomial::degree_in(std::string_view name) const {
  if (terms_.empty()) throw MathError("degree of the zero polynomial");
  int d = terms_.begin()->first.exponent(name);
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(name));
  return d;
}

int SymbolicPolynomial::min_degree_in(std::string_view name) const {
  if (terms_.empty()) throw MathError("degree of the zero polynomial");
  int d = terms_.begin()->first.exponent(name);
  for (const auto& [m, c] : terms_) d = std::min(d, m.exponent(name));
  return d;
}

std::pair<Monomial, Rational> SymbolicPolynomial::leading_term() const {
  if (terms_.empty()) throw MathError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

std::map<int, SymbolicPolynomial> SymbolicPolynomial::collect(std::string_view name) const {
  std::map<int, SymbolicPolynomial> out;
  for (const auto& [m, c] : terms_) out[m.exponent(name)].add_term(m.without(name), c);
  return out;
}

SymbolicPolynomial SymbolicPolynomial::derivative(std::string_view name) const {
  SymbolicPolynomial out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(name);
    if (e == 0) continue;
    out.add_term(m * Monomial(std::string(name), -1), c * e);
  }
  return out;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw MathError("negative power of zero");
    return rational_pow(1 / base, -e);
  }
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Rational SymbolicPolynomial::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [n, e] : m.factors()) {
      auto it = values.find(n);
      if (it == values.end()) throw MathError("unassigned symbol in evaluation: " + n);
      t *= rational_pow(it->second, e);
    }
    total += t;
  }
  return total;
}

SymbolicPolynomial SymbolicPolynomial::specialize(const std::map<std::string, Rational>& values) const {
  SymbolicPolynomial out;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    std::vector<std::pair<std::string, int>> rest;
    for (const auto& [n, e] : m.factors()) {
      auto it = values.find(n);
      if (it == values.end())
        rest.emplace_back(n, e);
      else
        t *= rational_pow(it->second, e);
    }
    out.add_term(Monomial::from_factors(std::move(rest)), t);
  }
  return out;
}

void SymbolicPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymbolicPolynomial& SymbolicPolynomial::operator+=(const SymbolicPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SymbolicPolynomial& SymbolicPolynomial::operator-=(const SymbolicPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SymbolicPolynomial operator*(const SymbolicPolynomial& a, const SymbolicPolynomial& b) {
  SymbolicPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

SymbolicPolynomial& SymbolicPolynomial::operator*=(const SymbolicPolynomial& other) {
  *this = *this * other;
  return *this;
}

SymbolicPolynomial& SymbolicPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SymbolicPolynomial& SymbolicPolynomial::operator/=(const Rational& c) {
  if (c == 0) throw MathError("division of polynomial by zero");
  for (auto& [m, v] : terms_) v /= c;
  return *this;
}

SymbolicPolynomial SymbolicPolynomial::operator-() const {
  SymbolicPolynomial out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

SymbolicPolynomial SymbolicPolynomial::pow(unsigned n) const {
  SymbolicPolynomial result(1);
  SymbolicPolynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

SymbolicPolynomial SymbolicPolynomial::mul_monomial(const Monomial& m) const {
  SymbolicPolynomial out;
  for (const auto& [mm, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c);
  return out;
}

std::string SymbolicPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (m.is_one()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += m.str();
    }
  }
  return out;
}

SymbolicPolynomial monomial_inverse(const SymbolicPolynomial& m) {
  if (!m.is_monomial()) throw MathError("inverse of a non-monomial: " + m.str());
  const auto& [mono, c] = *m.terms().begin();
  return SymbolicPolynomial(1 / c, mono.inverse());
}

std::pair<SymbolicPolynomial, SymbolicPolynomial> divide(const SymbolicPolynomial& f,
                                                         const SymbolicPolynomial& g) {
  if (g.is_zero()) throw MathError("division by the zero polynomial");
  for (const auto* p : {&f, &g})
    for (const auto& [m, c] : p->terms())
      if (!m.is_polynomial()) throw MathError("divide() needs polynomial inputs");
  const auto [lm, lc] = g.leading_term();
  SymbolicPolynomial q, r, rest = f;
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading_term();
    if (m.divisible_by(lm)) {
      SymbolicPolynomial t(c / lc, m * lm.inverse());
      q += t;
      rest -= t * g;
    } else {
      r.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return {q, r};
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  SymbolicPolynomial run() {
    SymbolicPolynomial out = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw MathError("parse error at " + std::to_string(pos_) + ": " + what + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SymbolicPolynomial expr() {
    SymbolicPolynomial out;
    bool neg = accept('-');
    if (!neg) accept('+');
    SymbolicPolynomial t = term();
    out += neg ? -t : t;
    while (true) {
      if (accept('+'))
        out += term();
      else if (accept('-'))
        out -= term();
      else
        break;
    }
    return out;
  }

  SymbolicPolynomial term() {
    SymbolicPolynomial out = factor();
    while (true) {
      if (accept('*')) {
        out *= factor();
      } else if (accept('/')) {
        SymbolicPolynomial d = factor();
        if (d.is_zero()) fail("division by zero");
        if (!d.is_monomial()) fail("division by a non-monomial");
        out *= monomial_inverse(d);
      } else {
        break;
      }
    }
    return out;
  }

  SymbolicPolynomial factor() {
    SymbolicPolynomial base = atom();
    if (accept('^')) {
      bool neg = accept('-');
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (neg) {
        if (!base.is_monomial()) fail("negative power of a non-monomial");
        base = monomial_inverse(base);
      }
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  SymbolicPolynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SymbolicPolynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return SymbolicPolynomial(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return SymbolicPolynomial::symbol(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolicPolynomial SymbolicPolynomial::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace x0lab
