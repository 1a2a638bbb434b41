#include "x0lab/exactmath/rational.hpp"

#include <cctype>

#include "x0lab/exactmath/valuation.hpp"

namespace x0lab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw MathError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw MathError("malformed rational literal: " + s);
    return Rational(Integer(strip_plus(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw MathError("malformed rational literal: " + s);
  return make_rational(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_prime(const Integer& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

bool is_prime(unsigned long n) { return is_prime(Integer(n)); }

// ---------------------------------------------------------------------------

const Rational& ExtValuation::value() const {
  if (!finite_) throw MathError("value() of infinite valuation");
  return value_;
}

ExtValuation& ExtValuation::operator+=(const ExtValuation& other) {
  if (!finite_) return *this;
  if (!other.finite_) {
    *this = ExtValuation();
    return *this;
  }
  value_ += other.value_;
  return *this;
}

bool operator==(const ExtValuation& a, const ExtValuation& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtValuation& a, const ExtValuation& b) {
  if (!a.finite_ || !b.finite_) {
    if (a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtValuation::str() const { return finite_ ? to_string(value_) : "inf"; }

ExtValuation min(const ExtValuation& a, const ExtValuation& b) { return b < a ? b : a; }

namespace {

void require_prime(unsigned long p) {
  if (!is_prime(p)) throw MathError("valuation requested at non-prime " + std::to_string(p));
}

long remove_factor(Integer& n, unsigned long p) {
  if (n == 0) return 0;
  Integer prime(p);
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

ExtValuation val_int(const Integer& n, unsigned long p) {
  require_prime(p);
  if (n == 0) return ExtValuation::infinity();
  Integer m = n;
  return ExtValuation(remove_factor(m, p));
}

ExtValuation val_rat(const Rational& q, unsigned long p) {
  require_prime(p);
  if (q == 0) return ExtValuation::infinity();
  Integer num = q.get_num();
  Integer den = q.get_den();
  return ExtValuation(remove_factor(num, p) - remove_factor(den, p));
}

Rational unit_part(const Rational& q, unsigned long p) {
  require_prime(p);
  if (q == 0) throw MathError("unit_part of zero");
  Integer num = q.get_num();
  Integer den = q.get_den();
  remove_factor(num, p);
  remove_factor(den, p);
  return make_rational(num, den);
}

unsigned long residue_mod(const Rational& q, unsigned long p) {
  const ExtValuation v = val_rat(q, p);
  if (v.is_infinite()) return 0;
  if (v.value() < 0) throw MathError("residue of non-integral rational " + to_string(q));
  const Integer prime(p);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), prime.get_mpz_t()) == 0)
    throw MathError("denominator not invertible mod p");
  Integer r = (q.get_num() * inv) % prime;
  if (r < 0) r += prime;
  return r.get_ui();
}

}  // namespace x0lab
