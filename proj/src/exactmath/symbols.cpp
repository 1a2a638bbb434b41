#include "x0lab/exactmath/symbols.hpp"

#include <deque>

namespace x0lab {

SymbolTable& SymbolTable::add(const std::string& name, const Rational& valuation) {
  auto it = symbols_.find(name);
  if (it != symbols_.end()) {
    if (it->second.valuation != valuation || it->second.rewrite)
      throw MathError("conflicting definition for symbol " + name);
    return *this;
  }
  symbols_[name] = ValuedSymbol{name, valuation, std::nullopt};
  return *this;
}

SymbolTable& SymbolTable::add(const std::string& name, const Rational& valuation, int power,
                              const SymbolicPolynomial& replacement) {
  if (power < 1) throw MathError("rewrite power must be positive for " + name);
  if (replacement.degree_in(name) >= power || replacement.min_degree_in(name) < 0)
    throw MathError("rewrite for " + name + " must lower its degree");
  ValuedSymbol s{name, valuation, Rewrite{power, replacement}};
  auto it = symbols_.find(name);
  if (it != symbols_.end()) {
    const auto& old = it->second;
    const bool same = old.valuation == valuation && old.rewrite && old.rewrite->power == power &&
                      old.rewrite->replacement == replacement;
    if (!same) throw MathError("conflicting rewrite rules for symbol " + name);
    return *this;
  }
  symbols_[name] = s;
  try {
    check_grading(s);
  } catch (...) {
    symbols_.erase(name);
    throw;
  }
  return *this;
}

const ValuedSymbol& SymbolTable::at(const std::string& name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) throw MathError("unknown symbol " + name);
  return it->second;
}

std::map<std::string, Rational> SymbolTable::assignment() const {
  std::map<std::string, Rational> out;
  for (const auto& [n, s] : symbols_) out[n] = s.valuation;
  return out;
}

void SymbolTable::check_grading(const ValuedSymbol& s) const {
  const MinValuation mv = min_valuation(s.rewrite->replacement, assignment(), p_);
  if (mv.value != ExtValuation(s.valuation * s.rewrite->power))
    throw MathError("rewrite for " + s.name + " is inconsistent with its valuation " + to_string(s.valuation));
}

// ---------------------------------------------------------------------------

namespace {

class NormalFormer {
 public:
  explicit NormalFormer(const SymbolTable& table) {
    for (const auto& [n, s] : table.symbols())
      if (s.rewrite) rules_[n] = *s.rewrite;
  }

  SymbolicPolynomial run(const SymbolicPolynomial& f) {
    SymbolicPolynomial out;
    std::deque<std::pair<Monomial, Rational>> work(f.terms().begin(), f.terms().end());
    while (!work.empty()) {
      auto [m, c] = std::move(work.front());
      work.pop_front();
      const std::pair<std::string, int>* hit = nullptr;
      for (const auto& fac : m.factors()) {
        auto it = rules_.find(fac.first);
        if (it != rules_.end() && (fac.second < 0 || fac.second >= it->second.power)) {
          hit = &fac;
          break;
        }
      }
      if (hit == nullptr) {
        out.add_term(m, c);
        continue;
      }
      const Monomial rest = m.without(hit->first);
      const SymbolicPolynomial& expansion = power(hit->first, hit->second);
      for (const auto& [em, ec] : expansion.terms()) work.emplace_back(em * rest, ec * c);
    }
    return out;
  }

 private:
  const SymbolicPolynomial& power(const std::string& s, int e) {
    const auto key = std::make_pair(s, e);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Rewrite& rule = rules_.at(s);
    SymbolicPolynomial value;
    if (e >= 0 && e < rule.power) {
      value = SymbolicPolynomial(Rational(1), Monomial(s, e));
    } else if (e == rule.power) {
      value = run(rule.replacement);
    } else if (e > rule.power) {
      value = run(power(s, e - 1) * SymbolicPolynomial::symbol(s));
    } else {
      value = run(power(s, e + 1) * inverse(s));
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

  SymbolicPolynomial inverse(const std::string& s) {
    const Rewrite& rule = rules_.at(s);
    auto parts = rule.replacement.collect(s);
    SymbolicPolynomial r0 = parts.count(0) ? parts.at(0) : SymbolicPolynomial();
    if (!r0.is_monomial())
      throw MathError("cannot invert " + s + ": the symbol-free part of its rule is not a single term");
    SymbolicPolynomial q;
    for (const auto& [k, c] : parts)
      if (k > 0) q += c.mul_monomial(Monomial(s, k - 1));
    SymbolicPolynomial num = SymbolicPolynomial(Rational(1), Monomial(s, rule.power - 1)) - q;
    return num * monomial_inverse(r0);
  }

  std::map<std::string, Rewrite> rules_;
  std::map<std::pair<std::string, int>, SymbolicPolynomial> cache_;
};

class Substituter {
 public:
  explicit Substituter(const std::map<std::string, SymbolicPolynomial>& repl) : repl_(repl) {}

  SymbolicPolynomial run(const SymbolicPolynomial& f) {
    SymbolicPolynomial out;
    for (const auto& [m, c] : f.terms()) {
      SymbolicPolynomial t(c);
      std::vector<std::pair<std::string, int>> kept;
      for (const auto& [n, e] : m.factors()) {
        if (repl_.count(n))
          t = t * power(n, e);
        else
          kept.emplace_back(n, e);
      }
      out += t.mul_monomial(Monomial::from_factors(std::move(kept)));
    }
    return out;
  }

 private:
  const SymbolicPolynomial& power(const std::string& n, int e) {
    const auto key = std::make_pair(n, e);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SymbolicPolynomial value;
    if (e == 0) {
      value = SymbolicPolynomial(1);
    } else if (e > 0) {
      value = power(n, e - 1) * repl_.at(n);
    } else {
      if (!repl_.at(n).is_monomial())
        throw MathError("negative power of " + n + " needs a single-term replacement");
      value = power(n, e + 1) * monomial_inverse(repl_.at(n));
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

  const std::map<std::string, SymbolicPolynomial>& repl_;
  std::map<std::pair<std::string, int>, SymbolicPolynomial> cache_;
};

}  // namespace

SymbolicPolynomial normal_form(const SymbolicPolynomial& f, const SymbolTable& table) {
  return NormalFormer(table).run(f);
}

SymbolicPolynomial substitute_all(const SymbolicPolynomial& f,
                                  const std::map<std::string, SymbolicPolynomial>& replacements) {
  return Substituter(replacements).run(f);
}

SymbolicPolynomial substitute(const SymbolicPolynomial& f, const std::string& var,
                              const SymbolicPolynomial& replacement) {
  return substitute_all(f, {{var, replacement}});
}

SymbolicPolynomial substitute(const SymbolicPolynomial& f, const std::string& var,
                              const SymbolicPolynomial& replacement, const SymbolTable& table) {
  return normal_form(substitute(f, var, replacement), table);
}

MinValuation min_valuation(const SymbolicPolynomial& f, const std::map<std::string, Rational>& assignment,
                           unsigned long p) {
  MinValuation out;
  for (const auto& [m, c] : f.terms()) {
    Rational v = val_rat(c, p).value();
    for (const auto& [n, e] : m.factors()) {
      auto it = assignment.find(n);
      if (it == assignment.end()) throw MathError("no valuation assigned to symbol " + n);
      v += e * it->second;
    }
    const ExtValuation ev(v);
    if (ev < out.value) {
      out.value = ev;
      out.witnesses.clear();
    }
    if (ev == out.value) out.witnesses.push_back(m);
  }
  out.unique = out.witnesses.size() == 1;
  return out;
}

MinValuation min_valuation(const SymbolicPolynomial& f, const SymbolTable& table) {
  return min_valuation(f, table.assignment(), table.prime());
}

Envelope valuation_envelope(const SymbolicPolynomial& f,
                            const std::map<std::string, ParamValuation>& assignment, unsigned long p) {
  Envelope env;
  for (const auto& [m, c] : f.terms()) {
    ParamValuation v{val_rat(c, p).value(), Rational(0)};
    for (const auto& [n, e] : m.factors()) {
      auto it = assignment.find(n);
      if (it == assignment.end()) throw MathError("no valuation assigned to symbol " + n);
      v = v + Rational(e) * it->second;
    }
    env.add(v, m);
  }
  return env;
}

}  // namespace x0lab
