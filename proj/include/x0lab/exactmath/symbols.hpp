#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "x0lab/exactmath/param.hpp"
#include "x0lab/exactmath/symbolic.hpp"
#include "x0lab/exactmath/valuation.hpp"

namespace x0lab {

/// symbol^power rewrites to replacement (which has lower degree in symbol).
struct Rewrite {
  int power = 0;
  SymbolicPolynomial replacement;
};

struct ValuedSymbol {
  std::string name;
  Rational valuation;
  std::optional<Rewrite> rewrite;
};

/// A set of valued symbols at one prime. Rewritten symbols must have
/// distinct names; add() rejects a conflicting rule for an existing name
/// and a rule whose grading is inconsistent with the assigned valuations.
class SymbolTable {
 public:
  explicit SymbolTable(unsigned long p = 5) : p_(p) {}

  unsigned long prime() const { return p_; }

  SymbolTable& add(const std::string& name, const Rational& valuation);
  SymbolTable& add(const std::string& name, const Rational& valuation, int power,
                   const SymbolicPolynomial& replacement);

  bool contains(const std::string& name) const { return symbols_.count(name) > 0; }
  const ValuedSymbol& at(const std::string& name) const;
  const std::map<std::string, ValuedSymbol>& symbols() const { return symbols_; }

  std::map<std::string, Rational> assignment() const;

 private:
  void check_grading(const ValuedSymbol& s) const;

  unsigned long p_;
  std::map<std::string, ValuedSymbol> symbols_;
};

/// Reduces every rewritten symbol's exponent into [0, power). Negative
/// exponents use the inverse s^-1 = (s^(n-1) - Q(s)) / R0 where the rule
/// is s^n -> R0 + s*Q(s) with R0 a single term.
SymbolicPolynomial normal_form(const SymbolicPolynomial& f, const SymbolTable& table);

/// Replaces `var` by `replacement`. Negative powers of `var` require a
/// single-term replacement.
SymbolicPolynomial substitute(const SymbolicPolynomial& f, const std::string& var,
                              const SymbolicPolynomial& replacement);
SymbolicPolynomial substitute(const SymbolicPolynomial& f, const std::string& var,
                              const SymbolicPolynomial& replacement, const SymbolTable& table);

/// Simultaneous substitution.
SymbolicPolynomial substitute_all(const SymbolicPolynomial& f,
                                  const std::map<std::string, SymbolicPolynomial>& replacements);

struct MinValuation {
  ExtValuation value;
  std::vector<Monomial> witnesses;
  bool unique = false;
};

/// Generic valuation: min over terms of v_p(coefficient) + sum e * v(symbol).
MinValuation min_valuation(const SymbolicPolynomial& f, const std::map<std::string, Rational>& assignment,
                           unsigned long p);
MinValuation min_valuation(const SymbolicPolynomial& f, const SymbolTable& table);

/// Same as min_valuation with symbol valuations affine in a parameter.
Envelope valuation_envelope(const SymbolicPolynomial& f,
                            const std::map<std::string, ParamValuation>& assignment, unsigned long p);

}  // namespace x0lab
