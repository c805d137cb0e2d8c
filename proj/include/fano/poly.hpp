#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

using Exponents = std::vector<int>;

/// Graded-lexicographic order, largest monomial first (x1 > x2 > ... within a degree).
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored, so structural equality is polynomial equality. Iteration
/// order is graded-lexicographic descending, which makes `terms().begin()`
/// the leading term used by `exact_divide`.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Exponents& exps, const Rational& c);
  /// Linear form sum_i coeffs[i] * x_i.
  static MultiPoly linear(std::span<const Rational> coeffs);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Weighted degree with per-variable weights; -1 for zero.
  int weighted_degree(std::span<const int> weights) const;
  bool is_homogeneous() const;
  bool is_weighted_homogeneous(std::span<const int> weights) const;

  Rational coefficient(const Exponents& exps) const;
  /// Sum of the terms whose weighted degree equals `k` (all weights 1 when `weights` is empty).
  MultiPoly component(int k, std::span<const int> weights = {}) const;
  /// Drops every term of weighted degree above `max_degree`.
  MultiPoly truncated(int max_degree, std::span<const int> weights = {}) const;

  void add_term(const Exponents& exps, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned exponent) const;
  MultiPoly derivative(std::size_t var) const;
  /// Replaces x_i by images[i]; all images must share one variable count.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Re-embeds into a ring with more variables; x_i maps to x_{offset+i}.
  MultiPoly embedded(std::size_t nvars, std::size_t offset = 0) const;

  /// Human-readable form "c * x1^a x2^b + ..."; default names are x1..xn.
  std::string str(std::span<const std::string> names = {}) const;
  static MultiPoly parse(std::string_view text, std::span<const std::string> names);
  static MultiPoly parse(std::string_view text, std::size_t nvars);

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

std::vector<std::string> default_names(std::size_t nvars);

/// Remainder witness for a non-exact division.
struct DivisionFailure {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Returns q with f = q*g, or the nonzero remainder of grlex division by g.
/// Throws PreconditionError on g = 0 or a variable-count mismatch.
std::variant<MultiPoly, DivisionFailure> exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Like exact_divide, but a non-exact division is an InconsistencyError.
MultiPoly divide_or_throw(const MultiPoly& f, const MultiPoly& g, std::string_view context);

}  // namespace fano
