#include "fano/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "fano/error.hpp"

namespace fano {

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars())
    throw PreconditionError("variable-count mismatch: " + std::to_string(a.nvars()) + " vs " +
                            std::to_string(b.nvars()));
}

int weighted(const Exponents& e, std::span<const int> weights) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * (weights.empty() ? 1 : weights[i]);
  return d;
}

}  // namespace

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw PreconditionError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const Rational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::linear(std::span<const Rational> coeffs) {
  MultiPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return weighted(terms_.begin()->first, {});
}

int MultiPoly::weighted_degree(std::span<const int> weights) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, weighted(e, weights));
  return d;
}

bool MultiPoly::is_homogeneous() const { return is_weighted_homogeneous({}); }

bool MultiPoly::is_weighted_homogeneous(std::span<const int> weights) const {
  if (terms_.empty()) return true;
  const int d = weighted(terms_.begin()->first, weights);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return weighted(t.first, weights) == d; });
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::component(int k, std::span<const int> weights) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (weighted(e, weights) == k) out.terms_.emplace(e, c);
  return out;
}

MultiPoly MultiPoly::truncated(int max_degree, std::span<const int> weights) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (weighted(e, weights) <= max_degree) out.terms_.emplace(e, c);
  return out;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_) throw PreconditionError("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator-(const MultiPoly& a) { return a * Rational(-1); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  MultiPoly out(a.nvars());
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw PreconditionError("variable index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * Rational(e[var]));
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw PreconditionError("substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target) throw PreconditionError("substitution images live in different rings");

  // Cache powers per variable; exponents in this engine stay small.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * images[i]);
      term = term * cache[e[i]];
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::embedded(std::size_t nvars, std::size_t offset) const {
  if (offset + nvars_ > nvars) throw PreconditionError("embedding does not fit");
  MultiPoly out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f(nvars, 0);
    std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::string MultiPoly::str(std::span<const std::string> names) const {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_names(nvars_);
    names = fallback;
  }
  if (names.size() != nvars_) throw PreconditionError("wrong number of variable names");
  if (terms_.empty()) return "0";

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Rational mag = abs(c);
    if (mono.empty())
      os << mag.str();
    else if (mag == Rational(1))
      os << mono;
    else
      os << mag.str() << " * " << mono;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> names) : s_(text), names_(names) {}

  MultiPoly run() {
    MultiPoly out(names_.size());
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = Rational(-1);
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      MultiPoly t = term();
      out += t * sign;
    }
    return out;
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw PreconditionError("cannot parse polynomial '" + std::string(s_) + "': " + why + " at offset " +
                            std::to_string(pos_));
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = peek();
    return c == '*' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  MultiPoly term() {
    Rational coef(1);
    Exponents exps(names_.size(), 0);
    bool any = false;
    while (at_factor_start()) {
      if (peek() == '*') {
        if (!any) fail("dangling '*'");
        ++pos_;
        skip();
      }
      if (pos_ >= s_.size()) fail("missing factor");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= number();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::string name = ident();
        const auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) fail("unknown variable '" + name + "'");
        int e = 1;
        skip();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          skip();
          e = static_cast<int>(digits());
        }
        exps[static_cast<std::size_t>(it - names_.begin())] += e;
      } else {
        fail("unexpected character");
      }
      any = true;
    }
    if (!any) fail("missing term");
    return MultiPoly::monomial(exps, coef);
  }

  long digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (den == pos_) fail("expected denominator");
    }
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  std::string ident() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::span<const std::string> names) {
  return PolyParser(text, names).run();
}

MultiPoly MultiPoly::parse(std::string_view text, std::size_t nvars) {
  const auto names = default_names(nvars);
  return parse(text, names);
}

std::variant<MultiPoly, DivisionFailure> exact_divide(const MultiPoly& f, const MultiPoly& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");

  const auto& [lead_exp, lead_coef] = *g.terms().begin();
  MultiPoly quotient(f.nvars());
  MultiPoly remainder(f.nvars());
  MultiPoly current = f;
  Exponents shift(f.nvars());
  while (!current.is_zero()) {
    const auto [e, c] = *current.terms().begin();
    bool divisible = true;
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = e[i] - lead_exp[i];
      if (shift[i] < 0) divisible = false;
    }
    if (divisible) {
      const MultiPoly step = MultiPoly::monomial(shift, c / lead_coef);
      quotient += step;
      current -= step * g;
    } else {
      const MultiPoly lt = MultiPoly::monomial(e, c);
      remainder += lt;
      current -= lt;
    }
  }
  if (remainder.is_zero()) return quotient;
  return DivisionFailure{std::move(quotient), std::move(remainder)};
}

MultiPoly divide_or_throw(const MultiPoly& f, const MultiPoly& g, std::string_view context) {
  auto result = exact_divide(f, g);
  if (auto* q = std::get_if<MultiPoly>(&result)) return std::move(*q);
  throw InconsistencyError(std::string(context) + ": division not exact, remainder " +
                           std::get<DivisionFailure>(result).remainder.str());
}

}  // namespace fano
