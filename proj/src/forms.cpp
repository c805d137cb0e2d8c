#include "fano/forms.hpp"

#include "fano/error.hpp"

namespace fano {

namespace {

const std::vector<std::string>& binary_names() {
  static const std::vector<std::string> names{"t0", "t1"};
  return names;
}

}  // namespace

BinaryForm::BinaryForm(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(degree + 1)) {
  if (degree < 0) throw PreconditionError("negative form degree");
}

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree + 1))
    throw PreconditionError("binary form of degree " + std::to_string(degree) + " needs " +
                            std::to_string(degree + 1) + " coefficients");
}

BinaryForm BinaryForm::monomial(int degree, int i, const Rational& c) {
  BinaryForm f(degree);
  f[i] = c;
  return f;
}

BinaryForm BinaryForm::from_poly(const MultiPoly& p, int degree) {
  if (p.nvars() != 2) throw PreconditionError("binary form needs a polynomial in two variables");
  BinaryForm f(degree);
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] != degree) throw PreconditionError("polynomial is not homogeneous of degree " + std::to_string(degree));
    f[e[1]] = c;
  }
  return f;
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

MultiPoly BinaryForm::to_poly() const {
  MultiPoly p(2);
  for (int i = 0; i <= degree_; ++i) p.add_term({degree_ - i, i}, coeffs_[static_cast<std::size_t>(i)]);
  return p;
}

VectorQ BinaryForm::to_vector() const {
  VectorQ v(degree_ + 1);
  for (int i = 0; i <= degree_; ++i) v(i) = coeffs_[static_cast<std::size_t>(i)];
  return v;
}

BinaryForm BinaryForm::from_vector(const VectorQ& v) {
  return BinaryForm(static_cast<int>(v.size()) - 1, std::vector<Rational>(v.data(), v.data() + v.size()));
}

std::string BinaryForm::str() const { return to_poly().str(binary_names()); }

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree_ != b.degree_) throw PreconditionError("adding binary forms of different degree");
  BinaryForm out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + Rational(-1) * b; }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i)
    for (int j = 0; j <= b.degree_; ++j) out[i + j] += a[i] * b[j];
  return out;
}

BinaryForm operator*(const Rational& c, const BinaryForm& a) {
  BinaryForm out = a;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

BiForm::BiForm(int d1, int d2) : coeffs_(d1 + 1, d2 + 1) {
  if (d1 < 0 || d2 < 0) throw PreconditionError("negative bidegree");
  coeffs_.setConstant(Rational(0));
}

BiForm::BiForm(MatrixQ coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() == 0 || coeffs_.cols() == 0) throw PreconditionError("empty bidegree matrix");
}

const std::vector<std::string>& BiForm::variable_names() {
  static const std::vector<std::string> names{"a", "b", "c", "d"};
  return names;
}

BiForm BiForm::diagonal() {
  BiForm f(1, 1);
  f.coeffs_(0, 1) = 1;   // a d
  f.coeffs_(1, 0) = -1;  // b c
  return f;
}

BiForm BiForm::from_poly(const MultiPoly& p, int d1, int d2) {
  if (p.nvars() != 4) throw PreconditionError("biform needs a polynomial in (a, b, c, d)");
  BiForm f(d1, d2);
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] != d1 || e[2] + e[3] != d2)
      throw PreconditionError("polynomial is not bihomogeneous of bidegree (" + std::to_string(d1) + "," +
                              std::to_string(d2) + ")");
    f.coeffs_(e[1], e[3]) = c;
  }
  return f;
}

BiForm BiForm::from_poly(const MultiPoly& p) {
  if (p.is_zero()) throw PreconditionError("bidegree of the zero polynomial is undefined");
  const auto& e = p.terms().begin()->first;
  return from_poly(p, e[0] + e[1], e[2] + e[3]);
}

BiForm BiForm::outer(const BinaryForm& f, const BinaryForm& g) {
  BiForm out(f.degree(), g.degree());
  for (int i = 0; i <= f.degree(); ++i)
    for (int j = 0; j <= g.degree(); ++j) out.coeffs_(i, j) = f[i] * g[j];
  return out;
}

bool BiForm::is_zero() const {
  for (Eigen::Index i = 0; i < coeffs_.rows(); ++i)
    for (Eigen::Index j = 0; j < coeffs_.cols(); ++j)
      if (!coeffs_(i, j).is_zero()) return false;
  return true;
}

MultiPoly BiForm::to_poly() const {
  MultiPoly p(4);
  const int n1 = d1();
  const int n2 = d2();
  for (int i = 0; i <= n1; ++i)
    for (int j = 0; j <= n2; ++j) p.add_term({n1 - i, i, n2 - j, j}, coeffs_(i, j));
  return p;
}

std::string BiForm::str() const { return to_poly().str(variable_names()); }

BiForm operator+(const BiForm& a, const BiForm& b) {
  if (a.d1() != b.d1() || a.d2() != b.d2()) throw PreconditionError("adding biforms of different bidegree");
  return BiForm(MatrixQ(a.coeffs_ + b.coeffs_));
}

BiForm operator-(const BiForm& a, const BiForm& b) {
  if (a.d1() != b.d1() || a.d2() != b.d2()) throw PreconditionError("subtracting biforms of different bidegree");
  return BiForm(MatrixQ(a.coeffs_ - b.coeffs_));
}

BiForm operator*(const BiForm& a, const BiForm& b) {
  BiForm out(a.d1() + b.d1(), a.d2() + b.d2());
  for (int i = 0; i <= a.d1(); ++i)
    for (int j = 0; j <= a.d2(); ++j) {
      if (a.coeffs_(i, j).is_zero()) continue;
      for (int k = 0; k <= b.d1(); ++k)
        for (int l = 0; l <= b.d2(); ++l) out.coeffs_(i + k, j + l) += a.coeffs_(i, j) * b.coeffs_(k, l);
    }
  return out;
}

BiForm operator*(const Rational& c, const BiForm& a) { return BiForm(MatrixQ(a.coeffs_ * c)); }

Multiplicity divide_out_with_multiplicity(const BiForm& s, const BiForm& divisor) {
  if (s.is_zero()) throw PreconditionError("multiplicity of a divisor in the zero section is undefined");
  if (divisor.is_zero()) throw PreconditionError("division by the zero form");
  if (divisor.d1() == 0 && divisor.d2() == 0) throw PreconditionError("divisor must be non-constant");

  Multiplicity out{0, s};
  const MultiPoly g = divisor.to_poly();
  MultiPoly current = s.to_poly();
  while (out.quotient.d1() >= divisor.d1() && out.quotient.d2() >= divisor.d2()) {
    auto step = exact_divide(current, g);
    auto* q = std::get_if<MultiPoly>(&step);
    if (q == nullptr) break;
    current = std::move(*q);
    ++out.multiplicity;
    out.quotient = BiForm::from_poly(current, out.quotient.d1() - divisor.d1(), out.quotient.d2() - divisor.d2());
  }
  return out;
}

}  // namespace fano
