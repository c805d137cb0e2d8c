#pragma once

#include <string>
#include <vector>

#include "fano/linalg.hpp"
#include "fano/poly.hpp"

namespace fano {

/// Homogeneous binary form of degree d in (t0, t1).
/// Coefficient i belongs to t0^(d-i) t1^i.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(int degree);
  BinaryForm(int degree, std::vector<Rational> coeffs);

  static BinaryForm from_poly(const MultiPoly& p, int degree);
  /// t0^(d-i) t1^i
  static BinaryForm monomial(int degree, int i, const Rational& c = 1);

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;

  MultiPoly to_poly() const;
  VectorQ to_vector() const;
  static BinaryForm from_vector(const VectorQ& v);
  std::string str() const;

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Rational& c, const BinaryForm& a);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int degree_ = 0;
  std::vector<Rational> coeffs_;
};

/// Bihomogeneous form of bidegree (d1, d2) in ((a, b), (c, d)), the
/// coordinate pairs of the two factors of P1 x P1. Entry (i, j) belongs to
/// a^(d1-i) b^i c^(d2-j) d^j.
class BiForm {
 public:
  BiForm() = default;
  BiForm(int d1, int d2);
  explicit BiForm(MatrixQ coeffs);

  /// The diagonal form a*d - b*c of bidegree (1, 1).
  static BiForm diagonal();
  static BiForm from_poly(const MultiPoly& p, int d1, int d2);
  /// Bidegree is read off the polynomial; throws if not bihomogeneous.
  static BiForm from_poly(const MultiPoly& p);
  /// f(a, b) * g(c, d)
  static BiForm outer(const BinaryForm& f, const BinaryForm& g);

  int d1() const { return static_cast<int>(coeffs_.rows()) - 1; }
  int d2() const { return static_cast<int>(coeffs_.cols()) - 1; }
  const MatrixQ& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// Polynomial in the four variables (a, b, c, d).
  MultiPoly to_poly() const;
  std::string str() const;
  static const std::vector<std::string>& variable_names();

  friend BiForm operator+(const BiForm& a, const BiForm& b);
  friend BiForm operator-(const BiForm& a, const BiForm& b);
  friend BiForm operator*(const BiForm& a, const BiForm& b);
  friend BiForm operator*(const Rational& c, const BiForm& a);
  friend bool operator==(const BiForm& a, const BiForm& b) {
    return a.coeffs_.rows() == b.coeffs_.rows() && a.coeffs_.cols() == b.coeffs_.cols() &&
           a.coeffs_ == b.coeffs_;
  }

 private:
  MatrixQ coeffs_;
};

struct Multiplicity {
  int multiplicity = 0;
  BiForm quotient;
};

/// Largest m with divisor^m | s, together with s / divisor^m.
/// Throws PreconditionError when s or divisor is zero.
Multiplicity divide_out_with_multiplicity(const BiForm& s, const BiForm& divisor);

}  // namespace fano
