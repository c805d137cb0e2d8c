#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fano/forms.hpp"
#include "fano/linalg.hpp"

namespace fano {

/// x e + y f + z h in sl2 with e = t0 d/dt1, f = t1 d/dt0, h = t0 d/dt0 - t1 d/dt1.
struct Sl2Element {
  Rational e, f, h;

  /// Linear expression in the names e, f, h, e.g. "e + f" or "2h".
  static Sl2Element parse(std::string_view text);
  std::string str() const;
  bool is_zero() const { return e.is_zero() && f.is_zero() && h.is_zero(); }
  friend bool operator==(const Sl2Element&, const Sl2Element&) = default;
};

/// The derivation action of sl2 on the coefficient vectors of M_d.
struct Sl2OnForms {
  int degree = 0;
  MatrixQ E, F, H;

  explicit Sl2OnForms(int d);
  MatrixQ matrix(const Sl2Element& x) const;
  BinaryForm apply(const Sl2Element& x, const BinaryForm& v) const;
};

/// t0 t1 (t0^10 - 11 t0^5 t1^5 - t1^10).
BinaryForm icosahedral_form();

/// AtInfinity: the point [v] of P(M_d). Affine: the point [v + 1] of
/// P(M_d + C), where sl2 acts trivially on C.
enum class Chart { AtInfinity, Affine };

/// Dimension of the sl2 orbit through the point, as the rank of
/// {E v, F v, H v} modulo the point's line.
int orbit_tangent_rank(const Sl2OnForms& action, const BinaryForm& v, Chart chart = Chart::AtInfinity);

using Mat2 = std::array<std::array<Rational, 2>, 2>;

/// (gamma . F)(t) = F(gamma t).
BinaryForm act_on_form(const Mat2& gamma, const BinaryForm& f);

/// nu(p, q) = (a t0 + b t1)(c t0 + d t1)^11 for p = (a, b), q = (c, d).
BinaryForm nu_evaluate(const std::array<Rational, 2>& p, const std::array<Rational, 2>& q);

/// The 13 components of nu as forms of bidegree (1, 11); component k is
/// the coefficient of t0^(12-k) t1^k.
struct NuMap {
  std::array<BiForm, 13> components;
  static NuMap build();
};

/// nu(gamma^T p, gamma^T q) = gamma . nu(p, q), checked on the polynomial map.
bool nu_equivariance_check(const Mat2& gamma);

/// Degree-2 form of the vector field of x on P^1. In the chart u0 != 0 with
/// z = u1 / u0 the field is v_x(u) / u0^2 d/dz, where
/// v_x(u) = u0 (M u)_1 - u1 (M u)_0 and M is x acting on M_1.
BinaryForm field_form(const Sl2Element& x);

/// i(X) = (X(p), X(q)) on P^1 x P^1.
struct FieldOnP1xP1 {
  BinaryForm first, second;
};
FieldOnP1xP1 diagonal_field(const Sl2Element& x);

struct PullbackCheck {
  bool holds = false;
  /// The defect X.nu - dnu(i(X)) equals radial_factor * nu.
  std::optional<Rational> radial_factor;
};

/// dnu(i(X)) agrees with the linear field of X along nu, modulo the radial field.
PullbackCheck pullback_field_check(const Sl2Element& x);

/// s(p, q) = v_X(p) v_Y(q) - v_Y(p) v_X(q), a section of O(2,2).
BiForm wedge_section(const Sl2Element& x, const Sl2Element& y);

struct TwoDelta {};
struct DeltaPlusPrime {
  BiForm residual;
};
using DivisorType = std::variant<TwoDelta, DeltaPlusPrime>;

/// Splits off the diagonal a d - b c from a nonzero (2, 2) form. A form the
/// diagonal does not divide is rejected.
DivisorType divisor_type(const BiForm& s);

enum class Foliation { FoliationEverywhere, DivisorO1O2 };
std::string_view to_string(Foliation f);

/// FoliationEverywhere iff X and Y span a subalgebra.
Foliation foliation_verdict(const Sl2Element& x, const Sl2Element& y);

/// (m, n) . (1, 11) = 11 m + n.
long curve_image_degree(long m, long n);

}  // namespace fano
