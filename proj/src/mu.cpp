#include "fano/mu.hpp"

#include "fano/error.hpp"
#include "fano/lie.hpp"
#include "fano/schubert.hpp"

namespace fano {

namespace {

const std::vector<std::string>& sl2_names() {
  static const std::vector<std::string> names{"e", "f", "h"};
  return names;
}

// Variables of the polynomial nu: a, b, c, d, t0, t1.
constexpr std::size_t kVars = 6;

MultiPoly var6(std::size_t i) { return MultiPoly::variable(kVars, i); }

MultiPoly nu_polynomial() {
  const MultiPoly lin_p = var6(0) * var6(4) + var6(1) * var6(5);
  const MultiPoly lin_q = var6(2) * var6(4) + var6(3) * var6(5);
  return lin_p * lin_q.pow(11);
}

// Coefficients of t0^(12-k) t1^k as polynomials in (a, b, c, d).
std::vector<MultiPoly> t_components(const MultiPoly& p) {
  std::vector<MultiPoly> out(13, MultiPoly(4));
  for (const auto& [e, c] : p.terms()) {
    if (e[4] + e[5] != 12) throw InconsistencyError("nu polynomial is not of degree 12 in t");
    out[static_cast<std::size_t>(e[5])].add_term({e[0], e[1], e[2], e[3]}, c);
  }
  return out;
}

std::optional<Rational> proportionality(const std::vector<MultiPoly>& diff, const std::vector<MultiPoly>& base) {
  std::optional<Rational> factor;
  for (std::size_t k = 0; k < base.size() && !factor; ++k) {
    if (base[k].is_zero()) continue;
    const auto& [e, c] = *base[k].terms().begin();
    factor = diff[k].coefficient(e) / c;
  }
  if (!factor) return std::nullopt;
  for (std::size_t k = 0; k < base.size(); ++k)
    if (diff[k] != base[k] * *factor) return std::nullopt;
  return factor;
}

VectorQ to_a1(const LieAlgebra& L, const Sl2Element& x) {
  VectorQ v = L.zero();
  v(0) = x.h;
  v(L.index_of_root({1})) = x.e;
  v(L.index_of_root({-1})) = x.f;
  return v;
}

}  // namespace

Sl2Element Sl2Element::parse(std::string_view text) {
  const MultiPoly p = MultiPoly::parse(text, sl2_names());
  if (p.degree() > 1 || !p.coefficient({0, 0, 0}).is_zero())
    throw PreconditionError("sl2 element must be a linear combination of e, f, h");
  return {p.coefficient({1, 0, 0}), p.coefficient({0, 1, 0}), p.coefficient({0, 0, 1})};
}

std::string Sl2Element::str() const {
  return MultiPoly::linear(std::vector<Rational>{e, f, h}).str(sl2_names());
}

Sl2OnForms::Sl2OnForms(int d) : degree(d) {
  if (d < 0) throw PreconditionError("negative form degree");
  E = MatrixQ::Constant(d + 1, d + 1, Rational(0));
  F = E;
  H = E;
  for (int i = 0; i <= d; ++i) {
    if (i > 0) E(i - 1, i) = i;
    if (i < d) F(i + 1, i) = d - i;
    H(i, i) = d - 2 * i;
  }
}

MatrixQ Sl2OnForms::matrix(const Sl2Element& x) const { return x.e * E + x.f * F + x.h * H; }

BinaryForm Sl2OnForms::apply(const Sl2Element& x, const BinaryForm& v) const {
  if (v.degree() != degree) throw PreconditionError("form degree does not match the representation");
  return BinaryForm::from_vector(matrix(x) * v.to_vector());
}

BinaryForm icosahedral_form() {
  BinaryForm x(12);
  x[1] = 1;
  x[6] = -11;
  x[11] = -1;
  return x;
}

int orbit_tangent_rank(const Sl2OnForms& action, const BinaryForm& v, Chart chart) {
  if (v.is_zero()) throw PreconditionError("orbit of the zero form");
  const VectorQ w = v.to_vector();
  const Eigen::Index n = w.size() + (chart == Chart::Affine ? 1 : 0);
  MatrixQ m = MatrixQ::Constant(n, 4, Rational(0));
  m.col(0).head(w.size()) = w;
  if (chart == Chart::Affine) m(n - 1, 0) = 1;
  m.col(1).head(w.size()) = action.E * w;
  m.col(2).head(w.size()) = action.F * w;
  m.col(3).head(w.size()) = action.H * w;
  return static_cast<int>(exact_rank(m)) - 1;
}

BinaryForm act_on_form(const Mat2& g, const BinaryForm& f) {
  const MultiPoly t0 = MultiPoly::variable(2, 0), t1 = MultiPoly::variable(2, 1);
  const std::vector<MultiPoly> images{g[0][0] * t0 + g[0][1] * t1, g[1][0] * t0 + g[1][1] * t1};
  return BinaryForm::from_poly(f.to_poly().substitute(images), f.degree());
}

BinaryForm nu_evaluate(const std::array<Rational, 2>& p, const std::array<Rational, 2>& q) {
  if ((p[0].is_zero() && p[1].is_zero()) || (q[0].is_zero() && q[1].is_zero()))
    throw PreconditionError("nu is evaluated at a nonzero point of each factor");
  const BinaryForm lp(1, {p[0], p[1]});
  const BinaryForm lq(1, {q[0], q[1]});
  BinaryForm out = lp;
  for (int i = 0; i < 11; ++i) out = out * lq;
  return out;
}

NuMap NuMap::build() {
  NuMap m;
  const auto comps = t_components(nu_polynomial());
  for (std::size_t k = 0; k < 13; ++k) m.components[k] = BiForm::from_poly(comps[k], 1, 11);
  return m;
}

bool nu_equivariance_check(const Mat2& g) {
  if (g[0][0] * g[1][1] - g[0][1] * g[1][0] != 1) throw PreconditionError("gamma must have determinant 1");
  const MultiPoly n = nu_polynomial();
  std::vector<MultiPoly> source;
  for (std::size_t i = 0; i < kVars; ++i) source.push_back(var6(i));
  std::vector<MultiPoly> target = source;
  // (a, b) -> gamma^T (a, b), likewise (c, d).
  source[0] = g[0][0] * var6(0) + g[1][0] * var6(1);
  source[1] = g[0][1] * var6(0) + g[1][1] * var6(1);
  source[2] = g[0][0] * var6(2) + g[1][0] * var6(3);
  source[3] = g[0][1] * var6(2) + g[1][1] * var6(3);
  // t -> gamma t
  target[4] = g[0][0] * var6(4) + g[0][1] * var6(5);
  target[5] = g[1][0] * var6(4) + g[1][1] * var6(5);
  return t_components(n.substitute(source)) == t_components(n.substitute(target));
}

BinaryForm field_form(const Sl2Element& x) {
  const MatrixQ m = Sl2OnForms(1).matrix(x);
  const MultiPoly u0 = MultiPoly::variable(2, 0), u1 = MultiPoly::variable(2, 1);
  const MultiPoly mu0 = m(0, 0) * u0 + m(0, 1) * u1;
  const MultiPoly mu1 = m(1, 0) * u0 + m(1, 1) * u1;
  return BinaryForm::from_poly(u0 * mu1 - u1 * mu0, 2);
}

FieldOnP1xP1 diagonal_field(const Sl2Element& x) {
  const BinaryForm v = field_form(x);
  return {v, v};
}

PullbackCheck pullback_field_check(const Sl2Element& x) {
  const MultiPoly n = nu_polynomial();
  const MatrixQ m = Sl2OnForms(1).matrix(x);
  // Lift of i(X) to the affine cone over each factor.
  const std::array<MultiPoly, 4> lift{m(0, 0) * var6(0) + m(0, 1) * var6(1), m(1, 0) * var6(0) + m(1, 1) * var6(1),
                                      m(0, 0) * var6(2) + m(0, 1) * var6(3), m(1, 0) * var6(2) + m(1, 1) * var6(3)};
  MultiPoly dn(kVars);
  for (std::size_t i = 0; i < 4; ++i) dn += lift[i] * n.derivative(i);

  const auto base = t_components(n);
  const auto pushed = t_components(dn);
  const MatrixQ x12 = Sl2OnForms(12).matrix(x);
  std::vector<MultiPoly> diff(13, MultiPoly(4));
  for (int k = 0; k < 13; ++k) {
    MultiPoly linear(4);
    for (int l = 0; l < 13; ++l)
      if (!x12(k, l).is_zero()) linear += x12(k, l) * base[static_cast<std::size_t>(l)];
    diff[static_cast<std::size_t>(k)] = linear - pushed[static_cast<std::size_t>(k)];
  }
  PullbackCheck out;
  out.radial_factor = proportionality(diff, base);
  out.holds = out.radial_factor.has_value();
  return out;
}

BiForm wedge_section(const Sl2Element& x, const Sl2Element& y) {
  const BinaryForm vx = field_form(x), vy = field_form(y);
  return BiForm::outer(vx, vy) - BiForm::outer(vy, vx);
}

DivisorType divisor_type(const BiForm& s) {
  if (s.d1() != 2 || s.d2() != 2) throw PreconditionError("divisor_type expects a form of bidegree (2, 2)");
  const Multiplicity m = divide_out_with_multiplicity(s, BiForm::diagonal());
  if (m.multiplicity == 0) throw PreconditionError("the diagonal does not divide the section");
  if (m.multiplicity == 2) return TwoDelta{};
  return DeltaPlusPrime{m.quotient};
}

std::string_view to_string(Foliation f) {
  switch (f) {
    case Foliation::FoliationEverywhere: return "FoliationEverywhere";
    case Foliation::DivisorO1O2: return "DivisorO1O2";
  }
  return "?";
}

Foliation foliation_verdict(const Sl2Element& x, const Sl2Element& y) {
  static const LieAlgebra sl2 = build_chevalley(build_root_system(RootType::A1));
  const auto r = bracket_and_span_test(sl2, to_a1(sl2, x), to_a1(sl2, y));
  return r.in_span ? Foliation::FoliationEverywhere : Foliation::DivisorO1O2;
}

long curve_image_degree(long m, long n) {
  if (m < 0 || n < 0) throw PreconditionError("curve class must be effective");
  return 11 * m + n;
}

}  // namespace fano
