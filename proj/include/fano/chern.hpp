#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fano/poly.hpp"

namespace fano {

/// A named generator of the Chow ring with its cohomological degree.
struct ChowGenerator {
  std::string name;
  int degree = 1;

  friend bool operator==(const ChowGenerator&, const ChowGenerator&) = default;
};

/// An ambient ring with a degree (integration) functional.
///
/// Classes are polynomials in the generators, graded by generator degree and
/// truncated above `dimension`. The functional is stored on every monomial of
/// top degree. `tangent` holds c_0..c_n of the model's own tangent bundle,
/// which Riemann-Roch needs for the Todd class.
struct IntersectionModel {
  std::string name;
  int dimension = 0;
  std::vector<ChowGenerator> generators;
  std::map<Exponents, Rational> top_degree;
  std::vector<MultiPoly> tangent;

  std::size_t nvars() const { return generators.size(); }
  std::vector<int> weights() const;
  std::vector<std::string> names() const;
  /// Every exponent vector of weighted degree k.
  std::vector<Exponents> monomials_of_degree(int k) const;

  MultiPoly generator(std::size_t i) const { return MultiPoly::variable(nvars(), i); }
  MultiPoly one() const { return MultiPoly::constant(nvars(), 1); }
  std::string format(const MultiPoly& cls) const { return cls.str(names()); }
  MultiPoly parse(std::string_view text) const;

  friend bool operator==(const IntersectionModel&, const IntersectionModel&) = default;
};

using ModelPtr = std::shared_ptr<const IntersectionModel>;

/// P^N cut by hypersurfaces of the given degrees; one hyperplane generator h
/// with deg(h^dim) = product of the degrees.
ModelPtr complete_intersection_model(int ambient_dim, const std::vector<int>& degrees);

/// Abstract K3 surface polarized by L with L^2 = `l_squared`. Generators are
/// L (degree 1) and the point class p (degree 2). The tangent classes
/// c1 = 0 and c2 = 24 p, hence chi(O) = 2, are built in as axioms.
ModelPtr k3_model(const Rational& l_squared);

/// Truncated total Chern class c_0 + c_1 + ... + c_n of a rank-r bundle.
class ChernSeries {
 public:
  ChernSeries(ModelPtr model, int rank, std::vector<MultiPoly> components);

  static ChernSeries trivial(ModelPtr model, int rank);
  /// 1 + cls for a line bundle with first Chern class `cls`.
  static ChernSeries line_bundle(ModelPtr model, const MultiPoly& cls);
  /// Series built from a (possibly inhomogeneous) total class, truncated.
  static ChernSeries from_total(ModelPtr model, int rank, const MultiPoly& total);

  const ModelPtr& model() const { return model_; }
  int rank() const { return rank_; }
  const MultiPoly& c(int i) const { return components_.at(static_cast<std::size_t>(i)); }
  const std::vector<MultiPoly>& components() const { return components_; }
  MultiPoly total() const;
  std::vector<std::string> formatted() const;

  friend bool operator==(const ChernSeries& a, const ChernSeries& b);

 private:
  ModelPtr model_;
  int rank_;
  std::vector<MultiPoly> components_;
};

/// Same model by identity or by structure.
bool same_model(const ModelPtr& a, const ModelPtr& b);

/// c(A ⊕ B) = c(A) c(B), truncated at the model dimension.
ChernSeries whitney_product(const ChernSeries& a, const ChernSeries& b);
/// The series Q with c(Q) c(sub) = c(total); rank(Q) = rank(total) - rank(sub).
ChernSeries whitney_quotient(const ChernSeries& total, const ChernSeries& sub);

/// Tangent Chern classes of a complete intersection, (1+h)^(N+1) / prod(1 + d_i h).
std::pair<ModelPtr, ChernSeries> chern_tangent_ci(int ambient_dim, const std::vector<int>& degrees);

/// The model's tangent series.
ChernSeries tangent_series(const ModelPtr& model);

/// Degree of a class of top degree. Throws PreconditionError on any other degree.
Rational integrate(const IntersectionModel& model, const MultiPoly& cls);

/// Chern character and Todd class, graded components 0..n, for n <= 3.
struct CharacteristicClasses {
  std::vector<MultiPoly> ch;
  std::vector<MultiPoly> td;
};
CharacteristicClasses chern_character_and_todd(const ChernSeries& c);

/// chi(bundle) = deg(ch(bundle) td(T_model)) for models of dimension <= 3.
Rational hrr_chi(const ModelPtr& model, const ChernSeries& bundle);

/// c(E ⊗ L) for rank(E) <= 3 and L of degree one:
/// c_k' = sum_i binom(r - i, k - i) c_i L^(k - i).
ChernSeries twist_chern(const ChernSeries& c, const MultiPoly& line_class);

}  // namespace fano
