#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "fano/chern.hpp"
#include "fano/poly.hpp"

namespace fano {

enum class RootType { A1, A1xA1, A2, B2, G2 };

std::string_view to_string(RootType t);
/// Accepts "A1", "A1xA1", "A2", "B2", "G2" (case-insensitive).
RootType parse_root_type(std::string_view text);

/// Integer vector; roots are kept both in simple-root and in weight coordinates.
using IntVector = std::vector<int>;
/// Word in the simple reflections, 1-based.
using Word = std::vector<int>;

/// Finite crystallographic root system of rank <= 2.
///
/// Weight coordinates use the fundamental weights, so the simple root
/// alpha_j has coordinates given by column j of the Cartan matrix. For G2 the
/// first simple root is the short one: alpha_1 = (2,-1), alpha_2 = (-3,2).
struct RootSystem {
  RootType type;
  int rank = 0;
  Eigen::MatrixXi cartan;
  /// Half squared lengths of the simple roots, so (alpha_i, alpha_j) = d_i C_ij.
  IntVector symmetrizer;
  /// Positive roots ordered by height, then lexicographically in root coordinates.
  std::vector<IntVector> positive_roots;
  std::vector<IntVector> positive_weights;

  std::size_t num_positive() const { return positive_roots.size(); }
  IntVector simple_root_weight(int i) const;
  IntVector to_weight(const IntVector& root_coords) const;
  /// Symmetric form on root coordinates, normalized so short roots of a
  /// component have squared length 2 d_min.
  int inner(const IntVector& a, const IntVector& b) const;
  int height(const IntVector& root_coords) const;
};

RootSystem build_root_system(RootType type);

/// s_i acting on a weight: mu - mu_i alpha_i.
IntVector reflect(const RootSystem& rs, int i, const IntVector& weight);

/// Elements enumerated as the orbit of rho; `words[k]` is a shortest word for
/// the element sending rho to `rho_images[k]`.
struct WeylGroup {
  std::vector<Word> words;
  std::vector<IntVector> rho_images;
  Word longest_word;

  std::size_t order() const { return words.size(); }
  std::size_t longest_length() const { return longest_word.size(); }
};

WeylGroup weyl_group(const RootSystem& rs);

/// Every reduced word of the longest element. Reading left to right gives
/// s_{i1} ... s_{iN}.
std::vector<Word> reduced_words_w0(const RootSystem& rs);

/// The class of a weight: sum_i mu_i x_i.
MultiPoly weight_class(const RootSystem& rs, const IntVector& weight);

/// f with x_k replaced by x_k - delta_ik alpha_i.
MultiPoly reflect_class(const RootSystem& rs, int i, const MultiPoly& f);

/// BGG operator (f - s_i f) / alpha_i. A failing division is reported as an
/// InconsistencyError.
MultiPoly divided_difference(const RootSystem& rs, int i, const MultiPoly& f);

struct IntegrationTrace {
  Word word;
  /// The class after each operator, innermost first; the last entry is the constant.
  std::vector<MultiPoly> steps;
  Rational value;
};

/// Degree on G/B of a class of degree N = #positive roots, computed as
/// d_{i1} ... d_{iN} f for a reduced word of w0 (the first one found if
/// `word` is not given). Zero integrates to zero.
IntegrationTrace integrate_gb_trace(const RootSystem& rs, const MultiPoly& f, std::optional<Word> word = {});
Rational integrate_gb(const RootSystem& rs, const MultiPoly& f, std::optional<Word> word = {});

/// G/B as an intersection model: generators x_1..x_r of degree 1, the degree
/// functional from integrate_gb, and c(T) = prod_{alpha > 0} (1 + alpha).
ModelPtr flag_model(const RootSystem& rs);

ChernSeries tangent_chern_gb(const RootSystem& rs);
ChernSeries tangent_chern_gb(const RootSystem& rs, const ModelPtr& model);

/// Tangent class along the fibers of G/B -> G/P_i, where P_i is the maximal
/// parabolic whose Picard group is generated by x_i: the simple root alpha_j
/// for the other index j. Rank 2 only.
MultiPoly relative_tangent_class(const RootSystem& rs, int i);

struct ParabolicTrace {
  int parabolic = 0;
  MultiPoly relative_class;
  /// c(pi^* T_{G/P}) = c(T_{G/B}) / (1 + relative class).
  std::vector<MultiPoly> pullback_components;
  MultiPoly anticanonical;
  /// Top component times x_j, integrated on G/B.
  MultiPoly integrand;
  IntegrationTrace integration;
  long top_chern = 0;
};

ParabolicTrace parabolic_trace(const RootSystem& rs, int i);
/// deg c_top(T_{G/P_i}), using that the fibre of pi_i meets x_j in one point.
long top_chern_gp(const RootSystem& rs, int i);
/// c_1(T_{G/P_i}) pulled back to G/B; always a multiple of x_i.
MultiPoly anticanonical_gp(const RootSystem& rs, int i);

}  // namespace fano
