#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano/linalg.hpp"
#include "fano/schubert.hpp"

namespace fano {

/// Simple (or semisimple) Lie algebra in a Chevalley basis.
///
/// Basis order: h_1..h_r, then e_alpha for positive alpha in root order, then
/// f_alpha = e_{-alpha} in the same order. Labels are "h1", "e_3_2", "f_3_2"
/// where the digits are the root in simple-root coordinates.
struct LieAlgebra {
  RootSystem roots;
  std::vector<std::string> labels;
  /// Root of each basis vector in simple-root coordinates; zero for h_i.
  std::vector<IntVector> basis_roots;
  /// table[i][j] = [b_i, b_j].
  std::vector<std::vector<VectorQ>> table;
  /// Trace form tr(ad x ad y).
  MatrixQ killing;

  int dim() const { return static_cast<int>(labels.size()); }
  VectorQ basis(int i) const;
  VectorQ zero() const;
  /// Basis index of e_root (root may be negative); throws if not a root.
  int index_of_root(const IntVector& root) const;
  VectorQ root_vector(const IntVector& root) const { return basis(index_of_root(root)); }
  VectorQ cartan(int i) const { return basis(i - 1); }
  /// Linear combination of labels, e.g. "h1 + 7 h2" or "e_3_2".
  VectorQ parse(std::string_view text) const;
  std::string format(const VectorQ& x) const;

  VectorQ bracket(const VectorQ& x, const VectorQ& y) const;
  /// Column j holds [x, b_j].
  MatrixQ ad(const VectorQ& x) const;
  Rational killing_form(const VectorQ& x, const VectorQ& y) const;
};

/// Chevalley basis from root data with signs fixed by extraspecial pairs:
/// N_{alpha,beta} = p + 1 on every extraspecial pair, the rest forced.
LieAlgebra build_chevalley(const RootSystem& rs);

/// Chevalley structure constant N_{r,s} for roots r, s with r + s a root.
int structure_constant(const RootSystem& rs, const IntVector& r, const IntVector& s);

/// Basis (columns) of {X : [X, Z] in C Z}.
MatrixQ centralizer_line(const LieAlgebra& L, const VectorQ& z);

struct ContactCheckResult {
  int dim_g = 0;
  int dim_centralizer = 0;
  int dim_kernel = 0;
  int dim_perp = 0;
  bool orthogonality_holds = false;
  /// dim of F = Z^perp / centralizer and rank of (X,Y) -> <[X,Y],Z> on it.
  int dim_f = 0;
  int symplectic_rank = 0;
  std::optional<VectorQ> grading_element;

  /// Dimension of the orbit of [Z] in P(g).
  int dim_projective_orbit() const { return dim_g - dim_centralizer; }
  /// Dimension of the orbit of Z in g, the affine cone.
  int dim_affine_orbit() const { return dim_g - dim_kernel; }
};

/// Checks the contact data at [Z]: centralizer inside Z^perp, rank of the
/// skew form on F, and an element H with [H, Z] = Z. When H can be taken in
/// the Cartan subalgebra the one Killing-orthogonal to the other solutions
/// is returned (h_alpha / 2 for a root vector e_alpha).
ContactCheckResult contact_check(const LieAlgebra& L, const VectorQ& z);

struct BracketSpan {
  VectorQ bracket;
  bool in_span = false;
};

/// [X1, X2] and whether it lies in span{X1, X2}.
BracketSpan bracket_and_span_test(const LieAlgebra& L, const VectorQ& x1, const VectorQ& x2);

}  // namespace fano
