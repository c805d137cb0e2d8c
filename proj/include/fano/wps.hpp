#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fano {

/// Weighted projective space P(q_0, ..., q_n), weights kept sorted ascending.
class WeightedPS {
 public:
  explicit WeightedPS(std::vector<int> weights);

  const std::vector<int>& weights() const { return weights_; }
  int dimension() const { return static_cast<int>(weights_.size()) - 1; }
  bool is_ordinary() const;
  std::string str() const;

  friend bool operator==(const WeightedPS&, const WeightedPS&) = default;

 private:
  std::vector<int> weights_;
};

/// Every n-element subset of the n+1 weights has gcd 1.
bool is_well_formed(const WeightedPS& q);

enum class Vanishing { AllCohomologyVanishes, PossiblyNonzeroH0Only };
std::string_view to_string(Vanishing v);

struct VanishingVerdict {
  Vanishing verdict;
  /// Positions (in the sorted weights) of l weights with the smallest sum.
  std::vector<int> minimizing_subset;
  std::vector<int> minimizing_weights;
  int min_sum = 0;
  std::string rule;
  /// Hypotheses taken on trust, e.g. the k = 0 exception.
  std::vector<std::string> notes;
};

/// Dolgachev's criterion (2.3.4) for Omega^l(k) on P(Q): cohomology can be
/// nonzero only in degree 0 and only when k exceeds the smallest sum of l
/// weights. The boundary k = min sum vanishes. The quoted form covers k >= 1;
/// at k <= 0 the groups H^l(Omega^l) and H^n (by duality) are not addressed
/// and the verdict says so in `notes`.
VanishingVerdict dolgachev_vanishing(const WeightedPS& q, int l, int k);

/// 0 -> Omega^1(k) -> sum_i O(k - q_i) -> O(k) -> 0.
struct EulerSequence {
  std::vector<int> middle_twists;
  int right_twist = 0;
  int kernel_rank = 0;
  /// sum of middle twists minus the right twist, i.e. c_1(Omega^1(k)) in units of O(1).
  int first_chern = 0;
};

EulerSequence euler_sequence_terms(const WeightedPS& q, int k);

/// h^0(P^n, Omega^p(k)) by Bott's formula.
long bott_dimension(int n, int p, int k);

/// Parses "1,1,1,2,3".
std::vector<int> parse_weight_list(std::string_view text);

}  // namespace fano
