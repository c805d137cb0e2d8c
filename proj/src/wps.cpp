#include "fano/wps.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include <gmpxx.h>

#include "fano/error.hpp"

namespace fano {

WeightedPS::WeightedPS(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw PreconditionError("a weighted projective space needs at least two weights");
  for (int q : weights_)
    if (q < 1) throw PreconditionError("weights must be positive");
  std::sort(weights_.begin(), weights_.end());
}

bool WeightedPS::is_ordinary() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int q) { return q == 1; });
}

std::string WeightedPS::str() const {
  std::string s = "P(";
  for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
  return s + ")";
}

bool is_well_formed(const WeightedPS& q) {
  const auto& w = q.weights();
  for (std::size_t skip = 0; skip < w.size(); ++skip) {
    int g = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != skip) g = std::gcd(g, w[i]);
    if (g != 1) return false;
  }
  return true;
}

std::string_view to_string(Vanishing v) {
  switch (v) {
    case Vanishing::AllCohomologyVanishes: return "AllCohomologyVanishes";
    case Vanishing::PossiblyNonzeroH0Only: return "PossiblyNonzeroH0Only";
  }
  return "?";
}

VanishingVerdict dolgachev_vanishing(const WeightedPS& q, int l, int k) {
  const int n = q.dimension();
  if (l < 1 || l > n) throw PreconditionError("form degree l must lie in 1.." + std::to_string(n));
  VanishingVerdict v;
  // Weights are sorted, so the first l give the minimum.
  for (int i = 0; i < l; ++i) {
    v.minimizing_subset.push_back(i);
    v.minimizing_weights.push_back(q.weights()[static_cast<std::size_t>(i)]);
  }
  v.min_sum = std::accumulate(v.minimizing_weights.begin(), v.minimizing_weights.end(), 0);
  v.verdict = k > v.min_sum ? Vanishing::PossiblyNonzeroH0Only : Vanishing::AllCohomologyVanishes;
  v.rule = "Dolgachev 2.3.4";
  if (k == 0) v.notes.push_back("k = 0: H^l(Omega^l) is not covered by the criterion");
  if (k < 0) v.notes.push_back("k < 0: H^n is governed by Serre duality, not by the criterion");
  return v;
}

EulerSequence euler_sequence_terms(const WeightedPS& q, int k) {
  EulerSequence e;
  for (int w : q.weights()) e.middle_twists.push_back(k - w);
  e.right_twist = k;
  e.kernel_rank = static_cast<int>(e.middle_twists.size()) - 1;
  e.first_chern = std::accumulate(e.middle_twists.begin(), e.middle_twists.end(), 0) - e.right_twist;
  const int sum_q = std::accumulate(q.weights().begin(), q.weights().end(), 0);
  if (e.first_chern != q.dimension() * k - sum_q) throw InconsistencyError("Euler sequence bookkeeping failed");
  if (e.kernel_rank != q.dimension()) throw InconsistencyError("Euler sequence rank bookkeeping failed");
  return e;
}

long bott_dimension(int n, int p, int k) {
  if (n < 1) throw PreconditionError("projective space of nonpositive dimension");
  if (p < 0 || p > n) throw PreconditionError("form degree p must lie in 0.." + std::to_string(n));
  if (k == 0 && p == 0) return 1;
  if (k <= p) return 0;
  mpz_class a, b;
  mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(k + n - p), static_cast<unsigned long>(k));
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k - 1), static_cast<unsigned long>(p));
  mpz_class r = a * b;
  if (!r.fits_slong_p()) throw UnsupportedError("Bott dimension does not fit in a machine integer");
  return r.get_si();
}

std::vector<int> parse_weight_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw PreconditionError("bad integer '" + std::string(item) + "' in list");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw PreconditionError("empty integer list");
  return out;
}

}  // namespace fano
