#include <doctest.h>

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "fano/error.hpp"
#include "fano/fanotab.hpp"
#include "fano/wps.hpp"

using namespace fano;

namespace {

const std::vector<FanoRecord>& table() {
  static const std::vector<FanoRecord> t = load_default_table();
  return t;
}

// Exhaustive search over which middle summand stays free and which receive
// the kernel, keeping assignments with Hom(O(k), O(e)) != 0 and the least torsion.
std::pair<int, int> line_order_brute(const std::vector<int>& mid, const std::vector<int>& ker) {
  int best_torsion = INT_MAX, best_a = 0;
  std::vector<int> perm(mid.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    int torsion = 0;
    for (std::size_t i = 0; i < ker.size(); ++i) {
      const int e = mid[static_cast<std::size_t>(perm[i])];
      if (e < ker[i]) ok = false;
      torsion += e - ker[i];
    }
    if (ok && torsion < best_torsion) {
      best_torsion = torsion;
      best_a = 1 - mid[static_cast<std::size_t>(perm.back())];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best_a, best_torsion};
}

}  // namespace

TEST_CASE("table loads all eighteen rows") {
  REQUIRE(table().size() == 18);
  CHECK(kind_name(table()[0].description) == "ci");
  CHECK(kind_name(table()[16].description) == "g2contact");
  CHECK(kind_name(table()[17].description) == "bundle");
  CHECK(kind_name(table()[9].description) == "double");
}

TEST_CASE("genus identity") {
  CHECK(genus_of(4, 1) == 33);
  CHECK(genus_of(1, 22) == 12);
  CHECK(genus_of(3, 2) == 28);
  CHECK_THROWS_AS(genus_of(1, 3), PreconditionError);
  for (const auto& r : table()) CHECK(genus_of(r.index, r.degree) == r.genus);
  CHECK(embedding_target_dim(12) == 13);
  CHECK(embedding_target_dim(10) == 11);
  CHECK(embedding_target_dim(2) == 3);
  CHECK_THROWS_AS(embedding_target_dim(1), PreconditionError);
}

TEST_CASE("every record passes its computed checks") {
  for (const auto& r : table()) {
    const auto checks = validate_record(r);
    CHECK(checks.size() >= 3);
    for (const auto& c : checks) {
      INFO("row " << r.no << ": " << c.name << " expected " << c.expected << " computed " << c.computed);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("a corrupted record fails validation") {
  FanoRecord r = table()[4];
  r.degree = 4;
  r.genus = static_cast<int>(genus_of(r.index, r.degree));
  const auto checks = validate_record(r);
  CHECK(std::any_of(checks.begin(), checks.end(), [](const RecordCheck& c) { return !c.ok; }));
}

TEST_CASE("hypersurface rule") {
  CHECK(hypersurface_rule({true, 1, 4}, 3) == RuleVerdict::Vanishes);
  CHECK(hypersurface_rule({true, 1, 4}, 1) == RuleVerdict::Vanishes);
  CHECK(hypersurface_rule({true, 2, 4}, 1) == RuleVerdict::Inconclusive);
  CHECK(hypersurface_rule({true, 2, 4}, 2) == RuleVerdict::Vanishes);
  CHECK(hypersurface_rule({false, 1, 4}, 2) == RuleVerdict::Inconclusive);
  CHECK_THROWS_AS(hypersurface_rule({true, 1, 3}, 2), PreconditionError);
  CHECK_THROWS_AS(hypersurface_rule({true, 1, 4}, 0), PreconditionError);
}

TEST_CASE("classification of all rows") {
  for (const auto& r : table()) {
    const auto rep = classify_row(r);
    INFO("row " << r.no);
    CHECK(rep.row == r.no);
    CHECK_FALSE(rep.trace.empty());
    for (const auto& step : rep.trace) CHECK_FALSE(step.citation.empty());
    if (r.no <= 16) CHECK(rep.h0 == H0Value::Zero);
    if (r.no == 17) CHECK(rep.h0 == H0Value::One);
    if (r.no == 18) CHECK(rep.h0 == H0Value::ThreeGeneral);
    if (rep.h0 != H0Value::Zero) {
      CHECK(r.index == 1);
      CHECK((r.genus == 10 || r.genus == 12));
    }
  }
}

TEST_CASE("row traces name the expected rules") {
  const auto row3 = classify_row(table()[2]);
  CHECK(row3.trace.front().citation == "Dolgachev 2.3.4");
  CHECK(row3.trace.front().verdict == "AllCohomologyVanishes");

  const auto row5 = classify_row(table()[4]);
  CHECK(row5.trace.front().verdict == "h0 = 0");
  CHECK(row5.trace.back().verdict == "Vanishes");

  const auto row10 = classify_row(table()[9]);
  REQUIRE(row10.trace.size() == 3);
  CHECK(row10.trace[2].rule == "hypersurface rule");
  CHECK_FALSE(row10.axioms.empty());

  const auto row12 = classify_row(table()[11]);
  CHECK(row12.trace.size() == 4);

  const auto row18 = classify_row(table()[17]);
  CHECK(row18.trace[0].verdict == "chi(S, Omega^1_S(1)) = 2");
}

TEST_CASE("the sextic in P(1,1,1,1,1,4) also passes the weighted rule") {
  const WeightedPS q({1, 1, 1, 1, 1, 4});
  CHECK(dolgachev_vanishing(q, 1, 1).verdict == Vanishing::AllCohomologyVanishes);
}

TEST_CASE("report validation") {
  VanishingReport empty;
  empty.row = 3;
  CHECK_THROWS_AS(validate_report(empty), InconsistencyError);
  VanishingReport uncited;
  uncited.trace.push_back({"rule", "", {}, "Vanishes"});
  CHECK_THROWS_AS(validate_report(uncited), InconsistencyError);
}

TEST_CASE("table parsing errors") {
  std::istringstream bad_fields("1 | 4 | 1 | 33 | ci\n");
  CHECK_THROWS_AS(parse_table(bad_fields), PreconditionError);
  std::istringstream bad_kind("1 | 4 | 1 | 33 | torus | x=1 | t\n");
  CHECK_THROWS_AS(parse_table(bad_kind), PreconditionError);
  std::istringstream missing("1 | 4 | 1 | 33 | ci | ambient=3 | t\n");
  CHECK_THROWS_AS(parse_table(missing), PreconditionError);
  std::istringstream ok("# comment\n\n1 | 4 | 1 | 33 | ci | ambient=3; degrees= | P^3\n");
  const auto t = parse_table(ok);
  REQUIRE(t.size() == 1);
  CHECK(std::get<CompleteIntersection>(t[0].description).degrees.empty());
  CHECK_THROWS_AS(load_table("/nonexistent/table.txt"), PreconditionError);
}

TEST_CASE("line restriction bookkeeping") {
  const auto l = line_restriction_order({2, 0, -1}, {0, 0});
  CHECK(l.a == 2);
  CHECK(l.torsion_length == 2);
  CHECK(l.chi_coker == 2);
  CHECK(l.chi_coker == l.chi_middle - l.chi_kernel);
  CHECK(l.h1_coker == 0);

  const auto s = line_restriction_order({1, 1, 0}, {0, 0});
  CHECK(s.a == 0);
  CHECK(s.torsion_length == 1);

  CHECK_THROWS_AS(line_restriction_order({2, 0, -1}, {0}), PreconditionError);
  CHECK_THROWS_AS(line_restriction_order({2, 0, -1, 1}, {0, 0}), UnsupportedError);
}

TEST_CASE("line restriction agrees with exhaustive search") {
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      for (int z = -3; z <= 3; ++z)
        for (int k1 = -1; k1 <= 1; ++k1)
          for (int k2 = -1; k2 <= 1; ++k2) {
            std::vector<int> mid{x, y, z}, ker{k1, k2};
            std::sort(mid.begin(), mid.end());
            std::sort(ker.begin(), ker.end());
            const auto [a, torsion] = line_order_brute(mid, ker);
            if (torsion == INT_MAX) {
              CHECK_THROWS_AS(line_restriction_order(mid, ker), UnsupportedError);
              continue;
            }
            const auto l = line_restriction_order(mid, ker);
            CHECK(l.a == a);
            CHECK(l.torsion_length == torsion);
            CHECK(l.chi_coker == l.chi_middle - l.chi_kernel);
          }
}
