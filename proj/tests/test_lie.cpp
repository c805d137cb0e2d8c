#include <doctest.h>

#include <set>

#include "fano/error.hpp"
#include "fano/lie.hpp"

using namespace fano;

namespace {

const std::vector<RootType> kTypes{RootType::A1, RootType::A1xA1, RootType::A2, RootType::B2, RootType::G2};

int root_string_p(const RootSystem& rs, const IntVector& a, const IntVector& b) {
  std::set<IntVector> roots;
  for (const auto& r : rs.positive_roots) {
    roots.insert(r);
    IntVector m = r;
    for (auto& x : m) x = -x;
    roots.insert(m);
  }
  int p = 0;
  IntVector v = b;
  while (true) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= a[i];
    if (!roots.count(v)) return p;
    ++p;
  }
}

}  // namespace

TEST_CASE("sl2 relations") {
  auto L = build_chevalley(build_root_system(RootType::A1));
  CHECK(L.dim() == 3);
  auto h = L.parse("h1"), e = L.parse("e_1"), f = L.parse("f_1");
  CHECK(L.bracket(h, e) == VectorQ(2 * e));
  CHECK(L.bracket(h, f) == VectorQ(-2 * f));
  CHECK(L.bracket(e, f) == h);
  CHECK(L.killing_form(h, h) == 8);
  CHECK(L.killing_form(e, f) == 4);
}

TEST_CASE("dimensions") {
  CHECK(build_chevalley(build_root_system(RootType::A2)).dim() == 8);
  CHECK(build_chevalley(build_root_system(RootType::B2)).dim() == 10);
  auto g2 = build_chevalley(build_root_system(RootType::G2));
  CHECK(g2.dim() == 14);
  CHECK(g2.labels.front() == "h1");
  CHECK(g2.labels[7] == "e_3_2");
  CHECK(g2.format(g2.parse("2 h1 - e_3_2")) == "2 * h1 - e_3_2");
  CHECK_THROWS_AS(g2.parse("h1^2"), PreconditionError);
  CHECK_THROWS_AS(g2.parse("h1 + 1"), PreconditionError);
  CHECK_THROWS_AS(g2.parse("e_9_9"), PreconditionError);
}

TEST_CASE("structure constants are root-string lengths") {
  for (auto t : kTypes) {
    auto rs = build_root_system(t);
    std::vector<IntVector> all = rs.positive_roots;
    for (const auto& r : rs.positive_roots) {
      IntVector m = r;
      for (auto& x : m) x = -x;
      all.push_back(m);
    }
    std::set<IntVector> roots(all.begin(), all.end());
    for (const auto& a : all)
      for (const auto& b : all) {
        IntVector s = a;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
        if (!roots.count(s)) continue;
        const int n = structure_constant(rs, a, b);
        CHECK(std::abs(n) == root_string_p(rs, a, b) + 1);
        CHECK(structure_constant(rs, b, a) == -n);
      }
  }
}

TEST_CASE("antisymmetry and Jacobi on all basis triples") {
  for (auto t : kTypes) {
    auto L = build_chevalley(build_root_system(t));
    const int n = L.dim();
    int failures = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto bi = L.basis(i), bj = L.basis(j);
        if (L.bracket(bi, bj) != VectorQ(-L.bracket(bj, bi))) ++failures;
        for (int k = 0; k < n; ++k) {
          auto bk = L.basis(k);
          VectorQ jac = L.bracket(bi, L.bracket(bj, bk)) + L.bracket(bj, L.bracket(bk, bi)) +
                        L.bracket(bk, L.bracket(bi, bj));
          if (!jac.isZero()) ++failures;
        }
      }
    CHECK_MESSAGE(failures == 0, to_string(t));
  }
}

TEST_CASE("Killing form") {
  for (auto t : kTypes) {
    auto L = build_chevalley(build_root_system(t));
    const int n = L.dim();
    CHECK(L.killing == MatrixQ(L.killing.transpose()));
    CHECK(exact_rank(L.killing) == n);
    int failures = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          auto x = L.basis(i), y = L.basis(j), z = L.basis(k);
          if (L.killing_form(L.bracket(x, y), z) + L.killing_form(y, L.bracket(x, z)) != 0) ++failures;
        }
    CHECK_MESSAGE(failures == 0, to_string(t));
  }
}

TEST_CASE("centralizer lines") {
  auto sl2 = build_chevalley(build_root_system(RootType::A1));
  auto c = centralizer_line(sl2, sl2.parse("e_1"));
  CHECK(c.cols() == 2);
  MatrixQ expected(3, 2);
  expected << sl2.parse("e_1"), sl2.parse("h1");
  MatrixQ both(3, 4);
  both << c, expected;
  CHECK(exact_rank(both) == 2);

  auto g2 = build_chevalley(build_root_system(RootType::G2));
  CHECK(centralizer_line(g2, g2.parse("e_3_2")).cols() == 9);
  CHECK(centralizer_line(g2, g2.parse("h1 + 7 h2")).cols() == 2);
  CHECK(centralizer_line(build_chevalley(build_root_system(RootType::A2)), build_chevalley(build_root_system(RootType::A2)).parse("h1 + 3 h2")).cols() == 2);
  CHECK_THROWS_AS(centralizer_line(g2, g2.zero()), PreconditionError);
}

TEST_CASE("root vectors in one Weyl orbit have equal centralizers") {
  auto g2 = build_chevalley(build_root_system(RootType::G2));
  const auto& rs = g2.roots;
  std::set<long> long_dims, short_dims;
  for (int i = rs.rank; i < g2.dim(); ++i) {
    const auto& root = g2.basis_roots[static_cast<std::size_t>(i)];
    const long d = static_cast<long>(centralizer_line(g2, g2.basis(i)).cols());
    (rs.inner(root, root) == 6 ? long_dims : short_dims).insert(d);
  }
  CHECK(long_dims == std::set<long>{9});
  CHECK(short_dims.size() == 1);
}

TEST_CASE("contact data of the G2 adjoint variety") {
  auto g2 = build_chevalley(build_root_system(RootType::G2));
  auto z = g2.parse("e_3_2");
  auto res = contact_check(g2, z);
  CHECK(res.dim_g == 14);
  CHECK(res.dim_centralizer == 9);
  CHECK(res.dim_projective_orbit() == 5);
  CHECK(res.dim_kernel == 8);
  CHECK(res.dim_affine_orbit() == 6);
  CHECK(res.dim_perp == 13);
  CHECK(res.orthogonality_holds);
  CHECK(res.dim_f == 4);
  CHECK(res.symplectic_rank == 4);
  CHECK(res.symplectic_rank <= res.dim_perp - res.dim_centralizer);
  REQUIRE(res.grading_element);
  CHECK(g2.bracket(*res.grading_element, z) == z);
  // h_theta / 2 for theta = 3 a1 + 2 a2: h_theta = h1 + 2 h2.
  CHECK(*res.grading_element == g2.parse("1/2 h1 + h2"));

  auto generic = contact_check(g2, g2.parse("h1 + 7 h2"));
  CHECK_FALSE(generic.grading_element);
  CHECK(generic.dim_centralizer == 2);

  auto sl2 = build_chevalley(build_root_system(RootType::A1));
  auto s = contact_check(sl2, sl2.parse("e_1"));
  CHECK(s.orthogonality_holds);
  CHECK(s.dim_perp == 2);
  CHECK(s.dim_centralizer == 2);
  CHECK(s.dim_f == 0);
  CHECK(s.symplectic_rank == 0);
  CHECK(*s.grading_element == sl2.parse("1/2 h1"));

  // Highest roots of A2 and B2 also give contact structures.
  for (auto t : {RootType::A2, RootType::B2}) {
    auto L = build_chevalley(build_root_system(t));
    auto r = contact_check(L, L.basis(L.roots.rank + static_cast<int>(L.roots.num_positive()) - 1));
    CHECK(r.orthogonality_holds);
    CHECK(r.symplectic_rank == r.dim_f);
    CHECK(r.dim_projective_orbit() == r.dim_f + 1);
  }
}

TEST_CASE("bracket and span") {
  auto sl2 = build_chevalley(build_root_system(RootType::A1));
  auto he = bracket_and_span_test(sl2, sl2.parse("h1"), sl2.parse("e_1"));
  CHECK(he.bracket == sl2.parse("2 e_1"));
  CHECK(he.in_span);
  auto ef = bracket_and_span_test(sl2, sl2.parse("e_1"), sl2.parse("f_1"));
  CHECK(ef.bracket == sl2.parse("h1"));
  CHECK_FALSE(ef.in_span);

  auto g2 = build_chevalley(build_root_system(RootType::G2));
  auto b = bracket_and_span_test(g2, g2.parse("e_1_0"), g2.parse("e_0_1"));
  CHECK(b.bracket == VectorQ(Rational(structure_constant(g2.roots, {1, 0}, {0, 1})) * g2.parse("e_1_1")));
  CHECK(std::abs(structure_constant(g2.roots, {1, 0}, {0, 1})) == 1);
  CHECK_FALSE(b.in_span);
  CHECK_THROWS_AS(bracket_and_span_test(g2, g2.parse("e_1_0"), g2.parse("2 e_1_0")), PreconditionError);
}
