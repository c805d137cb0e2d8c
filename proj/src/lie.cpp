#include "fano/lie.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fano/error.hpp"
#include "fano/poly.hpp"

namespace fano {

namespace {

IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IntVector sub(const IntVector& a, const IntVector& b) { return add(a, negate(b)); }

bool is_positive(const IntVector& v) {
  return std::any_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs) : rs_(rs) {
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
      order_[rs.positive_roots[i]] = static_cast<int>(i);
      roots_.insert(rs.positive_roots[i]);
      roots_.insert(negate(rs.positive_roots[i]));
    }
  }

  bool is_root(const IntVector& v) const { return roots_.count(v) > 0; }

  int operator()(const IntVector& r, const IntVector& s) {
    if (!is_root(r) || !is_root(s) || !is_root(add(r, s)))
      throw PreconditionError("structure constant requested for a non-root sum");
    const bool pr = is_positive(r), ps = is_positive(s);
    if (pr && ps) return positive(r, s);
    if (!pr && !ps) return -positive(negate(r), negate(s));
    // r + s + eta = 0; rotate to a pair of equal sign.
    const IntVector eta = negate(add(r, s));
    const int ee = len(eta);
    Rational value;
    if (is_positive(eta))
      value = pr ? Rational(ee, len(s)) * Rational((*this)(eta, r)) : Rational(ee, len(r)) * Rational((*this)(s, eta));
    else
      value = pr ? Rational(ee, len(r)) * Rational((*this)(s, eta)) : Rational(ee, len(s)) * Rational((*this)(eta, r));
    return static_cast<int>(value.to_long());
  }

 private:
  int len(const IntVector& v) const { return rs_.inner(v, v); }

  int string_p(const IntVector& a, const IntVector& b) const {
    int p = 0;
    IntVector v = sub(b, a);
    while (is_root(v)) {
      ++p;
      v = sub(v, a);
    }
    return p;
  }

  // Both positive with a + b a root.
  int positive(const IntVector& a, const IntVector& b) {
    if (order_.at(a) > order_.at(b)) return -positive(b, a);
    auto key = std::pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const IntVector xi = add(a, b);
    // Extraspecial pair of xi: smallest first entry.
    IntVector alpha, beta;
    for (const auto& r : rs_.positive_roots) {
      const IntVector rest = sub(xi, r);
      if (is_root(rest) && is_positive(rest) && order_.at(r) < order_.at(rest)) {
        alpha = r;
        beta = rest;
        break;
      }
    }
    int result;
    if (alpha == a) {
      result = string_p(alpha, beta) + 1;
    } else {
      const IntVector& gamma = a;
      const IntVector& delta = b;
      const Rational n_ab((*this)(alpha, beta));
      Rational sum(0);
      if (is_root(sub(beta, gamma)))
        sum += Rational((*this)(beta, negate(gamma)) * (*this)(alpha, negate(delta)), len(sub(beta, gamma)));
      if (is_root(sub(alpha, gamma)))
        sum += Rational((*this)(negate(gamma), alpha) * (*this)(beta, negate(delta)), len(sub(alpha, gamma)));
      const Rational value = Rational(len(xi)) / n_ab * sum;
      if (!value.is_integer()) throw InconsistencyError("non-integral Chevalley structure constant");
      result = static_cast<int>(value.to_long());
    }
    memo_[key] = result;
    return result;
  }

  const RootSystem& rs_;
  std::map<IntVector, int> order_;
  std::set<IntVector> roots_;
  std::map<std::pair<IntVector, IntVector>, int> memo_;
};

std::string root_label(char prefix, const IntVector& root) {
  std::string s(1, prefix);
  for (int k : root) s += "_" + std::to_string(k);
  return s;
}

}  // namespace

int structure_constant(const RootSystem& rs, const IntVector& r, const IntVector& s) {
  StructureConstants n(rs);
  return n(r, s);
}

VectorQ LieAlgebra::basis(int i) const {
  if (i < 0 || i >= dim()) throw PreconditionError("basis index out of range");
  VectorQ v = zero();
  v(i) = 1;
  return v;
}

VectorQ LieAlgebra::zero() const {
  VectorQ v(dim());
  v.setConstant(Rational(0));
  return v;
}

int LieAlgebra::index_of_root(const IntVector& root) const {
  if (std::all_of(root.begin(), root.end(), [](int x) { return x == 0; }))
    throw PreconditionError("zero is not a root");
  for (int i = roots.rank; i < dim(); ++i)
    if (basis_roots[static_cast<std::size_t>(i)] == root) return i;
  throw PreconditionError("not a root");
}

VectorQ LieAlgebra::parse(std::string_view text) const {
  const MultiPoly p = MultiPoly::parse(text, labels);
  if (p.degree() > 1) throw PreconditionError("Lie algebra element must be linear in the basis labels");
  if (!p.coefficient(Exponents(labels.size(), 0)).is_zero())
    throw PreconditionError("Lie algebra element has a constant term");
  VectorQ v = zero();
  for (int i = 0; i < dim(); ++i) {
    Exponents e(labels.size(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    v(i) = p.coefficient(e);
  }
  return v;
}

std::string LieAlgebra::format(const VectorQ& x) const {
  std::vector<Rational> coeffs(x.data(), x.data() + x.size());
  return MultiPoly::linear(coeffs).str(labels);
}

VectorQ LieAlgebra::bracket(const VectorQ& x, const VectorQ& y) const {
  VectorQ out = zero();
  for (int i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y(j).is_zero()) continue;
      const VectorQ& b = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const Rational c = x(i) * y(j);
      for (int k = 0; k < dim(); ++k)
        if (!b(k).is_zero()) out(k) += c * b(k);
    }
  }
  return out;
}

MatrixQ LieAlgebra::ad(const VectorQ& x) const {
  MatrixQ m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.col(j) = bracket(x, basis(j));
  return m;
}

Rational LieAlgebra::killing_form(const VectorQ& x, const VectorQ& y) const {
  return (x.transpose() * killing * y)(0, 0);
}

LieAlgebra build_chevalley(const RootSystem& rs) {
  LieAlgebra L;
  L.roots = rs;
  const int r = rs.rank;
  const IntVector zero_root(static_cast<std::size_t>(r), 0);
  for (int i = 1; i <= r; ++i) {
    L.labels.push_back("h" + std::to_string(i));
    L.basis_roots.push_back(zero_root);
  }
  for (const auto& a : rs.positive_roots) {
    L.labels.push_back(root_label('e', a));
    L.basis_roots.push_back(a);
  }
  for (const auto& a : rs.positive_roots) {
    L.labels.push_back(root_label('f', a));
    L.basis_roots.push_back(negate(a));
  }
  const int n = L.dim();
  StructureConstants N(rs);
  auto is_cartan = [&](int i) { return i < r; };

  L.table.assign(static_cast<std::size_t>(n), std::vector<VectorQ>(static_cast<std::size_t>(n), L.zero()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      VectorQ& out = L.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const IntVector& ri = L.basis_roots[static_cast<std::size_t>(i)];
      const IntVector& rj = L.basis_roots[static_cast<std::size_t>(j)];
      if (is_cartan(i) && is_cartan(j)) continue;
      if (is_cartan(i)) {
        out(j) = rs.to_weight(rj)[static_cast<std::size_t>(i)];
        continue;
      }
      if (is_cartan(j)) {
        out(i) = -rs.to_weight(ri)[static_cast<std::size_t>(j)];
        continue;
      }
      const IntVector s = add(ri, rj);
      if (s == zero_root) {
        // [e_a, e_{-a}] = h_a = sum_k c_k (alpha_k, alpha_k)/(a, a) h_k
        const int sign = is_positive(ri) ? 1 : -1;
        const IntVector a = is_positive(ri) ? ri : rj;
        const int aa = rs.inner(a, a);
        for (int k = 0; k < r; ++k)
          out(k) = Rational(sign * a[static_cast<std::size_t>(k)] * 2 * rs.symmetrizer[static_cast<std::size_t>(k)], aa);
        continue;
      }
      if (N.is_root(s)) out(L.index_of_root(s)) = N(ri, rj);
    }
  }

  std::vector<MatrixQ> ads;
  for (int i = 0; i < n; ++i) ads.push_back(L.ad(L.basis(i)));
  L.killing.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Rational t = (ads[static_cast<std::size_t>(i)] * ads[static_cast<std::size_t>(j)]).trace();
      L.killing(i, j) = t;
      L.killing(j, i) = t;
    }
  return L;
}

MatrixQ centralizer_line(const LieAlgebra& L, const VectorQ& z) {
  int p = -1;
  for (int k = 0; k < z.size(); ++k)
    if (!z(k).is_zero()) {
      p = k;
      break;
    }
  if (p < 0) throw PreconditionError("Z must be nonzero");
  // [X, Z] = -ad(Z) X; require it to be proportional to Z.
  const MatrixQ m = -L.ad(z);
  MatrixQ cond(L.dim(), L.dim());
  for (int k = 0; k < L.dim(); ++k) cond.row(k) = z(p) * m.row(k) - z(k) * m.row(p);
  return null_space(cond);
}

ContactCheckResult contact_check(const LieAlgebra& L, const VectorQ& z) {
  ContactCheckResult res;
  const MatrixQ cent = centralizer_line(L, z);
  const MatrixQ adz = L.ad(z);
  res.dim_g = L.dim();
  res.dim_centralizer = static_cast<int>(cent.cols());
  res.dim_kernel = static_cast<int>(null_space(adz).cols());

  const MatrixQ kz = (L.killing * z).transpose();
  const MatrixQ perp = null_space(kz);
  res.dim_perp = static_cast<int>(perp.cols());
  res.orthogonality_holds = (kz * cent).isZero();

  const MatrixQ f = complement_columns(cent, perp);
  res.dim_f = static_cast<int>(f.cols());
  MatrixQ omega(f.cols(), f.cols());
  for (Eigen::Index a = 0; a < f.cols(); ++a)
    for (Eigen::Index b = 0; b < f.cols(); ++b)
      omega(a, b) = L.killing_form(L.bracket(f.col(a), f.col(b)), z);
  res.symplectic_rank = static_cast<int>(exact_rank(omega));

  // [H, Z] = -ad(Z) H = Z. Try the Cartan subalgebra first.
  const int r = L.roots.rank;
  const MatrixQ a = -adz;
  const MatrixQ a_cartan = a.leftCols(r);
  if (auto h = solve_exact(a_cartan, z)) {
    const MatrixQ ker = null_space(a_cartan);
    const MatrixQ kc = L.killing.topLeftCorner(r, r);
    MatrixQ sys(a.rows() + ker.cols(), r);
    VectorQ rhs(a.rows() + ker.cols());
    sys.topRows(a.rows()) = a_cartan;
    rhs.head(a.rows()) = z;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
      sys.row(a.rows() + c) = (kc * ker.col(c)).transpose();
      rhs(a.rows() + c) = 0;
    }
    auto canonical = solve_exact(sys, rhs);
    VectorQ full = L.zero();
    full.head(r) = canonical ? *canonical : *h;
    res.grading_element = full;
  } else if (auto h_full = solve_exact(a, z)) {
    res.grading_element = *h_full;
  }
  return res;
}

BracketSpan bracket_and_span_test(const LieAlgebra& L, const VectorQ& x1, const VectorQ& x2) {
  MatrixQ pair(L.dim(), 2);
  pair << x1, x2;
  if (exact_rank(pair) != 2) throw PreconditionError("X1 and X2 must be linearly independent");
  BracketSpan out;
  out.bracket = L.bracket(x1, x2);
  MatrixQ three(L.dim(), 3);
  three << x1, x2, out.bracket;
  out.in_span = exact_rank(three) == 2;
  return out;
}

}  // namespace fano
