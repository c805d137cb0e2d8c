#include "fano/schubert.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "fano/error.hpp"

namespace fano {

namespace {

Eigen::MatrixXi cartan_of(RootType t) {
  Eigen::MatrixXi c;
  switch (t) {
    case RootType::A1: c.resize(1, 1); c << 2; break;
    case RootType::A1xA1: c.resize(2, 2); c << 2, 0, 0, 2; break;
    case RootType::A2: c.resize(2, 2); c << 2, -1, -1, 2; break;
    // alpha_1 long, alpha_2 short
    case RootType::B2: c.resize(2, 2); c << 2, -1, -2, 2; break;
    // alpha_1 short, alpha_2 long
    case RootType::G2: c.resize(2, 2); c << 2, -3, -1, 2; break;
  }
  return c;
}

std::size_t expected_positive(RootType t) {
  switch (t) {
    case RootType::A1: return 1;
    case RootType::A1xA1: return 2;
    case RootType::A2: return 3;
    case RootType::B2: return 4;
    case RootType::G2: return 6;
  }
  return 0;
}

IntVector symmetrizer_of(const Eigen::MatrixXi& c) {
  const int r = static_cast<int>(c.rows());
  std::vector<std::optional<Rational>> d(static_cast<std::size_t>(r));
  for (int start = 0; start < r; ++start) {
    if (d[static_cast<std::size_t>(start)]) continue;
    d[static_cast<std::size_t>(start)] = Rational(1);
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < r; ++j) {
        if (j == i || c(i, j) == 0 || d[static_cast<std::size_t>(j)]) continue;
        d[static_cast<std::size_t>(j)] = *d[static_cast<std::size_t>(i)] * Rational(c(i, j)) / Rational(c(j, i));
        queue.push_back(j);
      }
    }
  }
  mpz_class scale = 1;
  for (const auto& x : d) scale = lcm(scale, x->denominator());
  IntVector out;
  for (const auto& x : d) out.push_back(static_cast<int>((*x * Rational(mpq_class(scale))).to_long()));
  return out;
}

void check_index(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank)
    throw PreconditionError("simple root index " + std::to_string(i) + " out of range 1.." + std::to_string(rs.rank));
}

void require_rank_two(const RootSystem& rs, int i) {
  if (rs.rank != 2) throw PreconditionError("parabolic computations need a rank-2 system");
  check_index(rs, i);
}

}  // namespace

std::string_view to_string(RootType t) {
  switch (t) {
    case RootType::A1: return "A1";
    case RootType::A1xA1: return "A1xA1";
    case RootType::A2: return "A2";
    case RootType::B2: return "B2";
    case RootType::G2: return "G2";
  }
  return "?";
}

RootType parse_root_type(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
  for (RootType t : {RootType::A1, RootType::A1xA1, RootType::A2, RootType::B2, RootType::G2}) {
    std::string name(to_string(t));
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (name == upper) return t;
  }
  throw PreconditionError("unknown root system type '" + std::string(text) + "'");
}

IntVector RootSystem::simple_root_weight(int i) const {
  IntVector w(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k) w[static_cast<std::size_t>(k)] = cartan(k, i - 1);
  return w;
}

IntVector RootSystem::to_weight(const IntVector& root_coords) const {
  IntVector w(static_cast<std::size_t>(rank), 0);
  for (int k = 0; k < rank; ++k)
    for (int j = 0; j < rank; ++j) w[static_cast<std::size_t>(k)] += cartan(k, j) * root_coords[static_cast<std::size_t>(j)];
  return w;
}

int RootSystem::inner(const IntVector& a, const IntVector& b) const {
  int s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * symmetrizer[static_cast<std::size_t>(i)] *
           cartan(i, j);
  return s;
}

int RootSystem::height(const IntVector& root_coords) const {
  return std::accumulate(root_coords.begin(), root_coords.end(), 0);
}

RootSystem build_root_system(RootType type) {
  RootSystem rs;
  rs.type = type;
  rs.cartan = cartan_of(type);
  rs.rank = static_cast<int>(rs.cartan.rows());
  rs.symmetrizer = symmetrizer_of(rs.cartan);

  std::set<IntVector> roots;
  std::deque<IntVector> queue;
  for (int i = 0; i < rs.rank; ++i) {
    IntVector e(static_cast<std::size_t>(rs.rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVector beta = queue.front();
    queue.pop_front();
    const IntVector w = rs.to_weight(beta);
    for (int i = 0; i < rs.rank; ++i) {
      IntVector image = beta;
      image[static_cast<std::size_t>(i)] -= w[static_cast<std::size_t>(i)];
      if (roots.insert(image).second) queue.push_back(image);
    }
  }
  for (const auto& beta : roots)
    if (std::all_of(beta.begin(), beta.end(), [](int k) { return k >= 0; })) rs.positive_roots.push_back(beta);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const IntVector& a, const IntVector& b) {
    return std::pair(rs.height(a), a) < std::pair(rs.height(b), b);
  });
  for (const auto& beta : rs.positive_roots) rs.positive_weights.push_back(rs.to_weight(beta));

  if (rs.positive_roots.size() != expected_positive(type) || roots.size() != 2 * rs.positive_roots.size())
    throw InconsistencyError("root closure produced the wrong number of roots for " + std::string(to_string(type)));
  if (type == RootType::G2 &&
      (rs.simple_root_weight(1) != IntVector{2, -1} || rs.simple_root_weight(2) != IntVector{-3, 2}))
    throw InconsistencyError("G2 labeling convention violated");
  return rs;
}

IntVector reflect(const RootSystem& rs, int i, const IntVector& weight) {
  check_index(rs, i);
  const int m = weight[static_cast<std::size_t>(i - 1)];
  const IntVector alpha = rs.simple_root_weight(i);
  IntVector out = weight;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= m * alpha[k];
  return out;
}

WeylGroup weyl_group(const RootSystem& rs) {
  WeylGroup g;
  const IntVector rho(static_cast<std::size_t>(rs.rank), 1);
  std::map<IntVector, std::size_t> seen{{rho, 0}};
  g.words.push_back({});
  g.rho_images.push_back(rho);
  for (std::size_t k = 0; k < g.words.size(); ++k) {
    for (int i = 1; i <= rs.rank; ++i) {
      IntVector image = reflect(rs, i, g.rho_images[k]);
      if (seen.count(image)) continue;
      Word w{i};
      w.insert(w.end(), g.words[k].begin(), g.words[k].end());
      seen.emplace(image, g.words.size());
      g.words.push_back(std::move(w));
      g.rho_images.push_back(std::move(image));
    }
  }
  IntVector minus_rho(static_cast<std::size_t>(rs.rank), -1);
  g.longest_word = g.words.at(seen.at(minus_rho));
  return g;
}

std::vector<Word> reduced_words_w0(const RootSystem& rs) {
  // Walking from rho, a step s_i raises the length exactly when mu_i > 0;
  // every maximal such walk ends at -rho.
  std::vector<Word> out;
  Word path;
  auto dfs = [&](auto&& self, const IntVector& mu) -> void {
    bool moved = false;
    for (int i = 1; i <= rs.rank; ++i) {
      if (mu[static_cast<std::size_t>(i - 1)] <= 0) continue;
      moved = true;
      path.push_back(i);
      self(self, reflect(rs, i, mu));
      path.pop_back();
    }
    if (!moved) out.emplace_back(path.rbegin(), path.rend());
  };
  dfs(dfs, IntVector(static_cast<std::size_t>(rs.rank), 1));
  std::sort(out.begin(), out.end());
  return out;
}

MultiPoly weight_class(const RootSystem& rs, const IntVector& weight) {
  if (static_cast<int>(weight.size()) != rs.rank) throw PreconditionError("weight has the wrong length");
  std::vector<Rational> coeffs(weight.begin(), weight.end());
  return MultiPoly::linear(coeffs);
}

MultiPoly reflect_class(const RootSystem& rs, int i, const MultiPoly& f) {
  check_index(rs, i);
  if (static_cast<int>(f.nvars()) != rs.rank) throw PreconditionError("class has the wrong number of variables");
  std::vector<MultiPoly> images;
  for (int k = 0; k < rs.rank; ++k) images.push_back(MultiPoly::variable(f.nvars(), static_cast<std::size_t>(k)));
  images[static_cast<std::size_t>(i - 1)] -= weight_class(rs, rs.simple_root_weight(i));
  return f.substitute(images);
}

MultiPoly divided_difference(const RootSystem& rs, int i, const MultiPoly& f) {
  const MultiPoly numerator = f - reflect_class(rs, i, f);
  return divide_or_throw(numerator, weight_class(rs, rs.simple_root_weight(i)),
                         "divided difference d_" + std::to_string(i));
}

IntegrationTrace integrate_gb_trace(const RootSystem& rs, const MultiPoly& f, std::optional<Word> word) {
  const auto n = static_cast<int>(rs.num_positive());
  IntegrationTrace t;
  t.word = word ? *word : weyl_group(rs).longest_word;
  if (word) {
    const auto all = reduced_words_w0(rs);
    if (!std::binary_search(all.begin(), all.end(), *word))
      throw PreconditionError("word is not a reduced word of the longest element");
  }
  if (f.nvars() != static_cast<std::size_t>(rs.rank)) throw PreconditionError("class has the wrong number of variables");
  if (f.is_zero()) {
    t.value = 0;
    return t;
  }
  if (!f.is_homogeneous() || f.degree() != n)
    throw PreconditionError("integrand must be homogeneous of degree " + std::to_string(n));
  MultiPoly g = f;
  for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
    g = divided_difference(rs, *it, g);
    t.steps.push_back(g);
  }
  t.value = g.coefficient(Exponents(static_cast<std::size_t>(rs.rank), 0));
  return t;
}

Rational integrate_gb(const RootSystem& rs, const MultiPoly& f, std::optional<Word> word) {
  return integrate_gb_trace(rs, f, std::move(word)).value;
}

ModelPtr flag_model(const RootSystem& rs) {
  auto m = std::make_shared<IntersectionModel>();
  m->name = std::string(to_string(rs.type)) + "/B";
  m->dimension = static_cast<int>(rs.num_positive());
  for (int i = 1; i <= rs.rank; ++i) m->generators.push_back({"x" + std::to_string(i), 1});
  const Word w0 = weyl_group(rs).longest_word;
  for (const auto& e : m->monomials_of_degree(m->dimension))
    m->top_degree[e] = integrate_gb(rs, MultiPoly::monomial(e, 1), w0);

  MultiPoly total = m->one();
  for (const auto& w : rs.positive_weights) total = total * (m->one() + weight_class(rs, w));
  for (int i = 0; i <= m->dimension; ++i) m->tangent.push_back(total.component(i));
  return m;
}

ChernSeries tangent_chern_gb(const RootSystem& rs) { return tangent_chern_gb(rs, flag_model(rs)); }

ChernSeries tangent_chern_gb(const RootSystem& rs, const ModelPtr& model) {
  return ChernSeries(model, static_cast<int>(rs.num_positive()), model->tangent);
}

MultiPoly relative_tangent_class(const RootSystem& rs, int i) {
  require_rank_two(rs, i);
  const int j = 3 - i;
  MultiPoly cls = weight_class(rs, rs.simple_root_weight(j));
  // T of a P^1 fibre has degree 2 on the fibre.
  if (divided_difference(rs, j, cls) != MultiPoly::constant(2, 2))
    throw InconsistencyError("relative tangent class does not have degree 2 on the fibre");
  return cls;
}

ParabolicTrace parabolic_trace(const RootSystem& rs, int i) {
  require_rank_two(rs, i);
  const int j = 3 - i;
  const auto model = flag_model(rs);
  const auto tangent = tangent_chern_gb(rs, model);

  ParabolicTrace t;
  t.parabolic = i;
  t.relative_class = relative_tangent_class(rs, i);
  const auto rel = ChernSeries::line_bundle(model, t.relative_class);
  const auto pulled = whitney_quotient(tangent, rel);
  if (whitney_product(pulled, rel) != tangent)
    throw InconsistencyError("c(T_{G/B}) does not factor through the relative tangent class");
  t.pullback_components = pulled.components();

  t.anticanonical = pulled.c(1);
  if (!t.anticanonical.coefficient(j == 1 ? Exponents{1, 0} : Exponents{0, 1}).is_zero())
    throw InconsistencyError("anticanonical class " + t.anticanonical.str(default_names(2)) + " is not a multiple of x" +
                             std::to_string(i));

  const int top = model->dimension - 1;
  t.integrand = pulled.c(top) * model->generator(static_cast<std::size_t>(j - 1));
  t.integration = integrate_gb_trace(rs, t.integrand);
  if (!t.integration.value.is_integer())
    throw InconsistencyError("top Chern number " + t.integration.value.str() + " is not an integer");
  t.top_chern = t.integration.value.to_long();
  return t;
}

long top_chern_gp(const RootSystem& rs, int i) { return parabolic_trace(rs, i).top_chern; }

MultiPoly anticanonical_gp(const RootSystem& rs, int i) { return parabolic_trace(rs, i).anticanonical; }

}  // namespace fano
