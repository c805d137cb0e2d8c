#include "fano/chern.hpp"

#include <numeric>

#include "fano/error.hpp"

namespace fano {

namespace {

void enumerate(const std::vector<int>& weights, std::size_t i, int remaining, Exponents& cur,
               std::vector<Exponents>& out) {
  if (i == weights.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * weights[i] <= remaining; ++e) {
    cur[i] = e;
    enumerate(weights, i + 1, remaining - e * weights[i], cur, out);
  }
  cur[i] = 0;
}

MultiPoly truncated_product(const IntersectionModel& m, const MultiPoly& a, const MultiPoly& b) {
  const auto w = m.weights();
  return (a.truncated(m.dimension, w) * b.truncated(m.dimension, w)).truncated(m.dimension, w);
}

void require_same(const ChernSeries& a, const ChernSeries& b) {
  if (!same_model(a.model(), b.model()))
    throw PreconditionError("Chern series live on different models: " + a.model()->name + " vs " +
                            b.model()->name);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

}  // namespace

std::vector<int> IntersectionModel::weights() const {
  std::vector<int> w;
  for (const auto& g : generators) w.push_back(g.degree);
  return w;
}

std::vector<std::string> IntersectionModel::names() const {
  std::vector<std::string> n;
  for (const auto& g : generators) n.push_back(g.name);
  return n;
}

std::vector<Exponents> IntersectionModel::monomials_of_degree(int k) const {
  std::vector<Exponents> out;
  Exponents cur(nvars(), 0);
  enumerate(weights(), 0, k, cur, out);
  return out;
}

MultiPoly IntersectionModel::parse(std::string_view text) const {
  const auto n = names();
  return MultiPoly::parse(text, n);
}

bool same_model(const ModelPtr& a, const ModelPtr& b) {
  if (!a || !b) return false;
  return a == b || *a == *b;
}

ModelPtr complete_intersection_model(int ambient_dim, const std::vector<int>& degrees) {
  for (int d : degrees)
    if (d < 1) throw PreconditionError("hypersurface degrees must be positive");
  const int dim = ambient_dim - static_cast<int>(degrees.size());
  if (dim < 1) throw PreconditionError("complete intersection of nonpositive dimension");

  auto m = std::make_shared<IntersectionModel>();
  m->name = "P^" + std::to_string(ambient_dim);
  if (!degrees.empty()) {
    m->name += "(";
    for (std::size_t i = 0; i < degrees.size(); ++i) m->name += (i ? "," : "") + std::to_string(degrees[i]);
    m->name += ")";
  }
  m->dimension = dim;
  m->generators = {{"h", 1}};
  m->top_degree[{dim}] = std::accumulate(degrees.begin(), degrees.end(), 1, std::multiplies<>());

  const MultiPoly h = MultiPoly::variable(1, 0);
  const MultiPoly one = MultiPoly::constant(1, 1);
  MultiPoly total = (one + h).pow(static_cast<unsigned>(ambient_dim + 1)).truncated(dim);
  for (int d : degrees) {
    // (1 + d h)^(-1) = sum_k (-d h)^k
    MultiPoly inverse(1);
    for (int k = 0; k <= dim; ++k) inverse += (Rational(-d) * h).pow(static_cast<unsigned>(k));
    total = (total * inverse).truncated(dim);
  }
  for (int i = 0; i <= dim; ++i) m->tangent.push_back(total.component(i));
  return m;
}

ModelPtr k3_model(const Rational& l_squared) {
  auto m = std::make_shared<IntersectionModel>();
  m->name = "K3(L^2=" + l_squared.str() + ")";
  m->dimension = 2;
  m->generators = {{"L", 1}, {"p", 2}};
  m->top_degree[{2, 0}] = l_squared;
  m->top_degree[{0, 1}] = 1;
  m->tangent = {MultiPoly::constant(2, 1), MultiPoly(2), MultiPoly::monomial({0, 1}, 24)};
  return m;
}

ChernSeries::ChernSeries(ModelPtr model, int rank, std::vector<MultiPoly> components)
    : model_(std::move(model)), rank_(rank), components_(std::move(components)) {
  if (!model_) throw PreconditionError("Chern series without a model");
  if (rank_ < 0) throw PreconditionError("negative rank");
  const auto w = model_->weights();
  components_.resize(static_cast<std::size_t>(model_->dimension + 1), MultiPoly(model_->nvars()));
  for (std::size_t i = 0; i < components_.size(); ++i) {
    auto& c = components_[i];
    if (c.nvars() != model_->nvars())
      throw PreconditionError("Chern class has the wrong number of generators");
    if (!c.is_zero() && (!c.is_weighted_homogeneous(w) || c.weighted_degree(w) != static_cast<int>(i)))
      throw PreconditionError("Chern class c_" + std::to_string(i) + " is not of pure degree " + std::to_string(i));
  }
  if (components_[0] != model_->one()) throw PreconditionError("Chern series must start with c_0 = 1");
}

ChernSeries ChernSeries::trivial(ModelPtr model, int rank) {
  auto one = model->one();
  return ChernSeries(std::move(model), rank, {std::move(one)});
}

ChernSeries ChernSeries::line_bundle(ModelPtr model, const MultiPoly& cls) {
  auto one = model->one();
  return ChernSeries(std::move(model), 1, {std::move(one), cls});
}

ChernSeries ChernSeries::from_total(ModelPtr model, int rank, const MultiPoly& total) {
  const auto w = model->weights();
  std::vector<MultiPoly> comps;
  for (int i = 0; i <= model->dimension; ++i) comps.push_back(total.component(i, w));
  return ChernSeries(std::move(model), rank, std::move(comps));
}

MultiPoly ChernSeries::total() const {
  MultiPoly t(model_->nvars());
  for (const auto& c : components_) t += c;
  return t;
}

std::vector<std::string> ChernSeries::formatted() const {
  std::vector<std::string> out;
  for (const auto& c : components_) out.push_back(model_->format(c));
  return out;
}

bool operator==(const ChernSeries& a, const ChernSeries& b) {
  return same_model(a.model_, b.model_) && a.rank_ == b.rank_ && a.components_ == b.components_;
}

ChernSeries whitney_product(const ChernSeries& a, const ChernSeries& b) {
  require_same(a, b);
  return ChernSeries::from_total(a.model(), a.rank() + b.rank(),
                                 truncated_product(*a.model(), a.total(), b.total()));
}

ChernSeries whitney_quotient(const ChernSeries& total, const ChernSeries& sub) {
  require_same(total, sub);
  const auto& m = *total.model();
  const MultiPoly u = sub.total() - m.one();
  MultiPoly inverse = m.one();
  MultiPoly power = m.one();
  for (int k = 1; k <= m.dimension; ++k) {
    power = truncated_product(m, power, -u);
    inverse += power;
  }
  if (total.rank() < sub.rank()) throw PreconditionError("quotient of negative rank");
  return ChernSeries::from_total(total.model(), total.rank() - sub.rank(),
                                 truncated_product(m, total.total(), inverse));
}

std::pair<ModelPtr, ChernSeries> chern_tangent_ci(int ambient_dim, const std::vector<int>& degrees) {
  auto model = complete_intersection_model(ambient_dim, degrees);
  auto series = tangent_series(model);
  return {std::move(model), std::move(series)};
}

ChernSeries tangent_series(const ModelPtr& model) {
  return ChernSeries(model, model->dimension, model->tangent);
}

Rational integrate(const IntersectionModel& model, const MultiPoly& cls) {
  if (cls.nvars() != model.nvars()) throw PreconditionError("class has the wrong number of generators");
  if (cls.is_zero()) return 0;
  const auto w = model.weights();
  if (!cls.is_weighted_homogeneous(w) || cls.weighted_degree(w) != model.dimension)
    throw PreconditionError("integrand " + model.format(cls) + " is not of degree " +
                            std::to_string(model.dimension));
  Rational sum(0);
  for (const auto& [e, c] : cls.terms()) {
    auto it = model.top_degree.find(e);
    if (it == model.top_degree.end())
      throw InconsistencyError("degree functional of " + model.name + " is undefined on a top monomial");
    sum += c * it->second;
  }
  return sum;
}

CharacteristicClasses chern_character_and_todd(const ChernSeries& c) {
  const auto& m = *c.model();
  const int n = m.dimension;
  if (n > 3) throw UnsupportedError("Chern character and Todd class are implemented through dimension 3");
  const MultiPoly zero(m.nvars());
  auto comp = [&](int i) -> const MultiPoly& { return i <= n ? c.c(i) : zero; };
  auto mul = [&](const MultiPoly& a, const MultiPoly& b) { return truncated_product(m, a, b); };
  const MultiPoly& c1 = comp(1);
  const MultiPoly& c2 = comp(2);
  const MultiPoly& c3 = comp(3);

  std::vector<MultiPoly> ch{m.one() * Rational(c.rank()), c1,
                            (mul(c1, c1) - Rational(2) * c2) * Rational(1, 2),
                            (mul(mul(c1, c1), c1) - Rational(3) * mul(c1, c2) + Rational(3) * c3) * Rational(1, 6)};
  std::vector<MultiPoly> td{m.one(), c1 * Rational(1, 2), (mul(c1, c1) + c2) * Rational(1, 12),
                            mul(c1, c2) * Rational(1, 24)};
  ch.resize(static_cast<std::size_t>(n + 1));
  td.resize(static_cast<std::size_t>(n + 1));
  return {std::move(ch), std::move(td)};
}

Rational hrr_chi(const ModelPtr& model, const ChernSeries& bundle) {
  if (!same_model(model, bundle.model())) throw PreconditionError("bundle does not live on " + model->name);
  const int n = model->dimension;
  const auto bundle_classes = chern_character_and_todd(bundle);
  const auto tangent_classes = chern_character_and_todd(tangent_series(model));
  MultiPoly top(model->nvars());
  for (int i = 0; i <= n; ++i)
    top += truncated_product(*model, bundle_classes.ch[static_cast<std::size_t>(i)],
                             tangent_classes.td[static_cast<std::size_t>(n - i)]);
  return integrate(*model, top);
}

ChernSeries twist_chern(const ChernSeries& c, const MultiPoly& line_class) {
  const auto& m = *c.model();
  if (c.rank() > 3) throw UnsupportedError("twisting is implemented for rank <= 3");
  const auto w = m.weights();
  if (line_class.nvars() != m.nvars() ||
      (!line_class.is_zero() && (!line_class.is_weighted_homogeneous(w) || line_class.weighted_degree(w) != 1)))
    throw PreconditionError("twisting class must have degree one");

  const int r = c.rank();
  std::vector<MultiPoly> comps;
  for (int k = 0; k <= m.dimension; ++k) {
    MultiPoly ck(m.nvars());
    for (int i = 0; i <= k && i <= m.dimension; ++i) {
      const Rational coef = binomial(r - i, k - i);
      if (coef.is_zero()) continue;
      ck += truncated_product(m, c.c(i), line_class.pow(static_cast<unsigned>(k - i))) * coef;
    }
    comps.push_back(ck);
  }
  return ChernSeries(c.model(), r, std::move(comps));
}

}  // namespace fano
