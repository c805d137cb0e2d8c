#include "fano/fanotab.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fano/chern.hpp"
#include "fano/error.hpp"
#include "fano/lie.hpp"
#include "fano/schubert.hpp"
#include "fano/wps.hpp"

#ifndef FANO_TABLE_PATH
#define FANO_TABLE_PATH "data/fano_table.txt"
#endif

namespace fano {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw PreconditionError("table: bad integer '" + s + "' for " + what);
  }
}

std::vector<int> to_list(const std::string& s) { return s.empty() ? std::vector<int>{} : parse_weight_list(s); }

Description parse_description(const std::string& kind, const std::string& params) {
  std::map<std::string, std::string> kv;
  for (const auto& item : split(params, ';')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionError("table: parameter '" + item + "' has no '='");
    kv[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  auto get = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw PreconditionError("table: kind " + kind + " needs parameter " + key);
    return it->second;
  };
  if (kind == "ci") return CompleteIntersection{to_int(get("ambient"), "ambient"), to_list(get("degrees"))};
  if (kind == "wps") return WpsHypersurface{to_list(get("weights")), to_int(get("degree"), "degree")};
  if (kind == "double")
    return DoubleStructure{to_list(get("weights")), to_int(get("degree"), "degree"), to_int(get("section"), "section")};
  if (kind == "grassmannian")
    return GrassmannianSection{to_int(get("k"), "k"), to_int(get("n"), "n"), to_int(get("linear"), "linear"),
                               to_int(get("quadrics"), "quadrics")};
  if (kind == "hermitian") {
    const std::string t = get("type");
    if (t != "DIII" && t != "CI") throw PreconditionError("table: unknown Hermitian type " + t);
    return HermitianSection{t == "DIII" ? HermitianType::DIII : HermitianType::CI, to_int(get("linear"), "linear")};
  }
  if (kind == "g2contact") return G2ContactSection{to_int(get("linear"), "linear")};
  if (kind == "bundle") return BundleZeroLocus{get("tag")};
  throw PreconditionError("table: unknown description kind '" + kind + "'");
}

// Invariants of the ambient spaces used by the table.
struct Ambient {
  int dim;
  long degree;
  int index;
  bool degree_computed;
  bool index_computed;
};

long catalan(int m) {
  long c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

const RootSystem& g2_roots() {
  static const RootSystem rs = build_root_system(RootType::G2);
  return rs;
}

// The adjoint variety is G2/P_2: its hyperplane class is x2.
Ambient g2_adjoint() {
  const auto& rs = g2_roots();
  const MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  const long degree = integrate_gb(rs, x2.pow(5) * x1).to_long();
  const long index = anticanonical_gp(rs, 2).coefficient({0, 1}).to_long();
  return {5, degree, static_cast<int>(index), true, true};
}

Ambient grassmannian(int k, int n) {
  if (k != 2) throw UnsupportedError("only Gr(2, n) is supported");
  return {k * (n - k), catalan(n - 2), n, true, false};
}

Ambient hermitian(HermitianType t) {
  // Spinor tenfold in P^15 and Lagrangian Grassmannian LG(3,6) in P^13.
  return t == HermitianType::DIII ? Ambient{10, 12, 8, false, false} : Ambient{6, 16, 4, false, false};
}

RecordCheck check(std::string name, long expected, long computed, bool fully = true) {
  return {std::move(name), std::to_string(expected), std::to_string(computed), expected == computed, fully};
}

std::string list_str(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

const char* kBott = "Bott's formula for twisted forms on P^n";
const char* kHypersurface =
    "hypersurface rule: Kodaira and Kodaira-Akizuki-Nakano vanishing for d >= 2; Lefschetz and h^{1,1}(M) = 1 for d = 1";
const char* kLefschetz = "Lefschetz hyperplane theorem: b2 is unchanged for ample sections of dimension >= 3";

// Runs the hypersurface rule over a chain of section degrees.
void chain(VanishingReport& rep, AmbientState state, const std::vector<int>& degrees, const std::string& ambient) {
  std::string name = ambient;
  for (int d : degrees) {
    const RuleVerdict v = hypersurface_rule(state, d);
    rep.trace.push_back({"hypersurface rule",
                         kHypersurface,
                         {{"ambient", name},
                          {"ambient_dim", std::to_string(state.dim)},
                          {"b2", std::to_string(state.b2)},
                          {"d", std::to_string(d)}},
                         std::string(to_string(v))});
    if (v != RuleVerdict::Vanishes)
      throw InconsistencyError("hypersurface rule is inconclusive on " + name + " for d = " + std::to_string(d));
    name = "section of degree " + std::to_string(d) + " of " + name;
    state = {true, state.b2, state.dim - 1};
  }
  if (state.dim != 3) throw InconsistencyError("rule chain does not end on a threefold");
  if (!degrees.empty() && std::count(degrees.begin(), degrees.end(), 1) > 0) rep.axioms.push_back(kLefschetz);
}

void weighted_step(VanishingReport& rep, const WeightedPS& q, int degree) {
  const auto verdict = dolgachev_vanishing(q, 1, 1);
  const auto euler = euler_sequence_terms(q, 1);
  const bool divisible =
      std::all_of(q.weights().begin(), q.weights().end(), [&](int w) { return degree % w == 0; });
  rep.trace.push_back({"Dolgachev vanishing on P(Q)",
                       verdict.rule,
                       {{"weights", list_str(q.weights())},
                        {"l", "1"},
                        {"k", "1"},
                        {"min_sum", std::to_string(verdict.min_sum)},
                        {"euler_middle_twists", list_str(euler.middle_twists)}},
                       std::string(to_string(verdict.verdict))});
  const bool ok = verdict.verdict == Vanishing::AllCohomologyVanishes && is_well_formed(q) && q.dimension() >= 4 &&
                  divisible && degree >= 2;
  rep.trace.push_back({"weighted hypersurface rule",
                       "Dolgachev 2.3.4 with the hypersurface rule run in the smooth locus",
                       {{"well_formed", is_well_formed(q) ? "true" : "false"},
                        {"n", std::to_string(q.dimension())},
                        {"d", std::to_string(degree)},
                        {"weights_divide_d", divisible ? "true" : "false"}},
                       ok ? "Vanishes" : "Inconclusive"});
  if (!ok) throw InconsistencyError("weighted hypersurface rule is inconclusive for " + q.str());
  rep.axioms.push_back("a general member of |O(" + std::to_string(degree) + ")| on " + q.str() +
                       " is smooth and lies in the smooth locus");
}

}  // namespace

std::string_view kind_name(const Description& d) {
  static constexpr std::string_view names[] = {"wps", "ci", "grassmannian", "hermitian", "g2contact", "bundle", "double"};
  return names[d.index()];
}

std::vector<FanoRecord> parse_table(std::istream& in) {
  std::vector<FanoRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto f = split(t, '|');
    if (f.size() != 7)
      throw PreconditionError("table line " + std::to_string(lineno) + ": expected 7 fields, got " +
                              std::to_string(f.size()));
    FanoRecord r;
    r.no = to_int(f[0], "no");
    r.index = to_int(f[1], "r");
    r.degree = to_int(f[2], "H^3");
    r.genus = to_int(f[3], "g");
    r.description = parse_description(f[4], f[5]);
    r.text = f[6];
    out.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].no != static_cast<int>(i) + 1) throw PreconditionError("table rows must be numbered 1, 2, ...");
  return out;
}

std::vector<FanoRecord> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open table file " + path);
  return parse_table(in);
}

std::string default_table_path() {
  if (const char* env = std::getenv("FANO_TABLE_PATH"); env && *env) return env;
  return FANO_TABLE_PATH;
}

std::vector<FanoRecord> load_default_table() { return load_table(default_table_path()); }

long genus_of(long r, long d) {
  const long twice = r * r * r * d;
  if (twice % 2 != 0) throw PreconditionError("r^3 d is odd, genus is not an integer");
  return twice / 2 + 1;
}

int embedding_target_dim(int g) {
  if (g < 2) throw PreconditionError("genus must be at least 2");
  return g + 1;
}

std::string_view to_string(RuleVerdict v) { return v == RuleVerdict::Vanishes ? "Vanishes" : "Inconclusive"; }

RuleVerdict hypersurface_rule(const AmbientState& ambient, int d) {
  if (ambient.dim < 4) throw PreconditionError("hypersurface rule needs an ambient of dimension >= 4");
  if (d < 1) throw PreconditionError("section degree must be positive");
  if (!ambient.h0_vanishes) return RuleVerdict::Inconclusive;
  if (d >= 2 || ambient.b2 == 1) return RuleVerdict::Vanishes;
  return RuleVerdict::Inconclusive;
}

std::vector<RecordCheck> validate_record(const FanoRecord& rec) {
  std::vector<RecordCheck> out;
  out.push_back(check("genus = r^3 d / 2 + 1", rec.genus, genus_of(rec.index, rec.degree)));
  const bool index_ok = rec.index >= 1 && rec.index <= 4;
  out.push_back({"index in 1..4", "true", index_ok ? "true" : "false", index_ok});
  if (rec.index == 1) {
    const bool ok = rec.genus >= 2 && rec.genus <= 12 && rec.genus != 11;
    out.push_back({"index 1: 2 <= g <= 12, g != 11", "true", ok ? "true" : "false", ok});
  }
  if (rec.index == 2) {
    const bool ok = std::set<int>{5, 9, 13, 17, 21}.count(rec.genus) > 0;
    out.push_back({"index 2: g in {5,9,13,17,21}", "true", ok ? "true" : "false", ok});
  }

  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CompleteIntersection>) {
          const long deg = std::accumulate(d.degrees.begin(), d.degrees.end(), 1L, std::multiplies<>());
          const long sum = std::accumulate(d.degrees.begin(), d.degrees.end(), 0L);
          out.push_back(check("dimension", 3, d.ambient_dim - static_cast<long>(d.degrees.size())));
          out.push_back(check("degree = product of degrees", rec.degree, deg));
          out.push_back(check("index by adjunction", rec.index, d.ambient_dim + 1 - sum));
        } else if constexpr (std::is_same_v<T, WpsHypersurface> || std::is_same_v<T, DoubleStructure>) {
          const WeightedPS q(d.weights);
          long prod = 1, sum = 0;
          for (int w : q.weights()) {
            prod *= w;
            sum += w;
          }
          long num = d.degree, codim = 1, cut = d.degree;
          if constexpr (std::is_same_v<T, DoubleStructure>) {
            num *= d.section;
            codim = 2;
            cut += d.section;
          }
          out.push_back(check("dimension", 3, q.dimension() - codim));
          const bool integral = num % prod == 0;
          out.push_back({"degree = product of degrees / product of weights", std::to_string(rec.degree),
                         integral ? std::to_string(num / prod) : std::to_string(num) + "/" + std::to_string(prod),
                         integral && num / prod == rec.degree});
          out.push_back(check("index by adjunction", rec.index, sum - cut));
          out.push_back({"well-formed", "true", is_well_formed(q) ? "true" : "false", is_well_formed(q)});
        } else if constexpr (std::is_same_v<T, GrassmannianSection>) {
          const Ambient a = grassmannian(d.k, d.n);
          out.push_back(check("dimension", 3, a.dim - d.linear - d.quadrics));
          out.push_back(check("degree", rec.degree, a.degree << d.quadrics));
          out.push_back(check("index by adjunction", rec.index, a.index - d.linear - 2L * d.quadrics, false));
        } else if constexpr (std::is_same_v<T, HermitianSection>) {
          const Ambient a = hermitian(d.type);
          out.push_back(check("dimension", 3, a.dim - d.linear, false));
          out.push_back(check("degree", rec.degree, a.degree, false));
          out.push_back(check("index by adjunction", rec.index, a.index - d.linear, false));
        } else if constexpr (std::is_same_v<T, G2ContactSection>) {
          const Ambient a = g2_adjoint();
          out.push_back(check("dimension", 3, a.dim - d.linear));
          out.push_back(check("degree", rec.degree, a.degree));
          out.push_back(check("index by adjunction", rec.index, a.index - d.linear));
        } else if constexpr (std::is_same_v<T, BundleZeroLocus>) {
          // Gr(3,7) has dimension 12; three sections of a rank-3 bundle cut 9.
          out.push_back(check("dimension", 3, 3 * 4 - 3 * 3));
        }
      },
      rec.description);
  return out;
}

std::string_view to_string(H0Value v) {
  switch (v) {
    case H0Value::Zero: return "0";
    case H0Value::One: return "1";
    case H0Value::ThreeGeneral: return "3-general";
  }
  return "?";
}

VanishingReport classify_row(const FanoRecord& rec) {
  VanishingReport rep;
  rep.row = rec.no;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CompleteIntersection>) {
          const long h0 = bott_dimension(d.ambient_dim, 1, 1);
          rep.trace.push_back({"Bott on projective space",
                               kBott,
                               {{"n", std::to_string(d.ambient_dim)}, {"p", "1"}, {"k", "1"}},
                               "h0 = " + std::to_string(h0)});
          if (h0 != 0) throw InconsistencyError("Bott base case does not vanish");
          chain(rep, {true, 1, d.ambient_dim}, d.degrees, "P^" + std::to_string(d.ambient_dim));
        } else if constexpr (std::is_same_v<T, WpsHypersurface>) {
          weighted_step(rep, WeightedPS(d.weights), d.degree);
        } else if constexpr (std::is_same_v<T, DoubleStructure>) {
          const WeightedPS q(d.weights);
          weighted_step(rep, q, d.degree);
          rep.axioms.push_back("the quadric is a cone over the singular point of " + q.str() +
                               ", which the general hypersurface avoids; b2 = 1 on the hypersurface");
          chain(rep, {true, 1, q.dimension() - 1}, {d.section},
                "hypersurface of degree " + std::to_string(d.degree) + " in " + q.str());
        } else if constexpr (std::is_same_v<T, GrassmannianSection>) {
          const Ambient a = grassmannian(d.k, d.n);
          const std::string name = "Gr(" + std::to_string(d.k) + "," + std::to_string(d.n) + ")";
          rep.trace.push_back({"vanishing on the Grassmannian",
                               "Snow: H^0(Gr, Omega^1(1)) = 0 for Grassmannians",
                               {{"ambient", name}, {"dim", std::to_string(a.dim)}},
                               "Vanishes"});
          rep.axioms.push_back("Snow: H^0(" + name + ", Omega^1(1)) = 0");
          rep.axioms.push_back("b2(" + name + ") = 1");
          std::vector<int> degrees(static_cast<std::size_t>(d.linear), 1);
          degrees.insert(degrees.end(), static_cast<std::size_t>(d.quadrics), 2);
          chain(rep, {true, 1, a.dim}, degrees, name);
        } else if constexpr (std::is_same_v<T, HermitianSection>) {
          const Ambient a = hermitian(d.type);
          const std::string name = d.type == HermitianType::DIII ? "DIII = SO(10)/P" : "CI = Sp(6)/P";
          rep.trace.push_back({"vanishing on the Hermitian symmetric space",
                               "Snow: twisted holomorphic forms on Hermitian symmetric spaces",
                               {{"ambient", name}, {"dim", std::to_string(a.dim)}},
                               "Vanishes"});
          rep.axioms.push_back("Snow: H^0(" + name + ", Omega^1(1)) = 0");
          rep.axioms.push_back("Mukai: linear section description of the threefold");
          rep.axioms.push_back("b2(" + name + ") = 1");
          chain(rep, {true, 1, a.dim}, std::vector<int>(static_cast<std::size_t>(d.linear), 1), name);
        } else if constexpr (std::is_same_v<T, G2ContactSection>) {
          static const LieAlgebra g2 = build_chevalley(g2_roots());
          const auto res = contact_check(g2, g2.root_vector(g2_roots().positive_roots.back()));
          const Ambient a = g2_adjoint();
          const bool contact = res.orthogonality_holds && res.symplectic_rank == res.dim_f &&
                               res.dim_projective_orbit() == a.dim && 2 * a.index == a.dim + 1;
          rep.trace.push_back({"contact structure on the adjoint variety",
                               "Kostant-Kirillov form <[X,Y],Z> on Z^perp / z_[Z]; contact line bundle O(1) since "
                               "-K = (dim + 1)/2 O(1)",
                               {{"dim_g", std::to_string(res.dim_g)},
                                {"dim_centralizer", std::to_string(res.dim_centralizer)},
                                {"dim_M", std::to_string(res.dim_projective_orbit())},
                                {"symplectic_rank", std::to_string(res.symplectic_rank)},
                                {"index", std::to_string(a.index)}},
                               contact ? "contact form in H^0(M, Omega^1(1))" : "Inconclusive"});
          if (!contact) throw InconsistencyError("G2 contact data failed");
          rep.axioms.push_back("Mukai: V18 is a codimension-2 linear section of the adjoint G2 variety");
          rep.axioms.push_back("the restricted contact form spans H^0(V18, Omega^1(1))");
          rep.h0 = H0Value::One;
        } else if constexpr (std::is_same_v<T, BundleZeroLocus>) {
          if (d.tag != "V22") throw UnsupportedError("unknown bundle zero locus " + d.tag);
          auto k3 = k3_model(Rational(rec.degree));
          const MultiPoly l = k3->generator(0);
          auto omega = tangent_series(k3);
          std::vector<MultiPoly> comps = omega.components();
          for (std::size_t i = 1; i < comps.size(); i += 2) comps[i] = -comps[i];
          const Rational chi = hrr_chi(k3, twist_chern(ChernSeries(k3, 2, comps), l));
          const Rational chi_l = hrr_chi(k3, ChernSeries::line_bundle(k3, l));
          rep.trace.push_back({"Riemann-Roch on a K3 hyperplane section",
                               "Hirzebruch-Riemann-Roch with c1 = 0, c2 = 24 on a K3 surface",
                               {{"L^2", std::to_string(rec.degree)}, {"chi(O_S(1))", chi_l.str()}},
                               "chi(S, Omega^1_S(1)) = " + chi.str()});
          const auto line = line_restriction_order({2, 0, -1}, {0, 0});
          rep.trace.push_back({"restriction to a line",
                               "splitting type (2,0,-1) of T_V on a general line; chi bookkeeping on P^1",
                               {{"splitting", "2,0,-1"}, {"kernel", "0,0"}},
                               "a = " + std::to_string(line.a) + ", torsion length " +
                                   std::to_string(line.torsion_length)});
          rep.axioms.push_back("Shokurov: a general member of |O_V(1)| is a smooth K3 surface");
          rep.axioms.push_back("Kodaira-Akizuki-Nakano: h^2(S, Omega^1_S(1)) = 0");
          rep.axioms.push_back("h^1(V, T_V(-1)) = 0 for V22");
          rep.axioms.push_back("Mukai: V22 is the zero locus of three sections of wedge^2 Q on Gr(3,7)");
          rep.axioms.push_back("h^0(V, Omega^1(1)) = 3 for a general V22");
          rep.h0 = H0Value::ThreeGeneral;
        }
      },
      rec.description);
  validate_report(rep);
  return rep;
}

void validate_report(const VanishingReport& report) {
  if (report.trace.empty()) throw InconsistencyError("row " + std::to_string(report.row) + " has an empty rule trace");
  for (const auto& step : report.trace)
    if (step.citation.empty() || step.rule.empty())
      throw InconsistencyError("row " + std::to_string(report.row) + " has an uncited rule");
}

LineRestriction line_restriction_order(std::vector<int> splitting, std::vector<int> kernel) {
  if (kernel.size() != 2) throw PreconditionError("kernel must have rank 2");
  if (splitting.size() != 3) throw UnsupportedError("only rank-3 splitting types are supported");
  std::sort(splitting.begin(), splitting.end());
  std::sort(kernel.begin(), kernel.end());

  LineRestriction out;
  std::vector<bool> used(splitting.size(), false);
  for (int k : kernel) {
    bool placed = false;
    for (std::size_t i = 0; i < splitting.size() && !placed; ++i)
      if (!used[i] && splitting[i] >= k) {
        used[i] = true;
        out.hit.push_back(splitting[i]);
        placed = true;
      }
    if (!placed) throw UnsupportedError("no summand of the splitting type can receive the kernel");
  }
  for (std::size_t i = 0; i < splitting.size(); ++i)
    if (!used[i]) out.free_degree = splitting[i];
  out.a = 1 - out.free_degree;
  out.torsion_length = std::accumulate(out.hit.begin(), out.hit.end(), 0) -
                       std::accumulate(kernel.begin(), kernel.end(), 0);

  auto chi = [](int e) { return e + 1; };
  for (int e : splitting) out.chi_middle += chi(e);
  for (int e : kernel) out.chi_kernel += chi(e);
  out.h0_coker = std::max(0, out.free_degree + 1) + out.torsion_length;
  out.h1_coker = std::max(0, -out.free_degree - 1);
  out.chi_coker = out.h0_coker - out.h1_coker;
  if (out.chi_coker != out.chi_middle - out.chi_kernel)
    throw InconsistencyError("Euler characteristic ledger does not balance");
  return out;
}

}  // namespace fano
