#include "fano/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <ostream>

#include "fano/chern.hpp"
#include "fano/error.hpp"
#include "fano/fanotab.hpp"
#include "fano/lie.hpp"
#include "fano/mu.hpp"
#include "fano/schubert.hpp"
#include "fano/wps.hpp"

namespace fano::cli {

namespace {

using Json = nlohmann::ordered_json;

Json document() {
  Json j;
  j["version"] = std::string(kVersion);
  return j;
}

// Integers stay JSON numbers; other rationals are written "p/q".
Json exact(const Rational& q) {
  if (q.is_integer() && q.numerator().fits_slong_p()) return q.to_long();
  return q.str();
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

struct Context {
  std::ostream& out;
  bool json = false;

  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

// Subcommand bodies run after parsing so that errors map to exit code 1.
using Action = std::function<void(Context&)>;

void add_json_flag(CLI::App* app, bool& json) { app->add_flag("--json", json, "Emit one JSON document"); }

Json record_json(const FanoRecord& r) {
  Json j;
  j["no"] = r.no;
  j["r"] = r.index;
  j["d"] = r.degree;
  j["g"] = r.genus;
  j["kind"] = std::string(kind_name(r.description));
  j["description"] = r.text;
  j["genus_check"] = genus_of(r.index, r.degree) == r.genus;
  Json checks = Json::array();
  bool all = true;
  for (const auto& c : validate_record(r)) {
    all = all && c.ok;
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"ok", c.ok},
                      {"computed_fully", c.computed_fully}});
  }
  j["checks"] = checks;
  j["all_checks_pass"] = all;
  return j;
}

void cmd_table(Context& ctx) {
  const auto rows = load_default_table();
  if (ctx.json) {
    Json j = document();
    j["rows"] = Json::array();
    for (const auto& r : rows) j["rows"].push_back(record_json(r));
    ctx.emit(j);
    return;
  }
  ctx.out << "no  r  H^3  g   genus  checks  description\n";
  for (const auto& r : rows) {
    const auto checks = validate_record(r);
    const bool all = std::all_of(checks.begin(), checks.end(), [](const RecordCheck& c) { return c.ok; });
    const bool genus = genus_of(r.index, r.degree) == r.genus;
    ctx.out << std::left << std::setw(4) << r.no << std::setw(3) << r.index << std::setw(5) << r.degree
            << std::setw(4) << r.genus << std::setw(7) << (genus ? "ok" : "FAIL") << std::setw(8)
            << (all ? "ok" : "FAIL") << r.text << '\n';
  }
}

void cmd_check_row(Context& ctx, int n, bool trace) {
  const auto rows = load_default_table();
  if (n < 1 || n > static_cast<int>(rows.size()))
    throw PreconditionError("row must be between 1 and " + std::to_string(rows.size()));
  const auto& rec = rows[static_cast<std::size_t>(n - 1)];
  const auto rep = classify_row(rec);
  if (ctx.json) {
    Json j = document();
    j["row"] = rep.row;
    j["r"] = rec.index;
    j["d"] = rec.degree;
    j["g"] = rec.genus;
    j["h0"] = std::string(to_string(rep.h0));
    j["trace"] = Json::array();
    for (const auto& s : rep.trace) {
      Json inputs = Json::object();
      for (const auto& [k, v] : s.inputs) inputs[k] = v;
      j["trace"].push_back({{"rule", s.rule}, {"citation", s.citation}, {"inputs", inputs}, {"verdict", s.verdict}});
    }
    j["axioms"] = rep.axioms;
    ctx.emit(j);
    return;
  }
  ctx.out << "row " << rep.row << ": " << rec.text << '\n';
  ctx.out << "h0(V, Omega^1(1)) = " << to_string(rep.h0) << '\n';
  if (trace) {
    for (const auto& s : rep.trace) {
      ctx.out << "  rule: " << s.rule << '\n' << "    citation: " << s.citation << '\n';
      for (const auto& [k, v] : s.inputs) ctx.out << "    " << k << " = " << v << '\n';
      ctx.out << "    verdict: " << s.verdict << '\n';
    }
    for (const auto& a : rep.axioms) ctx.out << "  axiom: " << a << '\n';
  }
}

void cmd_c5(Context& ctx, const std::string& target) {
  Json j = document();
  j["target"] = target;
  if (target == "quadric5") {
    const auto [model, c] = chern_tangent_ci(6, {2});
    const Rational v = integrate(*model, c.c(5));
    j["space"] = model->name;
    j["dimension"] = model->dimension;
    j["c5"] = model->format(c.c(5));
    j["value"] = exact(v);
  } else {
    const auto rs = build_root_system(RootType::G2);
    const int i = target == "g2p1" ? 1 : 2;
    const auto t = parabolic_trace(rs, i);
    const auto names = default_names(2);
    j["space"] = "G2/P" + std::to_string(i);
    j["dimension"] = 5;
    j["relative_tangent_class"] = t.relative_class.str(names);
    j["anticanonical"] = t.anticanonical.str(names);
    j["integrand"] = t.integrand.str(names);
    j["word"] = t.integration.word;
    j["value"] = t.top_chern;
  }
  if (ctx.json) return ctx.emit(j);
  ctx.out << "c5(T) on " << j["space"].get<std::string>() << " = " << j["value"].dump() << '\n';
}

void cmd_hrr_k3(Context& ctx, long l2) {
  if (l2 <= 0 || l2 % 2 != 0) throw PreconditionError("L^2 on a K3 surface must be positive and even");
  const auto k3 = k3_model(Rational(l2));
  const MultiPoly l = k3->generator(0);
  auto comps = tangent_series(k3).components();
  for (std::size_t i = 1; i < comps.size(); i += 2) comps[i] = -comps[i];
  const Rational chi = hrr_chi(k3, twist_chern(ChernSeries(k3, 2, comps), l));
  const Rational chi_l = hrr_chi(k3, ChernSeries::line_bundle(k3, l));
  Json j = document();
  j["l2"] = l2;
  j["chi_omega1_twist"] = exact(chi);
  j["chi_line"] = exact(chi_l);
  j["formula_l2_minus_20"] = exact(Rational(l2 - 20));
  if (ctx.json) return ctx.emit(j);
  ctx.out << "chi(S, Omega^1_S(L)) = " << chi.str() << "  (L^2 - 20 = " << l2 - 20 << ")\n"
          << "chi(S, L) = " << chi_l.str() << '\n';
}

void cmd_wps(Context& ctx, const std::string& weights, int l, int k) {
  const WeightedPS q(parse_weight_list(weights));
  const auto v = dolgachev_vanishing(q, l, k);
  Json j = document();
  j["space"] = q.str();
  j["weights"] = q.weights();
  j["forms"] = l;
  j["twist"] = k;
  j["well_formed"] = is_well_formed(q);
  j["verdict"] = std::string(to_string(v.verdict));
  j["min_sum"] = v.min_sum;
  j["minimizing_weights"] = v.minimizing_weights;
  j["rule"] = v.rule;
  j["notes"] = v.notes;
  if (ctx.json) return ctx.emit(j);
  ctx.out << "Omega^" << l << "(" << k << ") on " << q.str() << ": " << to_string(v.verdict) << " (" << v.rule
          << ", min sum " << v.min_sum << ")\n";
  for (const auto& n : v.notes) ctx.out << "  note: " << n << '\n';
}

void cmd_bott(Context& ctx, int n, int p, int k) {
  const long h0 = bott_dimension(n, p, k);
  Json j = document();
  j["n"] = n;
  j["p"] = p;
  j["k"] = k;
  j["h0"] = h0;
  if (ctx.json) return ctx.emit(j);
  ctx.out << "h0(P^" << n << ", Omega^" << p << "(" << k << ")) = " << h0 << '\n';
}

void cmd_mu_wedge(Context& ctx, const std::string& xs, const std::string& ys) {
  const auto x = Sl2Element::parse(xs), y = Sl2Element::parse(ys);
  const BiForm s = wedge_section(x, y);
  Json j = document();
  j["x"] = x.str();
  j["y"] = y.str();
  j["section"] = s.str();
  const auto d = divisor_type(s);
  if (const auto* p = std::get_if<DeltaPlusPrime>(&d)) {
    j["divisor"] = "DeltaPlusPrime";
    j["residual"] = p->residual.str();
  } else {
    j["divisor"] = "TwoDelta";
  }
  if (ctx.json) return ctx.emit(j);
  ctx.out << "s = " << s.str() << '\n' << "divisor: " << j["divisor"].get<std::string>();
  if (j.contains("residual")) ctx.out << ", residual " << j["residual"].get<std::string>();
  ctx.out << '\n';
}

void cmd_mu_orbit(Context& ctx, const std::string& form, bool affine) {
  const Sl2OnForms action(12);
  Json j = document();
  j["points"] = Json::array();
  auto add = [&](const std::string& label, const BinaryForm& f, Chart chart) {
    j["points"].push_back({{"point", label},
                           {"chart", chart == Chart::Affine ? "affine" : "infinity"},
                           {"orbit_dimension", orbit_tangent_rank(action, f, chart)}});
  };
  const std::vector<std::string> t{"t0", "t1"};
  if (form.empty()) {
    add("t1^12", BinaryForm::from_poly(MultiPoly::parse("t1^12", t), 12), Chart::AtInfinity);
    add("t0 t1^11", BinaryForm::from_poly(MultiPoly::parse("t0 t1^11", t), 12), Chart::AtInfinity);
    add("x + 1", icosahedral_form(), Chart::Affine);
  } else if (form == "x") {
    add(affine ? "x + 1" : "x", icosahedral_form(), affine ? Chart::Affine : Chart::AtInfinity);
  } else {
    add(form, BinaryForm::from_poly(MultiPoly::parse(form, t), 12), affine ? Chart::Affine : Chart::AtInfinity);
  }
  if (ctx.json) return ctx.emit(j);
  for (const auto& p : j["points"])
    ctx.out << p["point"].get<std::string>() << " (" << p["chart"].get<std::string>()
            << "): orbit dimension " << p["orbit_dimension"].get<int>() << '\n';
}

void cmd_mu_foliation(Context& ctx, const std::string& xs, const std::string& ys) {
  const auto x = Sl2Element::parse(xs), y = Sl2Element::parse(ys);
  const Foliation f = foliation_verdict(x, y);
  Json j = document();
  j["x"] = x.str();
  j["y"] = y.str();
  j["verdict"] = std::string(to_string(f));
  if (ctx.json) return ctx.emit(j);
  ctx.out << to_string(f) << '\n';
}

void cmd_mu_equivariance(Context& ctx, const std::string& gamma) {
  std::vector<Rational> g;
  std::size_t start = 0;
  while (true) {
    const auto pos = gamma.find(',', start);
    g.push_back(Rational::parse(gamma.substr(start, pos == std::string::npos ? pos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (g.size() != 4) throw PreconditionError("gamma needs four entries a,b,c,d");
  const Mat2 m{{{g[0], g[1]}, {g[2], g[3]}}};
  const bool holds = nu_equivariance_check(m);
  Json j = document();
  j["gamma"] = Json::array({exact(g[0]), exact(g[1]), exact(g[2]), exact(g[3])});
  j["holds"] = holds;
  if (ctx.json) return ctx.emit(j);
  ctx.out << "nu equivariance: " << (holds ? "holds" : "fails") << '\n';
}

void cmd_g2_contact(Context& ctx, const std::string& zs) {
  const LieAlgebra g2 = build_chevalley(build_root_system(RootType::G2));
  const VectorQ z = g2.parse(zs);
  const auto r = contact_check(g2, z);
  Json j = document();
  j["z"] = g2.format(z);
  j["dim_g"] = r.dim_g;
  j["dim_centralizer"] = r.dim_centralizer;
  j["dim_kernel"] = r.dim_kernel;
  j["dim_perp"] = r.dim_perp;
  j["orthogonality_holds"] = r.orthogonality_holds;
  j["dim_f"] = r.dim_f;
  j["symplectic_rank"] = r.symplectic_rank;
  j["grading_element"] = r.grading_element ? Json(g2.format(*r.grading_element)) : Json(nullptr);
  j["dim_projective_orbit"] = r.dim_projective_orbit();
  j["dim_affine_orbit"] = r.dim_affine_orbit();
  if (ctx.json) return ctx.emit(j);
  ctx.out << "Z = " << j["z"].get<std::string>() << '\n'
          << "dim g = " << r.dim_g << ", dim centralizer of [Z] = " << r.dim_centralizer
          << ", dim ker ad Z = " << r.dim_kernel << '\n'
          << "centralizer in Z^perp: " << (r.orthogonality_holds ? "yes" : "no") << '\n'
          << "dim F = " << r.dim_f << ", symplectic rank = " << r.symplectic_rank << '\n'
          << "H_Z = " << (r.grading_element ? g2.format(*r.grading_element) : "none") << '\n';
}

Word parse_word(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  for (int i : parse_weight_list(text)) w.push_back(i);
  return w;
}

void cmd_schubert_integrate(Context& ctx, const std::string& type, const std::string& cls, const std::string& word) {
  const auto rs = build_root_system(parse_root_type(type));
  const auto names = default_names(static_cast<std::size_t>(rs.rank));
  const MultiPoly f = MultiPoly::parse(cls, names);
  std::optional<Word> w;
  if (!word.empty()) w = parse_word(word);
  const auto t = integrate_gb_trace(rs, f, w);
  Json j = document();
  j["type"] = std::string(to_string(rs.type));
  j["class"] = f.str(names);
  j["word"] = t.word;
  j["steps"] = Json::array();
  for (const auto& s : t.steps) j["steps"].push_back(s.str(names));
  j["value"] = exact(t.value);
  if (ctx.json) return ctx.emit(j);
  ctx.out << "integral over " << to_string(rs.type) << "/B of " << f.str(names) << " = " << t.value.str()
          << " (word " << join(t.word, " ") << ")\n";
}

MultiPoly random_class(std::mt19937& rng, std::size_t nvars, int degree) {
  std::uniform_int_distribution<int> coef(-5, 5);
  MultiPoly p(nvars);
  for (int a = 0; a <= degree; ++a) {
    Exponents e(nvars, 0);
    e[0] = a;
    if (nvars > 1) e[1] = degree - a;
    else e[0] = degree;
    p.add_term(e, Rational(coef(rng)));
  }
  return p;
}

void cmd_schubert_braid(Context& ctx, const std::string& type, int samples, unsigned seed) {
  const auto rs = build_root_system(parse_root_type(type));
  std::mt19937 rng(seed);
  auto apply = [&](const Word& w, MultiPoly f) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) f = divided_difference(rs, *it, f);
    return f;
  };
  Json j = document();
  j["type"] = std::string(to_string(rs.type));
  j["samples"] = samples;
  j["seed"] = seed;
  bool all = true;
  Json pairs = Json::array();
  const std::size_t n = static_cast<std::size_t>(rs.rank);
  for (int i = 1; i <= rs.rank; ++i)
    for (int k = i + 1; k <= rs.rank; ++k) {
      const int prod = rs.cartan(i - 1, k - 1) * rs.cartan(k - 1, i - 1);
      const int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      Word a, b;
      for (int t = 0; t < m; ++t) {
        a.push_back(t % 2 ? k : i);
        b.push_back(t % 2 ? i : k);
      }
      bool ok = true;
      for (int s = 0; s < samples; ++s) {
        const MultiPoly f = random_class(rng, n, m + static_cast<int>(rng() % 3));
        ok = ok && apply(a, f) == apply(b, f);
      }
      all = all && ok;
      pairs.push_back({{"i", i}, {"j", k}, {"m", m}, {"holds", ok}});
    }
  bool nil = true;
  for (int i = 1; i <= rs.rank; ++i)
    for (int s = 0; s < samples; ++s) {
      const MultiPoly f = random_class(rng, n, 2 + static_cast<int>(rng() % 3));
      nil = nil && apply({i, i}, f).is_zero();
    }
  j["braid"] = pairs;
  j["square_zero"] = nil;
  j["holds"] = all && nil;
  if (ctx.json) return ctx.emit(j);
  for (const auto& p : pairs)
    ctx.out << "braid (" << p["i"].get<int>() << "," << p["j"].get<int>() << ") m = " << p["m"].get<int>() << ": "
            << (p["holds"].get<bool>() ? "holds" : "FAILS") << '\n';
  ctx.out << "d_i^2 = 0: " << (nil ? "holds" : "FAILS") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for Fano threefolds and twisted cotangent sections", "fano"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Context ctx{out};
  Action action;

  auto* table = app.add_subcommand("table", "List the classification table with computed checks");
  add_json_flag(table, ctx.json);
  table->callback([&] { action = cmd_table; });

  int row = 0;
  bool trace = false;
  auto* check_row = app.add_subcommand("check-row", "Classify h0(V, Omega^1(1)) for one table row");
  check_row->add_option("row", row, "Row number 1..18")->required();
  check_row->add_flag("--trace", trace, "Print the rule chain and axioms");
  add_json_flag(check_row, ctx.json);
  check_row->callback([&] { action = [&](Context& c) { cmd_check_row(c, row, trace); }; });

  std::string c5_target;
  auto* c5 = app.add_subcommand("c5", "Degree of c5 of the tangent bundle of a fivefold");
  c5->add_option("target", c5_target, "g2p1, g2p2 or quadric5")
      ->required()
      ->check(CLI::IsMember({"g2p1", "g2p2", "quadric5"}));
  add_json_flag(c5, ctx.json);
  c5->callback([&] { action = [&](Context& c) { cmd_c5(c, c5_target); }; });

  long l2 = 22;
  auto* hrr = app.add_subcommand("hrr-k3", "Riemann-Roch for Omega^1(L) and L on a polarized K3 surface");
  hrr->add_option("--l2", l2, "Self-intersection L^2")->capture_default_str();
  add_json_flag(hrr, ctx.json);
  hrr->callback([&] { action = [&](Context& c) { cmd_hrr_k3(c, l2); }; });

  std::string weights;
  int forms = 1, twist = 1;
  auto* wps = app.add_subcommand("wps-vanish", "Dolgachev vanishing for Omega^l(k) on a weighted projective space");
  wps->add_option("--weights", weights, "Comma-separated weights")->required();
  wps->add_option("--forms", forms, "Form degree l")->capture_default_str();
  wps->add_option("--twist", twist, "Twist k")->capture_default_str();
  add_json_flag(wps, ctx.json);
  wps->callback([&] { action = [&](Context& c) { cmd_wps(c, weights, forms, twist); }; });

  int bn = 3, bp = 1, bk = 1;
  auto* bott = app.add_subcommand("bott", "h0(P^n, Omega^p(k)) by Bott's formula");
  bott->add_option("--n", bn, "Dimension n")->capture_default_str();
  bott->add_option("--p", bp, "Form degree p")->capture_default_str();
  bott->add_option("--k", bk, "Twist k")->capture_default_str();
  add_json_flag(bott, ctx.json);
  bott->callback([&] { action = [&](Context& c) { cmd_bott(c, bn, bp, bk); }; });

  auto* mu = app.add_subcommand("mu", "Computations on the Mukai-Umemura threefold");
  mu->require_subcommand(1);
  std::string mx = "e", my = "f", mform, gamma;
  bool maffine = false;
  auto* wedge = mu->add_subcommand("wedge", "Section v_X ^ v_Y of O(2,2) and its divisor");
  wedge->add_option("--x", mx, "sl2 element in e, f, h")->capture_default_str();
  wedge->add_option("--y", my, "sl2 element in e, f, h")->capture_default_str();
  add_json_flag(wedge, ctx.json);
  wedge->callback([&] { action = [&](Context& c) { cmd_mu_wedge(c, mx, my); }; });
  auto* orbit = mu->add_subcommand("orbit", "Orbit dimensions in P(M12 + C)");
  orbit->add_option("--form", mform, "Binary form of degree 12 in t0, t1, or x for the icosahedral form");
  orbit->add_flag("--affine", maffine, "Use the point [v + 1]");
  add_json_flag(orbit, ctx.json);
  orbit->callback([&] { action = [&](Context& c) { cmd_mu_orbit(c, mform, maffine); }; });
  auto* fol = mu->add_subcommand("foliation", "Foliation verdict for the plane field spanned by X and Y");
  fol->add_option("--x", mx, "sl2 element in e, f, h")->capture_default_str();
  fol->add_option("--y", my, "sl2 element in e, f, h")->capture_default_str();
  add_json_flag(fol, ctx.json);
  fol->callback([&] { action = [&](Context& c) { cmd_mu_foliation(c, mx, my); }; });
  auto* equi = mu->add_subcommand("equivariance", "SL2 equivariance of nu for one matrix");
  equi->add_option("--gamma", gamma, "Entries a,b,c,d of a determinant-one matrix")->required();
  add_json_flag(equi, ctx.json);
  equi->callback([&] { action = [&](Context& c) { cmd_mu_equivariance(c, gamma); }; });

  auto* g2 = app.add_subcommand("g2", "Computations in the Lie algebra g2");
  g2->require_subcommand(1);
  std::string z = "e_3_2";
  auto* contact = g2->add_subcommand("contact-check", "Contact data at [Z] in P(g2)");
  contact->add_option("--z", z, "Element of g2 in Chevalley labels")->capture_default_str();
  add_json_flag(contact, ctx.json);
  contact->callback([&] { action = [&](Context& c) { cmd_g2_contact(c, z); }; });

  auto* schubert = app.add_subcommand("schubert", "Schubert calculus on G/B");
  schubert->require_subcommand(1);
  std::string stype = "G2", scls, sword;
  int samples = 20;
  unsigned seed = 1;
  auto* integ = schubert->add_subcommand("integrate", "Degree of a class on G/B by divided differences");
  integ->add_option("--type", stype, "A1, A1xA1, A2, B2 or G2")->capture_default_str();
  integ->add_option("--class", scls, "Polynomial in x1..xr")->required();
  integ->add_option("--word", sword, "Reduced word of w0, comma-separated");
  add_json_flag(integ, ctx.json);
  integ->callback([&] { action = [&](Context& c) { cmd_schubert_integrate(c, stype, scls, sword); }; });
  auto* braid = schubert->add_subcommand("braid-check", "Braid relations and d_i^2 = 0 on random classes");
  braid->add_option("--type", stype, "A1, A1xA1, A2, B2 or G2")->capture_default_str();
  braid->add_option("--samples", samples, "Random classes per relation")->capture_default_str();
  braid->add_option("--seed", seed, "Random seed")->capture_default_str();
  add_json_flag(braid, ctx.json);
  braid->callback([&] { action = [&](Context& c) { cmd_schubert_braid(c, stype, samples, seed); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (action) action(ctx);
    return 0;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    if (ctx.json) {
      Json j = document();
      j["error"] = {{"category", std::string(to_string(e.kind()))}, {"message", e.what()}};
      ctx.emit(j);
    }
    return 1;
  }
}

}  // namespace fano::cli
