#include "ehz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "ehz/analytics.hpp"
#include "ehz/errors.hpp"
#include "ehz/hecke.hpp"
#include "ehz/io.hpp"

namespace ehz::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string type = "C";
  int n = 1;
  int k = 0;
  int ell = 0;
  long p = 0;  // 0: stay symbolic in q
  int order = 4;
  int m = 1;
  int radius = 2;
  long max_index = 100;
  long probe = 0;
  std::string format = "text";
  std::string precision = "1e-6";
  std::string suite = "all";
  std::string what = "symplectic";
  std::string polytope;
  bool oracle = false;
  bool list = false;
};

ZetaType zeta_type(const Options& o) { return o.type == "A" ? ZetaType::A : ZetaType::C; }

void add_type(CLI::App* s, Options& o) {
  s->add_option("--type", o.type, "A or C")->check(CLI::IsMember({"A", "C"}))->capture_default_str();
}
void add_n(CLI::App* s, Options& o) { s->add_option("--n", o.n, "rank")->check(CLI::PositiveNumber)->capture_default_str(); }
void add_ell(CLI::App* s, Options& o) { s->add_option("--ell", o.ell, "Ehrhart coefficient index")->capture_default_str(); }
void add_format(CLI::App* s, Options& o, std::vector<std::string> allowed) {
  s->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed))->capture_default_str();
}
void add_p(CLI::App* s, Options& o, const std::string& what) {
  s->add_option("--p", o.p, what)->check(CLI::Range(2L, 1000000L));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

LatticePolytope load_polytope(const std::string& path) {
  if (path == "-") return read_polytope(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open polytope file " + path);
  return read_polytope(in);
}

LatticePolytope standard_simplex(int d) {
  std::vector<std::vector<long>> v(static_cast<size_t>(d) + 1, std::vector<long>(static_cast<size_t>(d), 0));
  for (int i = 0; i < d; ++i) v[static_cast<size_t>(i) + 1][static_cast<size_t>(i)] = 1;
  return LatticePolytope::from_integer(d, v);
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s;
}

Json strings(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

// ------------------------------------------------------------------ verbs

int do_phi(const Options& o, std::ostream& out) {
  LaurentPoly poly = eigenvalue_poly(zeta_type(o), o.n, o.k, o.ell).poly;
  if (o.format == "latex") {
    out << poly.to_latex("q") << "\n";
    return kExitOk;
  }
  if (o.format == "json") {
    Json j{{"type", o.type}, {"n", o.n}, {"k", o.k}, {"ell", o.ell}, {"poly", to_json(poly)}, {"text", poly.to_string("q")}};
    if (o.p) j["value"] = poly.eval(Rational(o.p)).get_str();
    emit(out, j);
    return kExitOk;
  }
  out << "Phi^" << o.type << "_{" << o.n << "," << o.k << "," << o.ell << "}(q) = " << poly.to_string("q") << "\n";
  if (o.p) out << "at q = " << o.p << ": " << poly.eval(Rational(o.p)).get_str() << "\n";
  return kExitOk;
}

int do_delta(const Options& o, std::ostream& out) {
  LaurentPoly poly = delta_poly(o.n, o.k);
  Json j{{"n", o.n}, {"k", o.k}, {"poly", to_json(poly)}, {"text", poly.to_string("q")}};
  bool ok = true;
  if (o.p) {
    Rational v = poly.eval(Rational(o.p));
    j["value"] = v.get_str();
    if (o.oracle) {
      // class 0 lives at similitude p, classes k >= 1 at p^2
      long count = 0;
      for (const auto& c : enumerate_symplectic_cosets(o.n, o.p, o.k == 0 ? 1 : 2)) count += c.hecke_class == o.k;
      j["oracle"] = count;
      ok = Rational(count) == v;
      j["match"] = ok;
    }
  } else if (o.oracle) {
    throw UsageError("--oracle needs --p");
  }
  if (o.format == "json") {
    emit(out, j);
  } else {
    out << "Delta_{" << o.n << "," << o.k << "}(q) = " << poly.to_string("q") << "\n";
    if (o.p) out << "at q = " << o.p << ": " << j["value"].get<std::string>() << "\n";
    if (j.contains("oracle")) out << "coset enumeration: " << j["oracle"].get<long>() << (ok ? " (match)" : " (MISMATCH)") << "\n";
  }
  return ok ? kExitOk : kExitComputation;
}

LocalZeta local_zeta(const Options& o) { return zeta_type(o) == ZetaType::C ? zeta_C(o.n, o.ell) : zeta_A(o.n, o.ell); }

int do_zeta(const Options& o, std::ostream& out) {
  LocalZeta z = local_zeta(o);
  if (o.format == "latex") out << zeta_to_latex(z) << "\n";
  else if (o.format == "json") emit(out, to_json(z));
  else out << z.value.to_string() << "\n";
  return kExitOk;
}

int do_expand(const Options& o, std::ostream& out) {
  if (o.order < 0) throw UsageError("--order must be >= 0");
  LocalZeta z = local_zeta(o);
  TruncatedSeries s = rf_expand(z.value, o.order);
  Json j{{"type", o.type}, {"n", o.n}, {"ell", o.ell}, {"order", o.order}};
  Json coeffs = Json::array();
  for (int e = 0; e <= o.order; ++e) {
    const LaurentPoly& c = s.coeffs[static_cast<size_t>(e)];
    coeffs.push_back(o.p ? Json(c.eval(Rational(o.p)).get_str()) : to_json(c));
  }
  j["coefficients"] = coeffs;
  bool ok = true;
  std::vector<Rational> got;
  if (o.oracle) {
    if (!o.p) throw UsageError("--oracle needs --p");
    const ZetaType t = zeta_type(o);
    const int step = t == ZetaType::C ? o.n : 1;
    const int d = t == ZetaType::C ? 2 * o.n : o.n;
    LatticePolytope P = o.polytope.empty() ? standard_simplex(d) : load_polytope(o.polytope);
    auto want = zeta_series_formula(t, o.n, o.ell, o.p, o.order / step);
    got = zeta_series_oracle(t, o.n, o.ell, o.p, P, o.order / step);
    ok = want == got;
    j["oracle"] = strings(got);
    j["formula"] = strings(want);
    j["match"] = ok;
  }
  if (o.format == "json") {
    emit(out, j);
  } else {
    for (int e = 0; e <= o.order; ++e) {
      const LaurentPoly& c = s.coeffs[static_cast<size_t>(e)];
      out << "t^" << e << ": " << (o.p ? c.eval(Rational(o.p)).get_str() : c.to_string("q")) << "\n";
    }
    if (o.oracle) out << "oracle (similitude exponents 0.." << got.size() - 1 << "): " << join(got) << (ok ? " (match)" : " (MISMATCH)") << "\n";
  }
  return ok ? kExitOk : kExitComputation;
}

struct CheckResult {
  std::string suite;
  std::string detail;
  bool pass;
};

std::vector<CheckResult> run_suite(const std::string& suite, const Options& o) {
  std::vector<CheckResult> r;
  const int n = o.n;
  const long p = o.p ? o.p : 2;
  auto add = [&](const std::string& d, bool ok) { r.push_back({suite, d, ok}); };
  auto tag = [](int n_, int l) { return "n=" + std::to_string(n_) + " l=" + std::to_string(l); };
  if (suite == "functional-eq") {
    for (int l = 0; l <= 2 * n; ++l) add(tag(n, l), check_functional_eq(n, l));
  } else if (suite == "reflection") {
    for (int l = 0; l <= 2 * n; ++l) add(tag(n, l), check_reflection(n, l));
  } else if (suite == "igusa-l0") {
    add("n=" + std::to_string(n), check_igusa_l0(n));
  } else if (suite == "igusa-ln") {
    add("n=" + std::to_string(n) + " (conjectural form)", check_igusa_ln(n));
  } else if (suite == "phi-invariants") {
    for (int k = 0; k <= n; ++k) {
      add("Phi(l=0) = Delta k=" + std::to_string(k), phi_C(n, k, 0) == delta_poly(n, k));
      for (int l = 0; l <= 2 * n; ++l) {
        const int e = k == 0 ? n - l : 2 * (n - l);
        LaurentPoly a = phi_C(n, k, l);
        add("ratio law k=" + std::to_string(k) + " l=" + std::to_string(l),
            a.is_polynomial() && phi_C(n, k, 2 * n - l) == a.shifted(e));
      }
    }
  } else if (suite == "satake") {
    for (int k = 0; k <= n; ++k)
      for (int l = -1; l <= 2 * n + 1; ++l) {
        const Rational want = phi_C(n, k, l).eval(Rational(p));
        add("k=" + std::to_string(k) + " l=" + std::to_string(l) + " p=" + std::to_string(p),
            satake_image_eval(n, k, l, p) == want &&
                (!o.oracle || satake_image_eval(n, k, l, p, SatakeRoute::Enumeration) == want));
      }
  } else if (suite == "difference") {
    for (int k = 0; k <= n; ++k)
      for (int l = -1; l <= 2 * n + 1; ++l)
        add("k=" + std::to_string(k) + " l=" + std::to_string(l) + " p=" + std::to_string(p),
            check_difference_identity(n, k, l, p, o.oracle ? SatakeRoute::Enumeration : SatakeRoute::ClosedForm));
  } else if (suite == "qidentity") {
    add("m=" + std::to_string(n), qidentity_check(n));
  } else if (suite == "tamagawa") {
    add("n=" + std::to_string(n) + " p=" + std::to_string(p), tamagawa_check(n, p, 3));
  } else if (suite == "gamma") {
    add("n=" + std::to_string(n) + " kind 0 palindromic", gamma_euler_factor(n, 0).is_palindromic());
    add("n=" + std::to_string(n) + " kind n palindromic", gamma_euler_factor(n, n).is_palindromic());
  } else if (suite == "multiplicativity") {
    const ZetaType t = zeta_type(o);
    const int top = t == ZetaType::C ? 2 * n : n;
    for (int l = 0; l <= top; ++l) {
      auto c = global_coeffs(t, n, l, o.max_index);
      std::vector<std::pair<long, long>> pairs;
      for (long a = 2; a * a <= o.max_index; ++a)
        for (long b = a + 1; a * b <= o.max_index; ++b)
          if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
      add(o.type + " " + tag(n, l) + " M=" + std::to_string(o.max_index), multiplicativity_check(c, pairs));
    }
  } else if (suite == "series") {
    const ZetaType t = zeta_type(o);
    const int step = t == ZetaType::C ? n : 1;
    const int d = t == ZetaType::C ? 2 * n : n;
    LatticePolytope P = o.polytope.empty() ? standard_simplex(d) : load_polytope(o.polytope);
    const int top = t == ZetaType::C ? 2 * n : n;
    for (int l = 0; l <= top; ++l)
      add(o.type + " " + tag(n, l) + " p=" + std::to_string(p),
          zeta_series_oracle(t, n, l, p, P, o.order / step) == zeta_series_formula(t, n, l, p, o.order / step));
  } else {
    throw UsageError("unknown suite " + suite);
  }
  return r;
}

const std::vector<std::string> kSuites = {"functional-eq", "reflection", "igusa-l0",  "igusa-ln",      "phi-invariants",
                                          "satake",        "difference", "qidentity", "tamagawa",      "gamma",
                                          "multiplicativity", "series", "all"};

int do_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = {"functional-eq", "reflection", "igusa-l0", "igusa-ln", "phi-invariants", "satake", "difference"};
    if (o.n >= 2) suites.push_back("gamma");
  } else {
    suites = {o.suite};
  }
  std::vector<CheckResult> all;
  for (const auto& s : suites) {
    auto r = run_suite(s, o);
    all.insert(all.end(), r.begin(), r.end());
  }
  const long failed = std::count_if(all.begin(), all.end(), [](const CheckResult& c) { return !c.pass; });
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& c : all) a.push_back(Json{{"suite", c.suite}, {"check", c.detail}, {"pass", c.pass}});
    emit(out, Json{{"results", a}, {"passed", static_cast<long>(all.size()) - failed}, {"failed", failed}});
  } else {
    for (const auto& c : all) out << (c.pass ? "PASS " : "FAIL ") << c.suite << " " << c.detail << "\n";
    out << all.size() - static_cast<size_t>(failed) << " passed, " << failed << " failed\n";
  }
  return failed ? kExitComputation : kExitOk;
}

int do_enumerate(const Options& o, std::ostream& out) {
  if (!o.p) throw UsageError("enumerate needs --p");
  if (o.m < 0) throw UsageError("--m must be >= 0");
  Json j{{"what", o.what}, {"n", o.n}, {"p", o.p}, {"m", o.m}};
  std::map<std::string, long> by;
  Json mats = Json::array();
  auto matrix = [](const IntMatrix& M) {
    Json rows = Json::array();
    for (const auto& row : matrix_strings(M)) rows.push_back(row);
    return rows;
  };
  long total = 0;
  if (o.what == "symplectic") {
    for (const auto& c : enumerate_symplectic_cosets(o.n, o.p, o.m)) {
      ++total;
      ++by["class " + (c.hecke_class < 0 ? std::string("composite") : std::to_string(c.hecke_class)) + ", type " + c.type.to_string()];
      if (o.list) mats.push_back(matrix(c.rep));
    }
  } else if (o.what == "sublattices") {
    for (const auto& s : enumerate_sublattices(o.n, o.p, o.m)) {
      ++total;
      ++by["type " + s.type.to_string()];
      if (o.list) mats.push_back(matrix(s.basis));
    }
  } else if (o.what == "hnf") {
    for (const auto& h : enumerate_hnf_det(o.n, ipow(Integer(o.p), static_cast<unsigned long>(o.m)))) {
      ++total;
      if (o.list) mats.push_back(matrix(h));
    }
  } else {
    throw UsageError("--what must be symplectic, sublattices or hnf");
  }
  j["count"] = total;
  Json groups = Json::object();
  for (const auto& [k, v] : by) groups[k] = v;
  if (!by.empty()) j["groups"] = groups;
  if (o.list) j["matrices"] = mats;
  if (o.format == "json") {
    emit(out, j);
    return kExitOk;
  }
  out << "count: " << total << "\n";
  for (const auto& [k, v] : by) out << "  " << k << ": " << v << "\n";
  if (o.list)
    for (const auto& M : mats) out << M.dump() << "\n";
  return kExitOk;
}

int do_ehrhart(const Options& o, std::ostream& out) {
  if (o.polytope.empty()) throw UsageError("ehrhart needs --polytope FILE (or - for stdin)");
  LatticePolytope P = load_polytope(o.polytope);
  EhrhartPolynomial e = ehrhart_poly(P);
  if (o.format == "json") emit(out, Json{{"ambient", P.ambient()}, {"coefficients", strings(e.coeffs)}});
  else out << "c = (" << join(e.coeffs) << ")\n";
  return kExitOk;
}

int do_global(const Options& o, std::ostream& out) {
  const ZetaType t = zeta_type(o);
  DirichletCoefficients c = global_coeffs(t, o.n, o.ell, o.max_index);
  bool ok = true;
  std::string against;
  if (o.oracle) {
    if (!has_zeta_product(t, o.n)) throw UsageError("--oracle needs a zeta product (type A, or type C with n <= 2)");
    ZetaProduct z = zeta_product(t, o.n, o.ell);
    auto d = dirichlet_coeffs(z, o.max_index);
    for (long m = 1; m <= o.max_index; ++m) ok = ok && c[m] == d[static_cast<size_t>(m)];
    against = zeta_product_to_string(z);
  }
  if (o.format == "csv") {
    out << to_csv(c);
  } else if (o.format == "json") {
    Json j = to_json(c);
    if (o.oracle) j["oracle"] = Json{{"zeta_product", against}, {"match", ok}};
    emit(out, j);
  } else {
    for (long m = 1; m <= c.M; ++m)
      if (c[m] != 0) out << m << ": " << c[m].get_str() << "\n";
    if (o.oracle) out << "against " << against << ": " << (ok ? "match" : "MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitComputation;
}

int do_asymptotics(const Options& o, std::ostream& out) {
  Rational prec = parse_decimal(o.precision);
  if (prec <= 0) throw UsageError("--precision must be positive");
  AsymptoticReport r = asymptotic_constant(zeta_type(o), o.n, o.ell, prec);
  Json j = to_json(r);
  if (o.probe > 0) {
    PartialSumProbe ps = partial_sum_probe(zeta_type(o), o.n, o.ell, o.probe);
    j["probe"] = Json{{"N", ps.N},
                      {"sum", ps.sum.get_str()},
                      {"predicted", to_json(ps.predicted)},
                      {"ratio", decimal_string(Rational(ps.ratio), 6)},
                      {"tauberian_ratio", decimal_string(Rational(ps.tauberian_ratio), 6)}};
  }
  if (o.format == "json") {
    emit(out, j);
    return kExitOk;
  }
  out << "abscissa: " << r.abscissa.get_str() << "\n";
  out << "pole order: " << r.pole_order << "\n";
  out << "constant: " << decimal_string(r.constant.lo, 12) << " .. " << decimal_string(r.constant.hi, 12) << "\n";
  out << "tauberian constant: " << j["tauberian"]["approx"].get<std::string>() << "\n";
  out << "route: " << r.route << "\n";
  out << "cross-check (" << r.cross_route << "): " << j["cross_check"]["approx"].get<std::string>() << "\n";
  if (r.conditional) out << "conditional on the l = n Igusa form\n";
  if (o.probe > 0)
    out << "partial sum to " << o.probe << ": ratio " << j["probe"]["ratio"].get<std::string>() << ", tauberian ratio "
        << j["probe"]["tauberian_ratio"].get<std::string>() << "\n";
  return kExitOk;
}

// the two polygons of the tree picture
LatticePolytope tree_polygon_P() { return LatticePolytope::from_integer(2, {{0, 0}, {1, 0}, {0, 1}, {2, 1}}); }
LatticePolytope tree_polygon_P2() {
  return LatticePolytope::from_integer(2, {{0, 0}, {1, 0}, {0, 1}, {1, 2}, {3, 3}, {4, 1}});
}

int do_tree(const Options& o, std::ostream& out) {
  const long p = o.p ? o.p : 2;
  if (o.radius < 1) throw UsageError("--radius must be >= 1");
  // coefficient of t^r of the type A (n = 2, l = 1) zeta function at q = p
  std::vector<Rational> series = rf_expand(zeta_A(2, 1).value, o.radius).eval_q(Rational(p));
  bool ok = true;
  Json polys = Json::array();
  std::ostringstream text;
  for (const auto& [name, P] : {std::pair{"P", tree_polygon_P()}, std::pair{"P'", tree_polygon_P2()}}) {
    const Rational central = ehrhart_poly(P).coeff(1);
    std::vector<Rational> sums{central};
    Json rings = Json::array();
    text << name << ": central value " << central.get_str() << "\n";
    for (int r = 1; r <= o.radius; ++r) {
      std::vector<Rational> vals = tree_values(P, p, r);
      Rational s = std::accumulate(vals.begin(), vals.end(), Rational(0));
      sums.push_back(s);
      // superlattices of index p^r: p^{-j} times a tree vertex at distance r - 2j; c_1 scales by p^j
      Rational total = 0;
      for (int jj = 0; 2 * jj <= r; ++jj) total += rpow(Rational(p), jj) * sums[static_cast<size_t>(r - 2 * jj)];
      const Rational normalized = s / central, full = total / central;
      ok = ok && full == series[static_cast<size_t>(r)];
      rings.push_back(Json{{"radius", r},
                           {"values", strings(vals)},
                           {"normalized_sum", normalized.get_str()},
                           {"with_scaled_lattices", full.get_str()},
                           {"zeta_coefficient", series[static_cast<size_t>(r)].get_str()}});
      text << "  radius " << r << ": " << join(vals) << "\n";
      text << "    normalized sum " << normalized.get_str() << ", with p^-j Lambda_0 multiples " << full.get_str()
           << ", zeta_A(2,1) coefficient " << series[static_cast<size_t>(r)].get_str() << "\n";
    }
    polys.push_back(Json{{"polygon", name}, {"vertices", polytope_to_json(P)["vertices"]}, {"central", central.get_str()},
                         {"rings", rings}});
  }
  if (o.format == "json") emit(out, Json{{"p", p}, {"polygons", polys}, {"match", ok}});
  else out << text.str() << (ok ? "all normalized sums match the zeta coefficients\n" : "MISMATCH\n");
  return ok ? kExitOk : kExitComputation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ehrhart-Hecke eigenvalues, zeta functions and asymptotics", "ehz"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file ([verb] sections); command-line flags take precedence");
  const std::vector<std::string> text_json = {"text", "json"};

  auto* phi = app.add_subcommand("phi", "eigenvalue polynomial Phi_{n,k,l}");
  add_type(phi, o);
  add_n(phi, o);
  phi->add_option("--k", o.k, "Hecke generator index")->capture_default_str();
  add_ell(phi, o);
  add_p(phi, o, "evaluate at q = p");
  add_format(phi, o, {"text", "json", "latex"});

  auto* delta = app.add_subcommand("delta", "coset count polynomial Delta_{n,k}");
  add_n(delta, o);
  delta->add_option("--k", o.k, "Hecke generator index")->capture_default_str();
  add_p(delta, o, "evaluate at q = p");
  delta->add_flag("--oracle", o.oracle, "compare with symplectic coset enumeration");
  add_format(delta, o, text_json);

  auto* zeta = app.add_subcommand("zeta", "local Ehrhart-Hecke zeta function");
  add_type(zeta, o);
  add_n(zeta, o);
  add_ell(zeta, o);
  add_format(zeta, o, {"text", "json", "latex"});

  auto* expand = app.add_subcommand("expand", "power series coefficients of the local zeta function");
  add_type(expand, o);
  add_n(expand, o);
  add_ell(expand, o);
  expand->add_option("--order", o.order, "t-order")->capture_default_str();
  add_p(expand, o, "evaluate at q = p");
  expand->add_flag("--oracle", o.oracle, "compare with coset enumeration (needs --p)");
  expand->add_option("--polytope", o.polytope, "polytope JSON for the oracle (default: standard simplex)");
  add_format(expand, o, text_json);

  auto* verify = app.add_subcommand("verify", "run an identity suite; exit 1 on any failure");
  verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(kSuites))->capture_default_str();
  add_type(verify, o);
  add_n(verify, o);
  add_p(verify, o, "prime for numeric suites (default 2)");
  verify->add_option("--order", o.order, "t-order for the series suite")->capture_default_str();
  verify->add_option("--max-index", o.max_index, "coefficient bound for multiplicativity")->capture_default_str();
  verify->add_option("--polytope", o.polytope, "polytope JSON for the series suite");
  verify->add_flag("--oracle", o.oracle, "also use lattice enumeration where available");
  add_format(verify, o, text_json);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate cosets or sublattices");
  enumerate->add_option("--what", o.what, "symplectic, sublattices or hnf")->capture_default_str();
  add_n(enumerate, o);
  add_p(enumerate, o, "prime");
  enumerate->add_option("--m", o.m, "exponent: similitude p^m, index p^m or determinant p^m")->capture_default_str();
  enumerate->add_flag("--list", o.list, "print the matrices");
  add_format(enumerate, o, text_json);

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial coefficients");
  ehrhart->add_option("--polytope", o.polytope, "polytope JSON file, - for stdin")->required();
  add_format(ehrhart, o, text_json);

  auto* global = app.add_subcommand("global", "Dirichlet coefficients of the global zeta function");
  add_type(global, o);
  add_n(global, o);
  add_ell(global, o);
  global->add_option("--max-index", o.max_index, "largest index m")->capture_default_str();
  global->add_flag("--oracle", o.oracle, "compare with the zeta product");
  add_format(global, o, {"text", "json", "csv"});

  auto* asym = app.add_subcommand("asymptotics", "abscissa, pole order and asymptotic constant");
  add_type(asym, o);
  add_n(asym, o);
  add_ell(asym, o);
  asym->add_option("--precision", o.precision, "interval width, e.g. 1e-6 or 1/1000")->capture_default_str();
  asym->add_option("--probe", o.probe, "also sum the coefficients up to N");
  add_format(asym, o, text_json);

  auto* tree = app.add_subcommand("tree-example", "Ehrhart coefficients on the Bruhat-Tits tree");
  add_p(tree, o, "prime (default 2)");
  tree->add_option("--radius", o.radius, "largest radius")->capture_default_str();
  add_format(tree, o, text_json);

  const std::map<CLI::App*, std::function<int(const Options&, std::ostream&)>> verbs = {
      {phi, do_phi},           {delta, do_delta},   {zeta, do_zeta},     {expand, do_expand},
      {verify, do_verify},     {enumerate, do_enumerate}, {ehrhart, do_ehrhart}, {global, do_global},
      {asym, do_asymptotics},  {tree, do_tree}};

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    for (const auto& [sub, fn] : verbs)
      if (sub->parsed()) return fn(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace ehz::cli
