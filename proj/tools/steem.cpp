// steem: command-line workbench.
//
// Exit codes: 0 ok, 2 usage/parse error, 3 verification failure, 4 bound overflow.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "steem/steem.hpp"

using namespace steem;

namespace {

constexpr int kOk = 0, kUsage = 2, kFailed = 3, kOverflow = 4;
constexpr int kHardCap = 64;

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  int max_degree = kHardCap;  // STEEM_MAXDEG or the built-in cap
  bool env_bound = false;
};

/// Requested degrees above the global bound are an overflow.
int bounded(const Globals& g, int requested, const std::string& what) {
  if (requested < 0) throw InvalidArgument(what + " must be non-negative");
  if (requested > g.max_degree)
    throw OutOfBound(what + " = " + std::to_string(requested) + " exceeds the global bound " +
                     std::to_string(g.max_degree) + (g.env_bound ? " (STEEM_MAXDEG)" : ""));
  return requested;
}

/// Default bound: STEEM_MAXDEG when set, else `fallback`.
int default_bound(const Globals& g, int fallback) { return g.env_bound ? g.max_degree : fallback; }

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string report_text(const Report& r, bool verbose) {
  std::ostringstream o;
  for (const auto& c : r.checks)
    if (verbose || !c.pass)
      o << (c.pass ? "PASS " : "FAIL ") << c.name << (c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
  o << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
  return o.str();
}

std::string dims_text(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
  return s;
}

// --- subcommands -------------------------------------------------------------

int cmd_adem(const Globals& g, const std::string& expr) {
  auto e = parse_element(expr);
  bounded(g, e.degree(), "degree");
  emit(g, Json{{"input", expr}, {"degree", e.degree()}, {"result", e.str()}}, e.str() + "\n");
  return kOk;
}

int cmd_an_lemma(const Globals& g, int n) {
  if (n < 1) throw InvalidArgument("--n must be >= 1");
  if (n > 20) throw OutOfBound("--n too large");
  bounded(g, 1 << (n + 1), "degree 2^(n+1)");
  auto w = decompose_sq2n_sq2n(n, g.max_degree);
  if (!w) {
    emit(g, Json{{"n", n}, {"verified", false}}, "no decomposition found\n");
    return kFailed;
  }
  const bool ok = verify_witness(*w);
  Json terms = Json::array();
  std::ostringstream o;
  const int p = 1 << n;
  o << "Sq" << p << " Sq" << p << " = " << w->target.str() << "\n  = ";
  for (std::size_t i = 0; i < w->terms.size(); ++i) {
    const auto& t = w->terms[i];
    terms.push_back({{"left", t.left.str()}, {"middle", t.middle}, {"right", t.right.str()}});
    o << (i ? "\n  + " : "") << "(" << t.left.str() << ") Sq" << t.middle << " (" << t.right.str() << ")";
  }
  o << "\nre-multiplied: " << (ok ? "ok" : "MISMATCH") << "\n";
  emit(g, Json{{"n", n}, {"target", w->target.str()}, {"terms", terms}, {"verified", ok}}, o.str());
  return ok ? kOk : kFailed;
}

int cmd_nilfilt(const Globals& g, const std::string& name, int maxdeg) {
  auto m = parse_module(name, bounded(g, maxdeg, "--maxdeg"));
  bounded(g, m.bound(), "module bound");
  auto f = nilpotent_filtration(m);
  Json filt = Json::array(), quots = Json::array();
  std::ostringstream o;
  o << "module " << name << ", bound " << m.bound() << ", filtration window <= " << f.window << "\n";
  o << "dims: " << dims_text(m.dims()) << "\n";
  for (int s = 0; s <= f.max_s(); ++s) {
    std::vector<int> d;
    for (int e = 0; e <= f.window; ++e) d.push_back(f.dim(s, e));
    filt.push_back(d);
    if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) continue;
    o << "M_" << s << ": " << dims_text(d) << "\n";
  }
  for (int s = 0; s <= f.window; ++s) {
    quots.push_back(to_json(f.R(s)));
    if (f.R(s).total_dim() > 0) o << "R_" << s << ": " << dims_text(f.R(s).dims()) << "\n";
  }
  emit(g, Json{{"module", name}, {"bound", m.bound()}, {"window", f.window}, {"filtration", filt}, {"R", quots}},
       o.str());
  return kOk;
}

int cmd_weight(const Globals& g, const std::string& name) {
  auto m = parse_module(name, default_bound(g, 16));
  bounded(g, m.bound(), "module bound");
  if (!is_reduced(m)) {
    emit(g, Json{{"module", name}, {"bound", m.bound()}, {"reduced", false}},
         "module " + name + " is not reduced; weight is defined for reduced modules\n");
    return kUsage;
  }
  const int w = weight(m);
  emit(g, Json{{"module", name}, {"bound", m.bound()}, {"reduced", true}, {"weight", w}},
       "weight(" + name + ") = " + std::to_string(w) + " (through degree " + std::to_string(m.bound()) + ")\n");
  return kOk;
}

int cmd_tor(const Globals& g, const std::string& name, int smax, int tmax) {
  bounded(g, tmax, "--tmax");
  if (smax < 0) throw InvalidArgument("--smax must be non-negative");
  auto a = parse_algebra(name, tmax);
  bounded(g, a.bound(), "algebra bound");
  auto k = augmentation_module(a, a.bound());
  auto r = tor(a, k, k, smax + 1, tmax);
  auto ru = tor(a, k, k, smax + 1, tmax, false);
  bool agree = true;
  Json dims = Json::object();
  std::ostringstream o;
  o << "Tor^{" << name << "}(F2,F2), s <= " << smax << ", t <= " << tmax << "  (rows s, columns t)\n";
  for (int s = 0; s <= smax; ++s) {
    o << "s=" << s << ":";
    for (int t = 0; t <= tmax; ++t) {
      dims[detail::bidegree_key(s, t)] = r.dim(s, t);
      agree = agree && r.dim(s, t) == ru.dim(s, t);
      o << " " << r.dim(s, t);
    }
    o << "\n";
  }
  o << "reduced and unreduced bar " << (agree ? "agree" : "DISAGREE") << "\n";
  emit(g, Json{{"algebra", a.name()}, {"tor", dims}, {"reduced_unreduced_agree", agree}}, o.str());
  return agree ? kOk : kFailed;
}

int cmd_em_loops(const Globals& g, const std::string& space, int maxdeg) {
  if (space.rfind("sphere:", 0) != 0) throw ParseError("--space must be sphere:<m> with m >= 2");
  const Term m{space.substr(7), {}, false};
  const int dim = m.number();
  if (dim < 2) throw InvalidArgument("sphere:<m> needs m >= 2 (loops on S^1 are not simply connected)");
  const int n = dim - 1;
  bounded(g, maxdeg, "--maxdeg");
  auto L = loop_module_with_page(n, maxdeg);
  Report checks;
  const auto tot = L.page.total_dims(maxdeg);
  std::string w;
  for (int k = 0; k <= maxdeg && w.empty(); ++k)
    if (tot[detail::sz(k)] != (k % n == 0 ? 1 : 0)) w = "degree " + std::to_string(k);
  checks.add("E2 total dims = [n | k]", w.empty(), w);
  checks.add("collapse", L.collapse.collapses, L.collapse.witness);
  auto corner = corner_maps(L.page, L.collapse);
  const bool sends = corner.edge[detail::sz(dim)].rows() == 1 && corner.edge[detail::sz(dim)].get(0, 0);
  checks.add("corner sends the sphere class to the degree-n loop class", sends,
             "loop degree " + std::to_string(corner.loop_degree(dim)));
  Json j = em_report_json(L.page, L.collapse, corner, checks);
  j["space"] = space;
  j["loop_dims"] = tot;
  j["loop_module"] = to_json(L.module);
  std::ostringstream o;
  o << "Omega S^" << dim << " through degree " << maxdeg << ": " << dims_text(tot) << "\n" << report_text(checks, true);
  emit(g, j, o.str());
  return checks.pass() ? kOk : kFailed;
}

/// Maps of the cobar diagram: the identity when source and target names
/// agree, else the constant map to the basepoint of Y.
SimplicialMap diagram_map(const std::string& from, const FiniteSimplicialSet& a, const std::string& to,
                          const FiniteSimplicialSet& b) {
  if (from == to) return identity_map(a);
  return constant_map(a, b);
}

int cmd_cobar(const Globals& g, const std::string& xn, const std::string& yn, const std::string& zn, int smax,
              int tmax) {
  bounded(g, tmax, "--tmax");
  if (smax < 0) throw InvalidArgument("--smax must be non-negative");
  const int L = tmax + 1;
  auto x = parse_space(xn, L), y = parse_space(yn, L), z = parse_space(zn, L);
  CobarDiagram dg{x, y, z, diagram_map(xn, x, yn, y), diagram_map(zn, z, yn, y)};
  auto c = compare_cobar_with_bar(dg, smax, tmax);
  Report checks;
  checks.add("Kunneth iso on every level", c.kunneth_iso);
  checks.add("degeneracies span unit tuples", c.degeneracies_span_units, c.witness);
  checks.add("normalized complex = quotient by degeneracies", c.normalized_iso);
  checks.add("E1 dims agree with the bar construction", c.dims_equal, c.witness);
  checks.add("d1 agrees with the bar construction", c.d1_equal, c.witness);
  Json dims = detail::table_json(smax, tmax, [&](int s, int t) { return c.geometric.dim(s, t); });
  std::ostringstream o;
  o << "geometric cobar " << xn << " -> " << yn << " <- " << zn << ", E1 (rows s, columns t)\n";
  for (int s = 0; s <= smax; ++s) {
    o << "s=" << s << ":";
    for (int t = 0; t <= tmax; ++t) o << " " << c.geometric.dim(s, t);
    o << "\n";
  }
  o << report_text(checks, true);
  emit(g, Json{{"x", xn}, {"y", yn}, {"z", zn}, {"page", "E1"}, {"dims", dims}, {"checks", to_json(checks)}}, o.str());
  return checks.pass() ? kOk : kFailed;
}

int cmd_verify(const Globals& g, const std::string& suite, bool verbose) {
  SuiteOptions o;
  o.seed = g.seed;
  o.a1_bound = std::min(o.a1_bound, g.max_degree);
  o.classes_bound = std::min(o.classes_bound, g.max_degree);
  o.a2_degree = std::min(o.a2_degree, g.max_degree);
  auto r = run_suite(suite, o);
  emit(g, Json{{"suite", suite}, {"seed", g.seed}, {"pass", r.pass()}, {"checks", to_json(r)}},
       report_text(r, verbose));
  return r.pass() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  if (const char* env = std::getenv("STEEM_MAXDEG")) {
    const std::string v = env;
    if (v.empty() || v.size() > 6 || v.find_first_not_of("0123456789") != std::string::npos) {
      std::cerr << "steem: STEEM_MAXDEG must be a non-negative integer\n";
      return kUsage;
    }
    g.max_degree = std::stoi(v);
    g.env_bound = true;
  }

  CLI::App app{"steem: Steenrod algebra, unstable modules and Eilenberg-Moore computations over F2"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "emit JSON");
  app.add_option("--seed", g.seed, "seed for randomized suites")->capture_default_str();

  std::string expr;
  auto* adem = app.add_subcommand("adem", "reduce a Steenrod word, e.g. \"Sq2 Sq2\"");
  adem->add_option("expr", expr, "element: '+'-joined words of Sq<k> tokens")->required();

  int an_n = 1;
  auto* an = app.add_subcommand("an-lemma", "decompose Sq^{2^n} Sq^{2^n} through A(n)");
  an->add_option("--n", an_n, "n >= 1")->required();

  std::string mod;
  int maxdeg = 16;
  auto* nil = app.add_subcommand("nilfilt", "nilpotent filtration and R_s quotients of a catalog module");
  nil->add_option("--module", mod, "catalog module name, e.g. F(2)@12")->required();
  auto* nil_deg = nil->add_option("--maxdeg", maxdeg, "degree bound");

  auto* wt = app.add_subcommand("weight", "weight of a reduced catalog module");
  wt->add_option("--module", mod, "catalog module name")->required();

  std::string alg;
  int smax = 4, tmax = 12;
  auto* tr = app.add_subcommand("tor", "Tor over a graded algebra via the bar construction");
  tr->add_option("--algebra", alg, "Lambda(k), Poly(k), Trunc(k,h), SqZero(..), tensor(A,B), H(space)")->required();
  tr->add_option("--smax", smax, "largest homological degree")->capture_default_str();
  auto* tr_t = tr->add_option("--tmax", tmax, "largest internal degree");

  std::string space;
  int em_deg = 20;
  auto* em = app.add_subcommand("em-loops", "Eilenberg-Moore spectral sequence of the path-loop fibration");
  em->add_option("--space", space, "sphere:<n+1>")->required();
  auto* em_d = em->add_option("--maxdeg", em_deg, "degree bound for the loop space");

  std::string xn, yn, zn;
  int cs = 3, ct = 3;
  auto* cb = app.add_subcommand("cobar", "geometric cobar construction vs the algebraic E1");
  cb->add_option("--x", xn, "space X (pt, S1, S<n>, T2, Delta(n), prod(A,B), smash(A,B), Sigma(A))")->required();
  cb->add_option("--y", yn, "space Y")->required();
  cb->add_option("--z", zn, "space Z")->required();
  cb->add_option("--smax", cs, "cosimplicial levels")->capture_default_str();
  cb->add_option("--tmax", ct, "cohomological degree")->capture_default_str();

  std::string suite;
  bool verbose = false;
  auto* vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("--suite", suite, "A1, A2, classes or all")
      ->required()
      ->check(CLI::IsMember({"A1", "A2", "classes", "all"}));
  vf->add_flag("-v,--verbose", verbose, "list passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*adem) return cmd_adem(g, expr);
    if (*an) return cmd_an_lemma(g, an_n);
    if (*nil) return cmd_nilfilt(g, mod, nil_deg->count() ? maxdeg : default_bound(g, 16));
    if (*wt) return cmd_weight(g, mod);
    if (*tr) return cmd_tor(g, alg, smax, tr_t->count() ? tmax : default_bound(g, 12));
    if (*em) return cmd_em_loops(g, space, em_d->count() ? em_deg : default_bound(g, 20));
    if (*cb) return cmd_cobar(g, xn, yn, zn, cs, ct);
    if (*vf) return cmd_verify(g, suite, verbose);
  } catch (const OutOfBound& e) {
    std::cerr << "steem: bound overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const ParseError& e) {
    std::cerr << "steem: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "steem: " << e.what() << "\n";
    return kUsage;
  } catch (const NotReduced& e) {
    std::cerr << "steem: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "steem: verification failed: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
