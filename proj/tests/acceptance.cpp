// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "steem/steem.hpp"

using namespace steem;

namespace {

// ---------------------------------------------------------------------------
// Oracle: the action of Steenrod words on x_1 ... x_k in F2[x_1..x_k] =
// H*((RP^inf)^k), via Sq^a(x^e) = C(e, a) x^{e+a} and the Cartan formula.
// Independent of the Adem engine. Every intermediate polynomial is symmetric,
// so it is stored by the sorted (non-increasing) exponent vectors of its
// monomials; a coefficient of Sq^i p at a sorted monomial mu is the sum over
// all nu with nu_j + a_j = mu_j, sum a_j = i, of p[sort(nu)] prod C(nu_j, a_j).

using Mono = std::vector<int>;
using Poly = std::set<Mono>;  // sorted exponent vectors with coefficient 1

void toggle(Poly& p, const Mono& m) {
  if (!p.erase(m)) p.insert(m);
}

// partitions of `total` into exactly k positive non-increasing parts
void partitions(int total, int k, int cap, Mono& cur, std::vector<Mono>& out) {
  if (k == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int v = std::min(cap, total - (k - 1)); v >= 1 && v * k >= total; --v) {
    cur.push_back(v);
    partitions(total - v, k - 1, v, cur, out);
    cur.pop_back();
  }
}

bool pullback(const Mono& mu, std::size_t j, int left, Mono& nu, const Poly& p) {
  if (j == mu.size()) {
    if (left != 0) return false;
    Mono s = nu;
    std::sort(s.begin(), s.end(), std::greater<>());
    return p.count(s) > 0;
  }
  bool acc = false;
  for (int a = 0; a <= left && 2 * a <= mu[j]; ++a) {
    if (!binom_mod2(mu[j] - a, a)) continue;
    nu[j] = mu[j] - a;
    acc ^= pullback(mu, j + 1, left - a, nu, p);
  }
  return acc;
}

Poly sq_poly(int i, const Poly& p) {
  if (p.empty() || i == 0) return p;
  const Mono& any = *p.begin();
  const int k = static_cast<int>(any.size());
  int deg = 0;
  for (int e : any) deg += e;
  std::vector<Mono> targets;
  Mono cur;
  partitions(deg + i, k, deg + i, cur, targets);
  Poly out;
  Mono nu(any.size());
  for (const auto& mu : targets)
    if (pullback(mu, 0, i, nu, p)) out.insert(mu);
  return out;
}

Poly act_word(const SqWord& w, Poly p) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) p = sq_poly(*it, p);
  return p;
}

Poly act(const SteenrodElement& e, const Poly& p) {
  Poly out;
  for (const auto& m : e.terms())
    for (const auto& q : act_word(m, p)) toggle(out, q);
  return out;
}

Poly product_of_generators(int k) { return {Mono(static_cast<std::size_t>(k), 1)}; }

// ---------------------------------------------------------------------------

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) o.fail("runtime " + std::to_string(secs) + " s over the limit");
  char t[32];
  std::snprintf(t, sizeof t, "%.2fs", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title << " (" << t << ")"
            << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
  if (!o.pass) ++failures;
}

std::string bideg(int s, int t) { return "(" + std::to_string(-s) + "," + std::to_string(t) + ")"; }

}  // namespace

int main() {
  run(1, "Adem engine closure through degree 14", 5.0, [] {
    Outcome o;
    const int D = 14;
    std::vector<std::vector<Monomial>> adm(D + 1);
    for (int d = 1; d <= D; ++d) adm[static_cast<std::size_t>(d)] = admissible_monomials(d);
    if (adem_reduce({2, 2}).str() != "Sq3 Sq1") o.fail("Sq2 Sq2 -> " + adem_reduce({2, 2}).str());
    if (!adem_reduce({1, 1}).is_zero()) o.fail("Sq1 Sq1 -> " + adem_reduce({1, 1}).str());
    if (adem_reduce({1, 2}).str() != "Sq3") o.fail("Sq1 Sq2 -> " + adem_reduce({1, 2}).str());
    // the oracle is faithful in these degrees: admissible images are independent
    for (int d = 1; d <= D; ++d) {
      std::vector<Poly> images;
      std::map<Mono, std::size_t> index;
      for (const auto& m : adm[static_cast<std::size_t>(d)]) {
        images.push_back(act_word(m, product_of_generators(d)));
        for (const auto& q : images.back()) index.emplace(q, index.size());
      }
      Echelon e(index.size());
      for (const auto& img : images) {
        BitVec v(index.size());
        for (const auto& q : img) v.set(index.at(q));
        e.insert(v);
      }
      if (e.dim() != images.size()) o.fail("oracle is not faithful in degree " + std::to_string(d));
    }
    std::size_t pairs = 0, triples = 0;
    for (int a = 1; a <= D; ++a)
      for (int b = 1; a + b <= D; ++b)
        for (const auto& x : adm[static_cast<std::size_t>(a)])
          for (const auto& y : adm[static_cast<std::size_t>(b)]) {
            ++pairs;
            SqWord w = x;
            w.insert(w.end(), y.begin(), y.end());
            const auto left = adem_reduce(w, RewriteOrder::LeftmostFirst);
            const auto right = adem_reduce(w, RewriteOrder::RightmostFirst);
            if (!(left == right)) o.fail("order dependence on " + format_word(w));
            for (const auto& m : left.terms())
              if (!is_admissible(m)) o.fail("inadmissible output for " + format_word(w));
            // the oracle: x_1 ... x_{a+b} detects elements of degree a+b
            const auto g = product_of_generators(a + b);
            if (act_word(w, g) != act(left, g)) o.fail("oracle disagrees on " + format_word(w));
          }
    for (int a = 1; a <= D; ++a)
      for (int b = 1; a + b <= D; ++b)
        for (int c = 1; a + b + c <= D; ++c)
          for (const auto& x : adm[static_cast<std::size_t>(a)])
            for (const auto& y : adm[static_cast<std::size_t>(b)])
              for (const auto& z : adm[static_cast<std::size_t>(c)]) {
                ++triples;
                auto X = SteenrodElement::of(x), Y = SteenrodElement::of(y), Z = SteenrodElement::of(z);
                if (!(multiply(multiply(X, Y), Z) == multiply(X, multiply(Y, Z))))
                  o.fail("associativity fails on " + format_word(x) + " | " + format_word(y) + " | " + format_word(z));
              }
    if (o.pass) o.detail = std::to_string(pairs) + " products, " + std::to_string(triples) + " triples";
    return o;
  });

  run(2, "Sq^{2^n} Sq^{2^n} decomposes through A(n), n = 1, 2, 3", 60.0, [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
      const int p = 1 << n;
      auto w = decompose_sq2n_sq2n(n, 2 * p);
      if (!w) {
        o.fail("no witness for n=" + std::to_string(n));
        continue;
      }
      if (!verify_witness(*w)) o.fail("witness fails re-multiplication for n=" + std::to_string(n));
      // outer factors lie in A(n): in the span of its basis in their degree
      for (const auto& t : w->terms)
        for (const auto* f : {&t.left, &t.right}) {
          AdmissibleBasis basis(f->degree());
          Echelon span(basis.size());
          for (const auto& b : an_basis(SubalgebraSpec(n), f->degree())) span.insert(basis.coords(b));
          if (f->degree() < 1 || !span.contains(basis.coords(*f))) o.fail("factor " + f->str() + " not in Abar(n)");
        }
      // independent re-evaluation on x_1 ... x_{2p}
      const auto g = product_of_generators(2 * p);
      Poly lhs = act_word({p, p}, g), rhs;
      for (const auto& t : w->terms)
        for (const auto& q : act(t.left, act(sq(t.middle), act(t.right, g)))) toggle(rhs, q);
      if (lhs != rhs) o.fail("oracle disagrees with the witness for n=" + std::to_string(n));
    }
    return o;
  });

  run(3, "Tor over Lambda(x_{n+1}) is divided powers, s <= 6, t <= 24", 0, [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
      const int T = 24;
      auto a = exterior(n + 1, T);
      auto k = augmentation_module(a, T);
      auto red = tor(a, k, k, 7, T, true);
      auto unred = tor(a, k, k, 7, T, false);
      for (int s = 0; s <= 6; ++s)
        for (int t = 0; t <= T; ++t) {
          const int expect = t == s * (n + 1) ? 1 : 0;
          if (red.dim(s, t) != expect) o.fail("n=" + std::to_string(n) + " Tor" + bideg(s, t));
          if (unred.dim(s, t) != red.dim(s, t)) o.fail("reduced/unreduced differ at " + bideg(s, t));
        }
    }
    return o;
  });

  run(4, "EM for Omega S^{n+1}: dims [n | k] through 20, collapse, corner", 0, [] {
    Outcome o;
    const int D = 20;
    for (int n = 1; n <= 3; ++n) {
      auto L = loop_module_with_page(n, D);
      if (!L.collapse.collapses) o.fail("no collapse certificate for n=" + std::to_string(n));
      const auto tot = L.page.total_dims(D);
      for (int k = 0; k <= D; ++k)
        if (tot[static_cast<std::size_t>(k)] != (k % n == 0 ? 1 : 0))
          o.fail("n=" + std::to_string(n) + " total degree " + std::to_string(k));
      auto c = corner_maps(L.page, L.collapse);
      const auto& e = c.edge[static_cast<std::size_t>(n + 1)];
      if (c.loop_degree(n + 1) != n || L.page.dim(1, n + 1) != 1 || e.rows() != 1 || !e.get(0, 0))
        o.fail("corner does not hit the degree-n loop class for n=" + std::to_string(n));
    }
    return o;
  });

  run(5, "Exactness properties (a)-(d) on 100 seeded sequences at bound 16", 60.0, [] {
    Outcome o;
    const auto corpus = seeded_corpus(0, 100, 16);
    if (corpus.size() != 100) o.fail("corpus size");
    int checks = 0;
    for (const auto& e : corpus)
      for (const auto& c : check_exactness_A1_all(e).checks) {
        ++checks;
        if (!c.pass) o.fail(e.label + ": " + c.name + " " + c.witness);
      }
    if (o.pass) o.detail = std::to_string(checks) + " checks, 0 violations";
    return o;
  });

  run(6, "Loop-space nilpotency instances for S^3, S^4", 0, [] {
    Outcome o;
    for (int n = 2; n <= 3; ++n) {
      auto r = verify_loop_nilpotency(sphere_a2_instance(n, 12));
      for (const auto& c : r.checks)
        if (!c.pass) o.fail("S" + std::to_string(n + 1) + " " + c.name + ": " + c.witness);
    }
    return o;
  });

  run(7, "Classes alpha_{i,d} in Sigma^d F(1), d <= 3, i <= 4, bound 32", 0, [] {
    Outcome o;
    for (int d = 0; d <= 3; ++d) {
      auto r = alpha_classes(d, 4, 32);
      for (const auto& c : r.report.checks)
        if (!c.pass) o.fail("d=" + std::to_string(d) + " " + c.name + ": " + c.witness);
      if (r.classes.size() != 5) {
        o.fail("d=" + std::to_string(d) + ": expected 5 classes");
        continue;
      }
      for (int i = 0; i <= 4; ++i) {
        const auto& c = r.classes[static_cast<std::size_t>(i)];
        if (c.element.degree != (1 << i) + d) o.fail("degree of alpha_" + std::to_string(i));
        if (!(c.certified == NilpotencyVerdict::exactly(d)))
          o.fail("alpha_" + std::to_string(i) + "," + std::to_string(d) + " verdict " + c.certified.str());
        if (i < 4 && !(r.module.apply(1 << i, c.element) == r.classes[static_cast<std::size_t>(i + 1)].element))
          o.fail("Sq^" + std::to_string(1 << i) + " chain at i=" + std::to_string(i));
      }
    }
    return o;
  });

  run(8, "Geometric cobar of pt -> S^1 <- pt equals the bar E1, s, t <= 4", 0, [] {
    Outcome o;
    auto c = compare_cobar_with_bar(path_loop_diagram(circle(5)), 4, 4);
    if (!c.pass()) o.fail(c.witness.empty() ? "comparison failed" : c.witness);
    // E1^{-s,t} = (Hbar S^1)^{(x)s} in degree t
    for (int s = 0; s <= 4; ++s)
      for (int t = 0; t <= 4; ++t)
        if (c.geometric.dim(s, t) != (t == s ? 1 : 0)) o.fail("geometric E1" + bideg(s, t));
    return o;
  });

  run(9, "R_n(Sigma M) = R_{n-1} M and the tensor formula on the catalog at bound 12", 0, [] {
    Outcome o;
    const auto small = corpus_modules(11);
    for (const auto& [name, m] : small) {
      auto fs = nilpotent_filtration(suspension(m, 1));
      auto fm = nilpotent_filtration(m);
      for (int n = 1; n <= fs.window; ++n)
        if (!(fs.R(n) == fm.R(n - 1))) o.fail("R_" + std::to_string(n) + "(Sigma " + name + ")");
      if (fs.R(0).total_dim() != 0) o.fail("R_0(Sigma " + name + ") != 0");
    }
    const auto cat = corpus_modules(12);
    std::vector<FiltrationResult> fr;
    for (const auto& [_, m] : cat) fr.push_back(nilpotent_filtration(m));
    int pairs = 0;
    for (std::size_t a = 0; a < cat.size(); ++a)
      for (std::size_t b = 0; b < cat.size(); ++b) {
        ++pairs;
        auto ft = nilpotent_filtration(tensor(cat[a].second, cat[b].second));
        for (int n = 0; n <= ft.window; ++n)
          for (int e = 0; e <= ft.window - n; ++e) {
            int expect = 0;
            for (int i = 0; i <= n; ++i)
              for (int x = 0; x <= e; ++x) {
                const auto& ra = fr[a].R_or_zero(i);
                const auto& rb = fr[b].R_or_zero(n - i);
                expect += ra.dim(x) * rb.dim(e - x);
              }
            if (ft.R(n).dim(e) != expect)
              o.fail(cat[a].first + " (x) " + cat[b].first + ": R_" + std::to_string(n) + " degree " +
                     std::to_string(e));
          }
      }
    if (o.pass) o.detail = std::to_string(pairs) + " tensor pairs";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
