#pragma once

// The classes alpha_{i,d} = sigma^d u^{2^i} in Sigma^d F(1) and the structural
// map Sigma^d F(1) -> Sigma^d F2 (x) F(1).

#include "filtration.hpp"
#include "report.hpp"

namespace steem {

struct AlphaClass {
  int i = 0;
  ModuleElement element;       // in Sigma^d F(1) at the requested bound
  NilpotencyVerdict bounded;   // verdict at the requested bound
  NilpotencyVerdict certified; // verdict at the certification bound
};

struct AlphaClassesResult {
  int d = 0;
  int bound = 0;
  int certification_bound = 0;
  BoundedUnstableModule module;  // Sigma^d F(1) at `bound`
  std::vector<AlphaClass> classes;
  Report report;
};

inline BoundedUnstableModule sigma_f1(int d, int bound) {
  if (d < 0 || d > bound) throw InvalidArgument("SigmaF1: need 0 <= d <= bound");
  return suspension(f1_module(bound - d), d);
}

/// Checks that eta: Sigma^d F(1) -> Sigma^d F2 (x) F(1) is an isomorphism of
/// modules through the bound.
inline CheckReport check_eta(int d, int bound) {
  auto src = sigma_f1(d, bound);
  auto dst = tensor(trivial_module(d, bound), f1_module(bound));
  ModuleMap eta;
  for (int e = 0; e <= bound; ++e) {
    F2Matrix m(static_cast<std::size_t>(src.dim(e)), static_cast<std::size_t>(dst.dim(e)));
    if (src.dim(e) == 1 && dst.dim(e) == 1) m.set(0, 0);
    eta.mats.push_back(m);
  }
  if (auto v = module_map_violation(eta, src, dst)) return {"eta iso", false, *v};
  for (int e = 0; e <= bound; ++e) {
    const auto r = rank(eta.at(e));
    if (r != static_cast<std::size_t>(src.dim(e)) || r != static_cast<std::size_t>(dst.dim(e)))
      return {"eta iso", false, "kernel or cokernel in degree " + std::to_string(e)};
  }
  return {"eta iso", true, {}};
}

/// Builds alpha_{i,d} for 0 <= i <= i_max, verifies degrees, exact
/// d-nilpotency and the chain Sq^{2^i} alpha_i = alpha_{i+1}. The verdict at
/// the requested bound is reported as-is; exactness is certified in the same
/// module built through max(bound, 2^{i_max+1} + 2d), where every first Sq_t
/// step of every class lands in-bound.
inline AlphaClassesResult alpha_classes(int d, int i_max, int bound) {
  if (d < 0 || i_max < 0) throw InvalidArgument("alpha_classes: need d, i_max >= 0");
  if (i_max > 24 || (1 << i_max) + d > bound)
    throw OutOfBound("alpha_classes: 2^i_max + d exceeds the bound " + std::to_string(bound));
  AlphaClassesResult r;
  r.d = d;
  r.bound = bound;
  r.certification_bound = std::max(bound, (1 << (i_max + 1)) + 2 * d);
  r.module = sigma_f1(d, bound);
  const auto big = sigma_f1(d, r.certification_bound);

  bool degrees_ok = true, exact_ok = true, chain_ok = true;
  std::string deg_w, exact_w, chain_w;
  for (int i = 0; i <= i_max; ++i) {
    const int deg = (1 << i) + d;
    AlphaClass c;
    c.i = i;
    if (r.module.dim(deg) != 1) {
      degrees_ok = false;
      deg_w = "no class in degree " + std::to_string(deg);
      continue;
    }
    c.element = r.module.basis_element(deg, 0);
    c.bounded = nilpotency_degree(c.element, r.module);
    c.certified = nilpotency_degree(big.basis_element(deg, 0), big);
    if (c.certified != NilpotencyVerdict::exactly(d)) {
      exact_ok = false;
      exact_w = "alpha_" + std::to_string(i) + ": " + c.certified.str();
    }
    if (c.bounded.is_exact() && c.bounded != c.certified) {
      exact_ok = false;
      exact_w = "alpha_" + std::to_string(i) + ": bounded " + c.bounded.str() + " contradicts " + c.certified.str();
    }
    if (i < i_max) {
      const auto next = big.apply(1 << i, big.basis_element(deg, 0));
      if (!(next == big.basis_element((1 << (i + 1)) + d, 0))) {
        chain_ok = false;
        chain_w = "Sq^" + std::to_string(1 << i) + " alpha_" + std::to_string(i);
      }
    }
    r.classes.push_back(c);
  }
  r.report.add("degrees 2^i+d", degrees_ok, deg_w);
  r.report.add("exactly d-nilpotent", exact_ok, exact_w);
  r.report.add("Sq^{2^i} chain", chain_ok, chain_w);
  r.report.checks.push_back(check_eta(d, bound));
  return r;
}

}  // namespace steem
