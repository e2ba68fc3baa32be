#pragma once

// Verification suites run by `steem verify` and the acceptance driver.

#include <cstdint>
#include <string>

#include "alpha_classes.hpp"
#include "em.hpp"
#include "exactness.hpp"
#include "report.hpp"

namespace steem {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int a1_count = 100;
  int a1_bound = 16;
  int a2_degree = 12;     // D for the loop-space instances
  int classes_bound = 32;
};

/// One check per sequence and property; the witness is the first failure.
inline Report suite_A1(const SuiteOptions& o = {}) {
  static const char* props[] = {"functoriality", "(a) R_s injective", "(b) nilpotent kernel", "(c) iso range",
                                "(d) weight bound"};
  Report out;
  const auto corpus = seeded_corpus(o.seed, o.a1_count, o.a1_bound);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto rep = check_exactness_A1_all(corpus[i]);
    for (const char* p : props) {
      bool pass = true, seen = false;
      std::string w;
      for (const auto& c : rep.checks) {
        if (c.name.find(p) == std::string::npos) continue;
        seen = true;
        if (!c.pass && pass) {
          pass = false;
          w = c.name + ": " + c.witness;
        }
      }
      if (seen) out.add("#" + std::to_string(i) + " " + corpus[i].label + " " + p, pass, w);
    }
  }
  return out;
}

inline Report suite_A2(const SuiteOptions& o = {}) {
  Report out;
  auto take = [&](const std::string& tag, const Report& r) {
    for (const auto& c : r.checks) out.add(tag + ": " + c.name, c.pass, c.witness);
  };
  for (int n = 1; n <= 3; ++n) take("S" + std::to_string(n + 1), verify_loop_nilpotency(sphere_a2_instance(n, o.a2_degree)));
  take("pt", verify_loop_nilpotency(point_a2_instance(o.a2_degree)));
  return out;
}

inline Report suite_classes(const SuiteOptions& o = {}) {
  Report out;
  for (int d = 0; d <= 3; ++d) {
    const std::string tag = "Sigma^" + std::to_string(d) + "F(1): ";
    auto r = alpha_classes(d, 4, o.classes_bound);
    for (const auto& c : r.report.checks) out.add(tag + c.name, c.pass, c.witness);
    auto eta = check_eta(d, o.classes_bound);
    out.add(tag + eta.name, eta.pass, eta.witness);
  }
  return out;
}

inline Report run_suite(const std::string& name, const SuiteOptions& o = {}) {
  if (name == "A1") return suite_A1(o);
  if (name == "A2") return suite_A2(o);
  if (name == "classes") return suite_classes(o);
  if (name == "all") {
    Report r = suite_A1(o);
    r.append(suite_A2(o));
    r.append(suite_classes(o));
    return r;
  }
  throw InvalidArgument("unknown suite '" + name + "' (expected A1, A2, classes or all)");
}

}  // namespace steem
