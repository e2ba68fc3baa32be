#pragma once

#include <string>
#include <vector>

namespace steem {

struct CheckReport {
  std::string name;
  bool pass = true;
  std::string witness;  // counterexample or detail; empty when nothing to say
};

struct Report {
  std::vector<CheckReport> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
  void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
};

}  // namespace steem
