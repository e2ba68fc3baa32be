#pragma once

// Name strings for catalog objects, e.g. "F(2)@12", "sum(F1,Sigma(H,2))",
// "Trunc(2,3)", "prod(S1,smash(S1,S1))". A trailing "@N" sets the bound.

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "graded_algebra.hpp"
#include "simplicial.hpp"
#include "unstable_module.hpp"

namespace steem {

struct Term {
  std::string head;
  std::vector<Term> args;
  bool has_args = false;

  bool is_number() const {
    return !head.empty() && !has_args && std::all_of(head.begin(), head.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }
  int number() const {
    if (!is_number()) throw ParseError("expected a number, got '" + head + "'");
    if (head.size() > 6) throw ParseError("number too large: " + head);
    return std::stoi(head);
  }
  std::string str() const {
    if (!has_args) return head;
    std::string s = head + "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i].str();
    return s + ")";
  }
};

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string text) : s_(std::move(text)) {}

  Term parse() {
    Term t = term();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return t;
  }

 private:
  Term term() {
    skip();
    Term t;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '*'))
      t.head += s_[pos_++];
    if (t.head.empty()) fail("expected a name");
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      t.has_args = true;
      for (;;) {
        t.args.push_back(term());
        skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return t;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + s_ + "' at position " + std::to_string(pos_) + ": " + why);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline void arity(const Term& t, std::size_t n) {
  if (t.args.size() != n || (n > 0) != t.has_args)
    throw ParseError("'" + t.head + "' takes " + std::to_string(n) + " argument(s): " + t.str());
}

}  // namespace detail

/// Splits "expr@N" into the term and the bound (or `fallback`).
inline std::pair<Term, int> parse_named(const std::string& text, int fallback) {
  const auto at = text.rfind('@');
  int bound = fallback;
  std::string body = text;
  if (at != std::string::npos) {
    const auto n = text.substr(at + 1);
    if (n.empty() || n.size() > 6 || !std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad bound in '" + text + "'");
    bound = std::stoi(n);
    body = text.substr(0, at);
  }
  return {detail::TermParser(body).parse(), bound};
}

// --- modules ---------------------------------------------------------------

inline BoundedUnstableModule module_from_term(const Term& t, int bound) {
  const auto& h = t.head;
  auto need = [&](int d) {
    if (d > bound) throw OutOfBound(t.str() + ": shift exceeds the bound " + std::to_string(bound));
  };
  if (h == "F2" && !t.has_args) return trivial_module(0, bound);
  if (h.size() > 7 && h.rfind("Sigma", 0) == 0 && h.substr(h.size() - 2) == "F2" && !t.has_args) {
    const Term k{h.substr(5, h.size() - 7), {}, false};
    need(k.number());
    return trivial_module(k.number(), bound);
  }
  if (h == "F1" && !t.has_args) return f1_module(bound);
  if (h == "F1xF1" && !t.has_args) return tensor(f1_module(bound), f1_module(bound));
  if (h == "H" && !t.has_args) return h_module(bound);
  if (h == "Hbar" && !t.has_args) return h_module(bound, true);
  if (h == "F") {
    detail::arity(t, 1);
    return free_module(t.args[0].number(), bound);
  }
  if (h == "SigmaF1") {
    detail::arity(t, 1);
    const int d = t.args[0].number();
    need(d);
    return suspension(f1_module(bound - d), d);
  }
  if (h == "Sigma") {
    detail::arity(t, 2);
    const int d = t.args[1].number();
    need(d);
    return suspension(module_from_term(t.args[0], bound - d), d);
  }
  if (h == "tensor") {
    detail::arity(t, 2);
    return tensor(module_from_term(t.args[0], bound), module_from_term(t.args[1], bound));
  }
  if (h == "sum") {
    detail::arity(t, 2);
    return direct_sum(module_from_term(t.args[0], bound), module_from_term(t.args[1], bound));
  }
  throw ParseError("unknown module '" + t.str() + "'");
}

inline BoundedUnstableModule parse_module(const std::string& text, int default_bound) {
  auto [t, b] = parse_named(text, default_bound);
  return module_from_term(t, b);
}

/// Names accepted by parse_module (without bound), for help texts and sweeps.
inline std::vector<std::string> catalog_module_names() {
  return {"F2", "Sigma1F2", "Sigma2F2", "Sigma3F2", "F1", "F(1)", "F(2)", "F(3)", "H", "Hbar",
          "SigmaF1(1)", "SigmaF1(2)", "SigmaF1(3)", "F1xF1"};
}

// --- spaces ----------------------------------------------------------------

inline FiniteSimplicialSet space_from_term(const Term& t, int levels) {
  const auto& h = t.head;
  if (h == "pt" && !t.has_args) return point(levels);
  if (h == "T2" && !t.has_args) {
    auto s = product(circle(levels), circle(levels));
    s.set_name("T2");
    return s;
  }
  if (h.size() >= 2 && h[0] == 'S' && !t.has_args) {
    const Term n{h.substr(1), {}, false};
    if (n.is_number()) {
      if (n.number() < 1) throw InvalidArgument("spheres start at S1");
      return n.number() == 1 ? circle(levels) : sphere(n.number(), levels);
    }
  }
  if (h == "Delta") {
    detail::arity(t, 1);
    return standard_simplex(t.args[0].number(), levels);
  }
  if (h == "prod") {
    detail::arity(t, 2);
    return product(space_from_term(t.args[0], levels), space_from_term(t.args[1], levels));
  }
  if (h == "smash") {
    detail::arity(t, 2);
    return smash(space_from_term(t.args[0], levels), space_from_term(t.args[1], levels));
  }
  if (h == "Sigma") {
    detail::arity(t, 1);
    return suspension(space_from_term(t.args[0], levels));
  }
  if (h == "Sk") {
    detail::arity(t, 2);
    return skeleton(space_from_term(t.args[0], levels), t.args[1].number());
  }
  throw ParseError("unknown space '" + t.str() + "'");
}

/// `levels` is the top simplicial level kept.
inline FiniteSimplicialSet parse_space(const std::string& text, int levels) {
  auto [t, l] = parse_named(text, levels);
  return space_from_term(t, l);
}

// --- algebras --------------------------------------------------------------

inline GradedAlgebra algebra_from_term(const Term& t, int bound) {
  const auto& h = t.head;
  if (h == "F2" && !t.has_args) return ground_algebra(bound);
  if (h == "Lambda") {
    detail::arity(t, 1);
    return exterior(t.args[0].number(), bound);
  }
  if (h == "Poly") {
    detail::arity(t, 1);
    return polynomial(t.args[0].number(), bound);
  }
  if (h == "Trunc") {
    detail::arity(t, 2);
    return truncated_polynomial(t.args[0].number(), t.args[1].number(), bound);
  }
  if (h == "SqZero") {
    if (!t.has_args) throw ParseError("SqZero needs generator degrees");
    std::vector<int> degs;
    for (const auto& a : t.args) degs.push_back(a.number());
    return square_zero(degs, bound);
  }
  if (h == "tensor") {
    detail::arity(t, 2);
    return tensor_algebras(algebra_from_term(t.args[0], bound), algebra_from_term(t.args[1], bound));
  }
  if (h == "H") {
    // cohomology ring of a catalog space
    detail::arity(t, 1);
    auto x = space_from_term(t.args[0], bound + 1);
    auto a = algebra_from_space(x, bound);
    return a;
  }
  throw ParseError("unknown algebra '" + t.str() + "'");
}

inline GradedAlgebra parse_algebra(const std::string& text, int default_bound) {
  auto [t, b] = parse_named(text, default_bound);
  return algebra_from_term(t, b);
}

}  // namespace steem
