#pragma once

// JSON (de)serialization. Matrices are arrays of row strings over {0,1}, rows
// indexed by the source basis. Bigraded tables are keyed "(s,t)" with s >= 0
// the homological (bar) degree.

#include <array>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <string>

#include "bar.hpp"
#include "em.hpp"
#include "report.hpp"
#include "simplicial.hpp"
#include "unstable_module.hpp"

namespace steem {

using Json = nlohmann::json;

namespace detail {

inline Json matrix_json(const F2Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string r(m.cols(), '0');
    for (auto j : m.row(i).ones()) r[j] = '1';
    rows.push_back(r);
  }
  return rows;
}

inline F2Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
  F2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto r = j[i].get<std::string>();
    if (r.size() != cols) throw ParseError("matrix: row of wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (r[c] == '1') m.set(i, c);
      else if (r[c] != '0') throw ParseError("matrix: entries must be 0 or 1");
    }
  }
  return m;
}

inline std::string bidegree_key(int s, int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

inline std::pair<int, int> parse_bidegree_key(const std::string& k) {
  int s = 0, t = 0;
  char tail = 0;
  if (std::sscanf(k.c_str(), "(%d,%d%c", &s, &t, &tail) != 3 || tail != ')')
    throw ParseError("bad bidegree key '" + k + "'");
  return {s, t};
}

template <class F>
Json table_json(int s_max, int t_max, F dim) {
  Json out = Json::object();
  for (int s = 0; s <= s_max; ++s)
    for (int t = 0; t <= t_max; ++t) out[bidegree_key(s, t)] = dim(s, t);
  return out;
}

}  // namespace detail

// --- unstable modules ------------------------------------------------------

inline Json to_json(const BoundedUnstableModule& m) {
  Json sq = Json::object();
  for (int k = 1; k <= m.bound(); ++k) {
    Json per = Json::array();
    for (int d = 0; d + k <= m.bound(); ++d) {
      const auto& e = m.sq_entry(k, d);
      per.push_back(e ? detail::matrix_json(*e) : Json(nullptr));
    }
    sq[std::to_string(k)] = per;
  }
  Json j{{"bound", m.bound()}, {"dims", m.dims()}, {"sq", sq}};
  if (m.zero_from()) j["zero_from"] = *m.zero_from();
  return j;
}

inline BoundedUnstableModule module_from_json(const Json& j) {
  try {
    const int bound = j.at("bound").get<int>();
    const auto dims = j.at("dims").get<std::vector<int>>();
    if (dims.size() != detail::sz(bound) + 1) throw ParseError("module: dims must have bound+1 entries");
    const Json& sq = j.at("sq");
    BoundedUnstableModule m(bound, dims, [&](int k, int d) -> std::optional<F2Matrix> {
      const auto key = std::to_string(k);
      if (!sq.contains(key)) return std::nullopt;
      const Json& e = sq[key].at(detail::sz(d));
      if (e.is_null()) return std::nullopt;
      return detail::matrix_from_json(e, detail::sz(dims[detail::sz(d)]), detail::sz(dims[detail::sz(d + k)]));
    });
    if (j.contains("zero_from")) m.set_zero_from(j["zero_from"].get<int>());
    return m;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("module JSON: ") + e.what());
  }
}

// --- graded algebras -------------------------------------------------------

/// "mul" lists [[a,i],[b,j],[c,k]] for every nonzero coefficient of
/// e_{a,i} e_{b,j} on e_{c,k} with a, b > 0; products with the unit are implied.
inline Json to_json(const GradedAlgebra& a) {
  Json mul = Json::array();
  for (int p = 1; p <= a.bound(); ++p)
    for (int q = 1; p + q <= a.bound(); ++q)
      for (int i = 0; i < a.dim(p); ++i)
        for (int j = 0; j < a.dim(q); ++j)
          for (auto k : a.basis_product(p, i, q, j).ones())
            mul.push_back(Json::array({Json::array({p, i}), Json::array({q, j}), Json::array({p + q, k})}));
  return Json{{"name", a.name()}, {"bound", a.bound()}, {"dims", a.dims()}, {"mul", mul}, {"unit", 0}};
}

inline GradedAlgebra algebra_from_json(const Json& j) {
  try {
    const int bound = j.at("bound").get<int>();
    const auto dims = j.at("dims").get<std::vector<int>>();
    if (dims.size() != detail::sz(bound) + 1) throw ParseError("algebra: dims must have bound+1 entries");
    if (j.value("unit", 0) != 0) throw ParseError("algebra: the unit must be basis element 0 of degree 0");
    std::map<std::array<int, 4>, BitVec> table;
    for (const auto& e : j.at("mul")) {
      const int p = e.at(0).at(0), i = e.at(0).at(1), q = e.at(1).at(0), jj = e.at(1).at(1);
      const int c = e.at(2).at(0), k = e.at(2).at(1);
      if (p < 1 || q < 1 || c != p + q || c > bound || i < 0 || i >= dims[detail::sz(p)] || jj < 0 ||
          jj >= dims[detail::sz(q)] || k < 0 || k >= dims[detail::sz(c)])
        throw ParseError("algebra: bad product entry " + e.dump());
      auto [it, _] = table.try_emplace({p, i, q, jj}, BitVec(detail::sz(dims[detail::sz(c)])));
      it->second.flip(detail::sz(k));
    }
    return GradedAlgebra(
        bound, dims,
        [&](int a, int i, int b, int jj) {
          BitVec v(detail::sz(dims[detail::sz(a + b)]));
          if (a == 0) v.set(detail::sz(jj));
          else if (b == 0) v.set(detail::sz(i));
          else if (auto it = table.find({a, i, b, jj}); it != table.end()) v = it->second;
          return v;
        },
        j.value("name", std::string{}));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("algebra JSON: ") + e.what());
  }
}

// --- Tor and EM pages ------------------------------------------------------

inline Json tor_json(const TorResult& r) {
  return detail::table_json(r.homology.s_max, r.homology.t_max, [&](int s, int t) { return r.dim(s, t); });
}

/// Parses {"(s,t)": dim} into a dense table [s][t].
inline std::vector<std::vector<int>> table_from_json(const Json& j) {
  int s_max = -1, t_max = -1;
  for (const auto& [k, _] : j.items()) {
    auto [s, t] = detail::parse_bidegree_key(k);
    s_max = std::max(s_max, s);
    t_max = std::max(t_max, t);
  }
  std::vector<std::vector<int>> out(detail::sz(s_max + 1), std::vector<int>(detail::sz(t_max + 1), 0));
  for (const auto& [k, v] : j.items()) {
    auto [s, t] = detail::parse_bidegree_key(k);
    if (s < 0 || t < 0) throw ParseError("negative bidegree '" + k + "'");
    out[detail::sz(s)][detail::sz(t)] = v.get<int>();
  }
  return out;
}

inline Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return checks;
}

inline Report report_from_json(const Json& j) {
  Report r;
  for (const auto& c : j) r.add(c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.value("witness", ""));
  return r;
}

inline Json em_report_json(const EMPage& p, const CollapseCertificate& c, const std::optional<CornerMaps>& corner,
                           const Report& checks) {
  Json j;
  j["page"] = p.r == 1 ? "E1" : "E2";
  j["dims"] = detail::table_json(p.s_max, p.t_max, [&](int s, int t) { return p.dim(s, t); });
  j["collapse"] = c.collapses;
  Json cj = Json::object();
  if (corner) {
    cj["unit"] = detail::matrix_json(corner->unit);
    Json edge = Json::object();
    for (std::size_t t = 0; t < corner->edge.size(); ++t) edge[std::to_string(t)] = detail::matrix_json(corner->edge[t]);
    cj["edge"] = edge;
  }
  j["corner"] = cj;
  j["checks"] = to_json(checks);
  return j;
}

// --- simplicial sets -------------------------------------------------------

inline Json to_json(const FiniteSimplicialSet& x) {
  std::vector<int> counts;
  for (int n = 0; n <= x.n_max(); ++n) counts.push_back(x.count(n));
  Json faces = Json::object(), degens = Json::object();
  for (int n = 0; n <= x.n_max(); ++n) {
    if (!x.faces()[detail::sz(n)].empty()) faces[std::to_string(n)] = x.faces()[detail::sz(n)];
    if (!x.degens()[detail::sz(n)].empty()) degens[std::to_string(n)] = x.degens()[detail::sz(n)];
  }
  Json j{{"name", x.name()}, {"n_max", x.n_max()}, {"dims", counts}, {"faces", faces}, {"degens", degens}};
  j["basepoint"] = x.basepoint() ? Json(*x.basepoint()) : Json(nullptr);
  return j;
}

inline FiniteSimplicialSet simplicial_from_json(const Json& j) {
  try {
    const auto counts = j.at("dims").get<std::vector<int>>();
    if (counts.empty()) throw ParseError("simplicial set: empty dims");
    const int n_max = j.value("n_max", static_cast<int>(counts.size()) - 1);
    if (counts.size() != detail::sz(n_max) + 1) throw ParseError("simplicial set: dims must have n_max+1 entries");
    FiniteSimplicialSet::Maps faces(counts.size()), degens(counts.size());
    for (const auto& [k, v] : j.at("faces").items()) faces.at(detail::sz(std::stoi(k))) = v.get<std::vector<std::vector<int>>>();
    for (const auto& [k, v] : j.at("degens").items()) degens.at(detail::sz(std::stoi(k))) = v.get<std::vector<std::vector<int>>>();
    std::optional<int> bp;
    if (j.contains("basepoint") && !j["basepoint"].is_null()) bp = j["basepoint"].get<int>();
    return FiniteSimplicialSet(n_max, counts, faces, degens, bp, j.value("name", std::string{}));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("simplicial JSON: ") + e.what());
  } catch (const std::out_of_range&) {
    throw ParseError("simplicial JSON: level out of range");
  } catch (const std::invalid_argument&) {
    throw ParseError("simplicial JSON: bad level key");
  }
}

}  // namespace steem
